#include "bott/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "bott/errors.hpp"

namespace bott {

Scalar::Scalar(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("zero denominator");
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (!den_.is_one()) {
        const Integer g = gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ /= g;
            den_ /= g;
        }
        if (num_.is_zero())
            den_ = 1;
    }
}

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Scalar(Integer::parse(text));
    return Scalar(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Scalar::str() const {
    if (den_.is_one())
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    return *this = Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ -= o.num_;
        return *this;
    }
    return *this = Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    return *this = Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    return *this = Scalar(num_ * o.den_, den_ * o.num_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& v) { return os << v.str(); }

CoefficientDomain CoefficientDomain::modular(const Integer& n) {
    if (n < Integer(2))
        throw DomainError("modulus must be at least 2, got " + n.str());
    return CoefficientDomain(Kind::Modular, n);
}

void CoefficientDomain::reduce_in_place(Scalar& v) const {
    switch (kind_) {
    case Kind::Rationals:
        return;
    case Kind::Integers:
        if (!v.is_integer())
            throw DomainError("coefficient " + v.str() + " is not an integer");
        return;
    case Kind::Modular:
        if (v.is_integer()) {
            const Integer& n = v.numerator();
            if (n.sign() >= 0 && n < modulus_)
                return;
            v = Scalar(floor_mod(n, modulus_));
            return;
        }
        auto inv = mod_inverse(v.denominator(), modulus_);
        if (!inv)
            throw DomainError("denominator of " + v.str() + " is not invertible mod " + modulus_.str());
        v = Scalar(floor_mod(v.numerator() * *inv, modulus_));
        return;
    }
}

Scalar CoefficientDomain::reduce(const Scalar& v) const {
    Scalar r = v;
    reduce_in_place(r);
    return r;
}

std::string CoefficientDomain::name() const {
    switch (kind_) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    case Kind::Modular:
        return "Z/" + modulus_.str();
    }
    return "?";
}

} // namespace bott
