#include "bott/integer.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace bott {

namespace {

const Integer::Big kInt64Min(INT64_MIN);
const Integer::Big kInt64Max(INT64_MAX);

} // namespace

Integer::Integer(const Big& v) {
    if (v >= kInt64Min && v <= kInt64Max)
        small_ = static_cast<std::int64_t>(v);
    else
        big_ = std::make_shared<const Big>(v);
}

Integer Integer::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    Big value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return Integer(negative ? Big(-value) : value);
}

std::string Integer::str() const {
    if (big_)
        return big_->str();
    return std::to_string(small_);
}

Integer& Integer::operator/=(const Integer& o) {
    if (o.is_zero())
        throw std::domain_error("integer division by zero");
    if (!big_ && !o.big_ && !(small_ == INT64_MIN && o.small_ == -1)) {
        small_ /= o.small_;
        return *this;
    }
    return *this = Integer(Big(to_big() / o.to_big()));
}

Integer& Integer::operator%=(const Integer& o) {
    if (o.is_zero())
        throw std::domain_error("integer division by zero");
    if (!big_ && !o.big_) {
        if (o.small_ == -1)
            small_ = 0;
        else
            small_ %= o.small_;
        return *this;
    }
    return *this = Integer(Big(to_big() % o.to_big()));
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_)
        return a.small_ <=> b.small_;
    const auto c = a.to_big().compare(b.to_big());
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

std::size_t Integer::hash() const noexcept {
    if (!big_)
        return std::hash<std::int64_t>{}(small_);
    return std::hash<std::string>{}(big_->str());
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(const Integer& a, const Integer& b) {
    auto sa = a.to_int64();
    auto sb = b.to_int64();
    if (sa && sb && *sa != INT64_MIN && *sb != INT64_MIN) {
        std::int64_t x = *sa < 0 ? -*sa : *sa;
        std::int64_t y = *sb < 0 ? -*sb : *sb;
        while (y != 0) {
            const std::int64_t t = x % y;
            x = y;
            y = t;
        }
        return Integer(x);
    }
    return Integer(Integer::Big(boost::multiprecision::gcd(a.to_big(), b.to_big())));
}

Integer floor_mod(const Integer& a, const Integer& m) {
    if (m.sign() <= 0)
        throw std::domain_error("floor_mod requires a positive modulus");
    Integer r = a % m;
    if (r.sign() < 0)
        r += m;
    return r;
}

bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero())
        return a.is_zero();
    return (a % d).is_zero();
}

Integer pow(const Integer& base, unsigned exponent) {
    Integer result = 1;
    Integer b = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1u;
        if (exponent > 0)
            b *= b;
    }
    return result;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
    // Extended Euclid on (a mod m, m).
    Integer old_r = floor_mod(a, m), r = m;
    Integer old_s = 1, s = 0;
    while (!r.is_zero()) {
        const Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (!old_r.is_one())
        return std::nullopt;
    return floor_mod(old_s, m);
}

} // namespace bott
