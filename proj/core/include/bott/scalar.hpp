#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "bott/integer.hpp"

namespace bott {

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
/// Integers (den = 1) take a fast path through every operation.
class Scalar {
public:
    Scalar() = default;
    Scalar(Integer v) : num_(std::move(v)) {}
    template <std::integral T>
    Scalar(T v) : num_(v) {}
    Scalar(Integer num, Integer den);

    /// Accepts "p" or "p/q".
    static Scalar parse(std::string_view text);

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_.is_one(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    std::string str() const;

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& v);

private:
    Integer num_;
    Integer den_{1};
};

/// The coefficient ring of a cohomology computation: Z, Q, or Z/n.
///
/// Every coefficient stored in a class passes through reduce(), which returns
/// the canonical representative (residues in [0, n) for Z/n).
class CoefficientDomain {
public:
    enum class Kind { Integers, Rationals, Modular };

    static CoefficientDomain integers() { return CoefficientDomain(Kind::Integers, 0); }
    static CoefficientDomain rationals() { return CoefficientDomain(Kind::Rationals, 0); }
    /// Z/n for n >= 2. Linear solves additionally need n prime.
    static CoefficientDomain modular(const Integer& n);

    Kind kind() const noexcept { return kind_; }
    const Integer& modulus() const noexcept { return modulus_; }
    bool is_modular() const noexcept { return kind_ == Kind::Modular; }
    bool is_mod2() const noexcept { return kind_ == Kind::Modular && modulus_ == Integer(2); }

    /// Canonical representative. Throws DomainError when `v` has no image
    /// (a non-integer in Z, or a denominator not invertible mod n).
    Scalar reduce(const Scalar& v) const;
    void reduce_in_place(Scalar& v) const;

    std::string name() const;

    friend bool operator==(const CoefficientDomain&, const CoefficientDomain&) = default;

private:
    CoefficientDomain(Kind kind, Integer modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    Kind kind_;
    Integer modulus_;
};

} // namespace bott
