#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace bott {

/// Unbounded signed integer.
///
/// Values that fit in 64 bits are stored inline and use overflow-checked
/// machine arithmetic; anything larger is promoted to a shared, immutable
/// cpp_int. The representation is canonical: a value is stored as big only if
/// it does not fit in std::int64_t, so equality never has to look at both.
class Integer {
public:
    using Big = boost::multiprecision::cpp_int;

    Integer() noexcept = default;

    template <std::signed_integral T>
    Integer(T v) noexcept : small_(static_cast<std::int64_t>(v)) {}

    template <std::unsigned_integral T>
    Integer(T v) {
        if (v <= static_cast<std::uint64_t>(INT64_MAX))
            small_ = static_cast<std::int64_t>(v);
        else
            *this = Integer(Big(v));
    }

    explicit Integer(const Big& v);

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
    static Integer parse(std::string_view text);

    std::string str() const;
    Big to_big() const { return big_ ? *big_ : Big(small_); }
    std::optional<std::int64_t> to_int64() const {
        if (big_)
            return std::nullopt;
        return small_;
    }

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    bool is_one() const noexcept { return !big_ && small_ == 1; }
    int sign() const noexcept {
        if (big_)
            return big_->sign();
        return (small_ > 0) - (small_ < 0);
    }
    bool is_odd() const noexcept {
        if (big_)
            return bit_test(*big_, 0);
        return (small_ & 1) != 0;
    }

    Integer operator-() const {
        if (!big_ && small_ != INT64_MIN)
            return Integer(-small_);
        return Integer(-to_big());
    }

    Integer& operator+=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = Integer(to_big() + o.to_big());
    }
    Integer& operator-=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = Integer(to_big() - o.to_big());
    }
    Integer& operator*=(const Integer& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
        return *this = Integer(to_big() * o.to_big());
    }
    /// Truncating division, like the built-in operator. Throws on zero divisor.
    Integer& operator/=(const Integer& o);
    /// Remainder with the sign of the dividend.
    Integer& operator%=(const Integer& o);

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
    friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

    friend bool operator==(const Integer& a, const Integer& b) {
        if (!a.big_ && !b.big_)
            return a.small_ == b.small_;
        if (a.big_ && b.big_)
            return *a.big_ == *b.big_;
        return false;
    }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

    friend std::ostream& operator<<(std::ostream& os, const Integer& v);

    std::size_t hash() const noexcept;

private:
    std::int64_t small_ = 0;
    std::shared_ptr<const Big> big_;
};

Integer abs(const Integer& v);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Representative of a in [0, m), m > 0.
Integer floor_mod(const Integer& a, const Integer& m);
/// True iff d divides a (d = 0 divides only 0).
bool divides(const Integer& d, const Integer& a);
Integer pow(const Integer& base, unsigned exponent);
/// Inverse of a modulo m, if it exists.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

} // namespace bott

template <>
struct std::hash<bott::Integer> {
    std::size_t operator()(const bott::Integer& v) const noexcept { return v.hash(); }
};
