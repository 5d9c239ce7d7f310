#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bott/scalar.hpp"
#include "bott/tower.hpp"

namespace bott {

/// Exponents (e_1, ..., e_m) of a monomial y_1^{e_1} ... y_m^{e_m}.
/// Cohomological degree is 2 * degree(); the engine indexes by degree().
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t m) : e_(m, 0) {}
    ExponentVector(std::initializer_list<value_type> init) : e_(init) {}
    template <typename It>
    ExponentVector(It first, It last) : e_(first, last) {}

    /// y_i, with i 1-based.
    static ExponentVector unit(std::size_t m, std::size_t i);

    std::size_t size() const noexcept { return e_.size(); }
    value_type operator[](std::size_t k) const { return e_[k]; }
    value_type& operator[](std::size_t k) { return e_[k]; }
    auto begin() const noexcept { return e_.begin(); }
    auto end() const noexcept { return e_.end(); }

    std::size_t degree() const noexcept;

    ExponentVector& operator+=(const ExponentVector& o);
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    boost::container::small_vector<value_type, 6> e_;
};

/// Graded lexicographic order: lower degree first; within a degree, larger
/// exponent vectors (compared from y_1) first, so y_1 precedes y_2.
struct GradedLex {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

using TermMap = std::map<ExponentVector, Scalar, GradedLex>;

/// Polynomial in y_1, ..., y_m with no relations imposed.
class Polynomial {
public:
    explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

    static Polynomial constant(std::size_t variables, const Scalar& c);
    /// y_i, 1-based.
    static Polynomial variable(std::size_t variables, std::size_t i);
    /// sum_j coeffs[j] * y_{j+1}
    static Polynomial linear(std::span<const Integer> coeffs);

    std::size_t variables() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const ExponentVector& e, const Scalar& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& s);
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string str() const;

private:
    std::size_t vars_;
    TermMap terms_;
};

class CohomologyClass;

namespace detail {
struct RingData;
}

/// Cohomology ring of a generalized Bott tower,
///
///   R[y_1, ..., y_m] / (f_1, ..., f_m),
///   f_i = y_i^{n_i+1} + c_1(xi_i) y_i^{n_i} + ... + c_{n_i}(xi_i) y_i,
///
/// over R in {Z, Q, Z/n}. The truncated monomials (e_i <= n_i) form a basis;
/// every class is stored in that normal form.
///
/// BottRing is a cheap handle to immutable shared data and is safe to use
/// from several threads.
class BottRing {
public:
    static BottRing build(const TowerSpec& tower,
                          const CoefficientDomain& domain = CoefficientDomain::integers());

    /// Same tower over another coefficient domain.
    BottRing with_domain(const CoefficientDomain& domain) const;

    const TowerSpec& tower() const;
    const CoefficientDomain& domain() const;
    std::size_t height() const;
    const std::vector<std::size_t>& dims() const;
    /// Sum of n_i: index of the top (fundamental) degree.
    std::size_t top_degree() const;

    /// Total rank, prod (n_i + 1).
    std::size_t rank() const;
    /// Rank of the degree-2d part.
    std::size_t graded_rank(std::size_t d) const;
    /// Basis monomials of degree 2d in graded-lex order.
    const std::vector<ExponentVector>& basis(std::size_t d) const;
    bool in_normal_form(const ExponentVector& e) const;

    /// f_i expanded as a polynomial in y_1, ..., y_i.
    const Polynomial& relation(std::size_t i) const;
    /// c_q(xi_i) for 1 <= q <= n_i, a class in y_1, ..., y_{i-1}.
    CohomologyClass stage_chern_class(std::size_t i, std::size_t q) const;
    /// c_1 of summand alpha of xi_i (alpha = 0 is the trivial summand).
    CohomologyClass summand_class(std::size_t i, std::size_t alpha) const;

    CohomologyClass zero() const;
    CohomologyClass one() const;
    CohomologyClass constant(const Scalar& c) const;
    /// y_i, 1-based.
    CohomologyClass generator(std::size_t i) const;
    /// sum_j coeffs[j] * y_{j+1}
    CohomologyClass linear(std::span<const Integer> coeffs) const;
    CohomologyClass monomial(const ExponentVector& e) const;

    CohomologyClass normal_form(const Polynomial& p) const;
    CohomologyClass multiply(const CohomologyClass& u, const CohomologyClass& v) const;
    CohomologyClass power(const CohomologyClass& u, unsigned k) const;
    /// Coefficient of the top monomial y_1^{n_1} ... y_m^{n_m}.
    Scalar integrate(const CohomologyClass& u) const;

    /// Copies coefficients of a class of the same tower into this ring's
    /// domain (e.g. Z -> Z/2).
    CohomologyClass convert(const CohomologyClass& u) const;

    /// Identity tag; distinct builds get distinct ids.
    std::uint64_t id() const;
    /// Same identity, or same tower and domain.
    bool same_ring(const BottRing& other) const;

    const detail::RingData& data() const { return *data_; }

private:
    explicit BottRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::RingData> data_;
};

/// Element of a BottRing, stored as its normal-form coefficient map.
/// No zero coefficients are stored.
class CohomologyClass {
public:
    const BottRing& ring() const noexcept { return ring_; }
    const TermMap& terms() const noexcept { return terms_; }

    Scalar coefficient(const ExponentVector& e) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    /// Highest degree index present; 0 for the zero class.
    std::size_t max_degree() const;
    /// Degree-2d component.
    CohomologyClass part(std::size_t d) const;
    /// Coefficients on the degree-2d basis, in graded-lex order.
    std::vector<Scalar> coordinates(std::size_t d) const;

    CohomologyClass operator-() const;
    CohomologyClass& operator+=(const CohomologyClass& o);
    CohomologyClass& operator-=(const CohomologyClass& o);
    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
        return a.ring().multiply(a, b);
    }
    friend CohomologyClass operator*(const Scalar& s, const CohomologyClass& a);

    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

    /// e.g. "1 + 3*y1 + 3*y1^2"
    std::string str() const;

private:
    friend class BottRing;
    friend CohomologyClass make_class(const BottRing&, TermMap);
    CohomologyClass(BottRing ring, TermMap terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

    BottRing ring_;
    TermMap terms_;
};

/// Throws RingMismatchError unless both classes live in the same ring.
void require_same_ring(const CohomologyClass& a, const CohomologyClass& b);

/// gcd of the coefficients (integer rings); 0 for the zero class.
Integer content(const CohomologyClass& u);

} // namespace bott
