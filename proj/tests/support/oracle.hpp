#pragma once

// Reference implementations used to check the engine. They share nothing
// with the library beyond the Integer type and the tower data structures:
// relations are expanded here from the summand rows, and reduction uses a
// plain (optionally randomized) rewriting loop.

#include <map>
#include <random>
#include <vector>

#include "bott/ring.hpp"

namespace oracle {

using bott::Integer;
using Mono = std::vector<int>;
using Poly = std::map<Mono, Integer>;

struct Ring {
    std::vector<int> dims;
    /// tails[i] = f_i - y_i^{n_i+1}, so y_i^{n_i+1} = -tails[i].
    std::vector<Poly> tails;
    /// Optional modulus; 0 means integers.
    long modulus = 0;
};

Ring make_ring(const bott::TowerSpec& tower, long modulus = 0);

Poly constant(std::size_t m, const Integer& c);
Poly variable(std::size_t m, std::size_t i);
Poly linear(const std::vector<Integer>& coeffs);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Integer& c);
Poly mul(const Poly& a, const Poly& b);

/// Rewrites until every exponent is within bounds. With an rng, the term and
/// the over-bound variable to rewrite are chosen at random each step.
Poly reduce(const Ring& ring, Poly p, std::mt19937_64* rng = nullptr);

/// Product then reduction.
Poly ring_mul(const Ring& ring, const Poly& a, const Poly& b);

/// Coefficient of y_1^{n_1} ... y_m^{n_m} after reduction.
Integer integrate(const Ring& ring, const Poly& p);

/// Normal-form coefficient map of an engine class.
Poly from_class(const bott::CohomologyClass& u);
/// Equality with an engine class (normal form).
bool same(const Poly& p, const bott::CohomologyClass& u);

/// Total Chern class of the tangent bundle, computed root by root.
Poly tangent_chern(const Ring& ring, const bott::TowerSpec& tower);

/// Fraction-free (Bareiss) determinant.
Integer det(std::vector<std::vector<Integer>> m);

/// Coefficient of t^d in prod_i (1 + t + ... + t^{n_i}).
std::size_t poincare_coefficient(const std::vector<std::size_t>& dims, std::size_t d);

/// Monomials y^e with e_i <= n_i and sum e = d.
std::vector<Mono> monomials(const std::vector<int>& dims, int d);

/// Rank over Q of a list of integer vectors.
std::size_t rational_rank(std::vector<std::vector<Integer>> rows);

} // namespace oracle
