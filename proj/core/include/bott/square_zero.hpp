#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bott/ring.hpp"

namespace bott {

/// Coefficient vectors b in [-bound, bound]^m, b != 0, with (sum_j b_j y_j)^k = 0,
/// in increasing lexicographic order (b_1 most significant).
std::vector<IntegerVector> square_zero_vectors(const BottRing& ring, unsigned k, unsigned bound);

/// The same set as classes of `ring`.
std::vector<CohomologyClass> square_zero_elements(const BottRing& ring, unsigned k, unsigned bound);

/// First vector in the same order that also satisfies `accept`.
std::optional<IntegerVector> find_square_zero(const BottRing& ring, unsigned k, unsigned bound,
                                              const std::function<bool(const IntegerVector&)>& accept);

/// Number of nonzero classes in H^2 tensor Z/n whose k-th power vanishes;
/// `ring` must be over Z/n.
std::size_t count_square_zero_residues(const BottRing& ring, unsigned k);

} // namespace bott
