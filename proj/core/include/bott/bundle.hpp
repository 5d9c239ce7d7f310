#pragma once

#include <vector>

#include "bott/ring.hpp"

namespace bott {

/// Integer cohomology ring of CP^{n_1} x ... x CP^{n_k} with generators x_j.
BottRing product_ring(const std::vector<std::size_t>& dims);

/// prod_i (1 + sum_j a_ij x_j) in the ring of the base.
CohomologyClass total_chern_bundle(const LineBundleSum& bundle);

/// Total Chern class equal to 1, which for these bundles is triviality.
bool is_trivial(const LineBundleSum& bundle);

struct ZeroColumnStep {
    enum class Case { I, II };
    Case which;
    /// 1-based column of the original bundle.
    std::size_t column;
    /// Base dimensions before the factor is dropped.
    std::vector<std::size_t> dims;
};

struct ZeroColumnResult {
    /// First zero column found (1-based).
    std::size_t column;
    /// One step per dropped factor until n >= sum of remaining n_j.
    std::vector<ZeroColumnStep> trace;
};

/// For a trivial bundle below the stable range, finds an all-zero exponent
/// column (smallest index) and keeps dropping such factors while the rank
/// stays below the remaining base dimension. Throws PreconditionError when
/// the bundle is not trivial or n >= sum n_j.
ZeroColumnResult find_zero_column(const LineBundleSum& bundle);

/// Equal total Chern classes. Throws PreconditionError on different shapes.
bool bundles_isomorphic(const LineBundleSum& e, const LineBundleSum& f);

} // namespace bott
