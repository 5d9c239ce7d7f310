#include "bott/bundle.hpp"

#include <algorithm>

#include "bott/errors.hpp"

namespace bott {

namespace {

bool column_is_zero(const LineBundleSum& b, std::size_t j) {
    return std::all_of(b.exponents().begin(), b.exponents().end(),
                       [j](const IntegerVector& row) { return row[j].is_zero(); });
}

Integer column_dot(const LineBundleSum& b, std::size_t j, std::size_t k) {
    Integer s = 0;
    for (const auto& row : b.exponents())
        s += row[j] * row[k];
    return s;
}

} // namespace

BottRing product_ring(const std::vector<std::size_t>& dims) { return BottRing::build(product_tower(dims)); }

CohomologyClass total_chern_bundle(const LineBundleSum& bundle) {
    const BottRing ring = product_ring(bundle.base_dims());
    CohomologyClass c = ring.one();
    for (const auto& row : bundle.exponents())
        c = c * (ring.one() + ring.linear(row));
    return c;
}

bool is_trivial(const LineBundleSum& bundle) { return total_chern_bundle(bundle).is_one(); }

ZeroColumnResult find_zero_column(const LineBundleSum& bundle) {
    if (bundle.rank() >= bundle.base_dim())
        throw PreconditionError("find_zero_column: rank " + std::to_string(bundle.rank()) +
                                " is in the stable range (base dimension " + std::to_string(bundle.base_dim()) + ")");
    if (!is_trivial(bundle))
        throw PreconditionError("find_zero_column: bundle is not trivial");

    ZeroColumnResult result{0, {}};
    LineBundleSum current = bundle;
    std::vector<std::size_t> original(bundle.factors());
    for (std::size_t j = 0; j < original.size(); ++j)
        original[j] = j + 1;

    while (current.factors() > 0 && current.rank() < current.base_dim()) {
        const auto& dims = current.base_dims();
        const bool case_one = std::any_of(dims.begin(), dims.end(), [](std::size_t n) { return n >= 2; });
        if (case_one) {
            // c_1 = 0 and c_2 = 0 give sum_i a_ij = 0 and sum_i a_ij^2 = 0
            // for every factor with n_j >= 2.
            for (std::size_t j = 0; j < dims.size(); ++j)
                if (dims[j] >= 2 && !column_is_zero(current, j))
                    throw InternalError("find_zero_column: column over a factor of dimension >= 2 is nonzero");
        } else {
            // All factors are CP^1: columns are pairwise orthogonal, and there
            // are more of them than rows.
            for (std::size_t j = 0; j < dims.size(); ++j)
                for (std::size_t k = j + 1; k < dims.size(); ++k)
                    if (!column_dot(current, j, k).is_zero())
                        throw InternalError("find_zero_column: columns are not orthogonal");
        }
        std::size_t j = 0;
        while (j < current.factors() && !column_is_zero(current, j))
            ++j;
        if (j == current.factors())
            throw InternalError("find_zero_column: no zero column below the stable range");

        result.trace.push_back({case_one ? ZeroColumnStep::Case::I : ZeroColumnStep::Case::II, original[j], dims});
        if (result.column == 0)
            result.column = original[j];
        original.erase(original.begin() + static_cast<std::ptrdiff_t>(j));
        if (current.factors() == 1)
            break;
        current = current.drop_factor(j);
    }
    return result;
}

bool bundles_isomorphic(const LineBundleSum& e, const LineBundleSum& f) {
    if (e.base_dims() != f.base_dims())
        throw PreconditionError("bundles_isomorphic: different base dimensions");
    if (e.rank() != f.rank())
        throw PreconditionError("bundles_isomorphic: different ranks");
    return total_chern_bundle(e) == total_chern_bundle(f);
}

} // namespace bott
