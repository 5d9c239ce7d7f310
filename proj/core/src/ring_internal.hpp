#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "bott/ring.hpp"

namespace bott {
CohomologyClass make_class(const BottRing& ring, TermMap terms);
}

namespace bott::detail {

// Dense coordinates over all basis monomials, indexed by mixed-radix slot:
// slot(e) = sum_i e_i * prod_{k<i} (n_k + 1).
using DenseVector = std::vector<Scalar>;

struct SparseEntry {
    std::uint32_t slot;
    Scalar coeff;
};
using SparseVector = std::vector<SparseEntry>;

struct RingData {
    explicit RingData(TowerSpec t, CoefficientDomain d) : tower(std::move(t)), domain(std::move(d)) {}

    TowerSpec tower;
    CoefficientDomain domain;
    std::vector<std::size_t> dims;
    std::size_t top = 0;
    std::vector<std::size_t> strides;
    std::size_t rank = 0;
    std::vector<ExponentVector> slot_exponents;
    std::vector<std::vector<ExponentVector>> basis_by_degree;
    // chern[i][q-1] = c_q(xi_{i+1}) in normal form
    std::vector<std::vector<TermMap>> chern;
    std::vector<Polynomial> relations;
    std::uint64_t id = 0;

    std::size_t slot_of(const ExponentVector& e) const {
        std::size_t s = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += e[i] * strides[i];
        return s;
    }

    // act[j][s] = y_{j+1} * (basis monomial at slot s), in normal form.
    const std::vector<std::vector<SparseVector>>& actions() const;

private:
    mutable std::once_flag act_once_;
    mutable std::vector<std::vector<SparseVector>> act_;
};

// Rewriting normal form. Every monomial with e_i > n_i is rewritten with
// y_i^{n_i+1} = -sum_q c_q(xi_i) y_i^{n_i+1-q}, largest such i first. The
// rewrite only lowers e_i and touches variables below i, so processing terms
// in decreasing order of (e_m, e_{m-1}, ..., e_1) visits each term once.
TermMap reduce_terms(const RingData& ring, const TermMap& input);

DenseVector to_dense(const CohomologyClass& u);
CohomologyClass from_dense(const BottRing& ring, const DenseVector& v);
bool is_zero(const DenseVector& v);

void reduce_dense(const RingData& ring, DenseVector& v);
// out = in * y_{j+1}
void multiply_by_generator(const RingData& ring, const DenseVector& in, std::size_t j, DenseVector& out);
// out = in * sum_j lin[j] y_{j+1}
void multiply_by_linear(const RingData& ring, const DenseVector& in, std::span<const Scalar> lin,
                        DenseVector& out);
DenseVector multiply_dense(const RingData& ring, const DenseVector& a, const DenseVector& b);

// images[j] holds the coefficients of phi(y_{j+1}') on y_1, ..., y_m of the
// target. Returns phi(f_i') = prod_alpha (phi(y_i') + phi(u_{i,alpha}')) for
// the source stage i (1-based), using only images[0..i-1].
DenseVector relation_image(const RingData& target, const TowerSpec& source, std::size_t i,
                           const std::vector<std::vector<Scalar>>& images);

} // namespace bott::detail
