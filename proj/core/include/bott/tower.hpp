#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bott/integer.hpp"

namespace bott {

using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

/// One stage B_i = P(C + xi_i) -> B_{i-1} of a generalized Bott tower, in
/// normalized form: the 0-th line-bundle summand is trivial and is not stored.
/// Row alpha of `summand_exponents` gives c_1 of the alpha-th nontrivial
/// summand of xi_i in the basis y_1, ..., y_{i-1}.
struct StageSpec {
    std::size_t fiber_dim = 0;
    IntegerMatrix summand_exponents;

    /// Width of every row; i - 1 for stage i.
    std::size_t base_height() const;
    /// All n_i + 1 summand rows, the trivial one first.
    IntegerMatrix all_summands(std::size_t base_height) const;

    friend bool operator==(const StageSpec&, const StageSpec&) = default;
};

/// Unvalidated tower data as read from a file or built by hand.
struct RawStage {
    Integer fiber_dim;
    IntegerMatrix summands;
};

struct RawTower {
    std::vector<RawStage> stages;
};

/// A validated generalized Bott tower of height m. Stages are 1-based in the
/// accessor, matching the y_1, ..., y_m naming of the cohomology generators.
class TowerSpec {
public:
    std::size_t height() const noexcept { return stages_.size(); }
    const StageSpec& stage(std::size_t i) const;
    std::span<const StageSpec> stages() const noexcept { return stages_; }

    /// Fiber dimensions (n_1, ..., n_m).
    std::vector<std::size_t> dims() const;
    /// Sum of the fiber dimensions: complex dimension of B_m.
    std::size_t complex_dim() const;
    /// True when every fiber is CP^1.
    bool is_bott() const;

    /// Row `alpha` (0 = trivial summand) of stage i as a length-m vector with
    /// zeros in positions >= i - 1.
    IntegerVector summand(std::size_t i, std::size_t alpha) const;

    friend bool operator==(const TowerSpec&, const TowerSpec&) = default;

private:
    friend TowerSpec validate_tower(const RawTower& raw);
    explicit TowerSpec(std::vector<StageSpec> stages) : stages_(std::move(stages)) {}

    std::vector<StageSpec> stages_;
};

/// Checks shapes and fiber dimensions. Throws ValidationError naming the
/// offending stage/row.
TowerSpec validate_tower(const RawTower& raw);

/// Normalizes a full list of n+1 summand rows by tensoring with the dual of
/// the first summand: the first row is subtracted from every row and dropped.
StageSpec normalize_stage(const IntegerMatrix& rows);

/// P(E*) presentation of the same stage: every summand is negated. The zero
/// row stays first, so no re-normalization shift is needed.
StageSpec dualize_stage(const StageSpec& stage);

/// Replaces stage i by its dual and rewrites later stages in the new
/// generator (y_i -> -y_i), so the resulting tower has an isomorphic ring.
TowerSpec dualize_tower_stage(const TowerSpec& tower, std::size_t i);

/// prod CP^{n_i} as a tower with all exponents zero.
TowerSpec product_tower(std::span<const std::size_t> dims);

/// Hirzebruch surface P(C + gamma^a) over CP^1.
TowerSpec hirzebruch_tower(const Integer& a);

/// 3-stage Bott tower with xi_2 = gamma_1^a, xi_3 = gamma_1^b gamma_2^c.
TowerSpec bott3_tower(const Integer& a, const Integer& b, const Integer& c);

/// 2-stage generalized tower over CP^{n1}: `exponents` lists the n2
/// nontrivial summands as multiples of the base generator.
TowerSpec two_stage_tower(std::size_t n1, const IntegerVector& exponents);

/// Whitney sum of n line bundles over CP^{n_1} x ... x CP^{n_k}; row i of
/// `exponents` is c_1 of the i-th summand in the basis x_1, ..., x_k.
class LineBundleSum {
public:
    LineBundleSum(std::vector<std::size_t> base_dims, IntegerMatrix exponents);

    const std::vector<std::size_t>& base_dims() const noexcept { return base_dims_; }
    const IntegerMatrix& exponents() const noexcept { return exponents_; }
    std::size_t rank() const noexcept { return exponents_.size(); }
    std::size_t factors() const noexcept { return base_dims_.size(); }
    /// Sum of base dimensions: complex dimension of the base.
    std::size_t base_dim() const;

    /// Same bundle over the product with factor j (0-based) removed.
    LineBundleSum drop_factor(std::size_t j) const;

    friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;

private:
    std::vector<std::size_t> base_dims_;
    IntegerMatrix exponents_;
};

} // namespace bott
