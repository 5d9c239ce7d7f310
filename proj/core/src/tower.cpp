#include "bott/tower.hpp"

#include <numeric>
#include <string>

#include "bott/errors.hpp"

namespace bott {

namespace {

std::string stage_path(std::size_t i) { return "stages[" + std::to_string(i) + "]"; }

} // namespace

std::size_t StageSpec::base_height() const {
    return summand_exponents.empty() ? 0 : summand_exponents.front().size();
}

IntegerMatrix StageSpec::all_summands(std::size_t base_height) const {
    IntegerMatrix rows;
    rows.reserve(summand_exponents.size() + 1);
    rows.emplace_back(base_height, Integer(0));
    rows.insert(rows.end(), summand_exponents.begin(), summand_exponents.end());
    return rows;
}

const StageSpec& TowerSpec::stage(std::size_t i) const {
    if (i == 0 || i > stages_.size())
        throw std::out_of_range("stage index " + std::to_string(i) + " out of range");
    return stages_[i - 1];
}

std::vector<std::size_t> TowerSpec::dims() const {
    std::vector<std::size_t> d;
    d.reserve(stages_.size());
    for (const auto& s : stages_)
        d.push_back(s.fiber_dim);
    return d;
}

std::size_t TowerSpec::complex_dim() const {
    std::size_t total = 0;
    for (const auto& s : stages_)
        total += s.fiber_dim;
    return total;
}

bool TowerSpec::is_bott() const {
    for (const auto& s : stages_)
        if (s.fiber_dim != 1)
            return false;
    return true;
}

IntegerVector TowerSpec::summand(std::size_t i, std::size_t alpha) const {
    const StageSpec& s = stage(i);
    IntegerVector v(height(), Integer(0));
    if (alpha == 0)
        return v;
    if (alpha > s.fiber_dim)
        throw std::out_of_range("summand index " + std::to_string(alpha) + " out of range");
    const auto& row = s.summand_exponents[alpha - 1];
    for (std::size_t j = 0; j < row.size(); ++j)
        v[j] = row[j];
    return v;
}

TowerSpec validate_tower(const RawTower& raw) {
    if (raw.stages.empty())
        throw ValidationError("stages", "tower must have at least one stage");
    std::vector<StageSpec> stages;
    stages.reserve(raw.stages.size());
    for (std::size_t idx = 0; idx < raw.stages.size(); ++idx) {
        const RawStage& rs = raw.stages[idx];
        const std::string path = stage_path(idx);
        if (rs.fiber_dim.sign() <= 0)
            throw ValidationError(path + ".fiber_dim",
                                  "fiber dimension must be positive, got " + rs.fiber_dim.str());
        const auto n = rs.fiber_dim.to_int64();
        if (!n || *n > 4096)
            throw ValidationError(path + ".fiber_dim", "fiber dimension too large");
        if (rs.summands.size() != static_cast<std::size_t>(*n))
            throw ValidationError(path + ".summands",
                                  "expected " + std::to_string(*n) + " rows (fiber_dim), got " +
                                      std::to_string(rs.summands.size()));
        for (std::size_t r = 0; r < rs.summands.size(); ++r) {
            if (rs.summands[r].size() != idx)
                throw ValidationError(path + ".summands[" + std::to_string(r) + "]",
                                      "stage " + std::to_string(idx + 1) + " must have " +
                                          std::to_string(idx) + " columns, got " +
                                          std::to_string(rs.summands[r].size()));
        }
        stages.push_back(StageSpec{static_cast<std::size_t>(*n), rs.summands});
    }
    return TowerSpec(std::move(stages));
}

StageSpec normalize_stage(const IntegerMatrix& rows) {
    if (rows.empty())
        throw PreconditionError("normalize_stage: empty summand list");
    const std::size_t width = rows.front().size();
    for (const auto& r : rows)
        if (r.size() != width)
            throw PreconditionError("normalize_stage: rows have different lengths");
    if (rows.size() < 2)
        throw PreconditionError("normalize_stage: need at least two summands (fiber CP^n, n >= 1)");
    StageSpec out;
    out.fiber_dim = rows.size() - 1;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        IntegerVector row(width);
        for (std::size_t j = 0; j < width; ++j)
            row[j] = rows[r][j] - rows[0][j];
        out.summand_exponents.push_back(std::move(row));
    }
    return out;
}

StageSpec dualize_stage(const StageSpec& stage) {
    IntegerMatrix rows = stage.all_summands(stage.base_height());
    for (auto& r : rows)
        for (auto& v : r)
            v = -v;
    return normalize_stage(rows);
}

TowerSpec dualize_tower_stage(const TowerSpec& tower, std::size_t i) {
    if (i == 0 || i > tower.height())
        throw std::out_of_range("stage index " + std::to_string(i) + " out of range");
    RawTower raw;
    for (std::size_t k = 1; k <= tower.height(); ++k) {
        StageSpec s = tower.stage(k);
        if (k == i)
            s = dualize_stage(s);
        else if (k > i)
            for (auto& row : s.summand_exponents)
                row[i - 1] = -row[i - 1];
        raw.stages.push_back(RawStage{Integer(s.fiber_dim), s.summand_exponents});
    }
    return validate_tower(raw);
}

TowerSpec product_tower(std::span<const std::size_t> dims) {
    if (dims.empty())
        throw PreconditionError("product_tower: need at least one factor");
    RawTower raw;
    for (std::size_t i = 0; i < dims.size(); ++i)
        raw.stages.push_back(RawStage{Integer(dims[i]), IntegerMatrix(dims[i], IntegerVector(i, Integer(0)))});
    return validate_tower(raw);
}

TowerSpec hirzebruch_tower(const Integer& a) {
    return validate_tower(RawTower{{RawStage{1, IntegerMatrix(1)}, RawStage{1, {{a}}}}});
}

TowerSpec bott3_tower(const Integer& a, const Integer& b, const Integer& c) {
    return validate_tower(RawTower{{RawStage{1, IntegerMatrix(1)}, RawStage{1, {{a}}}, RawStage{1, {{b, c}}}}});
}

TowerSpec two_stage_tower(std::size_t n1, const IntegerVector& exponents) {
    IntegerMatrix rows;
    for (const auto& e : exponents)
        rows.push_back({e});
    return validate_tower(RawTower{{RawStage{Integer(n1), IntegerMatrix(n1)}, RawStage{Integer(exponents.size()), rows}}});
}

LineBundleSum::LineBundleSum(std::vector<std::size_t> base_dims, IntegerMatrix exponents)
    : base_dims_(std::move(base_dims)), exponents_(std::move(exponents)) {
    for (std::size_t j = 0; j < base_dims_.size(); ++j)
        if (base_dims_[j] == 0)
            throw ValidationError("base_dims[" + std::to_string(j) + "]", "base dimensions must be positive");
    if (exponents_.empty())
        throw ValidationError("exponents", "bundle must have at least one summand");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i].size() != base_dims_.size())
            throw ValidationError("exponents[" + std::to_string(i) + "]",
                                  "expected " + std::to_string(base_dims_.size()) + " columns, got " +
                                      std::to_string(exponents_[i].size()));
}

std::size_t LineBundleSum::base_dim() const {
    return std::accumulate(base_dims_.begin(), base_dims_.end(), std::size_t{0});
}

LineBundleSum LineBundleSum::drop_factor(std::size_t j) const {
    if (j >= base_dims_.size())
        throw std::out_of_range("factor index out of range");
    std::vector<std::size_t> dims = base_dims_;
    dims.erase(dims.begin() + static_cast<std::ptrdiff_t>(j));
    IntegerMatrix rows = exponents_;
    for (auto& r : rows)
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(j));
    return LineBundleSum(std::move(dims), std::move(rows));
}

} // namespace bott
