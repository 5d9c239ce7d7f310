#pragma once

#include <optional>

#include "bott/ring.hpp"

namespace bott {

/// Graded ring map determined in degree 2 by y_i' -> sum_j M_ij y_j, from a
/// source ring (primed generators) to a target ring.
class RingMap {
public:
    const BottRing& source() const noexcept { return source_; }
    const BottRing& target() const noexcept { return target_; }
    const IntegerMatrix& matrix() const noexcept { return matrix_; }

    /// Every source relation f_i' maps to zero in the target.
    bool verified() const noexcept { return !failed_relation_; }
    /// 1-based index of the first relation that does not map to zero.
    std::optional<std::size_t> failed_relation() const noexcept { return failed_relation_; }

    const Integer& determinant() const noexcept { return det_; }
    /// verified() and |det M| = 1.
    bool is_isomorphism() const noexcept;

private:
    friend RingMap verify_map(const BottRing&, const BottRing&, const IntegerMatrix&);
    RingMap(BottRing source, BottRing target, IntegerMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {}

    BottRing source_;
    BottRing target_;
    IntegerMatrix matrix_;
    Integer det_;
    std::optional<std::size_t> failed_relation_;
};

/// A verified ring map with unimodular degree-2 matrix.
class IsoWitness {
public:
    /// Empty unless `map.is_isomorphism()`.
    static std::optional<IsoWitness> from(RingMap map);

    const RingMap& map() const noexcept { return map_; }
    const IntegerMatrix& matrix() const noexcept { return map_.matrix(); }

private:
    explicit IsoWitness(RingMap map) : map_(std::move(map)) {}

    RingMap map_;
};

/// Checks every source relation against the target. Failure is reported in
/// the returned value, not thrown. Throws PreconditionError when the matrix
/// is not m x m for the common height m.
RingMap verify_map(const BottRing& source, const BottRing& target, const IntegerMatrix& matrix);

/// Image of a source class. The class may live in the source tower over any
/// coefficient domain; the result is in the target tower over that domain.
/// Throws PreconditionError for an unverified map.
CohomologyClass apply_map(const RingMap& map, const CohomologyClass& u);
CohomologyClass apply_map(const IsoWitness& iso, const CohomologyClass& u);

/// Integer determinant (fraction-free elimination).
Integer determinant(const IntegerMatrix& m);

IntegerMatrix identity_matrix(std::size_t m);

} // namespace bott
