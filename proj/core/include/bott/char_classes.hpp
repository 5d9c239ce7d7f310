#pragma once

#include "bott/ring.hpp"
#include "bott/ring_map.hpp"

namespace bott {

/// prod_i prod_alpha (1 + y_i + u_{i,alpha}) in the integer ring of the tower.
CohomologyClass tangent_chern(const BottRing& ring);
CohomologyClass tangent_chern(const TowerSpec& tower);

/// prod_i prod_alpha (1 + (y_i + u_{i,alpha})^2) in the integer ring.
CohomologyClass tangent_pontrjagin(const BottRing& ring);
CohomologyClass tangent_pontrjagin(const TowerSpec& tower);

/// c(2b - ac) y_1 y_2 in the ring of bott3_tower(a, b, c).
CohomologyClass p1_b3(const Integer& a, const Integer& b, const Integer& c);

/// Total Steenrod square; the class must live in a ring over Z/2.
CohomologyClass steenrod_square(const CohomologyClass& u);

/// Sq^k in geometric degree: Sq^{2j} sends the degree-2d part into degree
/// 2(d + j), odd k give zero.
CohomologyClass steenrod_component(const CohomologyClass& u, std::size_t k);

/// Total Wu class over Z/2. Only even components can be nonzero.
CohomologyClass wu_classes(const TowerSpec& tower);

/// Sq(v) over Z/2.
CohomologyClass stiefel_whitney(const TowerSpec& tower);

struct CharClassReport {
    CohomologyClass total_chern;
    CohomologyClass total_pontrjagin;
    CohomologyClass wu;
    CohomologyClass stiefel_whitney;
};

CharClassReport char_class_report(const TowerSpec& tower);

/// True iff the witness carries p(source) to p(target). The matrix must map
/// span(y_1', ..., y_j') into span(y_1, ..., y_j) for every j; otherwise
/// FiltrationError names the first offending row.
bool verify_pontrjagin_preservation(const IsoWitness& iso);

} // namespace bott
