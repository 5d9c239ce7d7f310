#include "bott/char_classes.hpp"

#include "bott/errors.hpp"
#include "ring_internal.hpp"

namespace bott {

namespace {

using detail::DenseVector;

std::vector<Scalar> root_form(const TowerSpec& tower, std::size_t i, std::size_t alpha) {
    const IntegerVector u = tower.summand(i, alpha);
    std::vector<Scalar> lin(u.begin(), u.end());
    lin[i - 1] += Scalar(1);
    return lin;
}

void add_to(DenseVector& acc, const DenseVector& v) {
    for (std::size_t s = 0; s < acc.size(); ++s)
        if (!v[s].is_zero())
            acc[s] += v[s];
}

// prod over all roots y_i + u_{i,alpha} of (1 + r) or (1 + r^2).
CohomologyClass root_product(const BottRing& ring, bool squared) {
    const detail::RingData& r = ring.data();
    const TowerSpec& tower = ring.tower();
    DenseVector cur(r.rank), t1, t2;
    cur[0] = Scalar(1);
    for (std::size_t i = 1; i <= tower.height(); ++i) {
        for (std::size_t alpha = 0; alpha <= tower.stage(i).fiber_dim; ++alpha) {
            const auto lin = root_form(tower, i, alpha);
            detail::multiply_by_linear(r, cur, lin, t1);
            if (squared) {
                detail::multiply_by_linear(r, t1, lin, t2);
                add_to(cur, t2);
            } else {
                add_to(cur, t1);
            }
            detail::reduce_dense(r, cur);
        }
    }
    return detail::from_dense(ring, cur);
}

BottRing integer_ring(const BottRing& ring) {
    return ring.with_domain(CoefficientDomain::integers());
}

// Solves A x = b over GF(2) for square A (entries 0/1); empty when singular.
std::optional<std::vector<int>> solve_mod2(std::vector<std::vector<int>> a, std::vector<int> b) {
    const std::size_t n = a.size();
    std::vector<std::size_t> pivot_col(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            for (std::size_t j = col; j < n; ++j)
                a[i][j] ^= a[row][j];
            b[i] ^= b[row];
        }
        pivot_col[row] = col;
        ++row;
    }
    std::vector<int> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[pivot_col[i]] = b[i];
    return x;
}

int to_bit(const Scalar& s) { return s.numerator().is_odd() ? 1 : 0; }

} // namespace

CohomologyClass tangent_chern(const BottRing& ring) { return root_product(integer_ring(ring), false); }
CohomologyClass tangent_chern(const TowerSpec& tower) { return root_product(BottRing::build(tower), false); }

CohomologyClass tangent_pontrjagin(const BottRing& ring) { return root_product(integer_ring(ring), true); }
CohomologyClass tangent_pontrjagin(const TowerSpec& tower) { return root_product(BottRing::build(tower), true); }

CohomologyClass p1_b3(const Integer& a, const Integer& b, const Integer& c) {
    const BottRing ring = BottRing::build(bott3_tower(a, b, c));
    return Scalar(c * (Integer(2) * b - a * c)) * ring.monomial(ExponentVector{1, 1, 0});
}

CohomologyClass steenrod_square(const CohomologyClass& u) {
    const BottRing& ring = u.ring();
    if (!ring.domain().is_mod2())
        throw DomainError("steenrod_square: class must have Z/2 coefficients, got " + ring.domain().name());
    const detail::RingData& r = ring.data();
    DenseVector result(r.rank), cur, t1, t2;
    for (const auto& [e, c] : u.terms()) {
        cur.assign(r.rank, Scalar());
        cur[0] = c;
        // Sq(y_j) = y_j + y_j^2, and Sq is a ring map.
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (std::size_t k = 0; k < e[j]; ++k) {
                detail::multiply_by_generator(r, cur, j, t1);
                detail::multiply_by_generator(r, t1, j, t2);
                add_to(t1, t2);
                std::swap(cur, t1);
            }
        }
        add_to(result, cur);
    }
    detail::reduce_dense(r, result);
    return detail::from_dense(ring, result);
}

CohomologyClass steenrod_component(const CohomologyClass& u, std::size_t k) {
    CohomologyClass out = u.ring().zero();
    if (k % 2 != 0)
        return out;
    const std::size_t j = k / 2;
    for (std::size_t d = 0; d <= u.max_degree(); ++d) {
        const CohomologyClass part = u.part(d);
        if (!part.is_zero())
            out += steenrod_square(part).part(d + j);
    }
    return out;
}

CohomologyClass wu_classes(const TowerSpec& tower) {
    const BottRing ring = BottRing::build(tower, CoefficientDomain::modular(2));
    const std::size_t top = ring.top_degree();
    CohomologyClass v = ring.one();
    // v_{2j} lives in degree index j and pairs with degree index top - j;
    // Sq^{2j} vanishes there once 2j exceeds top - j.
    for (std::size_t j = 1; 2 * j <= top; ++j) {
        const auto& basis = ring.basis(j);
        const auto& dual = ring.basis(top - j);
        const std::size_t n = basis.size();
        std::vector<std::vector<int>> a(n, std::vector<int>(n));
        std::vector<int> rhs(n);
        std::vector<CohomologyClass> basis_classes;
        for (const auto& e : basis)
            basis_classes.push_back(ring.monomial(e));
        for (std::size_t row = 0; row < n; ++row) {
            const CohomologyClass x = ring.monomial(dual[row]);
            for (std::size_t col = 0; col < n; ++col)
                a[row][col] = to_bit(ring.integrate(basis_classes[col] * x));
            rhs[row] = to_bit(ring.integrate(steenrod_component(x, 2 * j)));
        }
        const auto sol = solve_mod2(std::move(a), std::move(rhs));
        if (!sol)
            throw InternalError("wu_classes: singular mod 2 Poincare pairing in degree " + std::to_string(2 * j));
        for (std::size_t col = 0; col < n; ++col)
            if ((*sol)[col])
                v += basis_classes[col];
    }
    return v;
}

CohomologyClass stiefel_whitney(const TowerSpec& tower) { return steenrod_square(wu_classes(tower)); }

CharClassReport char_class_report(const TowerSpec& tower) {
    const BottRing ring = BottRing::build(tower);
    CohomologyClass wu = wu_classes(tower);
    CohomologyClass w = steenrod_square(wu);
    return CharClassReport{tangent_chern(ring), tangent_pontrjagin(ring), std::move(wu), std::move(w)};
}

bool verify_pontrjagin_preservation(const IsoWitness& iso) {
    const IntegerMatrix& m = iso.matrix();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m[i].size(); ++j) {
            if (!m[i][j].is_zero())
                throw FiltrationError(i + 1, "row " + std::to_string(i + 1) + " sends y" + std::to_string(i + 1) +
                                                 "' outside span(y1..y" + std::to_string(i + 1) + ")");
        }
    }
    const CohomologyClass source_p = tangent_pontrjagin(iso.map().source());
    const CohomologyClass target_p = tangent_pontrjagin(iso.map().target());
    return apply_map(iso, source_p) == target_p;
}

} // namespace bott
