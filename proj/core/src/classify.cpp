#include "bott/classify.hpp"

#include <algorithm>
#include <sstream>

#include "bott/char_classes.hpp"
#include "bott/errors.hpp"
#include "bott/square_zero.hpp"

namespace bott {

namespace {

// Coefficients of prod_alpha (1 + r_alpha x) in Z[x]/(x^{n+1}).
IntegerVector root_polynomial(const IntegerVector& roots, std::size_t n) {
    IntegerVector p(n + 1, Integer(0));
    p[0] = 1;
    for (const auto& r : roots) {
        for (std::size_t k = n; k >= 1; --k)
            p[k] += r * p[k - 1];
    }
    return p;
}

std::string join(const IntegerVector& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    return os.str();
}

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    return os.str();
}

// Roots u_0 = 0, u_1, ..., u_{n2} of stage 2 as multiples of the base generator.
IntegerVector stage2_roots(const TowerSpec& t) {
    IntegerVector roots{Integer(0)};
    for (const auto& row : t.stage(2).summand_exponents)
        roots.push_back(row[0]);
    return roots;
}

IntegerVector twisted_roots(const IntegerVector& roots, int epsilon, const Integer& w) {
    IntegerVector out;
    for (const auto& r : roots)
        out.push_back(epsilon > 0 ? r + w : -(r + w));
    return out;
}

// Canonical member of {prod (1 + eps (u_alpha + w) x)} over eps, w: among
// the twists whose c_1 lies in [0, n2], the lexicographically smallest
// coefficient vector. Two same-shape towers are diffeomorphic exactly when
// these agree.
IntegerVector normalized_fiber_chern(const TowerSpec& t) {
    const std::size_t n1 = t.stage(1).fiber_dim;
    const IntegerVector roots = stage2_roots(t);
    const Integer size(static_cast<std::int64_t>(roots.size()));
    Integer sum = 0;
    for (const auto& r : roots)
        sum += r;
    std::optional<IntegerVector> best;
    for (int eps : {1, -1}) {
        // eps (sum + size w) = floor_mod(eps sum, size)
        const Integer es = eps > 0 ? sum : -sum;
        const Integer w = (floor_mod(es, size) - es) / size * Integer(eps);
        IntegerVector p = root_polynomial(twisted_roots(roots, eps, w), n1);
        if (!best || p < *best)
            best = std::move(p);
    }
    return *best;
}

IsoWitness require_iso(const BottRing& source, const BottRing& target, const IntegerMatrix& m) {
    auto iso = IsoWitness::from(verify_map(source, target, m));
    if (!iso)
        throw InternalError("classification witness failed ring verification");
    return std::move(*iso);
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

} // namespace

IntegerMatrix ProductWitness::generator_change() const {
    IntegerMatrix c = twists;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i][i] += Integer(1);
    return c;
}

ProductResult is_product_cohomology(const TowerSpec& tower) {
    const BottRing ring = BottRing::build(tower);
    const std::size_t m = tower.height();
    ProductWitness witness;
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t n = tower.stage(i).fiber_dim;
        IntegerVector s(m, Integer(0));
        for (std::size_t alpha = 1; alpha <= n; ++alpha) {
            const IntegerVector u = tower.summand(i, alpha);
            for (std::size_t j = 0; j < m; ++j)
                s[j] += u[j];
        }
        const Integer size(static_cast<std::int64_t>(n + 1));
        IntegerVector w(m, Integer(0));
        for (std::size_t j = 0; j < m; ++j) {
            if (!divides(size, s[j]))
                return ProductFailure{i, ProductFailure::Reason::Divisibility, ring.linear(s).str()};
            w[j] = s[j] / size;
        }
        const CohomologyClass shift = ring.linear(w);
        CohomologyClass c = ring.one();
        for (std::size_t alpha = 0; alpha <= n; ++alpha)
            c = c * (ring.one() + ring.summand_class(i, alpha) - shift);
        if (!c.is_one())
            return ProductFailure{i, ProductFailure::Reason::ChernResidue, c.str()};
        witness.twists.push_back(std::move(w));
    }
    return witness;
}

std::string to_string(ClassificationVerdict::Kind kind) {
    switch (kind) {
    case ClassificationVerdict::Kind::Diffeomorphic:
        return "DIFFEOMORPHIC";
    case ClassificationVerdict::Kind::Distinct:
        return "DISTINCT";
    case ClassificationVerdict::Kind::Unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
}

ClassificationVerdict classify_2stage(const TowerSpec& t, const TowerSpec& t2) {
    if (t.height() != 2 || t2.height() != 2)
        throw PreconditionError("classify_2stage: both towers must have height 2");
    const std::size_t n1 = t.stage(1).fiber_dim, n2 = t.stage(2).fiber_dim;
    const std::size_t m1 = t2.stage(1).fiber_dim, m2 = t2.stage(2).fiber_dim;
    ClassificationVerdict verdict;

    if (n1 == m1 && n2 == m2) {
        const IntegerVector roots = stage2_roots(t);
        const IntegerVector roots2 = stage2_roots(t2);
        const IntegerVector target = root_polynomial(roots, n1);
        const Integer size(static_cast<std::int64_t>(n2 + 1));
        Integer sum = 0, sum2 = 0;
        for (const auto& r : roots)
            sum += r;
        for (const auto& r : roots2)
            sum2 += r;
        for (int eps : {1, -1}) {
            // Degree-2 part forces eps (sum u' + (n2+1) w) = sum u.
            const Integer numerator = (eps > 0 ? sum : -sum) - sum2;
            if (!divides(size, numerator))
                continue;
            const Integer w = numerator / size;
            if (root_polynomial(twisted_roots(roots2, eps, w), n1) != target)
                continue;
            const BottRing ring = BottRing::build(t), ring2 = BottRing::build(t2);
            verdict.kind = ClassificationVerdict::Kind::Diffeomorphic;
            verdict.two_stage = TwoStageWitness{eps, w};
            verdict.witness = require_iso(ring2, ring, {{Integer(1), Integer(0)}, {w, Integer(eps)}});
            return verdict;
        }
        verdict.kind = ClassificationVerdict::Kind::Distinct;
        verdict.invariant = SeparatingInvariant{"normalized fiber Chern class", join(normalized_fiber_chern(t)),
                                                join(normalized_fiber_chern(t2))};
        return verdict;
    }

    if (n1 == m2 && n2 == m1) {
        const ProductResult p = is_product_cohomology(t);
        const ProductResult p2 = is_product_cohomology(t2);
        const auto* w = std::get_if<ProductWitness>(&p);
        const auto* w2 = std::get_if<ProductWitness>(&p2);
        if (w && w2) {
            // x_1' -> x_2 = y_2 + a y_1 and x_2' -> x_1 = y_1, with x_2' = y_2' + b y_1'.
            const Integer& a = w->twists[1][0];
            const Integer& b = w2->twists[1][0];
            verdict.kind = ClassificationVerdict::Kind::Diffeomorphic;
            verdict.witness = require_iso(BottRing::build(t2), BottRing::build(t), {{a, Integer(1)}, {Integer(1) - b * a, -b}});
            return verdict;
        }
        verdict.kind = ClassificationVerdict::Kind::Distinct;
        if (!w != !w2) {
            verdict.invariant = SeparatingInvariant{"cohomologically product", yes_no(w), yes_no(w2)};
            return verdict;
        }
        // Neither is a product. The tower over the smaller projective space
        // has a base class whose N-th power vanishes (N the larger fiber
        // dimension); the other has no nonzero such class.
        const std::size_t big = std::max(n1, n2);
        auto base_class_dies = [big](const TowerSpec& s) {
            if (s.stage(1).fiber_dim >= big)
                return false;
            const BottRing r = BottRing::build(s);
            if (!r.power(r.generator(1), static_cast<unsigned>(big)).is_zero())
                throw InternalError("classify_2stage: base class power does not vanish");
            return true;
        };
        verdict.invariant = SeparatingInvariant{"nonzero degree-2 class with vanishing " + std::to_string(big) + "-th power",
                                                yes_no(base_class_dies(t)), yes_no(base_class_dies(t2))};
        return verdict;
    }

    const BottRing ring = BottRing::build(t), ring2 = BottRing::build(t2);
    std::vector<std::size_t> r1, r2;
    for (std::size_t d = 0; d <= std::max(ring.top_degree(), ring2.top_degree()); ++d) {
        r1.push_back(ring.graded_rank(d));
        r2.push_back(ring2.graded_rank(d));
    }
    verdict.kind = ClassificationVerdict::Kind::Distinct;
    verdict.invariant = SeparatingInvariant{"graded ranks", join(r1), join(r2)};
    return verdict;
}

bool q_product_b3(const Integer& a, const Integer& b, const Integer& c) {
    return (c * (Integer(2) * b - a * c)).is_zero();
}

InvariantBattery invariant_battery(const TowerSpec& tower) {
    const BottRing ring = BottRing::build(tower);
    InvariantBattery out;
    for (std::size_t d = 0; d <= ring.top_degree(); ++d)
        out.graded_ranks.push_back(ring.graded_rank(d));
    out.p1_content = content(tangent_pontrjagin(ring).part(2));
    out.square_zero_mod2 = count_square_zero_residues(ring.with_domain(CoefficientDomain::modular(2)), 2);
    out.square_zero_mod4 = count_square_zero_residues(ring.with_domain(CoefficientDomain::modular(4)), 2);
    return out;
}

ClassificationVerdict classify_3stage(const TowerSpec& t, const TowerSpec& t2, unsigned bound,
                                      const IsoSearchOptions& options) {
    if (t.height() != 3 || t2.height() != 3 || !t.is_bott() || !t2.is_bott())
        throw PreconditionError("classify_3stage: both towers must be 3-stage Bott towers");
    ClassificationVerdict verdict;
    const InvariantBattery b = invariant_battery(t);
    const InvariantBattery b2 = invariant_battery(t2);
    auto distinct = [&](std::string name, std::string x, std::string y) {
        verdict.kind = ClassificationVerdict::Kind::Distinct;
        verdict.invariant = SeparatingInvariant{std::move(name), std::move(x), std::move(y)};
        return verdict;
    };
    if (b.graded_ranks != b2.graded_ranks)
        return distinct("graded ranks", join(b.graded_ranks), join(b2.graded_ranks));
    if (b.p1_content != b2.p1_content)
        return distinct("p1 content", b.p1_content.str(), b2.p1_content.str());
    if (b.square_zero_mod2 != b2.square_zero_mod2)
        return distinct("square-zero classes mod 2", std::to_string(b.square_zero_mod2),
                        std::to_string(b2.square_zero_mod2));
    if (b.square_zero_mod4 != b2.square_zero_mod4)
        return distinct("square-zero classes mod 4", std::to_string(b.square_zero_mod4),
                        std::to_string(b2.square_zero_mod4));

    verdict.bound = bound;
    auto iso = iso_search(BottRing::build(t2), BottRing::build(t), bound, options);
    if (iso) {
        verdict.kind = ClassificationVerdict::Kind::Diffeomorphic;
        verdict.witness = std::move(iso);
    } else {
        verdict.kind = ClassificationVerdict::Kind::Unknown;
    }
    return verdict;
}

} // namespace bott
