#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bott/ring.hpp"
#include "bott/ring_map.hpp"

namespace bott {

/// Stage-wise twists making the cohomology a product: x_i = y_i + w_i with
/// w_i in span(y_1, ..., y_{i-1}) and x_i^{n_i+1} = 0.
struct ProductWitness {
    /// twists[i-1] has length m (zeros from position i - 1 on).
    IntegerMatrix twists;

    /// Rows of the unitriangular change of basis x = C y.
    IntegerMatrix generator_change() const;
};

struct ProductFailure {
    enum class Reason { Divisibility, ChernResidue };
    std::size_t stage;
    Reason reason;
    /// The class that failed: c_1(xi_i) for Divisibility, the twisted total
    /// Chern class for ChernResidue.
    std::string detail;
};

using ProductResult = std::variant<ProductWitness, ProductFailure>;

ProductResult is_product_cohomology(const TowerSpec& tower);

/// prod_alpha (1 + eps (u_alpha' + w x)) = prod_alpha (1 + u_alpha).
struct TwoStageWitness {
    int epsilon;
    Integer w;
};

struct SeparatingInvariant {
    std::string name;
    std::string first;
    std::string second;
};

struct ClassificationVerdict {
    enum class Kind { Diffeomorphic, Distinct, Unknown };

    Kind kind = Kind::Unknown;
    /// Ring isomorphism H*(second) -> H*(first), set for Diffeomorphic.
    std::optional<IsoWitness> witness;
    std::optional<TwoStageWitness> two_stage;
    std::optional<SeparatingInvariant> invariant;
    std::optional<unsigned> bound;
};

std::string to_string(ClassificationVerdict::Kind kind);

/// Height-2 towers. Throws PreconditionError otherwise.
ClassificationVerdict classify_2stage(const TowerSpec& t, const TowerSpec& t2);

/// c(2b - ac) = 0.
bool q_product_b3(const Integer& a, const Integer& b, const Integer& c);

struct IsoSearchOptions {
    /// 0 picks the hardware concurrency.
    unsigned workers = 0;
};

/// First verified isomorphism source -> target whose matrix has entries in
/// [-bound, bound], in lexicographic order of matrices (row y_1' first,
/// entries ascending). Throws PreconditionError when heights or fiber
/// dimension multisets differ.
std::optional<IsoWitness> iso_search(const BottRing& source, const BottRing& target, unsigned bound,
                                     const IsoSearchOptions& options = {});

struct InvariantBattery {
    std::vector<std::size_t> graded_ranks;
    /// gcd of the coefficients of p_1; 0 when p_1 vanishes.
    Integer p1_content;
    std::size_t square_zero_mod2 = 0;
    std::size_t square_zero_mod4 = 0;
};

InvariantBattery invariant_battery(const TowerSpec& tower);

inline constexpr unsigned kDefaultSearchBound = 4;

/// 3-stage Bott towers (all fibers CP^1). Throws PreconditionError otherwise.
ClassificationVerdict classify_3stage(const TowerSpec& t, const TowerSpec& t2, unsigned bound = kDefaultSearchBound,
                                      const IsoSearchOptions& options = {});

} // namespace bott
