#include "bott/square_zero.hpp"

#include "bott/errors.hpp"
#include "ring_internal.hpp"

namespace bott {

namespace {

bool power_vanishes(const detail::RingData& r, const std::vector<Scalar>& lin, unsigned k) {
    detail::DenseVector cur(r.rank), next;
    cur[0] = Scalar(1);
    for (unsigned i = 0; i < k; ++i) {
        detail::multiply_by_linear(r, cur, lin, next);
        std::swap(cur, next);
        if (detail::is_zero(cur))
            return true;
    }
    return detail::is_zero(cur);
}

// Visits every vector of [lo, hi]^m in lexicographic order until `visit`
// returns false.
template <typename F>
void for_each_vector(std::size_t m, std::int64_t lo, std::int64_t hi, F&& visit) {
    std::vector<std::int64_t> b(m, lo);
    while (true) {
        if (!visit(b))
            return;
        std::size_t j = m;
        while (j > 0 && b[j - 1] == hi) {
            b[j - 1] = lo;
            --j;
        }
        if (j == 0)
            return;
        ++b[j - 1];
    }
}

template <typename F>
void scan(const BottRing& ring, unsigned k, unsigned bound, F&& found) {
    if (k == 0)
        throw PreconditionError("square_zero: power must be at least 1");
    const auto& r = ring.data();
    const std::int64_t B = bound;
    std::vector<Scalar> lin(ring.height());
    for_each_vector(ring.height(), -B, B, [&](const std::vector<std::int64_t>& b) {
        bool all_zero = true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            lin[j] = r.domain.reduce(Scalar(b[j]));
            all_zero = all_zero && b[j] == 0;
        }
        if (all_zero || !power_vanishes(r, lin, k))
            return true;
        return found(IntegerVector(b.begin(), b.end()));
    });
}

} // namespace

std::vector<IntegerVector> square_zero_vectors(const BottRing& ring, unsigned k, unsigned bound) {
    std::vector<IntegerVector> out;
    scan(ring, k, bound, [&](IntegerVector v) {
        out.push_back(std::move(v));
        return true;
    });
    return out;
}

std::vector<CohomologyClass> square_zero_elements(const BottRing& ring, unsigned k, unsigned bound) {
    std::vector<CohomologyClass> out;
    for (const auto& v : square_zero_vectors(ring, k, bound))
        out.push_back(ring.linear(v));
    return out;
}

std::optional<IntegerVector> find_square_zero(const BottRing& ring, unsigned k, unsigned bound,
                                              const std::function<bool(const IntegerVector&)>& accept) {
    std::optional<IntegerVector> result;
    scan(ring, k, bound, [&](IntegerVector v) {
        if (!accept(v))
            return true;
        result = std::move(v);
        return false;
    });
    return result;
}

std::size_t count_square_zero_residues(const BottRing& ring, unsigned k) {
    if (!ring.domain().is_modular())
        throw DomainError("count_square_zero_residues: ring must be over Z/n");
    const auto n = ring.domain().modulus().to_int64();
    if (!n || *n > 64)
        throw PreconditionError("count_square_zero_residues: modulus too large to enumerate");
    const auto& r = ring.data();
    std::size_t count = 0;
    std::vector<Scalar> lin(ring.height());
    for_each_vector(ring.height(), 0, *n - 1, [&](const std::vector<std::int64_t>& b) {
        bool all_zero = true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            lin[j] = Scalar(b[j]);
            all_zero = all_zero && b[j] == 0;
        }
        if (!all_zero && power_vanishes(r, lin, k))
            ++count;
        return true;
    });
    return count;
}

} // namespace bott
