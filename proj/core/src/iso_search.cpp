#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

#include "bott/classify.hpp"
#include "bott/errors.hpp"
#include "ring_internal.hpp"

namespace bott {

namespace {

using Vec = std::vector<std::int64_t>;

bool add_mul(std::int64_t& acc, std::int64_t a, std::int64_t b) {
    std::int64_t p;
    return !__builtin_mul_overflow(a, b, &p) && !__builtin_add_overflow(acc, p, &acc);
}

// Degree-wise multiplication by the generators of the target ring with
// machine integers: mult[d][j] maps degree d coordinates to degree d + 1.
class FastProducts {
public:
    explicit FastProducts(const detail::RingData& r) : r_(r) {
        if (r.domain.kind() != CoefficientDomain::Kind::Integers) {
            usable_ = false;
            return;
        }
        const std::size_t m = r.dims.size();
        position_.assign(r.rank, 0);
        for (std::size_t d = 0; d <= r.top; ++d)
            for (std::size_t k = 0; k < r.basis_by_degree[d].size(); ++k)
                position_[r.slot_of(r.basis_by_degree[d][k])] = k;
        const auto& act = r.actions();
        mult_.assign(r.top, std::vector<std::vector<Entries>>(m));
        for (std::size_t d = 0; d < r.top; ++d) {
            for (std::size_t j = 0; j < m; ++j) {
                auto& cols = mult_[d][j];
                cols.resize(r.basis_by_degree[d].size());
                for (std::size_t k = 0; k < cols.size(); ++k) {
                    const std::size_t s = r.slot_of(r.basis_by_degree[d][k]);
                    for (const auto& [t, c] : act[j][s]) {
                        const auto v = c.numerator().to_int64();
                        if (!v || !c.is_integer()) {
                            usable_ = false;
                            return;
                        }
                        cols[k].push_back({position_[t], *v});
                    }
                }
            }
        }
    }

    bool usable() const { return usable_; }

    // Product of the given linear forms; nullopt on overflow.
    std::optional<bool> product_vanishes(const std::vector<Vec>& forms) const {
        Vec cur{1}, next;
        for (std::size_t d = 0; d < forms.size(); ++d) {
            if (d >= r_.top)
                return true;
            next.assign(r_.basis_by_degree[d + 1].size(), 0);
            const Vec& lin = forms[d];
            for (std::size_t j = 0; j < lin.size(); ++j) {
                if (lin[j] == 0)
                    continue;
                const auto& cols = mult_[d][j];
                for (std::size_t k = 0; k < cur.size(); ++k) {
                    if (cur[k] == 0)
                        continue;
                    std::int64_t f;
                    if (__builtin_mul_overflow(cur[k], lin[j], &f))
                        return std::nullopt;
                    for (const auto& [t, c] : cols[k])
                        if (!add_mul(next[t], f, c))
                            return std::nullopt;
                }
            }
            std::swap(cur, next);
            if (std::all_of(cur.begin(), cur.end(), [](std::int64_t v) { return v == 0; }))
                return true;
        }
        return std::all_of(cur.begin(), cur.end(), [](std::int64_t v) { return v == 0; });
    }

private:
    struct Entry {
        std::size_t pos;
        std::int64_t coeff;
    };
    using Entries = std::vector<Entry>;

    const detail::RingData& r_;
    bool usable_ = true;
    std::vector<std::size_t> position_;
    std::vector<std::vector<std::vector<Entries>>> mult_;
};

class Search {
public:
    Search(const BottRing& source, const BottRing& target, unsigned bound)
        : source_(source), target_(target), fast_(target.data()), m_(target.height()),
          bound_(static_cast<std::int64_t>(bound)) {
        const TowerSpec& tower = source.tower();
        for (std::size_t i = 1; i <= m_; ++i) {
            std::vector<Vec> rows;
            for (std::size_t alpha = 1; alpha <= tower.stage(i).fiber_dim; ++alpha) {
                const IntegerVector u = tower.summand(i, alpha);
                Vec row(m_, 0);
                for (std::size_t j = 0; j < m_; ++j) {
                    const auto v = u[j].to_int64();
                    if (!v)
                        throw PreconditionError("iso_search: tower entries exceed machine range");
                    row[j] = *v;
                }
                rows.push_back(std::move(row));
            }
            summands_.push_back(std::move(rows));
        }
        // Row candidates in lexicographic order; all-zero rows are never
        // part of an invertible matrix.
        Vec v(m_, -bound_);
        while (true) {
            if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }))
                candidates_.push_back(v);
            std::size_t j = m_;
            while (j > 0 && v[j - 1] == bound_) {
                v[j - 1] = -bound_;
                --j;
            }
            if (j == 0)
                break;
            ++v[j - 1];
        }
    }

    // Candidate indices for the first row, in order.
    std::vector<std::size_t> first_rows() {
        std::vector<std::size_t> out;
        std::vector<Vec> rows(1);
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            rows[0] = candidates_[c];
            if (primitive_minors(rows) && relation_vanishes(rows, 1))
                out.push_back(c);
        }
        return out;
    }

    // Depth-first completion of a fixed first row; the first hit is the
    // lexicographically smallest matrix with that first row.
    std::optional<IntegerMatrix> complete(std::size_t first) const {
        std::vector<Vec> rows{candidates_[first]};
        if (extend(rows))
            return to_matrix(rows);
        return std::nullopt;
    }

    const BottRing& source() const { return source_; }
    const BottRing& target() const { return target_; }

private:
    bool extend(std::vector<Vec>& rows) const {
        if (rows.size() == m_)
            return IsoWitness::from(verify_map(source_, target_, to_matrix(rows))).has_value();
        rows.emplace_back();
        for (const auto& cand : candidates_) {
            rows.back() = cand;
            if (!primitive_minors(rows) || !relation_vanishes(rows, rows.size()))
                continue;
            if (extend(rows))
                return true;
        }
        rows.pop_back();
        return false;
    }

    // The rows chosen so far can still extend to a unimodular matrix iff the
    // gcd of their maximal minors is 1.
    bool primitive_minors(const std::vector<Vec>& rows) const {
        const std::size_t k = rows.size();
        if (k == m_)
            return std::abs(det(rows, all_columns())) == 1;
        std::int64_t g = 0;
        std::vector<std::size_t> cols(k);
        for (std::size_t i = 0; i < k; ++i)
            cols[i] = i;
        while (true) {
            g = std::gcd(g, det(rows, cols));
            if (g == 1)
                return true;
            std::size_t i = k;
            while (i > 0 && cols[i - 1] == m_ - k + i - 1)
                --i;
            if (i == 0)
                return false;
            ++cols[i - 1];
            for (std::size_t t = i; t < k; ++t)
                cols[t] = cols[t - 1] + 1;
        }
    }

    std::vector<std::size_t> all_columns() const {
        std::vector<std::size_t> cols(m_);
        for (std::size_t i = 0; i < m_; ++i)
            cols[i] = i;
        return cols;
    }

    // Determinant of the square submatrix on `cols` by cofactor expansion;
    // sizes here are tiny.
    static std::int64_t det(const std::vector<Vec>& rows, const std::vector<std::size_t>& cols,
                            std::size_t row = 0) {
        const std::size_t k = cols.size();
        if (k == 1)
            return rows[row][cols[0]];
        std::int64_t total = 0;
        std::vector<std::size_t> rest(k - 1);
        for (std::size_t c = 0; c < k; ++c) {
            const std::int64_t a = rows[row][cols[c]];
            if (a == 0)
                continue;
            for (std::size_t t = 0, u = 0; t < k; ++t)
                if (t != c)
                    rest[u++] = cols[t];
            const std::int64_t minor = det(rows, rest, row + 1);
            total += (c % 2 == 0 ? a : -a) * minor;
        }
        return total;
    }

    bool relation_vanishes(const std::vector<Vec>& rows, std::size_t i) const {
        std::vector<Vec> forms{rows[i - 1]};
        for (const auto& u : summands_[i - 1]) {
            Vec f = rows[i - 1];
            for (std::size_t j = 0; j + 1 < i; ++j)
                if (u[j] != 0)
                    for (std::size_t k = 0; k < m_; ++k)
                        f[k] += u[j] * rows[j][k];
            forms.push_back(std::move(f));
        }
        if (fast_.usable())
            if (auto r = fast_.product_vanishes(forms))
                return *r;
        std::vector<std::vector<Scalar>> images;
        for (std::size_t j = 0; j < i; ++j)
            images.emplace_back(rows[j].begin(), rows[j].end());
        while (images.size() < m_)
            images.emplace_back(m_, Scalar());
        return detail::is_zero(detail::relation_image(target_.data(), source_.tower(), i, images));
    }

    static IntegerMatrix to_matrix(const std::vector<Vec>& rows) {
        IntegerMatrix out;
        for (const auto& r : rows)
            out.emplace_back(r.begin(), r.end());
        return out;
    }

    BottRing source_;
    BottRing target_;
    FastProducts fast_;
    std::size_t m_;
    std::int64_t bound_;
    std::vector<std::vector<Vec>> summands_;
    std::vector<Vec> candidates_;
};

} // namespace

std::optional<IsoWitness> iso_search(const BottRing& source, const BottRing& target, unsigned bound,
                                     const IsoSearchOptions& options) {
    if (source.height() != target.height())
        throw PreconditionError("iso_search: towers have different heights");
    auto d1 = source.dims(), d2 = target.dims();
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2)
        throw PreconditionError("iso_search: fiber dimensions differ");
    double space = 1;
    for (std::size_t i = 0; i < source.height(); ++i)
        space *= 2.0 * bound + 1;
    if (space > 1e7)
        throw PreconditionError("iso_search: row space (2*bound+1)^m is too large to enumerate");

    Search search(source, target, bound);
    const std::vector<std::size_t> firsts = search.first_rows();

    unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(firsts.size(), 1)));

    // Workers take first rows in order; a hit at position p makes every
    // position after p irrelevant, so the smallest hit is the answer.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<IntegerMatrix>> found(firsts.size());
    auto work = [&] {
        while (true) {
            const std::size_t p = next.fetch_add(1);
            if (p >= firsts.size() || p > best.load())
                return;
            if (auto m = search.complete(firsts[p])) {
                found[p] = std::move(m);
                std::size_t cur = best.load();
                while (p < cur && !best.compare_exchange_weak(cur, p)) {
                }
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }

    const std::size_t p = best.load();
    if (p == std::numeric_limits<std::size_t>::max())
        return std::nullopt;
    return IsoWitness::from(verify_map(source, target, *found[p]));
}

} // namespace bott
