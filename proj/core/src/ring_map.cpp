#include "bott/ring_map.hpp"

#include "bott/errors.hpp"
#include "ring_internal.hpp"

namespace bott {

namespace detail {

DenseVector relation_image(const RingData& target, const TowerSpec& source, std::size_t i,
                           const std::vector<std::vector<Scalar>>& images) {
    const std::size_t m = images.size();
    const StageSpec& stage = source.stage(i);
    DenseVector cur(target.rank), next;
    cur[0] = Scalar(1);
    std::vector<Scalar> lin(target.dims.size());
    for (std::size_t alpha = 0; alpha <= stage.fiber_dim; ++alpha) {
        lin = images[i - 1];
        if (alpha > 0) {
            const auto& row = stage.summand_exponents[alpha - 1];
            for (std::size_t j = 0; j < row.size() && j < m; ++j) {
                if (row[j].is_zero())
                    continue;
                const Scalar a(row[j]);
                for (std::size_t k = 0; k < lin.size(); ++k)
                    if (!images[j][k].is_zero())
                        lin[k] += a * images[j][k];
            }
        }
        multiply_by_linear(target, cur, lin, next);
        std::swap(cur, next);
        if (is_zero(cur))
            break;
    }
    return cur;
}

} // namespace detail

namespace {

std::vector<std::vector<Scalar>> matrix_images(const IntegerMatrix& matrix) {
    std::vector<std::vector<Scalar>> images;
    images.reserve(matrix.size());
    for (const auto& row : matrix)
        images.emplace_back(row.begin(), row.end());
    return images;
}

} // namespace

bool RingMap::is_isomorphism() const noexcept {
    return verified() && (det_ == Integer(1) || det_ == Integer(-1));
}

std::optional<IsoWitness> IsoWitness::from(RingMap map) {
    if (!map.is_isomorphism())
        return std::nullopt;
    return IsoWitness(std::move(map));
}

RingMap verify_map(const BottRing& source, const BottRing& target, const IntegerMatrix& matrix) {
    const std::size_t m = target.height();
    if (source.height() != m)
        throw PreconditionError("verify_map: source height " + std::to_string(source.height()) +
                                " differs from target height " + std::to_string(m));
    if (matrix.size() != m)
        throw PreconditionError("verify_map: matrix must have " + std::to_string(m) + " rows");
    for (const auto& row : matrix)
        if (row.size() != m)
            throw PreconditionError("verify_map: matrix must have " + std::to_string(m) + " columns");

    RingMap map(source, target, matrix);
    map.det_ = determinant(matrix);
    const auto images = matrix_images(matrix);
    for (std::size_t i = 1; i <= m; ++i) {
        auto image = detail::relation_image(target.data(), source.tower(), i, images);
        if (!detail::is_zero(image)) {
            map.failed_relation_ = i;
            break;
        }
    }
    return map;
}

CohomologyClass apply_map(const RingMap& map, const CohomologyClass& u) {
    if (!map.verified())
        throw PreconditionError("apply_map: map does not respect the relations");
    if (!(u.ring().tower() == map.source().tower()))
        throw RingMismatchError("apply_map: class is not in the source tower");
    const BottRing target = map.target().with_domain(u.ring().domain());
    const detail::RingData& r = target.data();
    const auto images = matrix_images(map.matrix());

    detail::DenseVector result(r.rank), cur, next;
    for (const auto& [e, c] : u.terms()) {
        cur.assign(r.rank, Scalar());
        cur[0] = c;
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (std::size_t k = 0; k < e[j]; ++k) {
                detail::multiply_by_linear(r, cur, images[j], next);
                std::swap(cur, next);
            }
        }
        for (std::size_t s = 0; s < r.rank; ++s)
            if (!cur[s].is_zero())
                result[s] += cur[s];
    }
    detail::reduce_dense(r, result);
    return detail::from_dense(target, result);
}

CohomologyClass apply_map(const IsoWitness& iso, const CohomologyClass& u) { return apply_map(iso.map(), u); }

Integer determinant(const IntegerMatrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input)
        if (row.size() != n)
            throw PreconditionError("determinant: matrix is not square");
    if (n == 0)
        return Integer(1);
    IntegerMatrix a = input;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return Integer(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

IntegerMatrix identity_matrix(std::size_t m) {
    IntegerMatrix id(m, IntegerVector(m, Integer(0)));
    for (std::size_t i = 0; i < m; ++i)
        id[i][i] = 1;
    return id;
}

} // namespace bott
