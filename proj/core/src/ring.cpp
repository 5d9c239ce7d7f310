#include "bott/ring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "bott/errors.hpp"
#include "ring_internal.hpp"

namespace bott {

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

constexpr std::size_t kMaxRank = std::size_t{1} << 24;

// Decreasing in (e_m, e_{m-1}, ..., e_1): the order in which rewriting
// strictly descends.
struct RewriteOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        for (std::size_t k = a.size(); k-- > 0;) {
            if (a[k] != b[k])
                return a[k] > b[k];
        }
        return false;
    }
};

void format_monomial(std::ostream& os, const ExponentVector& e) {
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!first)
            os << '*';
        first = false;
        os << 'y' << (i + 1);
        if (e[i] > 1)
            os << '^' << e[i];
    }
}

std::string format_terms(const TermMap& terms) {
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool constant = e.degree() == 0;
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (constant) {
            os << mag;
        } else {
            if (!mag.is_one())
                os << mag << '*';
            format_monomial(os, e);
        }
    }
    return os.str();
}

void add_into(TermMap& terms, const ExponentVector& e, const Scalar& c, const CoefficientDomain* domain) {
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted)
        it->second += c;
    if (domain)
        domain->reduce_in_place(it->second);
    if (it->second.is_zero())
        terms.erase(it);
}

} // namespace

// ---------------------------------------------------------------------------
// ExponentVector / Polynomial

ExponentVector ExponentVector::unit(std::size_t m, std::size_t i) {
    if (i == 0 || i > m)
        throw std::out_of_range("generator index out of range");
    ExponentVector e(m);
    e[i - 1] = 1;
    return e;
}

std::size_t ExponentVector::degree() const noexcept {
    std::size_t d = 0;
    for (auto v : e_)
        d += v;
    return d;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
    if (o.size() != size())
        throw std::invalid_argument("exponent vectors of different length");
    for (std::size_t k = 0; k < e_.size(); ++k)
        e_[k] += o.e_[k];
    return *this;
}

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const {
    const std::size_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k])
            return a[k] > b[k];
    return a.size() < b.size();
}

Polynomial Polynomial::constant(std::size_t variables, const Scalar& c) {
    Polynomial p(variables);
    p.add_term(ExponentVector(variables), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
    Polynomial p(variables);
    p.add_term(ExponentVector::unit(variables, i), Scalar(1));
    return p;
}

Polynomial Polynomial::linear(std::span<const Integer> coeffs) {
    Polynomial p(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero())
            p.add_term(ExponentVector::unit(coeffs.size(), j + 1), Scalar(coeffs[j]));
    return p;
}

void Polynomial::add_term(const ExponentVector& e, const Scalar& c) {
    if (e.size() != vars_)
        throw std::invalid_argument("monomial has wrong number of variables");
    add_into(terms_, e, c, nullptr);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_)
        throw std::invalid_argument("polynomials in different numbers of variables");
    Polynomial r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            add_into(r.terms_, ea + eb, ca * cb, nullptr);
    return r;
}

Polynomial operator*(Polynomial a, const Scalar& s) {
    if (s.is_zero())
        return Polynomial(a.vars_);
    for (auto& [e, c] : a.terms_)
        c *= s;
    return a;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(vars_, Scalar(1));
    for (unsigned i = 0; i < k; ++i)
        result = result * *this;
    return result;
}

std::string Polynomial::str() const { return format_terms(terms_); }

// ---------------------------------------------------------------------------
// Internal machinery

namespace detail {

TermMap reduce_terms(const RingData& ring, const TermMap& input) {
    std::map<ExponentVector, Scalar, RewriteOrder> work;
    for (const auto& [e, c] : input) {
        if (e.size() != ring.dims.size())
            throw RingMismatchError("polynomial has " + std::to_string(e.size()) + " variables, ring has " +
                                    std::to_string(ring.dims.size()));
        auto [it, inserted] = work.try_emplace(e, c);
        if (!inserted)
            it->second += c;
    }

    TermMap out;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const ExponentVector& e = node.key();
        Scalar c = std::move(node.mapped());
        ring.domain.reduce_in_place(c);
        if (c.is_zero())
            continue;

        std::size_t i = e.size();
        for (std::size_t k = e.size(); k-- > 0;) {
            if (e[k] > ring.dims[k]) {
                i = k;
                break;
            }
        }
        if (i == e.size()) {
            out.emplace(e, std::move(c));
            continue;
        }

        const auto& chern = ring.chern[i];
        for (std::size_t q = 1; q <= ring.dims[i]; ++q) {
            for (const auto& [g, s] : chern[q - 1]) {
                ExponentVector f = e;
                f[i] -= static_cast<ExponentVector::value_type>(q);
                f += g;
                auto [it, inserted] = work.try_emplace(std::move(f), -(c * s));
                if (!inserted)
                    it->second -= c * s;
            }
        }
    }
    return out;
}

const std::vector<std::vector<SparseVector>>& RingData::actions() const {
    std::call_once(act_once_, [this] {
        const std::size_t m = dims.size();
        act_.assign(m, std::vector<SparseVector>(rank));
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t s = 0; s < rank; ++s) {
                const ExponentVector& e = slot_exponents[s];
                if (e[j] < dims[j]) {
                    act_[j][s].push_back({static_cast<std::uint32_t>(s + strides[j]), Scalar(1)});
                    continue;
                }
                ExponentVector f = e;
                f[j] += 1;
                TermMap single;
                single.emplace(std::move(f), Scalar(1));
                for (auto& [g, c] : reduce_terms(*this, single))
                    act_[j][s].push_back({static_cast<std::uint32_t>(slot_of(g)), c});
            }
        }
    });
    return act_;
}

DenseVector to_dense(const CohomologyClass& u) {
    const RingData& r = u.ring().data();
    DenseVector v(r.rank);
    for (const auto& [e, c] : u.terms())
        v[r.slot_of(e)] = c;
    return v;
}

CohomologyClass from_dense(const BottRing& ring, const DenseVector& v) {
    const RingData& r = ring.data();
    TermMap terms;
    for (std::size_t s = 0; s < v.size(); ++s)
        if (!v[s].is_zero())
            terms.emplace(r.slot_exponents[s], v[s]);
    return make_class(ring, std::move(terms));
}

bool is_zero(const DenseVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void reduce_dense(const RingData& ring, DenseVector& v) {
    if (ring.domain.kind() == CoefficientDomain::Kind::Modular)
        for (auto& s : v)
            ring.domain.reduce_in_place(s);
}

void multiply_by_generator(const RingData& ring, const DenseVector& in, std::size_t j, DenseVector& out) {
    const auto& act = ring.actions()[j];
    out.assign(ring.rank, Scalar());
    for (std::size_t s = 0; s < in.size(); ++s) {
        if (in[s].is_zero())
            continue;
        for (const auto& [t, c] : act[s])
            out[t] += in[s] * c;
    }
    reduce_dense(ring, out);
}

void multiply_by_linear(const RingData& ring, const DenseVector& in, std::span<const Scalar> lin,
                        DenseVector& out) {
    const auto& act = ring.actions();
    out.assign(ring.rank, Scalar());
    for (std::size_t s = 0; s < in.size(); ++s) {
        if (in[s].is_zero())
            continue;
        for (std::size_t j = 0; j < lin.size(); ++j) {
            if (lin[j].is_zero())
                continue;
            const Scalar f = in[s] * lin[j];
            for (const auto& [t, c] : act[j][s])
                out[t] += f * c;
        }
    }
    reduce_dense(ring, out);
}

DenseVector multiply_dense(const RingData& ring, const DenseVector& a, const DenseVector& b) {
    DenseVector result(ring.rank);
    DenseVector work, tmp;
    for (std::size_t t = 0; t < b.size(); ++t) {
        if (b[t].is_zero())
            continue;
        const ExponentVector& e = ring.slot_exponents[t];
        work = a;
        for (std::size_t j = 0; j < e.size(); ++j) {
            for (std::size_t k = 0; k < e[j]; ++k) {
                multiply_by_generator(ring, work, j, tmp);
                std::swap(work, tmp);
            }
        }
        for (std::size_t s = 0; s < work.size(); ++s)
            if (!work[s].is_zero())
                result[s] += work[s] * b[t];
    }
    reduce_dense(ring, result);
    return result;
}

} // namespace detail

// ---------------------------------------------------------------------------
// BottRing

BottRing BottRing::build(const TowerSpec& tower, const CoefficientDomain& domain) {
    auto data = std::make_shared<detail::RingData>(tower, domain);
    detail::RingData& r = *data;
    r.id = next_ring_id.fetch_add(1);
    r.dims = tower.dims();
    const std::size_t m = r.dims.size();

    r.strides.resize(m);
    r.rank = 1;
    for (std::size_t i = 0; i < m; ++i) {
        r.strides[i] = r.rank;
        r.top += r.dims[i];
        if (r.rank > kMaxRank / (r.dims[i] + 1))
            throw PreconditionError("cohomology rank exceeds supported size");
        r.rank *= r.dims[i] + 1;
    }

    r.slot_exponents.reserve(r.rank);
    r.basis_by_degree.assign(r.top + 1, {});
    for (std::size_t s = 0; s < r.rank; ++s) {
        ExponentVector e(m);
        std::size_t rest = s;
        for (std::size_t i = 0; i < m; ++i) {
            e[i] = static_cast<ExponentVector::value_type>(rest % (r.dims[i] + 1));
            rest /= r.dims[i] + 1;
        }
        r.basis_by_degree[e.degree()].push_back(e);
        r.slot_exponents.push_back(std::move(e));
    }
    for (auto& b : r.basis_by_degree)
        std::sort(b.begin(), b.end(), GradedLex{});

    // Relation table: c_q(xi_i) = e_q(u_{i,1}, ..., u_{i,n_i}), expanded root
    // by root and reduced with the relations of the stages below i.
    r.chern.resize(m);
    r.relations.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t n = r.dims[i - 1];
        std::vector<TermMap> elementary(n + 1);
        elementary[0].emplace(ExponentVector(m), Scalar(1));
        Polynomial relation = Polynomial::variable(m, i);
        for (std::size_t alpha = 1; alpha <= n; ++alpha) {
            const IntegerVector u = tower.summand(i, alpha);
            const Polynomial root = Polynomial::linear(u);
            for (std::size_t q = alpha; q >= 1; --q) {
                TermMap next = elementary[q];
                for (const auto& [e, c] : elementary[q - 1])
                    for (const auto& [g, s] : root.terms())
                        add_into(next, e + g, c * s, nullptr);
                elementary[q] = detail::reduce_terms(r, next);
            }
            relation = relation * (Polynomial::variable(m, i) + root);
        }
        for (std::size_t q = 1; q <= n; ++q)
            r.chern[i - 1].push_back(std::move(elementary[q]));
        r.relations.push_back(std::move(relation));
    }
    return BottRing(std::move(data));
}

BottRing BottRing::with_domain(const CoefficientDomain& domain) const {
    if (domain == data_->domain)
        return *this;
    return build(data_->tower, domain);
}

const TowerSpec& BottRing::tower() const { return data_->tower; }
const CoefficientDomain& BottRing::domain() const { return data_->domain; }
std::size_t BottRing::height() const { return data_->dims.size(); }
const std::vector<std::size_t>& BottRing::dims() const { return data_->dims; }
std::size_t BottRing::top_degree() const { return data_->top; }
std::size_t BottRing::rank() const { return data_->rank; }

std::size_t BottRing::graded_rank(std::size_t d) const {
    if (d > data_->top)
        return 0;
    return data_->basis_by_degree[d].size();
}

const std::vector<ExponentVector>& BottRing::basis(std::size_t d) const {
    static const std::vector<ExponentVector> empty;
    if (d > data_->top)
        return empty;
    return data_->basis_by_degree[d];
}

bool BottRing::in_normal_form(const ExponentVector& e) const {
    if (e.size() != height())
        return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > data_->dims[i])
            return false;
    return true;
}

const Polynomial& BottRing::relation(std::size_t i) const {
    if (i == 0 || i > height())
        throw std::out_of_range("relation index out of range");
    return data_->relations[i - 1];
}

CohomologyClass BottRing::stage_chern_class(std::size_t i, std::size_t q) const {
    if (i == 0 || i > height())
        throw std::out_of_range("stage index out of range");
    if (q == 0)
        return one();
    if (q > data_->dims[i - 1])
        return zero();
    return CohomologyClass(*this, data_->chern[i - 1][q - 1]);
}

CohomologyClass BottRing::summand_class(std::size_t i, std::size_t alpha) const {
    return linear(data_->tower.summand(i, alpha));
}

CohomologyClass BottRing::zero() const { return CohomologyClass(*this, {}); }

CohomologyClass BottRing::one() const { return constant(Scalar(1)); }

CohomologyClass BottRing::constant(const Scalar& c) const {
    TermMap t;
    add_into(t, ExponentVector(height()), c, &data_->domain);
    return CohomologyClass(*this, std::move(t));
}

CohomologyClass BottRing::generator(std::size_t i) const {
    return monomial(ExponentVector::unit(height(), i));
}

CohomologyClass BottRing::linear(std::span<const Integer> coeffs) const {
    if (coeffs.size() != height())
        throw RingMismatchError("linear form has " + std::to_string(coeffs.size()) + " coefficients, ring has height " +
                                std::to_string(height()));
    TermMap t;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero())
            add_into(t, ExponentVector::unit(height(), j + 1), Scalar(coeffs[j]), &data_->domain);
    return CohomologyClass(*this, std::move(t));
}

CohomologyClass BottRing::monomial(const ExponentVector& e) const {
    TermMap t;
    t.emplace(e, Scalar(1));
    return CohomologyClass(*this, detail::reduce_terms(*data_, t));
}

CohomologyClass BottRing::normal_form(const Polynomial& p) const {
    if (p.variables() != height())
        throw RingMismatchError("polynomial has " + std::to_string(p.variables()) + " variables, ring has height " +
                                std::to_string(height()));
    return CohomologyClass(*this, detail::reduce_terms(*data_, p.terms()));
}

CohomologyClass BottRing::multiply(const CohomologyClass& u, const CohomologyClass& v) const {
    if (!same_ring(u.ring()) || !same_ring(v.ring()))
        throw RingMismatchError("multiply: class does not belong to this ring");
    if (u.is_zero() || v.is_zero())
        return zero();
    if (v.max_degree() == 0)
        return v.terms().begin()->second * u;
    if (u.max_degree() == 0)
        return u.terms().begin()->second * v;

    const detail::DenseVector du = detail::to_dense(u);
    const bool v_linear = v.terms().begin()->first.degree() == 1 && v.max_degree() == 1;
    if (v_linear) {
        std::vector<Scalar> lin(height());
        for (const auto& [e, c] : v.terms())
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] == 1)
                    lin[j] = c;
        detail::DenseVector out;
        detail::multiply_by_linear(*data_, du, lin, out);
        return detail::from_dense(*this, out);
    }
    return detail::from_dense(*this, detail::multiply_dense(*data_, du, detail::to_dense(v)));
}

CohomologyClass BottRing::power(const CohomologyClass& u, unsigned k) const {
    if (!same_ring(u.ring()))
        throw RingMismatchError("power: class does not belong to this ring");
    CohomologyClass result = one();
    if (k == 0)
        return result;
    const bool linear_class = !u.is_zero() && u.terms().begin()->first.degree() == 1 && u.max_degree() == 1;
    if (linear_class) {
        std::vector<Scalar> lin(height());
        for (const auto& [e, c] : u.terms())
            for (std::size_t j = 0; j < e.size(); ++j)
                if (e[j] == 1)
                    lin[j] = c;
        detail::DenseVector cur = detail::to_dense(result), next;
        for (unsigned i = 0; i < k; ++i) {
            detail::multiply_by_linear(*data_, cur, lin, next);
            std::swap(cur, next);
            if (detail::is_zero(cur))
                break;
        }
        return detail::from_dense(*this, cur);
    }
    CohomologyClass base = u;
    while (k > 0) {
        if (k & 1u)
            result = multiply(result, base);
        k >>= 1u;
        if (k > 0)
            base = multiply(base, base);
    }
    return result;
}

Scalar BottRing::integrate(const CohomologyClass& u) const {
    if (!same_ring(u.ring()))
        throw RingMismatchError("integrate: class does not belong to this ring");
    ExponentVector top(data_->dims.begin(), data_->dims.end());
    return u.coefficient(top);
}

CohomologyClass BottRing::convert(const CohomologyClass& u) const {
    if (!(u.ring().tower() == tower()))
        throw RingMismatchError("convert: classes of different towers");
    TermMap t;
    for (const auto& [e, c] : u.terms())
        add_into(t, e, c, &data_->domain);
    return CohomologyClass(*this, std::move(t));
}

std::uint64_t BottRing::id() const { return data_->id; }

bool BottRing::same_ring(const BottRing& other) const {
    return data_ == other.data_ || data_->id == other.data_->id ||
           (data_->domain == other.data_->domain && data_->tower == other.data_->tower);
}

// ---------------------------------------------------------------------------
// CohomologyClass

CohomologyClass make_class(const BottRing& ring, TermMap terms) { return CohomologyClass(ring, std::move(terms)); }

void require_same_ring(const CohomologyClass& a, const CohomologyClass& b) {
    if (!a.ring().same_ring(b.ring()))
        throw RingMismatchError("classes belong to different rings");
}

Scalar CohomologyClass::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

bool CohomologyClass::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0 && terms_.begin()->second.is_one();
}

std::size_t CohomologyClass::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

CohomologyClass CohomologyClass::part(std::size_t d) const {
    TermMap t;
    for (const auto& [e, c] : terms_)
        if (e.degree() == d)
            t.emplace(e, c);
    return CohomologyClass(ring_, std::move(t));
}

std::vector<Scalar> CohomologyClass::coordinates(std::size_t d) const {
    const auto& basis = ring_.basis(d);
    std::vector<Scalar> out;
    out.reserve(basis.size());
    for (const auto& e : basis)
        out.push_back(coefficient(e));
    return out;
}

CohomologyClass CohomologyClass::operator-() const {
    CohomologyClass r = *this;
    for (auto& [e, c] : r.terms_) {
        c = -c;
        ring_.domain().reduce_in_place(c);
    }
    return r;
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_into(terms_, e, c, &ring_.domain());
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
    require_same_ring(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_into(terms_, e, -c, &ring_.domain());
    return *this;
}

CohomologyClass operator*(const Scalar& s, const CohomologyClass& a) {
    TermMap t;
    for (const auto& [e, c] : a.terms_)
        add_into(t, e, s * c, &a.ring_.domain());
    return CohomologyClass(a.ring_, std::move(t));
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return a.ring_.same_ring(b.ring_) && a.terms_ == b.terms_;
}

std::string CohomologyClass::str() const { return format_terms(terms_); }

Integer content(const CohomologyClass& u) {
    Integer g = 0;
    for (const auto& [e, c] : u.terms()) {
        if (!c.is_integer())
            throw DomainError("content: non-integer coefficient " + c.str());
        g = gcd(g, c.numerator());
    }
    return g;
}

} // namespace bott
