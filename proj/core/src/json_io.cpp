#include "bott/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bott/errors.hpp"

namespace bott {

namespace {

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ValidationError("byte " + std::to_string(e.byte), "malformed JSON");
    }
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw ValidationError(file.string(), "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object())
        throw ValidationError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const Json& array(const Json& v, const std::string& path) {
    if (!v.is_array())
        throw ValidationError(path, "expected an array");
    return v;
}

Integer integer(const Json& v, const std::string& path) {
    if (v.is_number_integer())
        return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>()) : Integer(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Integer::parse(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ValidationError(path, "not an integer: \"" + v.get<std::string>() + "\"");
        }
    }
    if (v.is_number_float())
        throw ValidationError(path, "expected an integer (write large integers as strings)");
    throw ValidationError(path, "expected an integer");
}

std::size_t size_value(const Json& v, const std::string& path) {
    const Integer n = integer(v, path);
    const auto small = n.to_int64();
    if (!small || *small <= 0)
        throw ValidationError(path, "expected a positive integer, got " + n.str());
    return static_cast<std::size_t>(*small);
}

ExponentVector::value_type exponent(const Json& v, const std::string& path) {
    const auto n = integer(v, path).to_int64();
    if (!n || *n < 0 || *n > 1000000)
        throw ValidationError(path, "expected a non-negative exponent");
    return static_cast<ExponentVector::value_type>(*n);
}

IntegerMatrix matrix(const Json& v, const std::string& path) {
    IntegerMatrix out;
    for (std::size_t r = 0; r < array(v, path).size(); ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        IntegerVector row;
        for (std::size_t c = 0; c < array(v[r], rp).size(); ++c)
            row.push_back(integer(v[r][c], rp + "[" + std::to_string(c) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

Json string_list(const std::vector<std::string>& v) { return Json(v); }

} // namespace

TowerSpec parse_tower(std::string_view text) {
    const Json doc = parse_text(text);
    const Json& stages = array(member(doc, "stages", ""), "stages");
    RawTower raw;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const std::string path = "stages[" + std::to_string(i) + "]";
        const Json& st = stages[i];
        RawStage rs;
        rs.fiber_dim = integer(member(st, "fiber_dim", path), path + ".fiber_dim");
        rs.summands = matrix(member(st, "summands", path), path + ".summands");
        raw.stages.push_back(std::move(rs));
    }
    return validate_tower(raw);
}

TowerSpec read_tower(const std::filesystem::path& file) { return parse_tower(read_file(file)); }

LineBundleSum parse_bundle(std::string_view text) {
    const Json doc = parse_text(text);
    const Json& dims = array(member(doc, "base_dims", ""), "base_dims");
    std::vector<std::size_t> base;
    for (std::size_t j = 0; j < dims.size(); ++j)
        base.push_back(size_value(dims[j], "base_dims[" + std::to_string(j) + "]"));
    return LineBundleSum(std::move(base), matrix(member(doc, "exponents", ""), "exponents"));
}

LineBundleSum read_bundle(const std::filesystem::path& file) { return parse_bundle(read_file(file)); }

Json to_json(const IntegerMatrix& m) {
    Json out = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) {
            if (auto small = v.to_int64())
                r.push_back(*small);
            else
                r.push_back(v.str());
        }
        out.push_back(std::move(r));
    }
    return out;
}

Json to_json(const TowerSpec& tower) {
    Json stages = Json::array();
    for (const auto& s : tower.stages())
        stages.push_back({{"fiber_dim", s.fiber_dim}, {"summands", to_json(s.summand_exponents)}});
    return {{"stages", std::move(stages)}};
}

Json to_json(const LineBundleSum& bundle) {
    return {{"base_dims", bundle.base_dims()}, {"exponents", to_json(bundle.exponents())}};
}

Json to_json(const CohomologyClass& u) {
    Json out = Json::array();
    for (const auto& [e, c] : u.terms()) {
        Json exps = Json::array();
        for (auto v : e)
            exps.push_back(v);
        out.push_back({{"exponents", std::move(exps)}, {"coeff", c.str()}});
    }
    return out;
}

Json to_json(const CharClassReport& report) {
    return {{"chern", to_json(report.total_chern)},
            {"pontrjagin", to_json(report.total_pontrjagin)},
            {"wu", to_json(report.wu)},
            {"stiefel_whitney", to_json(report.stiefel_whitney)}};
}

Json to_json(const ProductResult& result) {
    if (const auto* w = std::get_if<ProductWitness>(&result))
        return {{"verdict", "PRODUCT"}, {"twists", to_json(w->twists)}, {"generator_change", to_json(w->generator_change())}};
    const auto& f = std::get<ProductFailure>(result);
    return {{"verdict", "DISTINCT"},
            {"stage", f.stage},
            {"reason", f.reason == ProductFailure::Reason::Divisibility ? "divisibility" : "chern residue"},
            {"class", f.detail}};
}

Json to_json(const ClassificationVerdict& verdict) {
    Json out = {{"verdict", to_string(verdict.kind)}};
    out["witness"] = verdict.witness ? to_json(verdict.witness->matrix()) : Json(nullptr);
    if (verdict.two_stage)
        out["twist"] = {{"epsilon", verdict.two_stage->epsilon}, {"w", verdict.two_stage->w.str()}};
    if (verdict.invariant)
        out["invariant"] = {{"name", verdict.invariant->name},
                            {"values", string_list({verdict.invariant->first, verdict.invariant->second})}};
    else
        out["invariant"] = nullptr;
    out["bound"] = verdict.bound ? Json(*verdict.bound) : Json(nullptr);
    return out;
}

Json to_json(const ZeroColumnResult& result) {
    Json trace = Json::array();
    for (const auto& step : result.trace)
        trace.push_back({{"case", step.which == ZeroColumnStep::Case::I ? "I" : "II"},
                         {"column", step.column},
                         {"base_dims", step.dims}});
    return {{"column", result.column}, {"trace", std::move(trace)}};
}

CohomologyClass class_from_json(const BottRing& ring, const Json& j) {
    CohomologyClass out = ring.zero();
    for (std::size_t k = 0; k < array(j, "").size(); ++k) {
        const std::string path = "[" + std::to_string(k) + "]";
        const Json& exps = array(member(j[k], "exponents", path), path + ".exponents");
        std::vector<ExponentVector::value_type> e;
        for (std::size_t i = 0; i < exps.size(); ++i)
            e.push_back(exponent(exps[i], path + ".exponents[" + std::to_string(i) + "]"));
        const Json& coeff = member(j[k], "coeff", path);
        if (!coeff.is_string())
            throw ValidationError(path + ".coeff", "expected a string");
        Scalar c;
        try {
            c = Scalar::parse(coeff.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ValidationError(path + ".coeff", "not a number");
        }
        out += c * ring.monomial(ExponentVector(e.begin(), e.end()));
    }
    return out;
}

Json ring_summary(const BottRing& ring) {
    Json basis = Json::array(), ranks = Json::array(), relations = Json::array();
    for (std::size_t d = 0; d <= ring.top_degree(); ++d) {
        ranks.push_back(ring.graded_rank(d));
        for (const auto& e : ring.basis(d))
            basis.push_back(Json(std::vector<std::uint32_t>(e.begin(), e.end())));
    }
    for (std::size_t i = 1; i <= ring.height(); ++i)
        relations.push_back(ring.relation(i).str());
    return {{"dims", ring.dims()},
            {"domain", ring.domain().name()},
            {"rank", ring.rank()},
            {"graded_ranks", std::move(ranks)},
            {"basis", std::move(basis)},
            {"relations", std::move(relations)}};
}

std::string dump(const Json& j) { return j.dump(2); }

} // namespace bott
