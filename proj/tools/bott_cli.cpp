// bott: command-line front end for the generalized Bott tower engine.
//
// Exit status: 0 computed (or positive verdict), 1 negative verdict
// (DISTINCT, UNKNOWN, no witness, non-trivial bundle), 2 input error.

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "bott/bundle.hpp"
#include "bott/char_classes.hpp"
#include "bott/classify.hpp"
#include "bott/errors.hpp"
#include "bott/json_io.hpp"

namespace {

using namespace bott;

constexpr int kComputed = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
    bool json = false;
    std::string tower1, tower2, bundle;
    std::string modulus;
    bool rational = false;
    unsigned bound = kDefaultSearchBound;
    unsigned workers = 0;
    std::uint64_t seed = 0;
    std::size_t height = 3;
    std::size_t max_dim = 2;
    int max_entry = 3;
};

void print_matrix(const IntegerMatrix& m) {
    for (const auto& row : m) {
        std::cout << "  [";
        for (std::size_t j = 0; j < row.size(); ++j)
            std::cout << (j ? ", " : "") << row[j];
        std::cout << "]\n";
    }
}

void print_verdict(const ClassificationVerdict& v) {
    std::cout << to_string(v.kind) << '\n';
    if (v.two_stage)
        std::cout << "twist: epsilon = " << v.two_stage->epsilon << ", w = " << v.two_stage->w << '\n';
    if (v.witness) {
        std::cout << "witness (y_i' -> sum_j M_ij y_j):\n";
        print_matrix(v.witness->matrix());
    }
    if (v.invariant)
        std::cout << "invariant " << v.invariant->name << ": " << v.invariant->first << " vs "
                  << v.invariant->second << '\n';
    if (v.bound)
        std::cout << "bound: " << *v.bound << '\n';
}

int verdict_status(const ClassificationVerdict& v) {
    return v.kind == ClassificationVerdict::Kind::Diffeomorphic ? kComputed : kNegative;
}

int run_ring(const Options& o) {
    CoefficientDomain domain = CoefficientDomain::integers();
    if (!o.modulus.empty())
        domain = CoefficientDomain::modular(Integer::parse(o.modulus));
    else if (o.rational)
        domain = CoefficientDomain::rationals();
    const BottRing ring = BottRing::build(read_tower(o.tower1), domain);
    if (o.json) {
        std::cout << dump(ring_summary(ring)) << '\n';
        return kComputed;
    }
    std::cout << "coefficients: " << domain.name() << "\nrank: " << ring.rank() << "\ngraded ranks:";
    for (std::size_t d = 0; d <= ring.top_degree(); ++d)
        std::cout << ' ' << ring.graded_rank(d);
    std::cout << "\nrelations:\n";
    for (std::size_t i = 1; i <= ring.height(); ++i)
        std::cout << "  f" << i << " = " << ring.relation(i).str() << '\n';
    std::cout << "basis:\n";
    for (std::size_t d = 0; d <= ring.top_degree(); ++d) {
        std::cout << "  H^" << 2 * d << ':';
        for (const auto& e : ring.basis(d))
            std::cout << ' ' << ring.monomial(e).str();
        std::cout << '\n';
    }
    return kComputed;
}

int run_classes(const Options& o) {
    const CharClassReport report = char_class_report(read_tower(o.tower1));
    if (o.json) {
        std::cout << dump(to_json(report)) << '\n';
        return kComputed;
    }
    std::cout << "c = " << report.total_chern.str() << '\n'
              << "p = " << report.total_pontrjagin.str() << '\n'
              << "v = " << report.wu.str() << "  (mod 2)\n"
              << "w = " << report.stiefel_whitney.str() << "  (mod 2)\n";
    return kComputed;
}

int run_is_product(const Options& o) {
    const ProductResult r = is_product_cohomology(read_tower(o.tower1));
    const bool product = std::holds_alternative<ProductWitness>(r);
    if (o.json) {
        std::cout << dump(to_json(r)) << '\n';
    } else if (product) {
        std::cout << "PRODUCT\ngenerator change x = C y:\n";
        print_matrix(std::get<ProductWitness>(r).generator_change());
    } else {
        const auto& f = std::get<ProductFailure>(r);
        std::cout << "DISTINCT\nstage " << f.stage << ": "
                  << (f.reason == ProductFailure::Reason::Divisibility ? "c1 not divisible: " : "Chern residue: ")
                  << f.detail << '\n';
    }
    return product ? kComputed : kNegative;
}

int run_classify2(const Options& o) {
    const auto v = classify_2stage(read_tower(o.tower1), read_tower(o.tower2));
    if (o.json)
        std::cout << dump(to_json(v)) << '\n';
    else
        print_verdict(v);
    return verdict_status(v);
}

int run_classify3(const Options& o) {
    const auto v = classify_3stage(read_tower(o.tower1), read_tower(o.tower2), o.bound, {o.workers});
    if (o.json)
        std::cout << dump(to_json(v)) << '\n';
    else
        print_verdict(v);
    return verdict_status(v);
}

int run_iso_search(const Options& o) {
    const BottRing target = BottRing::build(read_tower(o.tower1));
    const BottRing source = BottRing::build(read_tower(o.tower2));
    const auto iso = iso_search(source, target, o.bound, {o.workers});
    if (o.json) {
        Json out = {{"bound", o.bound}, {"witness", iso ? to_json(iso->matrix()) : Json(nullptr)}};
        std::cout << dump(out) << '\n';
    } else if (iso) {
        std::cout << "witness (y_i' -> sum_j M_ij y_j):\n";
        print_matrix(iso->matrix());
    } else {
        std::cout << "no isomorphism with entries bounded by " << o.bound << '\n';
    }
    return iso ? kComputed : kNegative;
}

int run_bundle_trivial(const Options& o) {
    const LineBundleSum bundle = read_bundle(o.bundle);
    const bool trivial = is_trivial(bundle);
    Json trace = Json::array();
    if (trivial && bundle.rank() < bundle.base_dim())
        trace = to_json(find_zero_column(bundle))["trace"];
    if (o.json) {
        std::cout << dump({{"trivial", trivial}, {"zero_column_trace", trace}}) << '\n';
    } else {
        std::cout << (trivial ? "trivial" : "not trivial") << "\nc = " << total_chern_bundle(bundle).str() << '\n';
        for (const auto& step : trace)
            std::cout << "  case " << step["case"].get<std::string>() << ": drop column "
                      << step["column"].get<std::size_t>() << '\n';
    }
    return trivial ? kComputed : kNegative;
}

int run_random_tower(const Options& o) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<std::size_t> dim(1, std::max<std::size_t>(o.max_dim, 1));
    std::uniform_int_distribution<int> entry(-o.max_entry, o.max_entry);
    RawTower raw;
    for (std::size_t i = 0; i < o.height; ++i) {
        RawStage s;
        s.fiber_dim = Integer(dim(rng));
        const auto n = *s.fiber_dim.to_int64();
        for (std::int64_t r = 0; r < n; ++r) {
            IntegerVector row;
            for (std::size_t j = 0; j < i; ++j)
                row.push_back(entry(rng));
            s.summands.push_back(std::move(row));
        }
        raw.stages.push_back(std::move(s));
    }
    std::cout << dump(to_json(validate_tower(raw))) << '\n';
    return kComputed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology and classification of generalized Bott towers"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Machine-readable JSON output");

    auto* ring = app.add_subcommand("ring", "Cohomology ring: basis, relations, graded ranks");
    ring->add_option("tower", o.tower1, "Tower file")->required();
    auto* mod = ring->add_option("--mod", o.modulus, "Coefficients in Z/P");
    ring->add_flag("--rational", o.rational, "Rational coefficients")->excludes(mod);

    auto* classes = app.add_subcommand("classes", "Chern, Pontrjagin, Wu and Stiefel-Whitney classes");
    classes->add_option("tower", o.tower1, "Tower file")->required();

    auto* product = app.add_subcommand("is-product", "Is the cohomology that of a product of projective spaces");
    product->add_option("tower", o.tower1, "Tower file")->required();

    auto* c2 = app.add_subcommand("classify2", "Classify two 2-stage towers");
    c2->add_option("tower1", o.tower1, "First tower")->required();
    c2->add_option("tower2", o.tower2, "Second tower")->required();

    auto* c3 = app.add_subcommand("classify3", "Classify two 3-stage Bott towers");
    c3->add_option("tower1", o.tower1, "First tower")->required();
    c3->add_option("tower2", o.tower2, "Second tower")->required();
    c3->add_option("--bound", o.bound, "Entry bound for the isomorphism search")->capture_default_str();
    c3->add_option("--workers", o.workers, "Search threads (0 = all cores)");

    auto* iso = app.add_subcommand("iso-search", "Search for a ring isomorphism H*(tower2) -> H*(tower1)");
    iso->add_option("tower1", o.tower1, "Target tower")->required();
    iso->add_option("tower2", o.tower2, "Source tower")->required();
    iso->add_option("--bound", o.bound, "Entry bound")->required();
    iso->add_option("--workers", o.workers, "Search threads (0 = all cores)");

    auto* bundle = app.add_subcommand("bundle-trivial", "Triviality of a sum of line bundles");
    bundle->add_option("bundle", o.bundle, "Bundle file")->required();

    auto* random = app.add_subcommand("random-tower", "Print a pseudo-random tower");
    random->add_option("--seed", o.seed, "Generator seed")->required();
    random->add_option("--height", o.height, "Number of stages")->capture_default_str()->check(CLI::Range(1, 12));
    random->add_option("--max-dim", o.max_dim, "Largest fiber dimension")->capture_default_str()->check(CLI::Range(1, 8));
    random->add_option("--max-entry", o.max_entry, "Largest |exponent|")->capture_default_str()->check(CLI::Range(0, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? 0 : kInputError;
    }

    try {
        if (*ring)
            return run_ring(o);
        if (*classes)
            return run_classes(o);
        if (*product)
            return run_is_product(o);
        if (*c2)
            return run_classify2(o);
        if (*c3)
            return run_classify3(o);
        if (*iso)
            return run_iso_search(o);
        if (*bundle)
            return run_bundle_trivial(o);
        if (*random)
            return run_random_tower(o);
    } catch (const ValidationError& e) {
        std::cerr << "bott: invalid input: " << e.what() << '\n';
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "bott: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "bott: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bott: invalid argument: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
