#include "leibrack/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibrack/json_io.hpp"

namespace leibrack {

namespace {

constexpr unsigned long long kDefaultSeed = 20250814ULL;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// scalar grammar on the command line: "N", "N/D", or "RE,IM" for a + bi
Rational parse_rational_token(const std::string& tok) {
    try {
        Rational r(tok);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("cannot parse rational '" + tok + "' (expected N or N/D)");
    }
}

GaussianRational parse_scalar_token(const std::string& tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos) return {parse_rational_token(tok), Rational(0)};
    return {parse_rational_token(tok.substr(0, comma)),
            parse_rational_token(tok.substr(comma + 1))};
}

unsigned long long sample_seed() {
    const char* env = std::getenv("LEIBRACK_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    unsigned long long seed = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0')
        throw input_error("LEIBRACK_SEED must be an unsigned integer");
    return seed;
}

template <typename K>
K random_scalar(std::mt19937_64& rng);

template <>
Rational random_scalar<Rational>(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

template <>
GaussianRational random_scalar<GaussianRational>(std::mt19937_64& rng) {
    Rational re = random_scalar<Rational>(rng);
    Rational im = random_scalar<Rational>(rng);
    return {re, im};
}

// flags shared by `build` and `tangent`
struct FamilyFlags {
    std::string family;
    std::string a = "0";
    std::size_t k = 1;
    std::size_t n = 1;
    std::string matrix;
    std::string field = "Q";
    std::string name;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("family", f.family,
                    "one of: heisenberg, heisenberg-jordan, heisenberg-real-jordan, kronecker, "
                    "dieudonne, classical-heisenberg, realified-complex-heisenberg")
        ->required();
    cmd->add_option("--a", f.a, "scalar parameter: N, N/D, or RE,IM for a + bi");
    cmd->add_option("--k", f.k, "block size parameter");
    cmd->add_option("--n", f.n, "family size parameter");
    cmd->add_option("--matrix", f.matrix, "parameter matrix as inline JSON rows of scalars");
    cmd->add_option("--field", f.field, "ground field: Q or Qi")
        ->check(CLI::IsMember({"Q", "Qi"}));
    cmd->add_option("--name", f.name, "override the document name");
}

AnyAlgebra algebra_from_flags(const FamilyFlags& f) {
    static const std::vector<std::string> known = {
        "heisenberg",           "heisenberg-jordan",
        "heisenberg-real-jordan", "kronecker",
        "dieudonne",            "classical-heisenberg",
        "realified-complex-heisenberg"};
    if (std::find(known.begin(), known.end(), f.family) == known.end())
        throw input_error("unknown family '" + f.family + "'");
    FamilySpec spec;
    spec.family = f.family;
    spec.a = parse_scalar_token(f.a);
    spec.k = f.k;
    spec.n = f.n;
    spec.gaussian_field = f.field == "Qi";
    if (!f.matrix.empty()) {
        json j;
        try {
            j = json::parse(f.matrix);
        } catch (const json::parse_error& e) {
            throw input_error(std::string("invalid --matrix JSON: ") + e.what());
        }
        if (spec.gaussian_field) {
            spec.matrix = gaussian_matrix_from_json(j);
        } else {
            Matrix<Rational> m = rational_matrix_from_json(j);
            Matrix<GaussianRational> lift(m.rows(), m.cols());
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) lift.at(r, c) = m.at(r, c);
            spec.matrix = std::move(lift);
        }
    }
    AnyAlgebra A = [&] {
        try {
            return build_family(spec);
        } catch (const precondition_error& e) {
            // constructor preconditions on flag values are input errors here
            throw input_error(e.what());
        }
    }();
    if (!f.name.empty()) std::visit([&](auto& L) { L.set_name(f.name); }, A);
    return A;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

template <typename K>
json identity_verdict(const std::optional<IdentityWitness<K>>& w) {
    json out;
    out["pass"] = !w.has_value();
    if (w) {
        json wit;
        wit["i"] = w->i + 1;
        wit["j"] = w->j + 1;
        wit["k"] = w->k + 1;
        wit["residual"] = point_to_json(w->residual);
        out["witness"] = std::move(wit);
    }
    return out;
}

int cmd_check(const std::string& path) {
    AlgebraDocument doc = parse_algebra_document(read_input(path));
    return std::visit(
        [](const auto& L) {
            json out;
            if (!L.name().empty()) out["name"] = L.name();
            auto left = check_left_leibniz(L);
            out["left"] = identity_verdict(left);
            out["right"] = identity_verdict(check_right_leibniz(L));
            auto cls = nilpotency_class(L);
            out["nilpotent"] = cls.has_value();
            out["class"] = cls ? json(*cls) : json(nullptr);
            out["commutator_dim"] = commutator_ideal(L).dim();
            out["leib_dim"] = leib_ideal(L).dim();
            out["left_center_dim"] = left_center(L).dim();
            out["right_center_dim"] = right_center(L).dim();
            out["center_dim"] = center(L).dim();
            print(out);
            return left.has_value() ? 1 : 0;
        },
        doc.algebra);
}

int cmd_classify(const std::string& path) {
    AlgebraDocument doc = parse_algebra_document(read_input(path));
    std::visit(
        [](const auto& L) {
            json out = classification_to_json(classify(L));
            if (!L.name().empty()) out["name"] = L.name();
            print(out);
        },
        doc.algebra);
    return 0;
}

int cmd_iso(const std::string& path1, const std::string& path2) {
    AlgebraDocument d1 = parse_algebra_document(read_input(path1));
    AlgebraDocument d2 = parse_algebra_document(read_input(path2));
    if (d1.gaussian() != d2.gaussian())
        throw input_error("documents use different ground fields");
    json out;
    if (d1.gaussian()) {
        const auto& L1 = std::get<LeibnizAlgebra<GaussianRational>>(d1.algebra);
        const auto& L2 = std::get<LeibnizAlgebra<GaussianRational>>(d2.algebra);
        out["isomorphic"] = isomorphic(L1, L2);
        out["left"] = classification_to_json(classify(L1));
        out["right"] = classification_to_json(classify(L2));
    } else {
        const auto& L1 = std::get<LeibnizAlgebra<Rational>>(d1.algebra);
        const auto& L2 = std::get<LeibnizAlgebra<Rational>>(d2.algebra);
        out["isomorphic"] = isomorphic(L1, L2);
        out["left"] = classification_to_json(classify(L1));
        out["right"] = classification_to_json(classify(L2));
    }
    print(out);
    return 0;
}

template <typename K>
int rack_of(const LeibnizAlgebra<K>& L, bool symbolic, bool sampled, std::size_t nsamples) {
    RackSpec<K> r = cocycle_rack(L);
    const auto& m = std::get<AffineModel<K>>(r.model);
    json out;
    out["model"] = affine_model_to_json(m);
    bool failed = false;
    if (symbolic) {
        RackReport<K> rep = rack_axioms_check_symbolic(r);
        out["symbolic"] = rack_report_to_json(rep);
        failed = failed || !rep.rack_axioms_pass();
    }
    if (sampled) {
        std::mt19937_64 rng(sample_seed());
        std::vector<Point<K>> samples;
        for (std::size_t t = 0; t < nsamples; ++t) {
            Point<K> p(r.point_dim());
            for (auto& c : p) c = random_scalar<K>(rng);
            samples.push_back(std::move(p));
        }
        RackReport<K> rep = rack_axioms_check(r, samples);
        out["sampled"] = rack_report_to_json(rep);
        failed = failed || !rep.rack_axioms_pass();
    }
    print(out);
    return failed ? 1 : 0;
}

int cmd_rack(const std::string& path, bool symbolic, bool sampled, std::size_t nsamples) {
    AlgebraDocument doc = parse_algebra_document(read_input(path));
    return std::visit([&](const auto& L) { return rack_of(L, symbolic, sampled, nsamples); },
                      doc.algebra);
}

int cmd_tangent(const FamilyFlags& flags) {
    AnyAlgebra A = algebra_from_flags(flags);
    AlgebraDocument out{std::visit(
        [](const auto& L) { return AnyAlgebra{tangent_algebra(cocycle_rack(L))}; }, A)};
    std::cout << emit_algebra_document(out);
    return 0;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"exact constructor, verifier, classifier and integrator for two-step nilpotent "
                 "Leibniz algebras"};
    app.require_subcommand(1);

    FamilyFlags build_flags;
    CLI::App* build = app.add_subcommand("build", "emit the structure tensor of a family member");
    add_family_flags(build, build_flags);

    std::string check_path = "-";
    CLI::App* check = app.add_subcommand("check", "verify the defining identities of a document");
    check->add_option("input", check_path, "document path, or - for stdin");

    std::string classify_path = "-";
    CLI::App* cls = app.add_subcommand("classify", "canonical block decomposition of a document");
    cls->add_option("input", classify_path, "document path, or - for stdin");

    std::string iso_a, iso_b;
    CLI::App* iso = app.add_subcommand("iso", "decide isomorphism of two documents");
    iso->add_option("first", iso_a, "first document path")->required();
    iso->add_option("second", iso_b, "second document path")->required();

    std::string rack_path = "-";
    bool rack_symbolic = false, rack_check = false;
    std::size_t rack_samples = 25;
    CLI::App* rack = app.add_subcommand("rack", "integrate a document into its pointed rack");
    rack->add_option("input", rack_path, "document path, or - for stdin");
    rack->add_flag("--symbolic", rack_symbolic, "verify the axioms by polynomial identity");
    rack->add_flag("--check", rack_check, "verify the axioms on random samples");
    rack->add_option("--samples", rack_samples, "sample count for --check (default 25)");

    FamilyFlags tangent_flags;
    CLI::App* tangent =
        app.add_subcommand("tangent", "rebuild a family member from its integrated rack");
    add_family_flags(tangent, tangent_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (build->parsed()) {
        std::cout << emit_algebra_document(AlgebraDocument{algebra_from_flags(build_flags)});
        return 0;
    }
    if (check->parsed()) return cmd_check(check_path);
    if (cls->parsed()) return cmd_classify(classify_path);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b);
    if (rack->parsed()) return cmd_rack(rack_path, rack_symbolic, rack_check, rack_samples);
    if (tangent->parsed()) return cmd_tangent(tangent_flags);
    return 4;  // unreachable: require_subcommand(1)
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const error& e) {
        // remaining library errors indicate an unusable request
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace leibrack
