// Python extension module. Exposes the five pipeline operations over the
// same JSON wire format as the command-line driver; exact scalars travel as
// strings end to end, never through doubles.

#include <pybind11/pybind11.h>

#include <optional>
#include <random>
#include <string>

#include "leibrack/json_io.hpp"

namespace py = pybind11;

namespace leibrack {
namespace {

constexpr unsigned long long kDefaultSeed = 20250814ULL;

// scalar grammar shared with the command line: "N", "N/D", or "RE,IM"
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

template <typename K>
K random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    if constexpr (std::is_same_v<K, Rational>) {
        return re;
    } else {
        Rational im(num(rng), den(rng));
        im.canonicalize();
        return K{re, im};
    }
}

std::string build(const std::string& family, const std::string& a, std::size_t k, std::size_t n,
                  const std::string& matrix, const std::string& field, const std::string& name) {
    FamilySpec spec;
    spec.family = family;
    spec.a = parse_scalar_token(a);
    spec.k = k;
    spec.n = n;
    if (field != "Q" && field != "Qi")
        throw input_error("unknown field '" + field + "' (expected Q or Qi)");
    spec.gaussian_field = field == "Qi";
    if (!matrix.empty()) {
        json j;
        try {
            j = json::parse(matrix);
        } catch (const json::parse_error& e) {
            throw input_error(std::string("invalid matrix JSON: ") + e.what());
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
            // constructor preconditions on request values are caller errors here
            throw input_error(e.what());
        }
    }();
    if (!name.empty()) std::visit([&](auto& L) { L.set_name(name); }, A);
    return emit_algebra_document(AlgebraDocument{std::move(A)});
}

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

std::string check(const std::string& text) {
    AlgebraDocument doc = parse_algebra_document(text);
    return std::visit(
        [](const auto& L) {
            json out;
            if (!L.name().empty()) out["name"] = L.name();
            out["left"] = identity_verdict(check_left_leibniz(L));
            out["right"] = identity_verdict(check_right_leibniz(L));
            auto cls = nilpotency_class(L);
            out["nilpotent"] = cls.has_value();
            out["class"] = cls ? json(*cls) : json(nullptr);
            out["commutator_dim"] = commutator_ideal(L).dim();
            out["leib_dim"] = leib_ideal(L).dim();
            out["left_center_dim"] = left_center(L).dim();
            out["right_center_dim"] = right_center(L).dim();
            out["center_dim"] = center(L).dim();
            return out.dump();
        },
        doc.algebra);
}

std::string do_classify(const std::string& text) {
    AlgebraDocument doc = parse_algebra_document(text);
    return std::visit(
        [](const auto& L) {
            json out = classification_to_json(classify(L));
            if (!L.name().empty()) out["name"] = L.name();
            return out.dump();
        },
        doc.algebra);
}

bool do_isomorphic(const std::string& text1, const std::string& text2) {
    AlgebraDocument d1 = parse_algebra_document(text1);
    AlgebraDocument d2 = parse_algebra_document(text2);
    if (d1.gaussian() != d2.gaussian())
        throw input_error("documents use different ground fields");
    if (d1.gaussian())
        return isomorphic(std::get<LeibnizAlgebra<GaussianRational>>(d1.algebra),
                          std::get<LeibnizAlgebra<GaussianRational>>(d2.algebra));
    return isomorphic(std::get<LeibnizAlgebra<Rational>>(d1.algebra),
                      std::get<LeibnizAlgebra<Rational>>(d2.algebra));
}

template <typename K>
std::string rack_of(const LeibnizAlgebra<K>& L, bool symbolic, std::size_t samples,
                    unsigned long long seed) {
    RackSpec<K> r = cocycle_rack(L);
    json out;
    out["model"] = affine_model_to_json(std::get<AffineModel<K>>(r.model));
    if (symbolic) out["symbolic"] = rack_report_to_json(rack_axioms_check_symbolic(r));
    if (samples > 0) {
        std::mt19937_64 rng(seed);
        std::vector<Point<K>> pts;
        for (std::size_t t = 0; t < samples; ++t) {
            Point<K> p(r.point_dim());
            for (auto& c : p) c = random_scalar<K>(rng);
            pts.push_back(std::move(p));
        }
        out["sampled"] = rack_report_to_json(rack_axioms_check(r, pts));
    }
    return out.dump();
}

std::string rack(const std::string& text, bool symbolic, std::size_t samples,
                 unsigned long long seed) {
    AlgebraDocument doc = parse_algebra_document(text);
    return std::visit([&](const auto& L) { return rack_of(L, symbolic, samples, seed); },
                      doc.algebra);
}

std::string tangent(const std::string& text) {
    AlgebraDocument doc = parse_algebra_document(text);
    return std::visit(
        [](const auto& L) {
            return emit_algebra_document(AlgebraDocument{tangent_algebra(cocycle_rack(L))});
        },
        doc.algebra);
}

}  // namespace
}  // namespace leibrack

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact constructor, verifier, classifier and integrator for two-step nilpotent "
              "Leibniz algebras";

    // base first so derived translators are consulted before it
    py::register_exception<leibrack::error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<leibrack::internal_error>(m, "InternalError", PyExc_RuntimeError);
    py::register_exception<leibrack::input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<leibrack::precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<leibrack::domain_error>(m, "DomainError", PyExc_ValueError);

    m.def("build", &leibrack::build, py::arg("family"), py::arg("a") = "0", py::arg("k") = 1,
          py::arg("n") = 1, py::arg("matrix") = "", py::arg("field") = "Q", py::arg("name") = "",
          "Construct a family member; returns its document as JSON text.");
    m.def("check", &leibrack::check, py::arg("document"),
          "Verify the defining identities and report the structural invariants as JSON text.");
    m.def("classify", &leibrack::do_classify, py::arg("document"),
          "Canonical block decomposition of a document as JSON text.");
    m.def("isomorphic", &leibrack::do_isomorphic, py::arg("first"), py::arg("second"),
          "Decide whether two documents present isomorphic algebras.");
    m.def("rack", &leibrack::rack, py::arg("document"), py::arg("symbolic") = true,
          py::arg("samples") = 0, py::arg("seed") = leibrack::kDefaultSeed,
          "Integrate a document into its pointed rack; returns the model and axiom reports "
          "as JSON text.");
    m.def("tangent", &leibrack::tangent, py::arg("document"),
          "Rebuild the algebra document from the integrated rack of the given document.");
}
