#pragma once

// Wire format: structure tensors travel as JSON documents with exact
// coefficients (rationals as [num, den], field-with-i scalars as
// {"re": [n,d], "im": [n,d]}), 1-based basis indices, zero brackets omitted.
// Emission is canonical, so equal documents serialize to identical bytes.

#include <cstddef>
#include <string>

#include "json.hpp"
#include "leibrack/families.hpp"
#include "leibrack/pencil.hpp"
#include "leibrack/rack.hpp"

namespace leibrack {

using json = nlohmann::ordered_json;

struct AlgebraDocument {
    AnyAlgebra algebra;

    bool gaussian() const {
        return std::holds_alternative<LeibnizAlgebra<GaussianRational>>(algebra);
    }
    std::size_t dim() const {
        return std::visit([](const auto& L) { return L.dim(); }, algebra);
    }
    std::string name() const {
        return std::visit([](const auto& L) { return L.name(); }, algebra);
    }
};

// Both throw input_error on malformed text or out-of-contract values.
AlgebraDocument parse_algebra_document(const std::string& text);
std::string emit_algebra_document(const AlgebraDocument& doc);

json algebra_to_json(const LeibnizAlgebra<Rational>& L);
json algebra_to_json(const LeibnizAlgebra<GaussianRational>& L);

json scalar_to_json(const Rational& x);
json scalar_to_json(const GaussianRational& x);
Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);

Matrix<Rational> rational_matrix_from_json(const json& j);
Matrix<GaussianRational> gaussian_matrix_from_json(const json& j);

json family_to_json(const FamilySpec& spec);

template <typename K>
json poly_to_json(const Polynomial<K>& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(scalar_to_json(c));
    return out;
}

template <typename K>
json point_to_json(const std::vector<K>& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(scalar_to_json(c));
    return out;
}

template <typename K>
json classification_to_json(const Classification<K>& c) {
    json out;
    json blocks = json::array();
    for (const auto& b : c.blocks) {
        json e;
        switch (b.type) {
            case BlockType::heisenberg:
                e["type"] = "heisenberg";
                e["poly"] = poly_to_json(b.poly);
                e["k"] = b.size;
                break;
            case BlockType::kronecker:
                e["type"] = "kronecker";
                e["n"] = b.size;
                break;
            case BlockType::dieudonne:
                e["type"] = "dieudonne";
                e["n"] = b.size;
                break;
        }
        e["dim"] = b.algebra_dim();
        blocks.push_back(std::move(e));
    }
    out["blocks"] = std::move(blocks);
    out["trivial_dim"] = c.trivial_dim;
    out["ambient_dim"] = c.ambient_dim;
    return out;
}

template <typename K>
json rack_report_to_json(const RackReport<K>& r) {
    json out;
    out["self_distributive"] = r.self_distributive;
    if (!r.self_distributive) {
        json w = json::array();
        for (const auto& p : r.self_distributive_witness) w.push_back(point_to_json(p));
        out["self_distributive_witness"] = std::move(w);
    }
    out["left_translation_bijective"] = r.left_translation_bijective;
    if (!r.left_translation_bijective) {
        json w = json::array();
        for (const auto& p : r.bijective_witness) w.push_back(point_to_json(p));
        out["bijective_witness"] = std::move(w);
    }
    out["pointed"] = r.pointed;
    if (!r.pointed) {
        json w = json::array();
        for (const auto& p : r.pointed_witness) w.push_back(point_to_json(p));
        out["pointed_witness"] = std::move(w);
    }
    out["rack"] = r.rack_axioms_pass();
    out["quandle"] = r.quandle;
    if (!r.quandle) out["quandle_witness"] = point_to_json(r.quandle_witness);
    return out;
}

// Bilinear cocycle models only: the increments are reported as one
// g_dim x g_dim coefficient matrix per central coordinate.
template <typename K>
json affine_model_to_json(const AffineModel<K>& m) {
    json out;
    out["g_dim"] = m.g_dim;
    out["c_dim"] = m.c_dim;
    if (!m.source_name.empty()) out["source"] = m.source_name;
    json omegas = json::array();
    for (std::size_t c = 0; c < m.c_dim; ++c) {
        json rows = json::array();
        for (std::size_t i = 0; i < m.g_dim; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.g_dim; ++j)
                row.push_back(scalar_to_json(bilinear_coefficient(m, c, i, j)));
            rows.push_back(std::move(row));
        }
        omegas.push_back(std::move(rows));
    }
    out["omega"] = std::move(omegas);
    return out;
}

}  // namespace leibrack
