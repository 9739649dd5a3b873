#include "leibrack/json_io.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <utility>

namespace leibrack {

namespace {

long long require_int64(const json& j, const char* what) {
    if (j.is_number_unsigned()) {
        std::uint64_t u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
            throw input_error(std::string(what) + " does not fit a 64-bit integer");
        return static_cast<long long>(u);
    }
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Rational rational_pair(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw input_error(std::string(what) + " must be a [numerator, denominator] pair");
    long long num = require_int64(j[0], what);
    long long den = require_int64(j[1], what);
    if (den == 0) throw input_error("rational with zero denominator");
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

GaussianRational gaussian_object(const json& j, const char* what) {
    if (!j.is_object())
        throw input_error(std::string(what) + " must be an object with \"re\" and \"im\"");
    for (const auto& item : j.items())
        if (item.key() != "re" && item.key() != "im")
            throw input_error(std::string("unknown key '") + item.key() + "' in " + what);
    if (!j.contains("re") || !j.contains("im"))
        throw input_error(std::string(what) + " must contain both \"re\" and \"im\"");
    return {rational_pair(j["re"], what), rational_pair(j["im"], what)};
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known)
            throw input_error("unknown key '" + item.key() + "' in " + where);
    }
}

template <typename K, typename ScalarParse>
LeibnizAlgebra<K> parse_tensor(const json& j, std::size_t dim, std::string name,
                               ScalarParse parse_scalar) {
    LeibnizAlgebra<K> L(dim, std::move(name));
    if (!j.contains("brackets")) return L;
    const json& brackets = j["brackets"];
    if (!brackets.is_array()) throw input_error("'brackets' must be an array");
    std::set<std::pair<long long, long long>> seen;
    for (const json& e : brackets) {
        if (!e.is_object()) throw input_error("bracket entry must be an object");
        require_keys(e, {"i", "j", "coeffs"}, "bracket entry");
        if (!e.contains("i") || !e.contains("j") || !e.contains("coeffs"))
            throw input_error("bracket entry needs keys 'i', 'j', 'coeffs'");
        long long i = require_int64(e["i"], "bracket index 'i'");
        long long jj = require_int64(e["j"], "bracket index 'j'");
        if (i < 1 || jj < 1 || i > static_cast<long long>(dim) || jj > static_cast<long long>(dim))
            throw input_error("bracket index out of range [1, dim]");
        if (!seen.insert({i, jj}).second)
            throw input_error("duplicate bracket entry (" + std::to_string(i) + ", " +
                              std::to_string(jj) + ")");
        const json& coeffs = e["coeffs"];
        if (!coeffs.is_array() || coeffs.size() != dim)
            throw input_error("'coeffs' must be an array of length dim");
        for (std::size_t k = 0; k < dim; ++k)
            L.c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), k) =
                parse_scalar(coeffs[k]);
    }
    return L;
}

template <typename K>
json tensor_to_json(const LeibnizAlgebra<K>& L, const char* field) {
    json out;
    out["dim"] = L.dim();
    out["field"] = field;
    if (!L.name().empty()) out["name"] = L.name();
    json brackets = json::array();
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool nonzero = false;
            for (std::size_t k = 0; k < n; ++k)
                if (!(L.c(i, j, k) == K(0))) nonzero = true;
            if (!nonzero) continue;
            json e;
            e["i"] = i + 1;
            e["j"] = j + 1;
            json coeffs = json::array();
            for (std::size_t k = 0; k < n; ++k) coeffs.push_back(scalar_to_json(L.c(i, j, k)));
            e["coeffs"] = std::move(coeffs);
            brackets.push_back(std::move(e));
        }
    out["brackets"] = std::move(brackets);
    return out;
}

}  // namespace

json scalar_to_json(const Rational& x) {
    const Integer num = x.get_num(), den = x.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p())
        throw input_error("coefficient does not fit the 64-bit wire integer range");
    return json::array({num.get_si(), den.get_si()});
}

json scalar_to_json(const GaussianRational& x) {
    json out;
    out["re"] = scalar_to_json(x.re);
    out["im"] = scalar_to_json(x.im);
    return out;
}

Rational rational_from_json(const json& j) { return rational_pair(j, "rational coefficient"); }

GaussianRational gaussian_from_json(const json& j) {
    return gaussian_object(j, "coefficient over the field with i");
}

Matrix<Rational> rational_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw input_error("matrix rows must be nonempty arrays");
    const std::size_t cols = j[0].size();
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

Matrix<GaussianRational> gaussian_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw input_error("matrix rows must be nonempty arrays");
    const std::size_t cols = j[0].size();
    Matrix<GaussianRational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw input_error("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = gaussian_from_json(j[i][c]);
    }
    return m;
}

json algebra_to_json(const LeibnizAlgebra<Rational>& L) { return tensor_to_json(L, "Q"); }

json algebra_to_json(const LeibnizAlgebra<GaussianRational>& L) {
    return tensor_to_json(L, "Qi");
}

AlgebraDocument parse_algebra_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw input_error("algebra document must be a JSON object");
    require_keys(j, {"dim", "field", "brackets", "name"}, "algebra document");
    if (!j.contains("dim")) throw input_error("missing key 'dim'");
    long long dim = require_int64(j["dim"], "'dim'");
    if (dim < 0) throw input_error("'dim' must be nonnegative");
    if (dim > 1024) throw input_error("'dim' exceeds the supported maximum 1024");
    if (!j.contains("field")) throw input_error("missing key 'field'");
    if (!j["field"].is_string()) throw input_error("'field' must be \"Q\" or \"Qi\"");
    const std::string field = j["field"].get<std::string>();
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw input_error("'name' must be a string");
        name = j["name"].get<std::string>();
    }
    const auto n = static_cast<std::size_t>(dim);
    if (field == "Q")
        return {AnyAlgebra{parse_tensor<Rational>(j, n, std::move(name), rational_from_json)}};
    if (field == "Qi")
        return {AnyAlgebra{
            parse_tensor<GaussianRational>(j, n, std::move(name), gaussian_from_json)}};
    throw input_error("'field' must be \"Q\" or \"Qi\"");
}

std::string emit_algebra_document(const AlgebraDocument& doc) {
    json j = std::visit([](const auto& L) { return algebra_to_json(L); }, doc.algebra);
    return j.dump(2) + "\n";
}

json family_to_json(const FamilySpec& spec) {
    json out;
    out["family"] = spec.family;
    out["field"] = spec.gaussian_field ? "Qi" : "Q";
    out["a"] = scalar_to_json(spec.a);
    out["k"] = spec.k;
    out["n"] = spec.n;
    if (spec.matrix) {
        json rows = json::array();
        for (std::size_t i = 0; i < spec.matrix->rows(); ++i) {
            json row = json::array();
            for (std::size_t c = 0; c < spec.matrix->cols(); ++c)
                row.push_back(scalar_to_json(spec.matrix->at(i, c)));
            rows.push_back(std::move(row));
        }
        out["matrix"] = std::move(rows);
    }
    return out;
}

}  // namespace leibrack
