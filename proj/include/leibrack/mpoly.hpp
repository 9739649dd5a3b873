#pragma once

// Sparse multivariate polynomials used for symbolic verification of rack
// axioms: the axioms quantify over all points, but for polynomial operations
// both sides are polynomial maps, so identity can be decided by comparing
// coefficients after composition.

#include <cstddef>
#include <map>
#include <vector>

#include "leibrack/error.hpp"

namespace leibrack {

template <typename K>
class MPoly {
public:
    using Key = std::vector<unsigned>;  // one exponent per variable

    MPoly() : nvars_(0) {}
    explicit MPoly(std::size_t nvars) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const K& c) {
        MPoly p(nvars);
        if (!(c == K(0))) p.terms_[Key(nvars, 0)] = c;
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw dimension_error("variable index out of range");
        MPoly p(nvars);
        Key k(nvars, 0);
        k[i] = 1;
        p.terms_[k] = K(1);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, K>& terms() const { return terms_; }

    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly operator+(const MPoly& o) const {
        check(o);
        MPoly out(*this);
        for (const auto& [k, c] : o.terms_) out.add_term(k, c);
        return out;
    }
    MPoly operator-(const MPoly& o) const {
        check(o);
        MPoly out(*this);
        for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
        return out;
    }
    MPoly operator*(const MPoly& o) const {
        check(o);
        MPoly out(nvars_);
        for (const auto& [k1, c1] : terms_)
            for (const auto& [k2, c2] : o.terms_) {
                Key k(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) k[i] = k1[i] + k2[i];
                out.add_term(k, c1 * c2);
            }
        return out;
    }
    MPoly operator*(const K& s) const {
        MPoly out(nvars_);
        if (s == K(0)) return out;
        for (const auto& [k, c] : terms_) out.terms_[k] = c * s;
        return out;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw dimension_error("evaluation point has wrong arity");
        K total(0);
        for (const auto& [k, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < k[i]; ++e) term = term * point[i];
            total = total + term;
        }
        return total;
    }

    // Composition: replaces variable i by repl[i]; all replacements must share
    // one arity, which becomes the arity of the result.
    MPoly substitute(const std::vector<MPoly>& repl) const {
        if (repl.size() != nvars_) throw dimension_error("substitution has wrong arity");
        std::size_t out_vars = nvars_ == 0 ? 0 : repl[0].nvars();
        for (const auto& r : repl)
            if (r.nvars() != out_vars) throw dimension_error("substitution arity mismatch");
        MPoly out(out_vars);
        for (const auto& [k, c] : terms_) {
            MPoly term = MPoly::constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned e = 0; e < k[i]; ++e) term = term * repl[i];
            out = out + term;
        }
        return out;
    }

    // True when no term uses any variable in [first, first + count).
    bool independent_of(std::size_t first, std::size_t count) const {
        for (const auto& [k, c] : terms_)
            for (std::size_t i = 0; i < count; ++i)
                if (k[first + i] > 0) return false;
        return true;
    }

private:
    void check(const MPoly& o) const {
        if (nvars_ != o.nvars_) throw dimension_error("polynomial arity mismatch");
    }
    void add_term(const Key& k, const K& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!(c == K(0))) terms_[k] = c;
            return;
        }
        it->second = it->second + c;
        if (it->second == K(0)) terms_.erase(it);
    }

    std::size_t nvars_;
    std::map<Key, K> terms_;
};

}  // namespace leibrack
