#pragma once

#include <map>
#include <numeric>
#include <utility>

#include "sp4gtz/exponents.hpp"
#include "sp4gtz/labels.hpp"
#include "sp4gtz/rational.hpp"

namespace sp4gtz {

/// Graded lexicographic order over the fixed label order.
struct GradedLexLess {
    bool operator()(const WorkingExponents& a, const WorkingExponents& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial over the nine working labels with exact
/// rational coefficients.  No stored zero coefficients; term order is
/// graded lex, so equality is structural.
class SparsePoly {
  public:
    using TermMap = std::map<WorkingExponents, Rational, GradedLexLess>;

    SparsePoly() = default;

    static SparsePoly monomial(const WorkingExponents& m, Rational c = Rational(1)) {
        SparsePoly p;
        if (c != 0) p.terms_[m] = std::move(c);
        return p;
    }
    static SparsePoly constant(Rational c) { return monomial(WorkingExponents{}, std::move(c)); }
    static SparsePoly variable(DetLabel l) { return monomial(working_unit(l)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const WorkingExponents& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const WorkingExponents& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }

    friend SparsePoly operator*(const Rational& c, const SparsePoly& p) {
        SparsePoly r;
        if (c == 0) return r;
        for (const auto& [m, v] : p.terms_) r.terms_[m] = c * v;
        return r;
    }

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// Partial derivative d^e for a multi-index e >= 0.
    SparsePoly derivative(const WorkingExponents& e) const {
        SparsePoly r;
        for (const auto& [m, c] : terms_) {
            Rational coef = c;
            WorkingExponents nm = m;
            bool ok = true;
            for (int i = 0; i < kNumLabels && ok; ++i) {
                for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) {
                    if (nm[static_cast<std::size_t>(i)] == 0) {
                        ok = false;
                        break;
                    }
                    coef *= nm[static_cast<std::size_t>(i)];
                    --nm[static_cast<std::size_t>(i)];
                }
            }
            if (ok) r.add_term(nm, coef);
        }
        return r;
    }

    /// Sum of coefficients (substitution of 1 for every variable).
    Rational eval_at_one() const {
        Rational s(0);
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

  private:
    TermMap terms_;
};

inline SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b) { return a * b; }
inline Rational eval_at_one(const SparsePoly& p) { return p.eval_at_one(); }

} // namespace sp4gtz
