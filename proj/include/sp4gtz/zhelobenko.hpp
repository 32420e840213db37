#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sp4gtz/diagrams.hpp"
#include "sp4gtz/entry_poly.hpp"
#include "sp4gtz/gamma_series.hpp"

namespace sp4gtz {

namespace detail {

/// Gelfand-Tsetlin part of a basis function: the weighted sum over the
/// degree-constrained exponent assignments on the six lowering-free labels.
inline EntryPoly gl3_base_sum(const GTZDiagram& d) {
    EntryPoly out;
    for (int pm1 = 0; pm1 <= d.k2 - d.m1; ++pm1) {
        const int pm2 = d.k2 - d.m1 - pm1;
        const int pm11 = d.k2 - d.h2 - pm1;
        if (pm11 < 0) continue;
        const int pm21 = d.m1 - d.k1 - pm11;
        if (pm21 < 0) continue;
        Integer den = factorial(static_cast<unsigned>(pm1)) * factorial(static_cast<unsigned>(pm11)) *
                      factorial(static_cast<unsigned>(pm2)) * factorial(static_cast<unsigned>(pm21));
        Rational c(1, den);
        c.canonicalize();
        SparsePoly mono = SparsePoly::monomial(
            [&] {
                WorkingExponents w{};
                w[static_cast<std::size_t>(DetLabel::AM1)] = pm1;
                w[static_cast<std::size_t>(DetLabel::AM11)] = pm11;
                w[static_cast<std::size_t>(DetLabel::AM2)] = pm2;
                w[static_cast<std::size_t>(DetLabel::AM21)] = pm21;
                return w;
            }(),
            c);
        out += realize(mono);
    }
    Integer pden = factorial(static_cast<unsigned>(d.m2 - d.k2)) * factorial(static_cast<unsigned>(d.k1));
    Rational pc(1, pden);
    pc.canonicalize();
    WorkingExponents pw{};
    pw[static_cast<std::size_t>(DetLabel::A1)] = d.m2 - d.k2;
    pw[static_cast<std::size_t>(DetLabel::AM2M1)] = d.k1;
    return realize(SparsePoly::monomial(pw, pc)) * out;
}

} // namespace detail

/// Basis function by the explicit lowered sum: every way of distributing
/// h2-h1 column substitutions -2 -> 2 over the base assignment, with
/// divided-power denominators.
inline EntryPoly zhelobenko_by_sum(const GTZDiagram& d) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    const int L = d.h2 - d.h1;
    EntryPoly out;
    for (int pm1 = 0; pm1 <= d.k2 - d.m1; ++pm1) {
        const int pm2 = d.k2 - d.m1 - pm1;
        const int pm11 = d.k2 - d.h2 - pm1;
        if (pm11 < 0) continue;
        const int pm21 = d.m1 - d.k1 - pm11;
        if (pm21 < 0) continue;
        for (int kpp = 0; kpp <= std::min(d.k1, L); ++kpp) {
            for (int ppm2 = 0; ppm2 <= std::min(pm2, L - kpp); ++ppm2) {
                const int ppm21 = L - kpp - ppm2;
                if (ppm21 < 0 || ppm21 > pm21) continue;
                WorkingExponents w{};
                w[static_cast<std::size_t>(DetLabel::A1)] = d.m2 - d.k2;
                w[static_cast<std::size_t>(DetLabel::AM2M1)] = d.k1 - kpp;
                w[static_cast<std::size_t>(DetLabel::AM12)] = kpp;
                w[static_cast<std::size_t>(DetLabel::AM1)] = pm1;
                w[static_cast<std::size_t>(DetLabel::AM11)] = pm11;
                w[static_cast<std::size_t>(DetLabel::AM2)] = pm2 - ppm2;
                w[static_cast<std::size_t>(DetLabel::A2)] = ppm2;
                w[static_cast<std::size_t>(DetLabel::AM21)] = pm21 - ppm21;
                w[static_cast<std::size_t>(DetLabel::A12)] = ppm21;
                Integer den(1);
                for (int v : w) den *= factorial(static_cast<unsigned>(v));
                Rational c(1, den);
                c.canonicalize();
                out += realize(SparsePoly::monomial(w, c));
            }
        }
    }
    return out;
}

/// Basis function by lowering: divided powers of E(2,-2) = F(2,-2)/2
/// applied to the base sum; division by the step index stays exact.
inline EntryPoly zhelobenko_by_operator(const GTZDiagram& d) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    GTZDiagram top = d;
    top.h1 = top.h2;
    EntryPoly w = detail::gl3_base_sum(top);
    for (int k = 1; k <= d.h2 - d.h1; ++k) w = Rational(1, k) * act_E(2, -2, w);
    w.normalize();
    return w;
}

/// Basis function as the realized series of the canonical shift.
inline EntryPoly zhelobenko_by_series(const GTZDiagram& d) {
    return realize(gamma_series_poly(diagram_to_shift(d)));
}

/// The basis function, computed all three ways and asserted equal.
inline EntryPoly zhelobenko_vector(const GTZDiagram& d) {
    EntryPoly bySeries = zhelobenko_by_series(d);
    const EntryPoly bySum = zhelobenko_by_sum(d);
    const EntryPoly byOp = zhelobenko_by_operator(d);
    if (!(bySeries == bySum) || !(bySeries == byOp))
        throw TheoremViolation("basis vector construction routes disagree");
    return bySeries;
}

// ---------------------------------------------------------------------------
// Exact expansion in the basis
// ---------------------------------------------------------------------------

/// Row-reduced basis matrix over the entry monomials of a weight space.
/// Elimination runs once; solves replay the recorded row operations on the
/// right-hand side, so columns expand in O(rank * rows) exact operations.
class BasisSolver {
  public:
    explicit BasisSolver(std::vector<EntryPoly> basis) : basis_(std::move(basis)) {
        for (const auto& b : basis_)
            for (const auto& [m, c] : b.terms()) index_.emplace(m, 0);
        int k = 0;
        for (auto& [m, i] : index_) i = k++;
        const std::size_t rows = index_.size(), cols = basis_.size();
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [m, c] : basis_[j].terms()) a[static_cast<std::size_t>(index_.at(m))][j] = c;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t sel = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows) continue;
            if (sel != r) {
                std::swap(a[r], a[sel]);
                ops_.push_back({Op::Swap, r, sel, Rational(0)});
            }
            if (a[r][c] != 1) {
                const Rational inv = 1 / a[r][c];
                for (auto& v : a[r]) v *= inv;
                ops_.push_back({Op::Scale, r, 0, inv});
            }
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || a[i][c] == 0) continue;
                const Rational f = a[i][c];
                for (std::size_t cc = 0; cc < cols; ++cc) a[i][cc] -= f * a[r][cc];
                ops_.push_back({Op::AddMul, i, r, -f});
            }
            pivots_.push_back(c);
            ++r;
        }
        rank_ = r;
    }

    std::size_t rank() const { return rank_; }
    std::size_t size() const { return basis_.size(); }

    /// Exact coefficients of p over the basis, or nullopt when p lies
    /// outside the span (wrong weight or a formula bug).
    std::optional<std::vector<Rational>> solve(const EntryPoly& p) const {
        std::vector<Rational> rhs(index_.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) {
            auto it = index_.find(m);
            if (it == index_.end()) return std::nullopt;
            rhs[static_cast<std::size_t>(it->second)] = c;
        }
        for (const auto& op : ops_) {
            switch (op.kind) {
                case Op::Swap: std::swap(rhs[op.a], rhs[op.b]); break;
                case Op::Scale: rhs[op.a] *= op.f; break;
                case Op::AddMul:
                    if (rhs[op.b] != 0) rhs[op.a] += op.f * rhs[op.b];
                    break;
            }
        }
        for (std::size_t i = rank_; i < rhs.size(); ++i)
            if (rhs[i] != 0) return std::nullopt;
        std::vector<Rational> sol(basis_.size(), Rational(0));
        for (std::size_t i = 0; i < pivots_.size(); ++i) sol[pivots_[i]] = rhs[i];
        return sol;
    }

  private:
    struct Op {
        enum Kind { Swap, Scale, AddMul } kind;
        std::size_t a, b;
        Rational f;
    };
    std::vector<EntryPoly> basis_;
    std::map<EntryMonomial, int> index_;
    std::vector<Op> ops_;
    std::vector<std::size_t> pivots_;
    std::size_t rank_ = 0;
};

/// Exact coefficient vector of p over the basis functions of a weight.
/// The input reduces to normal form first: expansion is quotient-ring
/// membership.
inline std::vector<Rational> expand_in_basis(EntryPoly p, HighestWeight w) {
    std::vector<EntryPoly> basis;
    for (const auto& d : enumerate_diagrams(w)) basis.push_back(zhelobenko_by_series(d));
    BasisSolver solver(std::move(basis));
    p.normalize();
    auto sol = solver.solve(p);
    if (!sol) throw std::invalid_argument("not in representation space");
    return *sol;
}

} // namespace sp4gtz
