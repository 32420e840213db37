#pragma once

#include <array>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4gtz/diagrams.hpp"
#include "sp4gtz/gamma_series.hpp"
#include "sp4gtz/zhelobenko.hpp"

namespace sp4gtz {

enum class Generator { Fm2m2, Fm1m1, F2m2, Fm22, Fm21, F1m2 };

inline constexpr std::array<Generator, 6> kGenerators = {Generator::Fm2m2, Generator::Fm1m1, Generator::F2m2,
                                                         Generator::Fm22,  Generator::Fm21,  Generator::F1m2};

inline std::pair<int, int> generator_indices(Generator g) {
    switch (g) {
        case Generator::Fm2m2: return {-2, -2};
        case Generator::Fm1m1: return {-1, -1};
        case Generator::F2m2: return {2, -2};
        case Generator::Fm22: return {-2, 2};
        case Generator::Fm21: return {-2, 1};
        case Generator::F1m2: return {1, -2};
    }
    throw std::logic_error("bad generator");
}

inline std::string generator_name(Generator g) {
    const auto [i, j] = generator_indices(g);
    return "F(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Parse "F(i,j)": case-insensitive, whitespace-tolerant; only the six
/// supported generators are accepted.
inline std::optional<Generator> parse_generator(const std::string& name) {
    std::string s;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (Generator g : kGenerators) {
        std::string want = generator_name(g);
        std::string lower;
        for (char c : want) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        if (s == lower) return g;
    }
    return std::nullopt;
}

/// Formal rational combination of diagrams of one weight.
using WeightedDiagramSum = std::map<GTZDiagram, Rational>;

inline void add_weighted(WeightedDiagramSum& sum, const GTZDiagram& d, const Rational& c) {
    if (c == 0) return;
    auto it = sum.find(d);
    if (it == sum.end()) {
        sum.emplace(d, c);
    } else {
        it->second += c;
        if (it->second == 0) sum.erase(it);
    }
}

/// Eigenvalue of a Cartan generator on a diagram.  F(-1,-1) carries the
/// printed value; F(-2,-2) carries 2*h(-1) - h(-2), the value consistent
/// with the index counts and the group realization (see the discrepancy
/// ledger for the commonly printed variant).
inline int cartan_eigenvalue(const GTZDiagram& d, Generator which) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    if (which == Generator::Fm2m2) return 2 * d.h1 - d.h2;
    if (which == Generator::Fm1m1) return 2 * (d.k2 + d.k1) - (d.m2 + d.m1) - d.h2;
    throw std::invalid_argument("cartan_eigenvalue: not a Cartan generator");
}

enum class LadderDirection { Lower, Raise };

/// One step along the inner sl2 string, in the normalization of the
/// lowering construction (E(2,-2) and E(-2,2)): lowering h1 -> h1-1 with
/// coefficient h2-h1+1, raising h1 -> h1+1 with coefficient h1+1.  The
/// matrices of F(2,-2) and F(-2,2) are twice these.
inline WeightedDiagramSum sl2_ladder(const GTZDiagram& d, LadderDirection dir) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    WeightedDiagramSum out;
    GTZDiagram nd = d;
    if (dir == LadderDirection::Lower) {
        nd.h1 -= 1;
        if (nd.valid()) add_weighted(out, nd, Rational(d.h2 - d.h1 + 1));
    } else {
        nd.h1 += 1;
        if (nd.valid()) add_weighted(out, nd, Rational(d.h1 + 1));
    }
    return out;
}

namespace detail {

struct LongRootTerm {
    Rational coeff;
    DetLabel X;
    DetLabel Y;
};

/// The four product terms of each long-root generator in the working
/// variables: F(-2,1) = a(-2) d_1 + a(-1) d_2 - a(-2,-1) d_(-1,1)
/// + 2 a(-1,1) d_(1,2), and mirrored for F(1,-2).
inline const std::vector<LongRootTerm>& long_root_terms(Generator g) {
    static const std::vector<LongRootTerm> fm21 = {
        {Rational(1), DetLabel::AM2, DetLabel::A1},
        {Rational(1), DetLabel::AM1, DetLabel::A2},
        {Rational(-1), DetLabel::AM2M1, DetLabel::AM11},
        {Rational(2), DetLabel::AM11, DetLabel::A12},
    };
    static const std::vector<LongRootTerm> f1m2 = {
        {Rational(1), DetLabel::A1, DetLabel::AM2},
        {Rational(1), DetLabel::A2, DetLabel::AM1},
        {Rational(-2), DetLabel::AM11, DetLabel::AM2M1},
        {Rational(1), DetLabel::A12, DetLabel::AM11},
    };
    if (g == Generator::Fm21) return fm21;
    if (g == Generator::F1m2) return f1m2;
    throw std::invalid_argument("long_root_terms: not a long-root generator");
}

} // namespace detail

/// Closed-form action of F(-2,1) or F(1,-2) on a basis diagram: expand each
/// product term over shifted series and read the targets off as diagrams.
/// Targets outside the betweenness region must carry an identically zero
/// series, asserted here.
inline WeightedDiagramSum act_long(const GTZDiagram& d, Generator gen) {
    const ExponentVector g = diagram_to_shift(d);
    WeightedDiagramSum out;
    for (const auto& term : detail::long_root_terms(gen)) {
        const auto cs = product_coeffs(g, term.X, term.Y);
        for (const auto& [p, c] : cs) {
            if (c == 0) continue;
            ExponentVector tgt = g;
            tgt -= embed_full(working_unit(term.Y));
            tgt += embed_full(working_unit(term.X));
            tgt += embed_full(detail::ladder_combination(p));
            const auto nd = shift_to_diagram(tgt);
            if (!nd) {
                if (!gamma_series_poly(tgt).is_zero())
                    throw TheoremViolation("outside diagram with nonzero series");
                continue;
            }
            add_weighted(out, *nd, term.coeff * c);
        }
    }
    return out;
}

/// Sparse matrix of one generator on one weight space, columns indexed by
/// the basis order of enumerate_diagrams.
struct GeneratorMatrix {
    HighestWeight weight;
    Generator generator{};
    int dim = 0;
    std::map<std::pair<int, int>, Rational> entries; // (row, col) -> value

    Rational at(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? Rational(0) : it->second;
    }
    void set(int r, int c, const Rational& v) {
        if (v != 0) entries[{r, c}] = v;
    }
    friend bool operator==(const GeneratorMatrix& a, const GeneratorMatrix& b) {
        return a.weight == b.weight && a.generator == b.generator && a.dim == b.dim && a.entries == b.entries;
    }
};

inline GeneratorMatrix generator_matrix(HighestWeight w, Generator gen) {
    const auto ds = enumerate_diagrams(w);
    std::map<GTZDiagram, int> idx;
    for (std::size_t i = 0; i < ds.size(); ++i) idx.emplace(ds[i], static_cast<int>(i));
    GeneratorMatrix M{w, gen, static_cast<int>(ds.size()), {}};
    for (int c = 0; c < M.dim; ++c) {
        const GTZDiagram& d = ds[static_cast<std::size_t>(c)];
        switch (gen) {
            case Generator::Fm2m2:
            case Generator::Fm1m1: M.set(c, c, Rational(cartan_eigenvalue(d, gen))); break;
            case Generator::F2m2:
                for (const auto& [nd, v] : sl2_ladder(d, LadderDirection::Lower)) M.set(idx.at(nd), c, 2 * v);
                break;
            case Generator::Fm22:
                for (const auto& [nd, v] : sl2_ladder(d, LadderDirection::Raise)) M.set(idx.at(nd), c, 2 * v);
                break;
            case Generator::Fm21:
            case Generator::F1m2:
                for (const auto& [nd, v] : act_long(d, gen)) M.set(idx.at(nd), c, v);
                break;
        }
    }
    return M;
}

/// One weight space of the group realization: basis functions plus the
/// row-reduced solver, built once and reused across generators.
class OracleWeightSpace {
  public:
    explicit OracleWeightSpace(HighestWeight w)
        : weight_(w), diagrams_(enumerate_diagrams(w)), solver_([&] {
              std::vector<EntryPoly> basis;
              basis.reserve(diagrams_.size());
              for (const auto& d : diagrams_) basis.push_back(zhelobenko_by_series(d));
              basis_ = basis;
              return BasisSolver(std::move(basis));
          }()) {}

    HighestWeight weight() const { return weight_; }
    const std::vector<GTZDiagram>& diagrams() const { return diagrams_; }
    std::size_t rank() const { return solver_.rank(); }

    std::vector<Rational> expand(EntryPoly p) const {
        p.normalize();
        auto sol = solver_.solve(p);
        if (!sol) throw std::invalid_argument("not in representation space");
        return *sol;
    }

    GeneratorMatrix matrix(Generator gen) const {
        if (solver_.rank() != diagrams_.size()) throw TheoremViolation("basis functions dependent");
        const auto [gi, gj] = generator_indices(gen);
        GeneratorMatrix M{weight_, gen, static_cast<int>(diagrams_.size()), {}};
        for (int c = 0; c < M.dim; ++c) {
            const auto col = expand(act_F(gi, gj, basis_[static_cast<std::size_t>(c)]));
            for (int r = 0; r < M.dim; ++r) M.set(r, c, col[static_cast<std::size_t>(r)]);
        }
        return M;
    }

  private:
    HighestWeight weight_;
    std::vector<GTZDiagram> diagrams_;
    std::vector<EntryPoly> basis_;
    BasisSolver solver_;
};

/// Matrix assembled column-by-column from the group realization.
inline GeneratorMatrix oracle_matrix(HighestWeight w, Generator gen) {
    return OracleWeightSpace(w).matrix(gen);
}

inline bool verify_against_oracle(HighestWeight w, Generator gen) {
    return generator_matrix(w, gen) == oracle_matrix(w, gen);
}

// ---------------------------------------------------------------------------
// Bracket relations against the 4x4 matrix model
// ---------------------------------------------------------------------------

using Matrix4 = std::array<std::array<Rational, 4>, 4>;

inline Matrix4 model_matrix(int i, int j) {
    auto pos = [](int v) {
        switch (v) {
            case -2: return 0;
            case -1: return 1;
            case 1: return 2;
            default: return 3;
        }
    };
    Matrix4 m{};
    m[static_cast<std::size_t>(pos(i))][static_cast<std::size_t>(pos(j))] += 1;
    m[static_cast<std::size_t>(pos(-j))][static_cast<std::size_t>(pos(-i))] -= Rational(index_sign(i) * index_sign(j));
    return m;
}

namespace detail {

inline Matrix4 commutator4(const Matrix4& a, const Matrix4& b) {
    Matrix4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -
                    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return r;
}

inline GeneratorMatrix commutator_rep(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    GeneratorMatrix r{a.weight, a.generator, a.dim, {}};
    auto mul_into = [&](const GeneratorMatrix& x, const GeneratorMatrix& y, const Rational& sgn) {
        for (const auto& [rcx, vx] : x.entries)
            for (const auto& [rcy, vy] : y.entries)
                if (rcx.second == rcy.first) {
                    auto key = std::make_pair(rcx.first, rcy.second);
                    auto it = r.entries.find(key);
                    Rational add = sgn * vx * vy;
                    if (it == r.entries.end()) {
                        if (add != 0) r.entries.emplace(key, add);
                    } else {
                        it->second += add;
                        if (it->second == 0) r.entries.erase(it);
                    }
                }
    };
    mul_into(a, b, Rational(1));
    mul_into(b, a, Rational(-1));
    return r;
}

/// Express m in the span of the given 4x4 matrices; nullopt if outside.
inline std::optional<std::vector<Rational>> expand_in_model(const std::vector<Matrix4>& span, const Matrix4& m) {
    const std::size_t cols = span.size();
    std::vector<std::vector<Rational>> a(16, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) a[static_cast<std::size_t>(4 * r + c)][j] = span[j][static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a[static_cast<std::size_t>(4 * r + c)][cols] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < 16; ++c) {
        std::size_t sel = 16;
        for (std::size_t i = row; i < 16; ++i)
            if (a[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel == 16) continue;
        std::swap(a[row], a[sel]);
        const Rational inv = 1 / a[row][c];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t i = 0; i < 16; ++i) {
            if (i == row || a[i][c] == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t cc = 0; cc <= cols; ++cc) a[i][cc] -= f * a[row][cc];
        }
        piv.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < 16; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    std::vector<Rational> sol(cols, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = a[i][cols];
    return sol;
}

} // namespace detail

struct BracketReport {
    HighestWeight weight;
    int closure_dimension = 0;
    std::vector<std::string> violations;
    bool empty() const { return violations.empty(); }
};

/// Close the six generators under brackets in the 4x4 model and check that
/// the representation matrices satisfy the same structure constants.
inline BracketReport verify_brackets(HighestWeight w) {
    BracketReport report{w, 0, {}};
    std::vector<Matrix4> model;
    std::vector<GeneratorMatrix> reps;
    std::vector<std::string> names;
    for (Generator g : kGenerators) {
        const auto [i, j] = generator_indices(g);
        model.push_back(model_matrix(i, j));
        reps.push_back(generator_matrix(w, g));
        names.push_back(generator_name(g));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t n = model.size();
        for (std::size_t a = 0; a < n && !grew; ++a) {
            for (std::size_t b = a + 1; b < n && !grew; ++b) {
                const Matrix4 br = detail::commutator4(model[a], model[b]);
                const auto sol = detail::expand_in_model(model, br);
                if (!sol) {
                    model.push_back(br);
                    reps.push_back(detail::commutator_rep(reps[a], reps[b]));
                    names.push_back("[" + names[a] + "," + names[b] + "]");
                    grew = true;
                }
            }
        }
    }
    report.closure_dimension = static_cast<int>(model.size());
    if (report.closure_dimension != 10)
        report.violations.push_back("closure dimension " + std::to_string(report.closure_dimension) + " != 10");
    for (std::size_t a = 0; a < model.size(); ++a) {
        for (std::size_t b = a + 1; b < model.size(); ++b) {
            const Matrix4 br = detail::commutator4(model[a], model[b]);
            const auto sol = detail::expand_in_model(model, br);
            if (!sol) {
                report.violations.push_back("model bracket [" + names[a] + "," + names[b] + "] outside closure");
                continue;
            }
            GeneratorMatrix want{w, reps[a].generator, reps[a].dim, {}};
            for (std::size_t k = 0; k < model.size(); ++k) {
                if ((*sol)[k] == 0) continue;
                for (const auto& [rc, v] : reps[k].entries) {
                    auto it = want.entries.find(rc);
                    const Rational add = (*sol)[k] * v;
                    if (it == want.entries.end()) {
                        if (add != 0) want.entries.emplace(rc, add);
                    } else {
                        it->second += add;
                        if (it->second == 0) want.entries.erase(it);
                    }
                }
            }
            if (!(detail::commutator_rep(reps[a], reps[b]).entries == want.entries))
                report.violations.push_back("representation bracket [" + names[a] + "," + names[b] +
                                            "] violates the model structure constants");
        }
    }
    return report;
}

} // namespace sp4gtz
