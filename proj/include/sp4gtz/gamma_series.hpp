#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sp4gtz/diagrams.hpp"
#include "sp4gtz/exponents.hpp"
#include "sp4gtz/rational.hpp"
#include "sp4gtz/sparse_poly.hpp"

namespace sp4gtz {

/// Raised when a verified identity fails at runtime; carries instance data.
class TheoremViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using STriple = std::array<int, 3>;

inline bool componentwise_le(const STriple& a, const STriple& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

namespace detail {

/// Nonnegative points of a lattice coset, with their lattice coordinates.
/// The enumeration box is forced by coordinate nonnegativity: the three
/// coordinates (a(-1), a(-1,2), a(1,2)) pin t from above, (a(-1,1),
/// a(-2,-1)) from below, and a(-2,1)/a(2)/a(-2) close the third axis.
struct SupportPoint {
    STriple t;
    WorkingExponents x;
};

inline std::vector<SupportPoint> coset_points(const WorkingExponents& g) {
    std::vector<SupportPoint> out;
    if (g[2] < 0) return out;
    const int t1lo = -g[6], t1hi = g[1];
    const int t2lo = -g[4], t2hi = g[7];
    if (t1hi < t1lo || t2hi < t2lo) return out;
    const int t3hi = g[8];
    const int t3lo = std::min({t1lo - g[5], -g[3] - t2hi, -g[0] + t1lo - t2hi});
    for (int t1 = t1lo; t1 <= t1hi; ++t1) {
        for (int t2 = t2lo; t2 <= t2hi; ++t2) {
            for (int t3 = t3lo; t3 <= t3hi; ++t3) {
                const WorkingExponents x = {g[0] + t1 - t2 - t3, g[1] - t1, g[2],
                                            g[3] + t2 + t3,      g[4] + t2, g[5] - t1 + t3,
                                            g[6] + t1,           g[7] - t2, g[8] - t3};
                if (std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; }))
                    out.push_back({{t1, t2, t3}, x});
            }
        }
    }
    return out;
}

/// Layer weight on one axis: (-1)^s (t+1)(t+2)...(t+s)/s!, the polynomial
/// binomial C(t+s,s) with the sign forced by the annihilation telescoping.
inline Rational layer_weight(int t, int s) {
    Integer num(1);
    for (int j = 1; j <= s; ++j) num *= (t + j);
    Rational w(num, factorial(static_cast<unsigned>(s)));
    w.canonicalize();
    return (s % 2) ? Rational(-w) : w;
}

inline Rational inv_factorial_product(const WorkingExponents& x) {
    Integer d(1);
    for (int v : x) d *= factorial(static_cast<unsigned>(v));
    Rational r(1, d);
    r.canonicalize();
    return r;
}

inline WorkingExponents shifted_base(const WorkingExponents& g, const STriple& s) {
    const auto& rho = ladder_rho9();
    return g - (s[0] * rho[0] + s[1] * rho[1] + s[2] * rho[2]);
}

inline WorkingExponents ladder_combination(const STriple& s) {
    const auto& rho = ladder_rho9();
    return s[0] * rho[0] + s[1] * rho[1] + s[2] * rho[2];
}

} // namespace detail

/// All points of gamma + lattice with every coordinate >= 0.
inline std::vector<ExponentVector> support_points(const ExponentVector& gamma) {
    std::vector<ExponentVector> out;
    for (const auto& pt : detail::coset_points(project_working(gamma))) out.push_back(embed_full(pt.x));
    return out;
}

struct GammaSeries {
    ShiftedLattice shift;
    SparsePoly realization;
};

/// The finite series of a shifted lattice: coefficient 1/x! per
/// nonnegative point x of the coset.
inline SparsePoly gamma_series_poly(const ExponentVector& gamma) {
    SparsePoly p;
    for (const auto& pt : detail::coset_points(project_working(gamma)))
        p.add_term(pt.x, detail::inv_factorial_product(pt.x));
    return p;
}

inline GammaSeries realize_gamma(const ExponentVector& gamma) {
    return {ShiftedLattice{gamma}, gamma_series_poly(gamma)};
}

// ---------------------------------------------------------------------------
// The quadratic system
// ---------------------------------------------------------------------------

/// Supports (U, W, Z) of the three terms of each Plucker relation
/// A^U - A^W + A^Z = 0; the lattice rows are U - W, the internal ladder
/// representatives are Z - U.
struct RelationSupports {
    WorkingExponents u, w, z;
};

inline const std::array<RelationSupports, 3>& relation_supports() {
    static const std::array<RelationSupports, 3> r = [] {
        auto unit2 = [](DetLabel a, DetLabel b) { return working_unit(a) + working_unit(b); };
        std::array<RelationSupports, 3> t;
        t[0] = {unit2(DetLabel::AM2, DetLabel::AM11), unit2(DetLabel::AM1, DetLabel::AM21),
                unit2(DetLabel::A1, DetLabel::AM2M1)};
        t[1] = {unit2(DetLabel::A2, DetLabel::AM2M1), unit2(DetLabel::AM2, DetLabel::AM12),
                unit2(DetLabel::AM1, DetLabel::AM11)};
        t[2] = {unit2(DetLabel::A2, DetLabel::AM21), unit2(DetLabel::AM2, DetLabel::A12),
                unit2(DetLabel::A1, DetLabel::AM11)};
        return t;
    }();
    return r;
}

/// The i-th Plucker relation as a working-label polynomial.
inline SparsePoly plucker_relation(int i) {
    const auto& rs = relation_supports()[static_cast<std::size_t>(i)];
    SparsePoly p = SparsePoly::monomial(rs.u);
    p -= SparsePoly::monomial(rs.w);
    p += SparsePoly::monomial(rs.z);
    return p;
}

/// Plain box operator O_i = d^2_U - d^2_W (one per lattice row).
inline SparsePoly box_operator(const SparsePoly& p, int i) {
    const auto& rs = relation_supports()[static_cast<std::size_t>(i)];
    return p.derivative(rs.u) - p.derivative(rs.w);
}

/// Antisymmetrized operator: the full relation applied as derivatives.
inline SparsePoly antisymmetrized_box(const SparsePoly& p, int i) {
    const auto& rs = relation_supports()[static_cast<std::size_t>(i)];
    return box_operator(p, i) + p.derivative(rs.z);
}

// ---------------------------------------------------------------------------
// GKZ system checks
// ---------------------------------------------------------------------------

/// Basis of the orthogonal complement of the lattice in the ten printed
/// coordinates: the six degree functionals lifted through the projection
/// plus the eliminated-coordinate functional.
inline const std::array<std::array<int, 10>, 7>& gkz_homogeneity_basis() {
    static const std::array<std::array<int, 10>, 7> rows = [] {
        std::array<std::array<int, 10>, 7> r{};
        for (int f = 0; f < 6; ++f) {
            for (int i = 0; i < 10; ++i) {
                WorkingExponents w{};
                w[static_cast<std::size_t>(kFullToWorking[static_cast<std::size_t>(i)])] = 1;
                r[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)] = index_sums(w)[static_cast<std::size_t>(f)];
            }
        }
        r[6][kFullEliminatedIndex] = 1;
        return r;
    }();
    return rows;
}

/// First-order system: every support monomial of p lies on the affine
/// hyperplanes a.x = a.gamma for each functional a orthogonal to the
/// lattice.  The functionals cut the lattice exactly (the rows have a
/// unimodular complement), so this pins the support to the coset.
inline bool gkz_homogeneity_holds(const ExponentVector& gamma, const SparsePoly& p) {
    const auto& basis = gkz_homogeneity_basis();
    std::array<long, 7> target{};
    for (int f = 0; f < 7; ++f)
        for (int i = 0; i < 10; ++i)
            target[static_cast<std::size_t>(f)] += static_cast<long>(basis[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)]) * gamma[i];
    for (const auto& [m, c] : p.terms()) {
        const ExponentVector lift = embed_full(m);
        for (int f = 0; f < 7; ++f) {
            long dot = 0;
            for (int i = 0; i < 10; ++i)
                dot += static_cast<long>(basis[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)]) * lift[i];
            if (dot != target[static_cast<std::size_t>(f)]) return false;
        }
    }
    return true;
}

/// Second-order system: the box equation d^(b+) p = d^(b-) p for each
/// lattice row b.
inline bool gkz_box_holds(const SparsePoly& p) {
    for (int i = 0; i < 3; ++i) {
        const auto v9 = detail::lattice_v9()[static_cast<std::size_t>(i)];
        WorkingExponents plus{}, minus{};
        for (int k = 0; k < 9; ++k) {
            plus[static_cast<std::size_t>(k)] = std::max(v9[static_cast<std::size_t>(k)], 0);
            minus[static_cast<std::size_t>(k)] = std::max(-v9[static_cast<std::size_t>(k)], 0);
        }
        if (!(p.derivative(plus) == p.derivative(minus))) return false;
    }
    return true;
}

inline bool gkz_holds(const ExponentVector& gamma, const SparsePoly& p) {
    return gkz_homogeneity_holds(gamma, p) && gkz_box_holds(p);
}

inline bool check_gkz(const ExponentVector& gamma) {
    return gkz_holds(gamma, gamma_series_poly(gamma));
}

// ---------------------------------------------------------------------------
// Graded layers
// ---------------------------------------------------------------------------

/// Layer s of the solution attached to gamma.
inline SparsePoly f_s(const ExponentVector& gamma, const STriple& s) {
    const auto base = detail::shifted_base(project_working(gamma), s);
    SparsePoly p;
    for (const auto& pt : detail::coset_points(base)) {
        Rational w = detail::layer_weight(pt.t[0], s[0]);
        if (w == 0) continue;
        w *= detail::layer_weight(pt.t[1], s[1]);
        if (w == 0) continue;
        w *= detail::layer_weight(pt.t[2], s[2]);
        if (w == 0) continue;
        p.add_term(pt.x, w * detail::inv_factorial_product(pt.x));
    }
    return p;
}

/// Layer series evaluated at all-ones arguments.
inline Rational f_s_at_one(const ExponentVector& gamma, const STriple& s) {
    const auto base = detail::shifted_base(project_working(gamma), s);
    Rational total(0);
    for (const auto& pt : detail::coset_points(base)) {
        Rational w = detail::layer_weight(pt.t[0], s[0]) * detail::layer_weight(pt.t[1], s[1]) *
                     detail::layer_weight(pt.t[2], s[2]);
        if (w != 0) total += w * detail::inv_factorial_product(pt.x);
    }
    return total;
}

namespace detail {

/// Layer coset degree sums: coset of layer s is gamma - s.rho + lattice.
inline std::array<int, 6> layer_sums(const std::array<int, 6>& g, const STriple& s) {
    // rho degree-sum rows: rho1 -> (0,0,-1,+1,0,0); rho2 -> (0,0,0,-1,-2,-1); rho3 -> (0,0,-1,0,-2,-1)
    return {g[0],
            g[1],
            g[2] + s[0] + s[2],
            g[3] - s[0] + s[1],
            g[4] + 2 * s[1] + 2 * s[2],
            g[5] + s[1] + s[2]};
}

inline bool sums_valid(const std::array<int, 6>& e) {
    return GTZDiagram::from_entries(e).valid();
}

} // namespace detail

/// The s >= 0 with inhabited layer coset.  A coset has nonnegative points
/// exactly when its degree sums satisfy the betweenness conditions, so the
/// box is cut by the validity predicate; the enclosing scan box boundary is
/// asserted empty.
inline std::vector<STriple> layer_box(const ExponentVector& gamma) {
    const auto g = index_sums(project_working(gamma));
    int bound = 3;
    for (int v : g) bound += std::abs(v);
    std::vector<STriple> out;
    for (int s1 = 0; s1 <= bound; ++s1)
        for (int s2 = 0; s2 <= bound; ++s2)
            for (int s3 = 0; s3 <= bound; ++s3) {
                const STriple s = {s1, s2, s3};
                if (detail::sums_valid(detail::layer_sums(g, s))) {
                    if (s1 == bound || s2 == bound || s3 == bound)
                        throw TheoremViolation("layer box bound too small");
                    out.push_back(s);
                }
            }
    return out;
}

/// Sum of all inhabited layers: the irreducible solution of the
/// antisymmetrized system attached to gamma.
inline SparsePoly f_full(const ExponentVector& gamma) {
    SparsePoly p;
    for (const auto& s : layer_box(gamma)) p += f_s(gamma, s);
    return p;
}

struct GradedSolution {
    ShiftedLattice shift;
    std::map<STriple, SparsePoly> parts;

    SparsePoly total() const {
        SparsePoly p;
        for (const auto& [s, q] : parts) p += q;
        return p;
    }
};

inline GradedSolution f_graded(const ExponentVector& gamma) {
    GradedSolution sol{ShiftedLattice{gamma}, {}};
    for (const auto& s : layer_box(gamma)) {
        SparsePoly layer = f_s(gamma, s);
        if (!layer.is_zero()) sol.parts.emplace(s, std::move(layer));
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Operator expansion (series applied as a differential operator)
// ---------------------------------------------------------------------------

struct OperatorExpansion {
    SparsePoly direct;                  // series(d/dA) applied to the solution of omega
    std::map<STriple, Rational> coeffs; // expansion coefficients on shifted solutions
    SparsePoly reconstructed;           // sum of coeffs * solutions
};

namespace detail {

/// Expansion coefficient: the layer-s series of gamma + vbar + s.rho at 1,
/// a binomial-weighted sum over the coset gamma + lattice itself.
inline Rational expansion_coefficient(const WorkingExponents& g, const STriple& s) {
    const WorkingExponents base = g + vbar9(); // + s.rho - s.rho
    Rational total(0);
    for (const auto& pt : coset_points(base)) {
        Rational w = layer_weight(pt.t[0], s[0]) * layer_weight(pt.t[1], s[1]) * layer_weight(pt.t[2], s[2]);
        if (w != 0) total += w * inv_factorial_product(pt.x);
    }
    return total;
}

} // namespace detail

/// Expand series(gamma) as a differential operator acting on the solution
/// attached to omega, both directly and through the coefficient formula;
/// the two must agree exactly.
inline OperatorExpansion apply_gamma_operator(const ExponentVector& gamma, const ExponentVector& omega) {
    const auto g = project_working(gamma);
    const auto om = project_working(omega);

    OperatorExpansion out;
    const SparsePoly fw = f_full(omega);
    const SparsePoly op = gamma_series_poly(gamma);
    for (const auto& [m, c] : op.terms()) out.direct += c * fw.derivative(m);

    // The m-sums of the target shifts do not depend on s; the k-2 and h-2
    // sums only grow along s, which prunes the scan box.
    const auto dsums = index_sums(om - g);
    if (dsums[0] >= 0 && dsums[1] >= 0 && dsums[1] <= dsums[0]) {
        int bound = 3;
        for (int v : dsums) bound += std::abs(v);
        for (int s1 = 0; s1 <= bound; ++s1)
            for (int s2 = 0; s2 <= bound; ++s2)
                for (int s3 = 0; s3 <= bound; ++s3) {
                    if (dsums[2] + s1 + s3 > dsums[0]) continue;
                    if (dsums[4] + 2 * s2 + 2 * s3 > dsums[0]) continue;
                    const STriple s = {s1, s2, s3};
                    const WorkingExponents delta = om - (g + detail::ladder_combination(s));
                    const SparsePoly fd = f_full(embed_full(delta));
                    if (fd.is_zero()) continue;
                    const Rational k = detail::expansion_coefficient(g, s);
                    if (k == 0) continue;
                    out.coeffs.emplace(s, k);
                    out.reconstructed += k * fd;
                }
    }
    if (!(out.direct == out.reconstructed))
        throw TheoremViolation("operator expansion: direct and coefficient paths differ");
    return out;
}

// ---------------------------------------------------------------------------
// Product of a variable and a series, modulo the Plucker relations
// ---------------------------------------------------------------------------

namespace detail {

/// s with inhabited target coset gamma' + e_X + s.rho + lattice.
inline std::vector<STriple> target_box(const WorkingExponents& gp, DetLabel X) {
    const auto u0 = index_sums(gp + working_unit(X));
    int bound = 4;
    for (int v : u0) bound += std::abs(v);
    std::vector<STriple> out;
    for (int s1 = 0; s1 <= bound; ++s1)
        for (int s2 = 0; s2 <= bound; ++s2)
            for (int s3 = 0; s3 <= bound; ++s3) {
                const STriple s = {s1, s2, s3};
                const auto e = layer_sums(u0, {-s1, -s2, -s3});
                if (sums_valid(e)) out.push_back(s);
            }
    std::sort(out.begin(), out.end(), [](const STriple& a, const STriple& b) {
        const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

inline Rational series_at_one_base(const WorkingExponents& base, const STriple& s) {
    // layer-s value at 1 for the series whose layer coset is base + lattice
    Rational total(0);
    for (const auto& pt : coset_points(base)) {
        Rational w = layer_weight(pt.t[0], s[0]) * layer_weight(pt.t[1], s[1]) * layer_weight(pt.t[2], s[2]);
        if (w != 0) total += w * inv_factorial_product(pt.x);
    }
    return total;
}

} // namespace detail

/// Coefficients c_p with A_X * series(gamma - e_Y) = sum_p c_p *
/// series(gamma - e_Y + e_X + p.r) modulo the Plucker relations, by
/// forward substitution of the triangular system.
inline std::map<STriple, Rational> product_coeffs(const ExponentVector& gamma, DetLabel X, DetLabel Y) {
    const WorkingExponents gp = project_working(gamma) - working_unit(Y);
    const WorkingExponents ex = working_unit(X);
    const WorkingExponents vb = detail::vbar9();
    std::map<STriple, Rational> cs;
    for (const auto& s : detail::target_box(gp, X)) {
        const WorkingExponents srho = detail::ladder_combination(s);
        Rational acc = detail::series_at_one_base(gp + vb, s);
        for (const auto& [p, cp] : cs) {
            if (cp == 0 || !componentwise_le(p, s) || p == s) continue;
            const STriple sp = {s[0] - p[0], s[1] - p[1], s[2] - p[2]};
            acc -= cp * detail::series_at_one_base(gp + ex + vb + detail::ladder_combination(p), sp);
        }
        const Rational diag = detail::series_at_one_base(gp + ex + vb + srho, {0, 0, 0});
        if (diag == 0) {
            if (acc != 0) throw TheoremViolation("degenerate pivot in product expansion");
            cs.emplace(s, Rational(0));
        } else {
            cs.emplace(s, acc / diag);
        }
    }
    return cs;
}

/// Same coefficients from the closed form: leading ratio minus the
/// single-step corrections; agrees exactly with the triangular solve.
inline std::map<STriple, Rational> product_coeffs_closed_form(const ExponentVector& gamma, DetLabel X,
                                                              DetLabel Y) {
    const WorkingExponents gp = project_working(gamma) - working_unit(Y);
    const WorkingExponents ex = working_unit(X);
    const WorkingExponents vb = detail::vbar9();
    const auto box = detail::target_box(gp, X);
    std::map<STriple, Rational> cs;
    for (const auto& s : box) {
        const WorkingExponents srho = detail::ladder_combination(s);
        const Rational Ds = detail::series_at_one_base(gp + ex + vb + srho, {0, 0, 0});
        if (Ds == 0) {
            cs.emplace(s, Rational(0));
            continue;
        }
        Rational val = detail::series_at_one_base(gp + vb, s) / Ds;
        for (const auto& p : box) {
            if (p == s || !componentwise_le(p, s)) continue;
            const WorkingExponents prho = detail::ladder_combination(p);
            const Rational Dp = detail::series_at_one_base(gp + ex + vb + prho, {0, 0, 0});
            if (Dp == 0) continue;
            const STriple sp = {s[0] - p[0], s[1] - p[1], s[2] - p[2]};
            const Rational Kp = detail::series_at_one_base(gp + vb, p);
            const Rational Msp = detail::series_at_one_base(gp + ex + vb + prho, sp);
            val -= Kp * Msp / (Ds * Dp);
        }
        cs.emplace(s, val);
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Decomposition into irreducible solutions
// ---------------------------------------------------------------------------

/// Decompose a polynomial solution of the antisymmetrized system into
/// irreducible solutions; returns canonical shifts with coefficients.
inline std::vector<std::pair<ExponentVector, Rational>> decompose(const SparsePoly& input) {
    for (int i = 0; i < 3; ++i)
        if (!antisymmetrized_box(input, i).is_zero())
            throw std::invalid_argument("decompose: input not annihilated by the antisymmetrized system");

    // Iteration cap: distinct cosets reachable from the input support.
    std::size_t cap = 1;
    for (const auto& [m, c] : input.terms()) cap += 1;
    cap = cap * 8 + 8;

    std::map<ExponentVector, Rational> found;
    SparsePoly cur = input;
    std::size_t guard = 0;
    while (!cur.is_zero()) {
        if (++guard > cap) throw TheoremViolation("decompose: did not terminate within the support bound");
        // Partition the support into cosets (keyed by degree sums; sums
        // separate cosets inside one nonnegative support).
        std::map<std::array<int, 6>, SparsePoly> classes;
        for (const auto& [m, c] : cur.terms()) classes[index_sums(m)].add_term(m, c);
        bool progress = false;
        for (auto& [sums, restriction] : classes) {
            bool boundary = true;
            for (int i = 0; i < 3 && boundary; ++i)
                if (!box_operator(restriction, i).is_zero()) boundary = false;
            if (!boundary) continue;
            const auto d = GTZDiagram::from_entries(sums);
            if (!d.valid()) throw TheoremViolation("decompose: inhabited class outside the betweenness region");
            const ExponentVector gcan = diagram_to_shift(d);
            const SparsePoly gs = gamma_series_poly(gcan);
            const auto& [m0, c0] = *restriction.terms().begin();
            const Rational lam = c0 / gs.coeff(m0);
            if (!(restriction == lam * gs))
                throw TheoremViolation("decompose: boundary class not proportional to its series");
            auto it = found.find(gcan);
            if (it == found.end())
                found.emplace(gcan, lam);
            else
                it->second += lam;
            cur -= lam * f_full(gcan);
            progress = true;
            break;
        }
        if (!progress) throw TheoremViolation("decompose: no boundary class found");
    }
    std::vector<std::pair<ExponentVector, Rational>> out;
    for (auto& [g, c] : found)
        if (c != 0) out.emplace_back(g, c);
    return out;
}

} // namespace sp4gtz
