#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sp4gtz/exponents.hpp"
#include "sp4gtz/labels.hpp"

namespace sp4gtz {

struct HighestWeight {
    int m2 = 0; // m(-2)
    int m1 = 0; // m(-1)

    bool valid() const { return m2 >= m1 && m1 >= 0; }
    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

/// Gelfand-Tsetlin-Zhelobenko diagram (m-2, m-1, k-2, k-1, h-2, h-1).
struct GTZDiagram {
    int m2 = 0, m1 = 0, k2 = 0, k1 = 0, h2 = 0, h1 = 0;

    bool valid() const {
        return m2 >= k2 && k2 >= m1 && m1 >= k1 && k1 >= 0 && k2 >= h2 && h2 >= k1 && h2 >= h1 && h1 >= 0;
    }
    HighestWeight weight() const { return {m2, m1}; }
    std::array<int, 6> entries() const { return {m2, m1, k2, k1, h2, h1}; }

    static GTZDiagram from_entries(const std::array<int, 6>& e) {
        return {e[0], e[1], e[2], e[3], e[4], e[5]};
    }
    static GTZDiagram highest(HighestWeight w) { return {w.m2, w.m1, w.m2, w.m1, w.m2, w.m2}; }

    friend bool operator==(const GTZDiagram&, const GTZDiagram&) = default;
    friend auto operator<=>(const GTZDiagram&, const GTZDiagram&) = default;
};

/// All diagrams of a weight, graded lexicographic on (k-2, k-1, h-2, h-1).
/// This order is the global basis-index order.
inline std::vector<GTZDiagram> enumerate_diagrams(HighestWeight w) {
    if (!w.valid()) throw std::invalid_argument("invalid highest weight");
    std::vector<GTZDiagram> out;
    for (int k2 = w.m1; k2 <= w.m2; ++k2)
        for (int k1 = 0; k1 <= w.m1; ++k1)
            for (int h2 = k1; h2 <= k2; ++h2)
                for (int h1 = 0; h1 <= h2; ++h1) out.push_back({w.m2, w.m1, k2, k1, h2, h1});
    std::sort(out.begin(), out.end(), [](const GTZDiagram& a, const GTZDiagram& b) {
        const int da = a.k2 + a.k1 + a.h2 + a.h1, db = b.k2 + b.k1 + b.h2 + b.h1;
        if (da != db) return da < db;
        return std::array<int, 4>{a.k2, a.k1, a.h2, a.h1} < std::array<int, 4>{b.k2, b.k1, b.h2, b.h1};
    });
    return out;
}

inline long weyl_dimension(HighestWeight w) {
    return static_cast<long>(w.m2 - w.m1 + 1) * (w.m1 + 1) * (w.m2 + 2) * (w.m2 + w.m1 + 3) / 6;
}

/// Canonical representative of the shifted lattice of a diagram.
///
/// Base point (h-1 = h-2 case): a(-2)^(h2-m1) a(-1)^(k2-h2) a(1)^(m2-k2)
/// a(-2,-1)^k1 a(-2,1)^(m1-k1); then h2-h1 units of lowering move
/// exponents -2 -> 2 along a(-2,-1)->a(-1,2) first, a(-2)->a(2) next,
/// a(-2,1)->a(1,2) last.  Deterministic; coordinates may be negative, the
/// degree sums always reproduce the diagram.
inline ExponentVector diagram_to_shift(const GTZDiagram& d) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    WorkingExponents x{};
    x[0] = d.h2 - d.m1;
    x[1] = d.k2 - d.h2;
    x[2] = d.m2 - d.k2;
    x[4] = d.k1;
    x[5] = d.m1 - d.k1;
    int rem = d.h2 - d.h1;
    const int kpp = std::min(d.k1, rem);
    rem -= kpp;
    const int ppm2 = std::min(std::max(x[0], 0), rem);
    rem -= ppm2;
    if (rem > x[5]) throw std::logic_error("lowering infeasible");
    x[4] -= kpp;
    x[7] += kpp;
    x[0] -= ppm2;
    x[3] += ppm2;
    x[5] -= rem;
    x[8] += rem;
    if (index_sums(x) != d.entries()) throw std::logic_error("shift sums mismatch");
    return embed_full(x);
}

/// Inverse of diagram_to_shift up to lattice equivalence; nullopt when the
/// degree sums violate betweenness ("outside", zero series).
inline std::optional<GTZDiagram> shift_to_diagram(const ExponentVector& g) {
    const auto d = GTZDiagram::from_entries(index_sums(project_working(g)));
    if (!d.valid()) return std::nullopt;
    return d;
}

/// A lattice coset with its canonical representative.
struct ShiftedLattice {
    ExponentVector gamma{};

    static ShiftedLattice of(const GTZDiagram& d) { return {diagram_to_shift(d)}; }

    /// Equality is modulo the lattice.
    friend bool operator==(const ShiftedLattice& a, const ShiftedLattice& b) {
        return same_coset(project_working(a.gamma), project_working(b.gamma));
    }
};

namespace detail {

/// Degree-sum changes of the unit vector of each working label.
inline std::array<int, 6> sums_of_unit(DetLabel l) {
    WorkingExponents w{};
    w[static_cast<std::size_t>(l)] = 1;
    return index_sums(w);
}

inline std::array<int, 6> sums_of_ladder(int i) {
    return index_sums(detail::ladder_rho9()[static_cast<std::size_t>(i)]);
}

} // namespace detail

/// Diagram after adding -e_Y + e_X + p.r to its shift; nullopt when the
/// result leaves the betweenness region.  The m-row never changes.
inline std::optional<GTZDiagram> apply_transform(const GTZDiagram& d, DetLabel X, DetLabel Y,
                                                 const std::array<int, 3>& p) {
    if (!d.valid()) throw std::invalid_argument("invalid diagram");
    auto e = d.entries();
    const auto dx = detail::sums_of_unit(X);
    const auto dy = detail::sums_of_unit(Y);
    for (int i = 0; i < 6; ++i) e[static_cast<std::size_t>(i)] += dx[static_cast<std::size_t>(i)] - dy[static_cast<std::size_t>(i)];
    for (int k = 0; k < 3; ++k) {
        const auto dr = detail::sums_of_ladder(k);
        for (int i = 0; i < 6; ++i) e[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(k)] * dr[static_cast<std::size_t>(i)];
    }
    const auto nd = GTZDiagram::from_entries(e);
    if (!nd.valid()) return std::nullopt;
    return nd;
}

} // namespace sp4gtz
