#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "sp4gtz/labels.hpp"

namespace sp4gtz {

/// Integer exponent vector over the ten printed coordinates.
/// Negative entries are allowed (shifts, not monomials).
struct ExponentVector {
    std::array<int, 10> coords{};

    int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

    ExponentVector& operator+=(const ExponentVector& o) {
        for (int i = 0; i < 10; ++i) coords[static_cast<std::size_t>(i)] += o.coords[static_cast<std::size_t>(i)];
        return *this;
    }
    ExponentVector& operator-=(const ExponentVector& o) {
        for (int i = 0; i < 10; ++i) coords[static_cast<std::size_t>(i)] -= o.coords[static_cast<std::size_t>(i)];
        return *this;
    }
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
    friend ExponentVector operator*(int k, ExponentVector a) {
        for (auto& c : a.coords) c *= k;
        return a;
    }
};

/// Exponents over the nine working labels.
using WorkingExponents = std::array<int, 9>;

inline WorkingExponents operator+(const WorkingExponents& a, const WorkingExponents& b) {
    WorkingExponents r{};
    for (int i = 0; i < 9; ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    return r;
}
inline WorkingExponents operator-(const WorkingExponents& a, const WorkingExponents& b) {
    WorkingExponents r{};
    for (int i = 0; i < 9; ++i) r[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
    return r;
}
inline WorkingExponents operator*(int k, const WorkingExponents& a) {
    WorkingExponents r{};
    for (int i = 0; i < 9; ++i) r[static_cast<std::size_t>(i)] = k * a[static_cast<std::size_t>(i)];
    return r;
}

/// Fold the eliminated coordinate a(-2,2) into a(-1,1).
inline WorkingExponents project_working(const ExponentVector& v) {
    WorkingExponents w{};
    for (int i = 0; i < 10; ++i) w[static_cast<std::size_t>(kFullToWorking[static_cast<std::size_t>(i)])] += v[i];
    return w;
}

inline ExponentVector embed_full(const WorkingExponents& w) {
    ExponentVector v{};
    for (int i = 0; i < 9; ++i) v[kWorkingToFull[static_cast<std::size_t>(i)]] = w[static_cast<std::size_t>(i)];
    return v;
}

inline WorkingExponents working_unit(DetLabel l) {
    WorkingExponents w{};
    w[static_cast<std::size_t>(l)] = 1;
    return w;
}

/// Lattice basis rows, printed order.  The last coordinate of the third
/// row is -1: the printed +1 fails homogeneity (see the discrepancy
/// ledger), and every degree functional must vanish on the lattice.
inline const std::array<ExponentVector, 3>& lattice_basis() {
    static const std::array<ExponentVector, 3> v = {{
        {{1, -1, 0, 0, 0, -1, 0, 1, 0, 0}},
        {{-1, 0, 0, 1, 1, 0, 0, 0, -1, 0}},
        {{-1, 0, 0, 1, 0, 1, 0, 0, 0, -1}},
    }};
    return v;
}

/// Ladder vectors, printed order.
inline const std::array<ExponentVector, 3>& r_vectors() {
    static const std::array<ExponentVector, 3> r = {{
        {{-1, 0, 1, 0, 1, 0, 0, -1, 0, 0}},
        {{-1, 1, 0, 0, 0, 0, 1, 0, -1, 0}},
        {{-1, 0, 1, 0, 0, 0, 1, 0, 0, -1}},
    }};
    return r;
}

namespace detail {

inline const std::array<WorkingExponents, 3>& lattice_v9() {
    static const std::array<WorkingExponents, 3> v = {{
        project_working(lattice_basis()[0]),
        project_working(lattice_basis()[1]),
        project_working(lattice_basis()[2]),
    }};
    return v;
}

/// Internal ladder representatives: rho_i = r_i shifted by lattice rows so
/// that each equals (third term) - (first term) of the matching Plucker
/// relation.  Same cosets as the printed rows; single binomial convention
/// on all three axes.
inline const std::array<WorkingExponents, 3>& ladder_rho9() {
    static const std::array<WorkingExponents, 3> rho = {{
        project_working(r_vectors()[0]),
        project_working(r_vectors()[1]) - lattice_v9()[1],
        project_working(r_vectors()[2]) - lattice_v9()[2],
    }};
    return rho;
}

inline WorkingExponents vbar9() {
    return lattice_v9()[0] + lattice_v9()[1] + lattice_v9()[2];
}

inline WorkingExponents combine(const std::array<WorkingExponents, 3>& rows, const std::array<int, 3>& c) {
    return c[0] * rows[0] + c[1] * rows[1] + c[2] * rows[2];
}

} // namespace detail

/// The six degree sums (m-2, m-1, k-2, k-1, h-2, h-1) of a working
/// exponent vector: total degree; pair degree; degree off a(1); pairs
/// containing both a +-2 column and -1; labels containing +-2; labels
/// containing -2.  Constant on every lattice coset.
inline std::array<int, 6> index_sums(const WorkingExponents& x) {
    const int m2 = x[0] + x[1] + x[2] + x[3] + x[4] + x[5] + x[6] + x[7] + x[8];
    const int m1 = x[4] + x[5] + x[6] + x[7] + x[8];
    const int k2 = m2 - x[2];
    const int k1 = x[4] + x[7];
    const int h2 = x[0] + x[3] + x[4] + x[5] + x[7] + x[8];
    const int h1 = x[0] + x[4] + x[5];
    return {m2, m1, k2, k1, h2, h1};
}

/// Membership test x in Z-span(lattice rows); the rows have a unimodular
/// minor on coordinates (a(-1), a(-1,2), a(1,2)), so coefficients read off.
inline std::optional<std::array<int, 3>> lattice_coefficients(const WorkingExponents& x) {
    const auto& v = detail::lattice_v9();
    const std::array<int, 3> t = {-x[1], -x[7], -x[8]};
    if (detail::combine(v, t) == x) return t;
    return std::nullopt;
}

inline bool same_coset(const WorkingExponents& a, const WorkingExponents& b) {
    return lattice_coefficients(a - b).has_value();
}

} // namespace sp4gtz
