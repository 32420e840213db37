#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp4gtz/labels.hpp"
#include "sp4gtz/rational.hpp"
#include "sp4gtz/sparse_poly.hpp"

namespace sp4gtz {

/// Exponent over the eight group entries a_i^j, columns i in {-2,-1,1,2},
/// rows j in {-2,-1}.  Index = 2*column_index + row_index.
using EntryMonomial = std::array<int, 8>;

inline constexpr std::array<int, 4> kEntryColumns = {-2, -1, 1, 2};
inline constexpr std::array<int, 2> kEntryRows = {-2, -1};

inline int entry_index(int column, int row) {
    int c = -1, r = -1;
    for (int i = 0; i < 4; ++i)
        if (kEntryColumns[static_cast<std::size_t>(i)] == column) c = i;
    for (int i = 0; i < 2; ++i)
        if (kEntryRows[static_cast<std::size_t>(i)] == row) r = i;
    if (c < 0 || r < 0) throw std::invalid_argument("bad entry index");
    return 2 * c + r;
}

inline std::string entry_name(int idx) {
    return "e(" + std::to_string(kEntryColumns[static_cast<std::size_t>(idx / 2)]) + "," +
           std::to_string(kEntryRows[static_cast<std::size_t>(idx % 2)]) + ")";
}

/// Polynomial in the eight entries, kept in normal form modulo the one
/// symplectic relation of the two modeled rows,
///   S = a(-2,2) + a(-1,1) = w*s - z*p + x*r - y*q = 0,
/// via the confluent rewrite w*s -> z*p - x*r + y*q.  Equality of normal
/// forms is equality of functions on the group.
class EntryPoly {
  public:
    using TermMap = std::map<EntryMonomial, Rational>;

    EntryPoly() = default;

    static EntryPoly variable(int column, int row) {
        EntryMonomial m{};
        m[static_cast<std::size_t>(entry_index(column, row))] = 1;
        EntryPoly p;
        p.terms_[m] = Rational(1);
        return p;
    }
    static EntryPoly constant(Rational c) {
        EntryPoly p;
        if (c != 0) p.terms_[EntryMonomial{}] = std::move(c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term_raw(const EntryMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    EntryPoly& operator+=(const EntryPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term_raw(m, c);
        return *this;
    }
    EntryPoly& operator-=(const EntryPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term_raw(m, -c);
        return *this;
    }
    friend EntryPoly operator+(EntryPoly a, const EntryPoly& b) { return a += b; }
    friend EntryPoly operator-(EntryPoly a, const EntryPoly& b) { return a -= b; }
    friend EntryPoly operator*(const Rational& c, const EntryPoly& p) {
        EntryPoly r;
        if (c == 0) return r;
        for (const auto& [m, v] : p.terms_) r.terms_[m] = c * v;
        return r;
    }
    /// Plain polynomial product; reduce explicitly where quotient-ring
    /// equality is meant.
    friend EntryPoly operator*(const EntryPoly& a, const EntryPoly& b) {
        EntryPoly r;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                EntryMonomial m;
                for (int i = 0; i < 8; ++i) m[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
                r.add_term_raw(m, ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const EntryPoly&, const EntryPoly&) = default;

    /// Reduce every monomial containing the product a(-2)^(-2) * a(2)^(-1).
    void normalize() {
        static const int W = entry_index(-2, -2), S = entry_index(2, -1);
        static const int Z = entry_index(2, -2), P = entry_index(-2, -1);
        static const int X = entry_index(-1, -2), R = entry_index(1, -1);
        static const int Y = entry_index(1, -2), Q = entry_index(-1, -1);
        TermMap work;
        work.swap(terms_);
        while (!work.empty()) {
            auto node = work.extract(work.begin());
            const EntryMonomial& m = node.key();
            const Rational& c = node.mapped();
            if (m[static_cast<std::size_t>(W)] > 0 && m[static_cast<std::size_t>(S)] > 0) {
                EntryMonomial base = m;
                --base[static_cast<std::size_t>(W)];
                --base[static_cast<std::size_t>(S)];
                auto bump = [&](int i, int j, Rational f) {
                    EntryMonomial nm = base;
                    ++nm[static_cast<std::size_t>(i)];
                    ++nm[static_cast<std::size_t>(j)];
                    auto it = work.find(nm);
                    if (it == work.end()) {
                        work.emplace(nm, std::move(f));
                    } else {
                        it->second += f;
                        if (it->second == 0) work.erase(it);
                    }
                };
                bump(Z, P, c);
                bump(X, R, -c);
                bump(Y, Q, c);
            } else {
                add_term_raw(m, c);
            }
        }
    }

  private:
    TermMap terms_;
};

/// The determinant polynomial of a working label (normal form).
inline const EntryPoly& det_poly(DetLabel l) {
    static const std::array<EntryPoly, 9> table = [] {
        auto minor = [](int c1, int c2) {
            return EntryPoly::variable(c1, -2) * EntryPoly::variable(c2, -1) -
                   EntryPoly::variable(c2, -2) * EntryPoly::variable(c1, -1);
        };
        std::array<EntryPoly, 9> t;
        for (int i = 0; i < kNumLabels; ++i) {
            const auto l2 = static_cast<DetLabel>(i);
            if (is_pair_label(l2)) {
                const auto cols = label_columns(l2);
                t[static_cast<std::size_t>(i)] = minor(cols[0], cols[1]);
            } else {
                t[static_cast<std::size_t>(i)] = EntryPoly::variable(label_columns(l2)[0], -2);
            }
        }
        return t;
    }();
    return table[static_cast<std::size_t>(l)];
}

/// Substitution homomorphism: determinant labels -> entry polynomials.
inline EntryPoly realize(const SparsePoly& p) {
    EntryPoly out;
    for (const auto& [m, c] : p.terms()) {
        EntryPoly term = EntryPoly::constant(c);
        for (int i = 0; i < kNumLabels; ++i)
            for (int k = 0; k < m[static_cast<std::size_t>(i)]; ++k) term = term * det_poly(static_cast<DetLabel>(i));
        out += term;
    }
    out.normalize();
    return out;
}

inline int index_sign(int i) { return i > 0 ? 1 : -1; }

/// Infinitesimal right shift: E(i,j) = sum over rows l of a_i^l d/d a_j^l.
/// Substitutes column i for column j.  Pure derivation, no reduction: only
/// the symplectic generators preserve the quotient ideal, and the gl4
/// commutation relations hold on plain polynomials.
inline EntryPoly act_E(int i, int j, const EntryPoly& p) {
    if (!valid_index(i) || !valid_index(j)) throw std::invalid_argument("index outside {-2,-1,1,2}");
    EntryPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (int row : kEntryRows) {
            const int jv = entry_index(j, row);
            if (m[static_cast<std::size_t>(jv)] > 0) {
                EntryMonomial nm = m;
                --nm[static_cast<std::size_t>(jv)];
                ++nm[static_cast<std::size_t>(entry_index(i, row))];
                r.add_term_raw(nm, c * m[static_cast<std::size_t>(jv)]);
            }
        }
    }
    return r;
}

/// F(i,j) = E(i,j) - sign(i)sign(j) E(-j,-i).
inline EntryPoly act_F(int i, int j, const EntryPoly& p) {
    EntryPoly r = act_E(i, j, p);
    r -= Rational(index_sign(i) * index_sign(j)) * act_E(-j, -i, p);
    return r;
}

} // namespace sp4gtz
