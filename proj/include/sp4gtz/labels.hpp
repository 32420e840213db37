#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sp4gtz {

/// The nine working determinant labels, in the fixed global order.
///
/// Singles a_i are row(-2) entries; pair labels are 2x2 minors over rows
/// (-2,-1).  The pair {-2,2} is not a working label: it is always rewritten
/// to {-1,1} with a sign.  The pairs containing 2 are taken with column
/// order (2,x), so a(-1,2) denotes the minor with columns (2,-1) and
/// a(1,2) the minor with columns (2,1); this keeps every basis vector a
/// positive combination of label monomials.
enum class DetLabel : std::uint8_t {
    AM2 = 0,   // a(-2)
    AM1 = 1,   // a(-1)
    A1 = 2,    // a(1)
    A2 = 3,    // a(2)
    AM2M1 = 4, // a(-2,-1)
    AM21 = 5,  // a(-2,1)
    AM11 = 6,  // a(-1,1)
    AM12 = 7,  // a(-1,2), columns (2,-1)
    A12 = 8,   // a(1,2),  columns (2,1)
};

inline constexpr int kNumLabels = 9;

/// Ten coordinates of the full exponent space, printed order.
/// Index 6 holds the eliminated pair {-2,2}.
inline constexpr int kNumFullLabels = 10;
inline constexpr int kFullEliminatedIndex = 6;

/// full index -> working label index (eliminated pair folds into a(-1,1))
inline constexpr std::array<int, 10> kFullToWorking = {0, 1, 2, 3, 4, 5, 6, 6, 7, 8};
/// working label index -> full index
inline constexpr std::array<int, 9> kWorkingToFull = {0, 1, 2, 3, 4, 5, 7, 8, 9};

inline constexpr std::array<std::string_view, 9> kLabelNames = {
    "a(-2)", "a(-1)", "a(1)", "a(2)", "a(-2,-1)", "a(-2,1)", "a(-1,1)", "a(-1,2)", "a(1,2)"};

// Printed coordinate order of the exponent space.
inline constexpr std::array<std::string_view, 10> kFullLabelOrder = {
    "a(-2)", "a(-1)", "a(1)", "a(2)", "a(-2,-1)",
    "a(-2,1)", "a(-2,2)", "a(-1,1)", "a(-1,2)", "a(1,2)"};

inline std::string label_name(DetLabel l) { return std::string(kLabelNames[static_cast<int>(l)]); }

inline std::optional<DetLabel> label_from_name(std::string_view s) {
    for (int i = 0; i < kNumLabels; ++i)
        if (kLabelNames[i] == s) return static_cast<DetLabel>(i);
    return std::nullopt;
}

inline bool valid_index(int i) { return i == -2 || i == -1 || i == 1 || i == 2; }

inline DetLabel single_label(int i) {
    switch (i) {
        case -2: return DetLabel::AM2;
        case -1: return DetLabel::AM1;
        case 1: return DetLabel::A1;
        case 2: return DetLabel::A2;
        default: throw std::invalid_argument("bad single index");
    }
}

struct SignedLabel {
    DetLabel label;
    int sign; // +1 or -1
};

/// Canonicalize a determinant written with column order (i, j).
///
/// Pairs are routed to the nine working labels: {-2,2} and {2,-2} become
/// {-1,1} (a(-2,2) = -a(-1,1) on the group); pairs containing 2 are
/// canonical in the order (2, x).  The sign tracks column transpositions
/// plus the elimination sign.
inline SignedLabel canonicalize_label(int i, int j) {
    if (!valid_index(i) || !valid_index(j)) throw std::invalid_argument("index outside {-2,-1,1,2}");
    if (i == j) throw std::invalid_argument("degenerate determinant");
    // a(i,j) = -a(j,i); bring to the canonical column order of the pair.
    if (i == -2 && j == 2) return {DetLabel::AM11, -1};
    if (i == 2 && j == -2) return {DetLabel::AM11, +1};
    if (i == -2 || (j == -2 && i != 2)) {
        // canonical order (-2, x)
        if (i == -2) return {j == -1 ? DetLabel::AM2M1 : DetLabel::AM21, +1};
        return {i == -1 ? DetLabel::AM2M1 : DetLabel::AM21, -1};
    }
    if (i == 2 || j == 2) {
        // canonical order (2, x)
        if (i == 2) return {j == -1 ? DetLabel::AM12 : DetLabel::A12, +1};
        return {i == -1 ? DetLabel::AM12 : DetLabel::A12, -1};
    }
    // remaining pair {-1,1}, canonical order (-1, 1)
    if (i == -1) return {DetLabel::AM11, +1};
    return {DetLabel::AM11, -1};
}

/// Column indices of a working label in its canonical order.
inline std::array<int, 2> label_columns(DetLabel l) {
    switch (l) {
        case DetLabel::AM2: return {-2, 0};
        case DetLabel::AM1: return {-1, 0};
        case DetLabel::A1: return {1, 0};
        case DetLabel::A2: return {2, 0};
        case DetLabel::AM2M1: return {-2, -1};
        case DetLabel::AM21: return {-2, 1};
        case DetLabel::AM11: return {-1, 1};
        case DetLabel::AM12: return {2, -1};
        case DetLabel::A12: return {2, 1};
    }
    throw std::logic_error("bad label");
}

inline bool is_pair_label(DetLabel l) { return static_cast<int>(l) >= 4; }

} // namespace sp4gtz
