#ifndef SQSQ_GEOMETRY_HPP
#define SQSQ_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqsq {

using Coord = std::int64_t;

// One square element of a dissection. Top-left origin, y grows downward,
// matching Bouwkampcode's top-to-bottom reading order.
struct Element {
    Coord x = 0;
    Coord y = 0;
    Coord size = 0;

    bool operator==(const Element&) const = default;
    Coord right() const { return x + size; }
    Coord bottom() const { return y + size; }
};

// A placed tiling of a width x height rectangle by square elements.
// Elements are kept in (y, x) order; Bouwkampcode reading order coincides
// with that order for a valid tiling.
struct Dissection {
    Coord width = 0;
    Coord height = 0;
    std::vector<Element> elements;

    bool operator==(const Dissection&) const = default;
    int order() const { return static_cast<int>(elements.size()); }
    bool is_square() const { return width == height; }

    // Restores the internal (y, x) element order after edits.
    void normalize();
};

struct Violation {
    enum class Kind { OutOfBounds, Overlap, AreaMismatch, Gap };
    Kind kind;
    // Offending element indices: one for OutOfBounds, two for Overlap,
    // empty for the area-level kinds.
    std::vector<int> elements;
    std::string detail;
};

struct ValidationReport {
    bool ok = false;
    std::vector<Violation> violations;
};

// Checks all Dissection invariants: bounds, pairwise disjointness, area
// conservation, exact cover, order >= 2. Never throws; reports instead.
ValidationReport validate_tiling(const Dissection& d);

// Throws InvalidTiling unless validate_tiling(d).ok.
void require_valid(const Dissection& d);

// A proper sub-region exactly tiled by >= 2 elements.
struct SubrectangleRegion {
    Coord x = 0;
    Coord y = 0;
    Coord w = 0;
    Coord h = 0;
    std::vector<int> members;  // element indices, ascending
    bool maximal = false;      // not nested inside another reported region

    bool is_square() const { return w == h; }
};

// All proper subrectangles of d whose boundaries lie on element edges,
// in (y, x, w, h) order, outermost ones flagged maximal.
std::vector<SubrectangleRegion> find_subrectangles(const Dissection& d);

// The eight symmetries of the square as indices 0..7: rotation by
// 90*(s%4) degrees clockwise, preceded by a horizontal mirror when s >= 4.
using Symmetry = int;
inline constexpr int kSymmetryCount = 8;
inline constexpr Symmetry kIdentity = 0;

// compose(a, b) applies b first, then a.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse(Symmetry s);

// Rigid transform of the whole dissection; oblong inputs swap width/height
// under odd rotations. Element size multiset is unchanged.
Dissection transform(const Dissection& d, Symmetry s);

// The symmetries mapping a w x h slot onto itself: all 8 for a square slot,
// the Klein four-group {0, 2, 4, 6} for an oblong one.
std::vector<Symmetry> slot_symmetries(Coord w, Coord h);

// Re-places the content of one subrectangle region in a new orientation,
// leaving everything outside untouched. Throws BadSelector if sym does not
// preserve the slot. The region must come from find_subrectangles(d).
Dissection reorient_region(const Dissection& d, const SubrectangleRegion& region, Symmetry sym);

enum class Perfection { Perfect, Imperfect };
enum class Structure { Simple, Compound };
enum class Shape { Square, Oblong };

struct Classification {
    Perfection perfection;
    Structure structure;
    Shape shape;
    // D<n>, DD<n> or T2(a|b|c); present only for compound squares.
    std::optional<std::string> type_code;

    bool operator==(const Classification&) const = default;
};

// Perfection by size-multiset distinctness, structure via subrectangle
// search, type codes per the deficient-square taxonomy. Throws InvalidTiling.
Classification classify(const Dissection& d);

std::string to_string(const Classification& c);

}  // namespace sqsq

#endif
