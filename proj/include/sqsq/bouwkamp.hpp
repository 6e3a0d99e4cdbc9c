#ifndef SQSQ_BOUWKAMP_HPP
#define SQSQ_BOUWKAMP_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqsq/geometry.hpp"

namespace sqsq {

// Optional catalog fields around a code: a leading "order width height"
// prefix and/or trailing "# key=value ..." metadata.
struct ExtendedFields {
    std::optional<int> order;
    std::optional<Coord> width;
    std::optional<Coord> height;
    std::optional<std::string> id;
    std::optional<int> isomer_count;
    std::optional<std::string> type_code;
    std::optional<std::string> discoverer;
    std::optional<std::string> years;
    std::map<std::string, std::string> extra;  // unknown keys, preserved verbatim

    bool any() const;
};

struct BouwkampCode {
    std::vector<std::vector<Coord>> groups;
    ExtendedFields extended;

    int element_count() const;
};

// Grammar: [order width height] "(" int ("," int)* ")"+ ["# key=value ..."]
// Whitespace is free between tokens. Throws ParseError with the offset.
BouwkampCode parse_bouwkampcode(std::string_view text);

// The "key=value ..." tail after a '#'; unknown keys land in extra.
ExtendedFields parse_metadata_comment(std::string_view meta);

// Tablecode with a whole line's worth of context.
struct Tablecode {
    int order = 0;
    Coord width = 0;
    Coord height = 0;
    std::vector<Coord> sizes;  // Bouwkampcode reading order

    std::string text() const;  // "order width height e1 e2 ... ek"
    bool operator==(const Tablecode&) const = default;
};

// "order width height e1..." line; trailing "# metadata" tolerated.
Tablecode parse_tablecode(std::string_view text);

// Skyline placement, element by element on the leftmost-highest segment.
// Dimensions are taken from extended fields when present, otherwise the
// width is the first group's sum and the height is discovered at completion.
// Crossed codes place identically whether the cross segment was merged or
// split. Throws PlacementError on anything that does not fit.
Dissection place_elements(const BouwkampCode& code);
Dissection place_elements(const Tablecode& code);

// Reading order of a placed dissection: groups of elements whose top sides
// share a maximal horizontal segment, top-to-bottom then left-to-right.
// Cross segments are merged (the unambiguous choice; tablecode equates both).
std::vector<std::vector<Coord>> bouwkamp_groups(const Dissection& d);

std::string emit_code(const Dissection& d);

// One Bouwkampcode per square symmetry orientation, indexed by Symmetry.
std::array<std::string, kSymmetryCount> emit_all_codes(const Dissection& d);

Tablecode to_tablecode(const Dissection& d);

// Element sizes zero-padded to the width field's digit count and
// concatenated; lexicographic order on these keys is numeric order.
std::string padded_key(const Dissection& d);

// Highest-key orientation of d alone: over all 8 symmetries for a square,
// over the 4 landscape ones for an oblong.
Dissection canonical_orientation(const Dissection& d);

// Every distinct member of the isomer class, one representative per class
// member up to the 8 square symmetries, each in its canonical orientation,
// sorted by descending padded key (so the canonical representative is
// first). Closure under re-orientation of any subrectangle region.
std::vector<Dissection> enumerate_isomers(const Dissection& d);

struct CanonicalForm {
    Tablecode tablecode;
    Dissection dissection;
};

// Canonical representative over the whole isomer class x orientations:
// the lexicographically highest padded tablecode. Idempotent.
CanonicalForm canonicalize(const Dissection& d);

}  // namespace sqsq

#endif
