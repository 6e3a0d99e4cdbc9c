#include "sqsq/bouwkamp.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <deque>
#include <map>

#include "sqsq/errors.hpp"

namespace sqsq {

bool ExtendedFields::any() const {
    return order || width || height || id || isomer_count || type_code || discoverer || years ||
           !extra.empty();
}

int BouwkampCode::element_count() const {
    int n = 0;
    for (const auto& g : groups) n += static_cast<int>(g.size());
    return n;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n'))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Coord integer() {
        skip_ws();
        Coord value = 0;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
        if (ec != std::errc() || p == s.data() + pos) throw ParseError(pos, "expected an integer");
        pos = static_cast<std::size_t>(p - s.data());
        return value;
    }
};

}  // namespace

ExtendedFields parse_metadata_comment(std::string_view meta) {
    ExtendedFields out;
    std::size_t i = 0;
    while (i < meta.size()) {
        while (i < meta.size() && std::isspace(static_cast<unsigned char>(meta[i]))) ++i;
        std::size_t j = i;
        while (j < meta.size() && !std::isspace(static_cast<unsigned char>(meta[j]))) ++j;
        if (j == i) break;
        std::string_view tok = meta.substr(i, j - i);
        i = j;
        auto eq = tok.find('=');
        if (eq == std::string_view::npos) continue;  // stray word, keep going
        std::string key(tok.substr(0, eq));
        std::string val(tok.substr(eq + 1));
        if (key == "id") out.id = val;
        else if (key == "order") out.order = std::stoi(val);
        else if (key == "width") out.width = std::stoll(val);
        else if (key == "height") out.height = std::stoll(val);
        else if (key == "isomers") out.isomer_count = std::stoi(val);
        else if (key == "type") out.type_code = val;
        else if (key == "discoverer") out.discoverer = val;
        else if (key == "years") out.years = val;
        else out.extra[key] = val;
    }
    return out;
}

BouwkampCode parse_bouwkampcode(std::string_view text) {
    BouwkampCode code;
    std::string_view body = text;
    if (auto hash = text.find('#'); hash != std::string_view::npos) {
        body = text.substr(0, hash);
        code.extended = parse_metadata_comment(text.substr(hash + 1));
    }
    Scanner sc{body};
    // Optional "order width height" prefix before the first parenthesis.
    std::vector<Coord> prefix;
    while (sc.peek() != '(' && !sc.eof()) {
        if (!std::isdigit(static_cast<unsigned char>(sc.peek())))
            throw ParseError(sc.pos, "expected '(' or integer");
        prefix.push_back(sc.integer());
        if (prefix.size() > 3) throw ParseError(sc.pos, "more than three integers before first group");
    }
    if (!prefix.empty()) {
        if (prefix.size() != 3)
            throw ParseError(sc.pos, "prefix must be exactly 'order width height'");
        code.extended.order = static_cast<int>(prefix[0]);
        code.extended.width = prefix[1];
        code.extended.height = prefix[2];
    }
    while (!sc.eof()) {
        if (!sc.accept('(')) throw ParseError(sc.pos, "expected '('");
        std::vector<Coord> group;
        for (;;) {
            const std::size_t at = sc.pos;
            const Coord v = sc.integer();
            if (v <= 0) throw ParseError(at, "element sizes must be positive");
            group.push_back(v);
            if (sc.accept(',')) continue;
            if (sc.accept(')')) break;
            throw ParseError(sc.pos, "expected ',' or ')'");
        }
        code.groups.push_back(std::move(group));
    }
    if (code.groups.empty()) throw ParseError(sc.pos, "no element groups");
    if (code.extended.order && *code.extended.order != code.element_count())
        throw ParseError(0, "declared order does not match element count");
    return code;
}

std::string Tablecode::text() const {
    std::string s = std::to_string(order) + " " + std::to_string(width) + " " + std::to_string(height);
    for (Coord v : sizes) {
        s += ' ';
        s += std::to_string(v);
    }
    return s;
}

Tablecode parse_tablecode(std::string_view text) {
    std::string_view body = text;
    if (auto hash = text.find('#'); hash != std::string_view::npos) body = text.substr(0, hash);
    Scanner sc{body};
    Tablecode tc;
    tc.order = static_cast<int>(sc.integer());
    tc.width = sc.integer();
    tc.height = sc.integer();
    while (!sc.eof()) {
        const std::size_t at = sc.pos;
        const Coord v = sc.integer();
        if (v <= 0) throw ParseError(at, "element sizes must be positive");
        tc.sizes.push_back(v);
    }
    if (static_cast<int>(tc.sizes.size()) != tc.order)
        throw ParseError(sc.pos, "element count does not match declared order");
    return tc;
}

namespace {

// Open skyline segment: [x0, x1) at depth y.
struct Segment {
    Coord x0, x1, y;
};

Dissection place_sequence(const std::vector<Coord>& sizes, Coord w, std::optional<Coord> height) {
    if (sizes.size() < 2) throw PlacementError("a dissection needs at least two elements");
    if (w <= 0) throw PlacementError("cannot infer a positive width");

    std::vector<Segment> sky{{0, w, 0}};
    Dissection d{w, 0, {}};
    for (Coord s : sizes) {
        // leftmost-highest: minimal depth, then minimal x
        std::size_t best = 0;
        for (std::size_t i = 1; i < sky.size(); ++i) {
            if (sky[i].y < sky[best].y || (sky[i].y == sky[best].y && sky[i].x0 < sky[best].x0))
                best = i;
        }
        Segment seg = sky[best];
        if (height && seg.y + s > *height)
            throw PlacementError("element " + std::to_string(s) + " exceeds the stated height");
        if (seg.x0 + s > seg.x1)
            throw PlacementError("element " + std::to_string(s) + " does not fit segment of width " +
                                 std::to_string(seg.x1 - seg.x0));
        d.elements.push_back({seg.x0, seg.y, s});
        Segment placed{seg.x0, seg.x0 + s, seg.y + s};
        sky.erase(sky.begin() + static_cast<std::ptrdiff_t>(best));
        if (placed.x1 < seg.x1) sky.push_back({placed.x1, seg.x1, seg.y});
        sky.push_back(placed);
        std::sort(sky.begin(), sky.end(), [](const Segment& a, const Segment& b) { return a.x0 < b.x0; });
        for (std::size_t i = 0; i + 1 < sky.size();) {
            if (sky[i].x1 == sky[i + 1].x0 && sky[i].y == sky[i + 1].y) {
                sky[i].x1 = sky[i + 1].x1;
                sky.erase(sky.begin() + static_cast<std::ptrdiff_t>(i + 1));
            } else {
                ++i;
            }
        }
    }
    // Completion: the skyline must be flat.
    for (const Segment& seg : sky) {
        if (seg.y != sky.front().y)
            throw PlacementError("leftover gap at completion (non-flat skyline)");
    }
    d.height = sky.front().y;
    if (height && d.height != *height) throw PlacementError("placed height does not match stated height");
    return d;
}

}  // namespace

Dissection place_elements(const BouwkampCode& code) {
    std::vector<Coord> sizes;
    for (const auto& g : code.groups) sizes.insert(sizes.end(), g.begin(), g.end());
    Coord width;
    if (code.extended.width) {
        width = *code.extended.width;
    } else {
        // Bouwkamp convention: the first group spans the full width.
        width = 0;
        for (Coord v : code.groups.front()) width += v;
    }
    Dissection d = place_sequence(sizes, width, code.extended.height);
    const auto rep = validate_tiling(d);
    if (!rep.ok) throw PlacementError("code places to an invalid tiling");
    return d;
}

Dissection place_elements(const Tablecode& code) {
    Dissection d = place_sequence(code.sizes, code.width, code.height);
    const auto rep = validate_tiling(d);
    if (!rep.ok) throw PlacementError("tablecode places to an invalid tiling");
    return d;
}

std::vector<std::vector<Coord>> bouwkamp_groups(const Dissection& d) {
    require_valid(d);
    // Reading order is (y, x); a group ends where adjacency along the common
    // top segment breaks. Elements meeting at a point stay merged.
    std::vector<Element> seq = d.elements;
    std::sort(seq.begin(), seq.end(), [](const Element& a, const Element& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::vector<std::vector<Coord>> groups;
    for (std::size_t i = 0; i < seq.size();) {
        std::vector<Coord> g{seq[i].size};
        std::size_t j = i + 1;
        while (j < seq.size() && seq[j].y == seq[i].y && seq[j].x == seq[j - 1].x + seq[j - 1].size) {
            g.push_back(seq[j].size);
            ++j;
        }
        groups.push_back(std::move(g));
        i = j;
    }
    return groups;
}

std::string emit_code(const Dissection& d) {
    std::string out;
    for (const auto& g : bouwkamp_groups(d)) {
        out += '(';
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(g[i]);
        }
        out += ')';
    }
    return out;
}

std::array<std::string, kSymmetryCount> emit_all_codes(const Dissection& d) {
    std::array<std::string, kSymmetryCount> out;
    for (Symmetry s = 0; s < kSymmetryCount; ++s) out[s] = emit_code(transform(d, s));
    return out;
}

Tablecode to_tablecode(const Dissection& d) {
    Tablecode tc;
    tc.order = d.order();
    tc.width = d.width;
    tc.height = d.height;
    for (const auto& g : bouwkamp_groups(d)) tc.sizes.insert(tc.sizes.end(), g.begin(), g.end());
    return tc;
}

std::string padded_key(const Dissection& d) {
    const std::string wdig = std::to_string(d.width);
    std::string key;
    key.reserve(d.elements.size() * wdig.size());
    std::vector<Element> seq = d.elements;
    std::sort(seq.begin(), seq.end(), [](const Element& a, const Element& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    for (const Element& e : seq) {
        std::string s = std::to_string(e.size);
        // Padding soundness (every size < 10^digits(width)): holds for any
        // in-bounds element; checked so lexicographic max stays numeric max.
        if (s.size() > wdig.size()) throw InvalidTiling("element size exceeds the width field");
        key.append(wdig.size() - s.size(), '0');
        key += s;
    }
    return key;
}

namespace {

// Orientations considered for canonical forms: all 8 for a square, only the
// 4 landscape-preserving images for an oblong (Bouwkamp records landscape).
std::vector<Symmetry> canonical_orientations(const Dissection& d) {
    if (d.is_square()) return {0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<Symmetry> out;
    for (Symmetry s = 0; s < kSymmetryCount; ++s) {
        const Coord w = (s % 2 == 0) ? d.width : d.height;
        if (w >= ((s % 2 == 0) ? d.height : d.width)) out.push_back(s);
    }
    return out;
}

}  // namespace

Dissection canonical_orientation(const Dissection& d) {
    require_valid(d);
    Dissection best;
    std::string best_key;
    for (Symmetry s : canonical_orientations(d)) {
        Dissection t = transform(d, s);
        std::string key = padded_key(t);
        if (best_key.empty() || key > best_key) {
            best_key = std::move(key);
            best = std::move(t);
        } else if (key == best_key) {
            // ties are vacuous: equal keys reconstruct to equal tilings
            assert(t == best);
        }
    }
    return best;
}

std::vector<Dissection> enumerate_isomers(const Dissection& d) {
    require_valid(d);
    // Closure under re-orienting any subrectangle region, including regions
    // that only appear in intermediate arrangements. States are identified
    // up to the outer symmetries via the canonical-orientation key.
    std::map<std::string, Dissection> seen;
    std::deque<const Dissection*> queue;  // std::map nodes are stable
    Dissection start = canonical_orientation(d);
    auto [it, _] = seen.emplace(padded_key(start), std::move(start));
    queue.push_back(&it->second);
    while (!queue.empty()) {
        const Dissection& cur = *queue.front();
        queue.pop_front();
        for (const SubrectangleRegion& reg : find_subrectangles(cur)) {
            for (Symmetry s : slot_symmetries(reg.w, reg.h)) {
                if (s == kIdentity) continue;
                Dissection next = reorient_region(cur, reg, s);
                Dissection canon = canonical_orientation(next);
                std::string key = padded_key(canon);
                auto [pos, inserted] = seen.emplace(std::move(key), std::move(canon));
                if (inserted) queue.push_back(&pos->second);
            }
        }
    }
    std::vector<Dissection> out;
    out.reserve(seen.size());
    for (auto it2 = seen.rbegin(); it2 != seen.rend(); ++it2) out.push_back(it2->second);
    return out;
}

CanonicalForm canonicalize(const Dissection& d) {
    std::vector<Dissection> isomers = enumerate_isomers(d);
    // enumerate_isomers sorts by descending key; the first is canonical.
    CanonicalForm cf{to_tablecode(isomers.front()), std::move(isomers.front())};
    return cf;
}

}  // namespace sqsq
