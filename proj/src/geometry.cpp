#include "sqsq/geometry.hpp"

#include <algorithm>

#include "sqsq/errors.hpp"

namespace sqsq {

void Dissection::normalize() {
    std::sort(elements.begin(), elements.end(),
              [](const Element& a, const Element& b) {
                  return a.y != b.y ? a.y < b.y : a.x < b.x;
              });
}

ValidationReport validate_tiling(const Dissection& d) {
    ValidationReport rep;
    if (d.width < 1 || d.height < 1) {
        rep.violations.push_back({Violation::Kind::AreaMismatch, {}, "empty rectangle"});
        return rep;
    }
    const int n = d.order();
    Coord area = 0;
    for (int i = 0; i < n; ++i) {
        const Element& e = d.elements[i];
        if (e.size < 1 || e.x < 0 || e.y < 0 || e.right() > d.width || e.bottom() > d.height) {
            rep.violations.push_back({Violation::Kind::OutOfBounds, {i}, "element outside rectangle"});
        }
        area += e.size * e.size;
    }
    bool overlap = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Element &a = d.elements[i], &b = d.elements[j];
            if (a.x < b.right() && b.x < a.right() && a.y < b.bottom() && b.y < a.bottom()) {
                rep.violations.push_back({Violation::Kind::Overlap, {i, j}, "elements overlap"});
                overlap = true;
            }
        }
    }
    if (area != d.width * d.height) {
        rep.violations.push_back({Violation::Kind::AreaMismatch, {},
                                  "element area " + std::to_string(area) + " != " +
                                      std::to_string(d.width * d.height)});
        // In-bounds disjoint squares can only under-fill, never over-fill.
        if (area < d.width * d.height && !overlap) {
            rep.violations.push_back({Violation::Kind::Gap, {}, "uncovered cells remain"});
        }
    }
    if (n < 2) {
        rep.violations.push_back({Violation::Kind::AreaMismatch, {}, "order must be >= 2"});
    }
    rep.ok = rep.violations.empty();
    return rep;
}

void require_valid(const Dissection& d) {
    if (!validate_tiling(d).ok) throw InvalidTiling("operation requires a valid tiling");
}

std::vector<SubrectangleRegion> find_subrectangles(const Dissection& d) {
    require_valid(d);
    const int n = d.order();
    std::vector<Coord> rights, bottoms;
    rights.reserve(n);
    bottoms.reserve(n);
    for (const Element& e : d.elements) {
        rights.push_back(e.right());
        bottoms.push_back(e.bottom());
    }
    std::sort(rights.begin(), rights.end());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    std::sort(bottoms.begin(), bottoms.end());
    bottoms.erase(std::unique(bottoms.begin(), bottoms.end()), bottoms.end());

    std::vector<SubrectangleRegion> out;
    const Coord total = d.width * d.height;
    // A qualifying region's top-left corner is the top-left corner of some
    // element, so elements serve as seeds.
    for (int seed = 0; seed < n; ++seed) {
        const Coord x1 = d.elements[seed].x;
        const Coord y1 = d.elements[seed].y;
        for (Coord x2 : rights) {
            if (x2 <= x1) continue;
            for (Coord y2 : bottoms) {
                if (y2 <= y1) continue;
                const Coord rarea = (x2 - x1) * (y2 - y1);
                if (rarea >= total) continue;
                SubrectangleRegion r{x1, y1, x2 - x1, y2 - y1, {}, false};
                Coord covered = 0;
                bool ok = true;
                for (int k = 0; k < n; ++k) {
                    const Element& e = d.elements[k];
                    if (e.x < x2 && x1 < e.right() && e.y < y2 && y1 < e.bottom()) {
                        if (e.x >= x1 && e.y >= y1 && e.right() <= x2 && e.bottom() <= y2) {
                            r.members.push_back(k);
                            covered += e.size * e.size;
                        } else {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok && r.members.size() >= 2 && covered == rarea) out.push_back(std::move(r));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SubrectangleRegion& a, const SubrectangleRegion& b) {
        if (a.y != b.y) return a.y < b.y;
        if (a.x != b.x) return a.x < b.x;
        if (a.w != b.w) return a.w < b.w;
        return a.h < b.h;
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        SubrectangleRegion& r = out[i];
        r.maximal = std::none_of(out.begin(), out.end(), [&](const SubrectangleRegion& q) {
            if (&q == &r) return false;
            return q.x <= r.x && q.y <= r.y && q.x + q.w >= r.x + r.w && q.y + q.h >= r.y + r.h;
        });
    }
    return out;
}

namespace {

// Maps a point of a w x h box under symmetry s, together with the box dims.
// s%4 clockwise quarter turns after an optional horizontal mirror (s >= 4).
Element map_element(const Element& e, Coord w, Coord h, Symmetry s) {
    Element r = e;
    if (s >= 4) r.x = w - r.x - r.size;
    for (int k = 0; k < s % 4; ++k) {
        const Coord nx = h - r.y - r.size;
        r.y = r.x;
        r.x = nx;
        std::swap(w, h);
    }
    return r;
}

}  // namespace

namespace {

// Composition table built once by acting on an asymmetric probe inside a
// square box; immune to convention slips in map_element.
struct ComposeTable {
    int t[8][8];
    ComposeTable() {
        const Element p{0, 0, 1}, q{1, 0, 1};
        auto image = [](const Element& e, Symmetry s) { return map_element(e, 5, 5, s); };
        for (Symmetry a = 0; a < 8; ++a) {
            for (Symmetry b = 0; b < 8; ++b) {
                const Element pp = image(image(p, b), a);
                const Element qq = image(image(q, b), a);
                t[a][b] = -1;
                for (Symmetry c = 0; c < 8; ++c) {
                    if (image(p, c) == pp && image(q, c) == qq) {
                        t[a][b] = c;
                        break;
                    }
                }
            }
        }
    }
};

}  // namespace

Symmetry compose(Symmetry a, Symmetry b) {
    static const ComposeTable table;
    return table.t[a][b];
}

Symmetry inverse(Symmetry s) {
    for (Symmetry t = 0; t < kSymmetryCount; ++t) {
        if (compose(t, s) == kIdentity) return t;
    }
    return kIdentity;
}

Dissection transform(const Dissection& d, Symmetry s) {
    Dissection r;
    r.width = (s % 2 == 0) ? d.width : d.height;
    r.height = (s % 2 == 0) ? d.height : d.width;
    r.elements.reserve(d.elements.size());
    for (const Element& e : d.elements) r.elements.push_back(map_element(e, d.width, d.height, s));
    r.normalize();
    return r;
}

std::vector<Symmetry> slot_symmetries(Coord w, Coord h) {
    if (w == h) return {0, 1, 2, 3, 4, 5, 6, 7};
    return {0, 2, 4, 6};
}

Dissection reorient_region(const Dissection& d, const SubrectangleRegion& region, Symmetry sym) {
    Dissection inner{region.w, region.h, {}};
    std::vector<char> member(d.elements.size(), 0);
    for (int k : region.members) {
        member[k] = 1;
        const Element& e = d.elements[k];
        inner.elements.push_back({e.x - region.x, e.y - region.y, e.size});
    }
    Dissection turned = transform(inner, sym);
    if (turned.width != region.w || turned.height != region.h) {
        throw BadSelector("orientation does not fit the subrectangle slot");
    }
    Dissection out{d.width, d.height, {}};
    for (std::size_t k = 0; k < d.elements.size(); ++k) {
        if (!member[k]) out.elements.push_back(d.elements[k]);
    }
    for (const Element& e : turned.elements) {
        out.elements.push_back({e.x + region.x, e.y + region.y, e.size});
    }
    out.normalize();
    return out;
}

namespace {

bool members_disjoint(const SubrectangleRegion& a, const SubrectangleRegion& b) {
    std::size_t i = 0, j = 0;
    while (i < a.members.size() && j < b.members.size()) {
        if (a.members[i] == b.members[j]) return false;
        (a.members[i] < b.members[j]) ? ++i : ++j;
    }
    return true;
}

// A rectangle region counts as trivially compound when its members are a
// nested subrectangle's members plus exactly one element.
bool trivially_compound(const SubrectangleRegion& r, const std::vector<SubrectangleRegion>& all) {
    for (const SubrectangleRegion& q : all) {
        if (&q == &r) continue;
        if (q.x < r.x || q.y < r.y || q.x + q.w > r.x + r.w || q.y + q.h > r.y + r.h) continue;
        if (q.members.size() + 1 != r.members.size()) continue;
        if (std::includes(r.members.begin(), r.members.end(), q.members.begin(), q.members.end()))
            return true;
    }
    return false;
}

}  // namespace

Classification classify(const Dissection& d) {
    require_valid(d);
    Classification c{};
    std::vector<Coord> sizes;
    sizes.reserve(d.elements.size());
    for (const Element& e : d.elements) sizes.push_back(e.size);
    std::sort(sizes.begin(), sizes.end());
    c.perfection = std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end()
                       ? Perfection::Perfect
                       : Perfection::Imperfect;
    c.shape = d.is_square() ? Shape::Square : Shape::Oblong;
    const auto regions = find_subrectangles(d);
    c.structure = regions.empty() ? Structure::Simple : Structure::Compound;
    if (c.structure == Structure::Compound && c.shape == Shape::Square) {
        std::vector<const SubrectangleRegion*> maximal;
        for (const auto& r : regions)
            if (r.maximal) maximal.push_back(&r);
        const int n = d.order();
        if (maximal.size() == 1) {
            c.type_code = "D" + std::to_string(n - static_cast<int>(maximal[0]->members.size()));
        } else if (maximal.size() == 2 && members_disjoint(*maximal[0], *maximal[1])) {
            const int inside = static_cast<int>(maximal[0]->members.size() + maximal[1]->members.size());
            if (inside == n) {
                int trivials = 0;
                for (const auto* r : maximal)
                    if (trivially_compound(*r, regions)) ++trivials;
                c.type_code = std::string("T2(") + static_cast<char>('a' + trivials) + ")";
            } else {
                c.type_code = "DD" + std::to_string(n - inside);
            }
        }
    }
    return c;
}

std::string to_string(const Classification& c) {
    std::string s;
    s += (c.structure == Structure::Simple) ? "simple" : "compound";
    s += (c.perfection == Perfection::Perfect) ? " perfect" : " imperfect";
    s += (c.shape == Shape::Square) ? " square" : " oblong";
    if (c.type_code) s += " " + *c.type_code;
    return s;
}

}  // namespace sqsq
