#include <doctest.h>

#include "sqsq/bouwkamp.hpp"
#include "sqsq/errors.hpp"
#include "sqsq/geometry.hpp"

using namespace sqsq;

namespace {

// Moron's 33 x 32 rectangle, a simple perfect classic.
Dissection moron33x32() {
    Dissection d{33, 32,
                 {{0, 0, 18},
                  {18, 0, 15},
                  {18, 15, 7},
                  {25, 15, 8},
                  {0, 18, 14},
                  {14, 18, 4},
                  {14, 22, 10},
                  {24, 22, 1},
                  {24, 23, 9}}};
    d.normalize();
    return d;
}

const char* kWillcocks =
    "(81,56,38)(18,20)(55,16,3)(1,5,14)(4)(9)(39)(51,30)(29,31,64)(43,8)(35,2)(33)";

}  // namespace

TEST_CASE("validate_tiling accepts the classics") {
    CHECK(validate_tiling(moron33x32()).ok);
    const Dissection w = place_elements(parse_bouwkampcode(kWillcocks));
    const auto rep = validate_tiling(w);
    CHECK(rep.ok);
    CHECK(w.order() == 24);
    CHECK(w.width == 175);
    CHECK(w.height == 175);
}

TEST_CASE("validate_tiling reports overlaps") {
    Dissection d{2, 1, {{0, 0, 1}, {0, 0, 1}}};
    const auto rep = validate_tiling(d);
    CHECK_FALSE(rep.ok);
    bool overlap = false;
    for (const auto& v : rep.violations) {
        if (v.kind == Violation::Kind::Overlap) {
            overlap = true;
            CHECK(v.elements == std::vector<int>{0, 1});
        }
    }
    CHECK(overlap);
}

TEST_CASE("validate_tiling reports gaps and area mismatches") {
    Dissection d{2, 1, {{0, 0, 1}}};
    const auto rep = validate_tiling(d);
    CHECK_FALSE(rep.ok);
    bool gap = false, area = false;
    for (const auto& v : rep.violations) {
        gap |= v.kind == Violation::Kind::Gap;
        area |= v.kind == Violation::Kind::AreaMismatch;
    }
    CHECK(gap);
    CHECK(area);
}

TEST_CASE("validate_tiling reports out-of-bounds elements") {
    Dissection d{2, 2, {{0, 0, 2}, {1, 1, 2}}};
    const auto rep = validate_tiling(d);
    CHECK_FALSE(rep.ok);
    bool oob = false;
    for (const auto& v : rep.violations) oob |= v.kind == Violation::Kind::OutOfBounds;
    CHECK(oob);
}

TEST_CASE("transform is a group action") {
    const Dissection d = moron33x32();
    CHECK(transform(d, kIdentity) == d);
    for (Symmetry a = 0; a < kSymmetryCount; ++a) {
        for (Symmetry b = 0; b < kSymmetryCount; ++b) {
            CHECK(transform(transform(d, b), a) == transform(d, compose(a, b)));
        }
        CHECK(transform(transform(d, a), inverse(a)) == d);
        CHECK(validate_tiling(transform(d, a)).ok);
    }
}

TEST_CASE("90 degree rotation swaps oblong dimensions") {
    const Dissection d = moron33x32();
    const Dissection r = transform(d, 1);
    CHECK(r.width == 32);
    CHECK(r.height == 33);
    CHECK(validate_tiling(r).ok);
}

TEST_CASE("classify is invariant under the square symmetries") {
    const Dissection w = place_elements(parse_bouwkampcode(kWillcocks));
    const Classification base = classify(w);
    for (Symmetry s = 1; s < kSymmetryCount; ++s) CHECK(classify(transform(w, s)) == base);
}

TEST_CASE("simple perfect rectangles have no subrectangles") {
    CHECK(find_subrectangles(moron33x32()).empty());
    const Classification c = classify(moron33x32());
    CHECK(c.perfection == Perfection::Perfect);
    CHECK(c.structure == Structure::Simple);
    CHECK(c.shape == Shape::Oblong);
    CHECK_FALSE(c.type_code.has_value());
}

TEST_CASE("Willcocks 24:175a: one 13-member subrectangle, type D11") {
    const Dissection w = place_elements(parse_bouwkampcode(kWillcocks));
    const auto regions = find_subrectangles(w);
    REQUIRE(regions.size() == 1);
    CHECK(regions[0].members.size() == 13);
    CHECK(regions[0].maximal);
    const Coord a = regions[0].w, b = regions[0].h;
    CHECK(std::minmax(a, b) == std::minmax<Coord>(94, 111));

    const Classification c = classify(w);
    CHECK(c.perfection == Perfection::Perfect);
    CHECK(c.structure == Structure::Compound);
    CHECK(c.shape == Shape::Square);
    CHECK(c.type_code == "D11");
}

TEST_CASE("imperfect classification: the 15x11 worked-example rectangle") {
    const Dissection d = place_elements(parse_bouwkampcode("(6,4,5)(3,1)(6)(5,1)(4)"));
    CHECK(d.width == 15);
    CHECK(d.height == 11);
    const Classification c = classify(d);
    CHECK(c.perfection == Perfection::Imperfect);
    CHECK(c.shape == Shape::Oblong);
}

TEST_CASE("reorient_region round trips and rejects bad selectors") {
    const Dissection w = place_elements(parse_bouwkampcode(kWillcocks));
    const auto regions = find_subrectangles(w);
    REQUIRE(regions.size() == 1);
    const auto& reg = regions[0];
    for (Symmetry s : slot_symmetries(reg.w, reg.h)) {
        const Dissection turned = reorient_region(w, reg, s);
        CHECK(validate_tiling(turned).ok);
        // applying the same Klein-group element again restores the original
        const auto regions2 = find_subrectangles(turned);
        REQUIRE(regions2.size() == 1);
        CHECK(reorient_region(turned, regions2[0], s) == w);
    }
    CHECK_THROWS_AS(reorient_region(w, reg, 1), BadSelector);  // 90 degrees in an oblong slot
}

TEST_CASE("find_subrectangles commutes with transforms") {
    const Dissection w = place_elements(parse_bouwkampcode(kWillcocks));
    const auto base = find_subrectangles(w);
    for (Symmetry s = 0; s < kSymmetryCount; ++s) {
        const Dissection t = transform(w, s);
        const auto turned = find_subrectangles(t);
        REQUIRE(turned.size() == base.size());
        // compare as sets of (geometry, member count)
        auto key = [](const SubrectangleRegion& r, const Dissection& host) {
            Dissection inner{r.w, r.h, {}};
            for (int k : r.members) {
                const Element& e = host.elements[k];
                inner.elements.push_back({e.x - r.x, e.y - r.y, e.size});
            }
            inner.normalize();
            return inner;
        };
        for (const auto& r : base) {
            // the transformed region contents must appear among the turned ones
            bool matched = false;
            for (const auto& q : turned) {
                if (q.members.size() != r.members.size()) continue;
                Dissection a = key(r, w);
                Dissection b = key(q, t);
                for (Symmetry s2 = 0; s2 < kSymmetryCount && !matched; ++s2)
                    matched = transform(a, s2) == b;
                if (matched) break;
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("operations demand valid tilings") {
    Dissection bad{2, 1, {{0, 0, 1}}};
    CHECK_THROWS_AS(find_subrectangles(bad), InvalidTiling);
    CHECK_THROWS_AS(classify(bad), InvalidTiling);
}
