#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "conirep/hull.hpp"
#include "fixtures.hpp"

using namespace conirep;
using conirep::check::vec;

namespace {

void expect_supporting(const ConvexHull& hull, const std::vector<Vector>& pts) {
    for (const HullFacet& f : hull.facets) {
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const double d = f.signed_distance(pts[k]);
            EXPECT_LE(d, 1e-9);
            if (f.contains(k)) EXPECT_NEAR(d, 0.0, 1e-9);
        }
    }
}

}  // namespace

TEST(ConvexHull, UnitSquareHasFourEdges) {
    const std::vector<Vector> pts{vec({0, 0}), vec({1, 0}), vec({1, 1}), vec({0, 1})};
    const ConvexHull hull = convex_hull(pts);
    EXPECT_TRUE(hull.full_dimensional);
    EXPECT_EQ(hull.facets.size(), 4u);
    expect_supporting(hull, pts);
}

TEST(ConvexHull, TriangleHasThreeEdges) {
    const std::vector<Vector> pts{vec({0, 0}), vec({1, 1}), vec({0, 1})};
    const ConvexHull hull = convex_hull(pts);
    EXPECT_EQ(hull.facets.size(), 3u);
    expect_supporting(hull, pts);
}

TEST(ConvexHull, UnitCubeHasSixMergedFaces) {
    std::vector<Vector> pts;
    for (int b = 0; b < 8; ++b) pts.push_back(vec({double(b & 1), double((b >> 1) & 1), double((b >> 2) & 1)}));
    const ConvexHull hull = convex_hull(pts);
    ASSERT_EQ(hull.facets.size(), 6u);
    for (const HullFacet& f : hull.facets) EXPECT_EQ(f.vertices.size(), 4u);
    expect_supporting(hull, pts);
}

TEST(ConvexHull, InteriorPointsAreNotVertices) {
    std::vector<Vector> pts{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0.1, 0.1, 0.1})};
    const ConvexHull hull = convex_hull(pts);
    EXPECT_EQ(hull.facets.size(), 4u);
    for (const HullFacet& f : hull.facets) EXPECT_FALSE(f.contains(4));
}

TEST(ConvexHull, HypercubeIn4D) {
    std::vector<Vector> pts;
    for (int b = 0; b < 16; ++b) {
        Vector p(4);
        for (int i = 0; i < 4; ++i) p(i) = (b >> i) & 1;
        pts.push_back(p);
    }
    const ConvexHull hull = convex_hull(pts);
    EXPECT_EQ(hull.facets.size(), 8u);
    expect_supporting(hull, pts);
}

TEST(ConvexHull, FlatInputIsNotFullDimensional) {
    const std::vector<Vector> pts{vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})};
    EXPECT_FALSE(convex_hull(pts).full_dimensional);
}
