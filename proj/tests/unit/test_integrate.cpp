#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "conirep/integrate.hpp"
#include "conirep/region.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conirep;
using conirep::check::vec;

namespace {

OrthonormalBasis basis_of(std::vector<Vector> rays) { return gram_schmidt(rays); }

OrthonormalBasis empty_basis(std::size_t m) {
    const std::vector<Vector> none;
    return element_basis(none, m);
}

Vector random_vector(std::mt19937& rng, Eigen::Index m, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    Vector v(m);
    for (Eigen::Index i = 0; i < m; ++i) v(i) = u(rng);
    return v;
}

}  // namespace

TEST(SquaredDistance, Examples) {
    EXPECT_DOUBLE_EQ(squared_distance(vec({1, 1, 0}), basis_of({vec({1, 0, 0})})), 1.0);
    EXPECT_NEAR(squared_distance(vec({2, 2, 2}), basis_of({vec({1, 1, 1})})), 0.0, 1e-15);
    EXPECT_NEAR(squared_distance(vec({1, 0}), basis_of({vec({1, 1})})), 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(squared_distance(vec({3, 4}), empty_basis(2)), 25.0);
}

TEST(SimplexIntegral, SymbolicValues) {
    const Simplex unit = Simplex::from_vertices({vec({0, 0}), vec({1, 0}), vec({0, 1})});
    EXPECT_NEAR(simplex_integral(unit, empty_basis(2)), 1.0 / 6.0, 1e-12);
    const Simplex upper = Simplex::from_vertices({vec({0, 0}), vec({1, 1}), vec({0, 1})});
    EXPECT_NEAR(simplex_integral(upper, basis_of({vec({1, 1})})), 1.0 / 24.0, 1e-12);
}

TEST(SimplexIntegral, VanishesOnTheSpan) {
    const Simplex flat_in_span =
        Simplex::from_vertices({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})});
    EXPECT_EQ(simplex_integral(flat_in_span, basis_of({vec({1, 0, 0}), vec({0, 1, 0})})), 0.0);
    const Simplex s = Simplex::from_vertices({vec({0, 0}), vec({1, 0}), vec({0, 1})});
    EXPECT_NEAR(simplex_integral(s, basis_of({vec({1, 0}), vec({0, 1})})), 0.0, 1e-16);
}

TEST(SimplexIntegral, MatchesCollapsedGaussRule) {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index m = 2 + trial % 3;
        std::vector<Vector> verts;
        for (Eigen::Index k = 0; k <= m; ++k) verts.push_back(random_vector(rng, m, 0.0, 1.0));
        std::vector<Vector> rays;
        const int rank = trial % static_cast<int>(m);
        for (int k = 0; k < rank; ++k) rays.push_back(random_vector(rng, m, 0.0, 1.0));
        const OrthonormalBasis basis = element_basis(rays, static_cast<std::size_t>(m));
        const Simplex s = Simplex::from_vertices(verts);
        const double exact = simplex_integral(s, basis);
        const double quad = check::duffy_integral(verts, [&](const Eigen::VectorXd& p) {
            const Eigen::VectorXd r = p - basis.columns * (basis.columns.transpose() * p);
            return r.squaredNorm();
        });
        EXPECT_NEAR(exact, quad, 1e-12 * std::max(1.0, std::abs(quad))) << "trial " << trial;
    }
}

TEST(SimplexIntegral, AdditiveUnderStarSplit) {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index m = 2 + trial % 3;
        std::vector<Vector> verts;
        for (Eigen::Index k = 0; k <= m; ++k) verts.push_back(random_vector(rng, m, 0.0, 1.0));
        std::vector<double> w(static_cast<std::size_t>(m + 1));
        double wsum = 0.0;
        for (double& x : w) wsum += (x = u(rng));
        Vector inner = Vector::Zero(m);
        for (std::size_t k = 0; k < w.size(); ++k) inner += w[k] / wsum * verts[k];
        const OrthonormalBasis basis = basis_of({random_vector(rng, m, 0.0, 1.0)});
        const double whole = simplex_integral(Simplex::from_vertices(verts), basis);
        double parts = 0.0;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            std::vector<Vector> sub = verts;
            sub[k] = inner;
            parts += simplex_integral(Simplex::from_vertices(sub), basis);
        }
        EXPECT_NEAR(whole, parts, 1e-10);
    }
}

TEST(SimplexIntegral, NonNegative) {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 500; ++trial) {
        const Eigen::Index m = 2 + trial % 4;
        std::vector<Vector> verts;
        for (Eigen::Index k = 0; k <= m; ++k) verts.push_back(random_vector(rng, m, -1.0, 1.0));
        std::vector<Vector> rays;
        for (int k = 0; k < 1 + trial % static_cast<int>(m); ++k) rays.push_back(random_vector(rng, m, -1.0, 1.0));
        EXPECT_GE(simplex_integral(Simplex::from_vertices(verts), element_basis(rays, static_cast<std::size_t>(m))),
                  0.0);
    }
}

TEST(RegionIntegral, WedgeUncoveredTriangle) {
    const std::vector<Simplex> tri{Simplex::from_vertices({vec({0, 0}), vec({1, 1}), vec({0, 1})})};
    const std::vector<Vector> u1{vec({1, 1})};
    EXPECT_NEAR(region_integral(tri, u1), 1.0 / 24.0, 1e-12);
}

TEST(RegionIntegral, EmptyRegionIsZero) {
    const RegionPolytope empty;
    const std::vector<Vector> rays{vec({1, 0})};
    EXPECT_EQ(region_integral(empty, rays), 0.0);
}

TEST(RegionIntegral, FullCubeAgainstApex) {
    std::vector<Vector> pts;
    for (int b = 0; b < 8; ++b) pts.push_back(vec({double(b & 1), double((b >> 1) & 1), double((b >> 2) & 1)}));
    const auto simplices = triangulate_polytope(polytope_facets(pts), pts);
    const std::vector<Vector> none;
    EXPECT_NEAR(region_integral(simplices, none), 1.0, 1e-12);
}
