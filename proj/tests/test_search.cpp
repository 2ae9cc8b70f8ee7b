#include "bellunc/search.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bellunc/errors.hpp"

namespace {

using namespace bellunc;
using namespace bellunc::search;

constexpr double kPi = std::numbers::pi;
double deg(double d) { return d * kPi / 180.0; }

const ParameterSpace kPlanar = ParameterSpace::standard(SpaceKind::PlanarEpr);
const ParameterSpace kGhz = ParameterSpace::standard(SpaceKind::GhzAngles);
const ParameterSpace kVectors = ParameterSpace::standard(SpaceKind::Vectors3d);

double ghz_df_at_published_point() {
    return ghz_closed_form({deg(45)}, {deg(60)}, {deg(120)}, {deg(150)}, Mode::DispersionFree).margin;
}

TEST(SpaceKind, Names) {
    for (auto k : {SpaceKind::PlanarEpr, SpaceKind::GhzAngles, SpaceKind::Vectors3d})
        EXPECT_EQ(parse_space_kind(to_string(k)), k);
    EXPECT_EQ(parse_space_kind("planar_epr"), SpaceKind::PlanarEpr);
    EXPECT_FALSE(parse_space_kind("cube").has_value());
}

TEST(ParameterSpace, StandardShapes) {
    EXPECT_EQ(kPlanar.dimension(), 4u);
    EXPECT_EQ(kGhz.dimension(), 4u);
    EXPECT_EQ(kVectors.dimension(), 8u);
    EXPECT_TRUE(kVectors.bounds[1].pinned());
    EXPECT_FALSE(kVectors.bounds[0].periodic);
    EXPECT_TRUE(kVectors.bounds[3].periodic);
}

TEST(ParameterSpace, NormalizeWrapsAndClamps) {
    const auto p = kPlanar.normalize(std::vector<double>{-0.5, 2.0 * kPi, 7.0, 1.0});
    EXPECT_NEAR(p[0], 2.0 * kPi - 0.5, 1e-15);
    EXPECT_EQ(p[1], 0.0);
    EXPECT_NEAR(p[2], 7.0 - 2.0 * kPi, 1e-15);
    EXPECT_TRUE(kPlanar.contains(p));
    const auto v = kVectors.normalize(std::vector<double>{-1.0, 0.3, 4.0, 0, 0, 0, 0, 0});
    EXPECT_EQ(v[0], 0.0);
    EXPECT_EQ(v[1], 0.0);
    EXPECT_EQ(v[2], kPi);
    EXPECT_THROW(kPlanar.normalize(std::vector<double>{0, 0}), InputError);
}

TEST(Compatibility, StateSpecificIdsNeedTheirSpace) {
    EXPECT_THROW(check_compatible(InequalityId::GhzGeneral, SpaceKind::PlanarEpr), InputError);
    EXPECT_THROW(check_compatible(InequalityId::EprGeneral, SpaceKind::GhzAngles), InputError);
    EXPECT_NO_THROW(check_compatible(InequalityId::EprDispersionFree, SpaceKind::Vectors3d));
    EXPECT_NO_THROW(check_compatible(InequalityId::General, SpaceKind::GhzAngles));
}

TEST(Evaluate, GenericAndClosedFormAgreeOnEachSpace) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int i = 0; i < 300; ++i) {
        const std::vector<double> q{u(rng), u(rng), u(rng), u(rng)};
        EXPECT_NEAR(evaluate(InequalityId::General, kGhz, q).margin, evaluate(InequalityId::GhzGeneral, kGhz, q).margin,
                    1e-12);
        EXPECT_NEAR(evaluate(InequalityId::DispersionFree, kPlanar, q).margin,
                    evaluate(InequalityId::EprDispersionFree, kPlanar, q).margin, 1e-12);
        const std::vector<double> v{u(rng), 0.0, u(rng), 2 * u(rng), u(rng), 2 * u(rng), u(rng), 2 * u(rng)};
        EXPECT_NEAR(evaluate(InequalityId::General, kVectors, v).margin,
                    evaluate(InequalityId::EprGeneral, kVectors, v).margin, 1e-12);
    }
}

TEST(LatticeAxis, Shapes) {
    EXPECT_EQ(lattice_axis({0.0, 2.0 * kPi, true}, deg(15)).size(), 24u);
    EXPECT_EQ(lattice_axis({0.0, kPi, false}, deg(15)).size(), 13u);
    const auto closed = lattice_axis({0.0, kPi, false}, deg(15));
    EXPECT_EQ(closed.back(), kPi);
    EXPECT_EQ(lattice_axis({0.0, 0.0, false}, deg(15)).size(), 1u);
    EXPECT_THROW(lattice_axis({0.0, kPi, true}, deg(200)), InputError);
    EXPECT_THROW(lattice_axis({0.0, kPi, false}, 0.0), InputError);
    EXPECT_THROW(lattice_axis({0.0, kPi, false}, -1.0), InputError);
}

TEST(GridSearch, DispersionFreePlanarSupremumIsTwelve) {
    const auto r = grid_search(InequalityId::DispersionFree, kPlanar, deg(15));
    EXPECT_EQ(r.evaluations, 24u * 24u * 24u * 24u);
    EXPECT_NEAR(r.best_verdict.margin, 12.0, 1e-9);
    ASSERT_EQ(r.best_params.size(), 4u);
    EXPECT_EQ(r.best_params[0], 0.0);
    EXPECT_NEAR(r.best_params[1], kPi, 1e-12);
    EXPECT_EQ(r.best_params[2], 0.0);
    EXPECT_EQ(r.best_params[3], 0.0);
}

TEST(GridSearch, GhzDispersionFreeBeatsPublishedPoint) {
    const auto r = grid_search(InequalityId::GhzDispersionFree, kGhz, deg(15));
    EXPECT_GE(r.best_verdict.margin, ghz_df_at_published_point() - 1e-12);
    EXPECT_GE(r.best_verdict.margin, 1.7859);
}

TEST(GridSearch, NoViolationOfGeneralInequality) {
    for (auto id : {InequalityId::General, InequalityId::EprGeneral}) {
        const auto r = grid_search(id, kPlanar, deg(15));
        EXPECT_LE(r.best_verdict.margin, 1e-9);
        EXPECT_GE(r.best_verdict.margin, -1e-9);  // saturated at a = -b, c = d
    }
    for (auto id : {InequalityId::General, InequalityId::GhzGeneral}) {
        const auto r = grid_search(id, kGhz, deg(15));
        EXPECT_LE(r.best_verdict.margin, 1e-9);
    }
}

TEST(GridSearch, ResultIndependentOfThreadCount) {
    for (auto [id, space] : {std::pair{InequalityId::DispersionFree, kPlanar},
                             std::pair{InequalityId::GhzDispersionFree, kGhz},
                             std::pair{InequalityId::General, kPlanar}}) {
        const auto one = grid_search(id, space, deg(30), GridOptions{1});
        for (unsigned t : {2u, 3u, 4u, 7u}) {
            const auto many = grid_search(id, space, deg(30), GridOptions{t});
            EXPECT_EQ(many.best_params, one.best_params);
            EXPECT_EQ(many.best_verdict.margin, one.best_verdict.margin);
            EXPECT_EQ(many.evaluations, one.evaluations);
        }
    }
}

TEST(GridSearch, BestVerdictReevaluatesIdentically) {
    const auto r = grid_search(InequalityId::GhzDispersionFree, kGhz, deg(20));
    const auto again = evaluate(InequalityId::GhzDispersionFree, kGhz, r.best_params);
    EXPECT_EQ(again.lhs, r.best_verdict.lhs);
    EXPECT_EQ(again.rhs, r.best_verdict.rhs);
    EXPECT_EQ(again.margin, r.best_verdict.margin);
}

TEST(GridSearch, BestIsMaximumOverLatticeByBruteForce) {
    // Oracle: explicit nested loops over the same lattice.
    const auto axis = lattice_axis(kGhz.bounds[0], deg(30));
    double best = -INFINITY;
    for (double a : axis)
        for (double b : axis)
            for (double c : axis)
                for (double d : axis)
                    best = std::max(best, ghz_closed_form({a}, {b}, {c}, {d}, Mode::DispersionFree).margin);
    const auto r = grid_search(InequalityId::GhzDispersionFree, kGhz, deg(30));
    EXPECT_NEAR(r.best_verdict.margin, best, 1e-12);
}

TEST(GridSearch, RejectsBadInput) {
    EXPECT_THROW(grid_search(InequalityId::GhzGeneral, kPlanar, deg(15)), InputError);
    EXPECT_THROW(grid_search(InequalityId::General, kPlanar, 0.0), InputError);
    EXPECT_THROW(grid_search(InequalityId::General, kGhz, deg(181)), InputError);
    EXPECT_THROW(grid_search(InequalityId::General, kPlanar, 1e-6), InputError);  // too many points
}

TEST(Refine, ImprovesPerturbedGhzPoint) {
    const std::vector<double> start{deg(44), deg(61), deg(119), deg(151)};
    const double start_margin = evaluate(InequalityId::GhzDispersionFree, kGhz, start).margin;
    const auto r = refine(InequalityId::GhzDispersionFree, kGhz, start, RefineOptions{deg(2)});
    EXPECT_GE(r.best_verdict.margin, start_margin);
    EXPECT_GE(r.best_verdict.margin, ghz_df_at_published_point());
    EXPECT_LE(r.resolution, 1e-9);
    // Dense-sampling oracle: no point on a fine local lattice beats the result.
    double local = -INFINITY;
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j)
            for (int k = -4; k <= 4; ++k)
                for (int l = -4; l <= 4; ++l) {
                    const std::vector<double> p{r.best_params[0] + 1e-3 * i, r.best_params[1] + 1e-3 * j,
                                                r.best_params[2] + 1e-3 * k, r.best_params[3] + 1e-3 * l};
                    local = std::max(local, evaluate(InequalityId::GhzDispersionFree, kGhz, kGhz.normalize(p)).margin);
                }
    EXPECT_GE(r.best_verdict.margin, local - 1e-9);
}

TEST(Refine, NeverWorsensStart) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int i = 0; i < 50; ++i) {
        const std::vector<double> start{u(rng), u(rng), u(rng), u(rng)};
        for (auto id : {InequalityId::GhzDispersionFree, InequalityId::GhzGeneral, InequalityId::General}) {
            const double m0 = evaluate(id, kGhz, start).margin;
            const auto r = refine(id, kGhz, start, RefineOptions{deg(5), 0.5, 1e-6});
            EXPECT_GE(r.best_verdict.margin, m0);
            if (id != InequalityId::GhzDispersionFree) EXPECT_LE(r.best_verdict.margin, 1e-9);
            EXPECT_TRUE(kGhz.contains(r.best_params));
        }
    }
}

TEST(Refine, MinStepAtLeastInitialReturnsStart) {
    const std::vector<double> start{0.1, 0.2, 0.3, 0.4};
    const auto r = refine(InequalityId::GhzDispersionFree, kGhz, start, RefineOptions{0.01, 0.5, 0.01});
    EXPECT_EQ(r.best_params, start);
    EXPECT_EQ(r.evaluations, 1u);
}

TEST(Refine, RejectsInvalidParameters) {
    const std::vector<double> start{0.1, 0.2, 0.3, 0.4};
    EXPECT_THROW(refine(InequalityId::General, kGhz, start, RefineOptions{0.0}), InputError);
    EXPECT_THROW(refine(InequalityId::General, kGhz, start, RefineOptions{0.1, 1.0}), InputError);
    EXPECT_THROW(refine(InequalityId::General, kGhz, start, RefineOptions{0.1, 0.0}), InputError);
    EXPECT_THROW(refine(InequalityId::General, kGhz, start, RefineOptions{0.1, 0.5, 0.0}), InputError);
    EXPECT_THROW(refine(InequalityId::General, kGhz, std::vector<double>{4.0, 0, 0, 0}, RefineOptions{0.1}),
                 InputError);
}

TEST(Sweep, GhzGeneralOverDeltaNeverViolates) {
    const std::vector<double> base{deg(45), deg(60), deg(120), deg(150)};
    const auto s = sweep(InequalityId::GhzGeneral, kGhz, base, 3, 0.0, kPi, 721);
    ASSERT_EQ(s.size(), 721u);
    EXPECT_EQ(s.front().coord, 0.0);
    EXPECT_EQ(s.back().coord, kPi);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_LE(s[i].margin, 1e-9);
        EXPECT_EQ(s[i].margin, s[i].lhs - s[i].rhs);
        if (i) EXPECT_GT(s[i].coord, s[i - 1].coord);
    }
}

TEST(Sweep, FullPeriodEndsMatch) {
    const std::vector<double> base{0.3, 1.1, 2.0, 0.7};
    const auto g = sweep(InequalityId::GhzDispersionFree, kGhz, base, 1, 0.0, kPi, 50);
    EXPECT_NEAR(g.front().margin, g.back().margin, 1e-9);
    const auto p = sweep(InequalityId::DispersionFree, kPlanar, base, 2, 0.0, 2.0 * kPi, 50);
    EXPECT_NEAR(p.front().margin, p.back().margin, 1e-9);
}

TEST(Sweep, EprDispersionFreeOverCPeaksAtZero) {
    const std::vector<double> base{0.0, kPi, 0.0, 0.0};
    const auto s = sweep(InequalityId::EprDispersionFree, kPlanar, base, 2, 0.0, 2.0 * kPi, 361);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].margin > s[arg].margin) arg = i;
    EXPECT_EQ(arg, 0u);
    EXPECT_NEAR(s[arg].margin, 12.0, 1e-12);
}

TEST(Sweep, RejectsBadInput) {
    const std::vector<double> base{0.0, 0.0, 0.0, 0.0};
    EXPECT_THROW(sweep(InequalityId::General, kGhz, base, 4, 0.0, 1.0, 10), InputError);
    EXPECT_THROW(sweep(InequalityId::General, kGhz, base, 0, 0.0, 1.0, 1), InputError);
    EXPECT_THROW(sweep(InequalityId::General, kGhz, base, 0, 0.0, NAN, 10), InputError);
    EXPECT_THROW(sweep(InequalityId::General, kGhz, std::vector<double>{0.0}, 0, 0.0, 1.0, 10), InputError);
    EXPECT_THROW(sweep(InequalityId::EprGeneral, kGhz, base, 0, 0.0, 1.0, 10), InputError);
}

}  // namespace
