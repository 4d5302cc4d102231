#include <gtest/gtest.h>

#include <random>

#include "mlab/meridians.hpp"

using namespace mlab;

namespace {

bool pm_equal(std::vector<int64_t> x, const std::vector<int64_t>& y)
{
    if (x == y) return true;
    for (auto& v : x) v = -v;
    return x == y;
}

std::vector<int64_t> comb(const std::vector<int64_t>& x, int s, const std::vector<int64_t>& y)
{
    std::vector<int64_t> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + s * y[i];
    return r;
}

struct Fixture {
    explicit Fixture(int g) : S(g) {}
    Surface S;
    CurveClass A(int i) const { return S.std_curve(StdKind::A, i); }
    CurveClass B(int i) const { return S.std_curve(StdKind::B, i); }
    CurveClass P(int i) const { return S.std_curve(StdKind::Petal, i); }
};

} // namespace

TEST(Join, PetalsGiveGroups)
{
    for (int g = 4; g <= 7; ++g) {
        Fixture f(g);
        auto& S = f.S;
        auto cur = f.P(1);
        for (int k = 2; k <= g - 2; ++k) {
            auto arc = connect_arc(S, cur, f.P(k));
            ASSERT_TRUE(arc);
            cur = join(S, cur, f.P(k), *arc);
            auto mi = classify(S, cur);
            EXPECT_TRUE(mi.is_meridian);
            EXPECT_EQ(std::min(k, g - k), mi.k);
            EXPECT_EQ(cur, S.std_curve(StdKind::Group, k));
        }
    }
}

// band sum of disjoint curves: homology +-[D1] +- [D2], and no more crossings
// with a third curve than both summands plus the arc
TEST(Join, HomologyAndIntersectionBounds)
{
    Fixture f(4);
    auto& S = f.S;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            std::vector<CurveClass> avoid;
            for (int k = 1; k <= 4; ++k)
                if (k != i && k != j) avoid.push_back(f.B(k));
            auto arc = connect_arc(S, f.B(i), f.B(j), avoid);
            ASSERT_TRUE(arc);
            auto m = join(S, f.B(i), f.B(j), *arc);
            auto hi = S.homology(f.B(i)), hj = S.homology(f.B(j)), hm = S.homology(m);
            EXPECT_TRUE(pm_equal(hm, comb(hi, 1, hj)) || pm_equal(hm, comb(hi, -1, hj)));
            EXPECT_TRUE(S.is_meridian(m));
            for (auto& c : avoid) EXPECT_EQ(intersection_number(S, m, c), 0);
            for (int k = 1; k <= 4; ++k) {
                auto x = intersection_number(S, m, f.A(k));
                EXPECT_LE(x, intersection_number(S, f.B(i), f.A(k)) + intersection_number(S, f.B(j), f.A(k)) +
                                 2 * (int64_t)arc->he.size());
            }
        }
}

TEST(Join, MustHitAndPreconditions)
{
    Fixture f(4);
    auto& S = f.S;
    auto arc = connect_arc(S, f.B(1), f.B(3), {f.B(4)}, {f.B(2)});
    ASSERT_TRUE(arc);
    auto m = join(S, f.B(1), f.B(3), *arc);
    EXPECT_EQ(intersection_number(S, m, f.B(2)), 2);
    EXPECT_EQ(intersection_number(S, m, f.B(4)), 0);
    EXPECT_TRUE(S.is_meridian(m));
    EXPECT_EQ(m, meridian_slide(S, 1, 3, 2));

    EXPECT_THROW(connect_arc(S, f.B(1), f.B(1)), Error);
    // A(1) meets B(1): no band sum
    auto a = connect_arc(S, f.B(2), f.B(3));
    ASSERT_TRUE(a);
    EXPECT_THROW(join(S, f.A(2), f.B(2), *a), Error);
    // B(1) is walled in by its petal
    EXPECT_FALSE(connect_arc(S, f.B(1), f.B(2), {f.P(1)}));
}

// the shortest walk here turns back through regions it already used; the arc
// search must still return an embedded arc
TEST(Join, MustHitTurningBack)
{
    Fixture f(4);
    auto& S = f.S;
    auto arc = connect_arc(S, f.P(1), f.P(2), {f.B(3)}, {f.B(4)});
    ASSERT_TRUE(arc);
    auto x = join(S, f.P(1), f.P(2), *arc);
    EXPECT_EQ(intersection_number(S, x, f.B(4)), 2);
    EXPECT_EQ(intersection_number(S, x, f.B(3)), 0);
    auto mi = classify(S, x);
    EXPECT_TRUE(mi.is_meridian && mi.separating);
    EXPECT_EQ(mi.k, 2);
}

// rejecting the shortest route sends the search on to longer walks
TEST(Regions, WalkFallback)
{
    Fixture f(3);
    auto& S = f.S;
    Arrangement A(S);
    int p = A.add(f.P(1)), b = A.add(f.B(2));
    Regions R(A, {p, b});
    std::vector<int> sources{R.left_region(p, 0), R.right_region(p, 0)};
    std::vector<char> target(R.n_regions(), 0), ok(R.n_regions(), 1);
    target[R.right_region(b, 0)] = target[R.left_region(b, 0)] = 1;
    auto first = R.route(sources, target, {}, ok);
    ASSERT_TRUE(first);
    size_t need = first->regions.size() + 3;
    int calls = 0;
    auto longer = R.route(sources, target, {}, ok, [&](const Regions::Route& r) {
        ++calls;
        return r.regions.size() >= need;
    });
    ASSERT_TRUE(longer);
    EXPECT_GT(calls, 1);
    EXPECT_GE(longer->regions.size(), need);
    EXPECT_TRUE(longer->regions.front() == sources[0] || longer->regions.front() == sources[1]);
    EXPECT_TRUE(target[longer->regions.back()]);
    // a half-edge is recorded exactly when the walk changes triangle
    size_t moves = 0;
    for (size_t k = 1; k < longer->regions.size(); ++k)
        moves += R.region_tri(longer->regions[k]) != R.region_tri(longer->regions[k - 1]);
    EXPECT_EQ(moves, longer->he.size());
}

TEST(BandDouble, PetalAroundHandle)
{
    for (int g = 3; g <= 6; ++g) {
        Fixture f(g);
        auto& S = f.S;
        for (int i = 1; i <= g; ++i) {
            auto z = band_double(S, f.B(i), f.A(i));
            EXPECT_EQ(z, f.P(i));
            // oracle: cut along z, B(i) sits alone on a genus-1 side
            auto ps = cut_along(S, {z}, {f.B(i)});
            ASSERT_EQ(ps.size(), 2u);
            for (auto& p : ps)
                if (!p.content.empty()) EXPECT_EQ(p.genus, 1);
        }
    }
}

TEST(BandDouble, TwistedDuals)
{
    Fixture f(4);
    auto& S = f.S;
    auto gens = meridian_generators(S);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        auto m = random_map(gens, 3, rng);
        auto c = apply_map(S, m, f.B(2)), s = apply_map(S, m, f.A(2));
        ASSERT_EQ(intersection_number(S, c, s), 1);
        auto z = band_double(S, c, s);
        EXPECT_EQ(intersection_number(S, z, c), 0);
        EXPECT_EQ(intersection_number(S, z, s), 0);
        EXPECT_TRUE(is_sep_meridian(S, z, 1));
        EXPECT_EQ(z, apply_map(S, m, f.P(2)));
        EXPECT_EQ(delta(S, z), c);
    }
    EXPECT_THROW(band_double(S, f.B(1), f.A(2)), Error);
}

TEST(DualCurve, MeetsOnce)
{
    Fixture f(3);
    auto& S = f.S;
    auto gens = meridian_generators(S);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 8; ++t) {
        auto c = apply_map(S, random_map(gens, 3, rng), twist(S, f.A(1), f.B(2), 1));
        auto d = dual_curve(S, c);
        ASSERT_TRUE(d);
        EXPECT_EQ(intersection_number(S, c, *d), 1);
    }
    EXPECT_FALSE(dual_curve(S, f.P(1)));
    auto d = dual_curve(S, f.B(1), {f.B(2), f.B(3)});
    ASSERT_TRUE(d);
    EXPECT_EQ(intersection_number(S, *d, f.B(2)), 0);
}

TEST(Surgery, FourSeparatingMeridians)
{
    for (int g = 4; g <= 6; ++g) {
        Fixture f(g);
        auto& S = f.S;
        auto G2 = S.std_curve(StdKind::Group, 2);
        auto tau = connect_arc(S, f.P(1), f.P(g), {}, {G2});
        ASSERT_TRUE(tau);
        auto D = join(S, f.P(1), f.P(g), *tau);
        ASSERT_EQ(intersection_number(S, G2, D), 2);
        auto W = surgery_along_arc(S, G2, D);
        for (auto& w : W) {
            EXPECT_TRUE(is_zero(S.homology(w)));
            EXPECT_TRUE(S.is_meridian(w));
            EXPECT_EQ(intersection_number(S, w, G2), 0);
            EXPECT_EQ(intersection_number(S, w, D), 0);
            EXPECT_TRUE(path_is_simple(S.model(), S.path(w)));
        }
        // the genera of the pieces cut by each W add up
        for (auto& w : W) {
            auto mi = classify(S, w);
            EXPECT_EQ(mi.k + mi.l, g);
        }
        EXPECT_THROW(surgery_along_arc(S, G2, f.P(1)), Error);
    }
}

TEST(Stripes, SingleStripe)
{
    for (int g = 3; g <= 5; ++g) {
        Fixture f(g);
        auto& S = f.S;
        for (int i = 1; i <= g; ++i) {
            int j = i % g + 1;
            auto sigma = join(S, f.A(j), f.B(i), *connect_arc(S, f.A(j), f.B(i)));
            auto E = band_double(S, f.B(j), sigma);
            auto rep = find_stripes(S, E, f.P(i));
            EXPECT_EQ(rep.arcs.size(), 2u);
            EXPECT_TRUE(rep.all_stripes);
            EXPECT_EQ(rep.crossings, intersection_number(S, E, f.P(i)));
            EXPECT_EQ(rep.crossings, 4);
            ASSERT_EQ(rep.arcs.size(), 2u);
            EXPECT_EQ(rep.arcs[0].partner, 1);
            EXPECT_EQ(rep.arcs[1].partner, 0);
            auto Eb = eliminate_stripe(S, E, f.P(i));
            EXPECT_EQ(intersection_number(S, Eb, f.P(i)), 0);
            EXPECT_EQ(classify(S, Eb).str(), classify(S, E).str());
            EXPECT_EQ(delta(S, Eb), delta(S, E));
        }
        // no stripe on a disjoint pair; wrong types rejected
        EXPECT_THROW(eliminate_stripe(S, f.P(2), f.P(1)), Error);
        EXPECT_THROW(find_stripes(S, f.B(2), f.P(1)), Error);
        EXPECT_THROW(find_stripes(S, f.P(2), f.B(1)), Error);
    }
}

TEST(Stripes, ReduceIntersection)
{
    for (int g = 3; g <= 5; ++g) {
        Fixture f(g);
        auto& S = f.S;
        for (int i = 1; i <= g; ++i) {
            int j = i % g + 1;
            auto sig = join(S, f.A(i), f.B(j), *connect_arc(S, f.A(i), f.B(j)));
            auto X = band_double(S, f.B(i), sig);
            ASSERT_GT(intersection_number(S, X, f.P(i)), 0);
            auto Xb = reduce_intersection(S, X, f.P(i));
            EXPECT_EQ(intersection_number(S, Xb, f.P(i)), 0);
            EXPECT_EQ(delta(S, Xb), f.B(i));
            EXPECT_TRUE(is_sep_meridian(S, Xb, 1));
        }
        EXPECT_EQ(reduce_intersection(S, f.P(2), f.P(1)), f.P(2));
    }
}

TEST(CutSystems, InducedSeparatingSystem)
{
    for (int g = 3; g <= 5; ++g) {
        Fixture f(g);
        auto& S = f.S;
        auto gens = meridian_generators(S);
        std::mt19937_64 rng(g);
        for (int t = 0; t < 4; ++t) {
            auto m = random_map(gens, t, rng);
            std::vector<CurveClass> bs;
            for (int i = 1; i <= g; ++i) bs.push_back(apply_map(S, m, f.B(i)));
            auto z = induced_sep_cut_system(S, validate_cut_system(S, bs));
            ASSERT_EQ((int)z.curves.size(), g);
            for (int i = 0; i < g; ++i) {
                EXPECT_TRUE(is_sep_meridian(S, z.curves[i], 1));
                EXPECT_EQ(delta(S, z.curves[i]), bs[i]);
                for (int j = 0; j < g; ++j) {
                    EXPECT_EQ(intersection_number(S, z.curves[i], z.curves[j]), 0);
                    if (j != i) EXPECT_EQ(intersection_number(S, z.curves[i], bs[j]), 0);
                }
            }
        }
    }
}
