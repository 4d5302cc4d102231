#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <random>
#include <set>

#include "mlab/meridians.hpp"

using namespace mlab;

namespace {

int64_t omega(const std::vector<int64_t>& x, const std::vector<int64_t>& y)
{
    int64_t s = 0;
    for (size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

std::vector<CurveClass> scheme(const Surface& S)
{
    std::vector<CurveClass> v;
    for (int i = 1; i <= S.genus(); ++i) {
        v.push_back(S.std_curve(StdKind::A, i));
        v.push_back(S.std_curve(StdKind::B, i));
    }
    return v;
}

// a pool of random simple curves reached by short twist words from the scheme
std::vector<CurveClass> pool(const Surface& S, uint64_t seed, int n, int len)
{
    auto gens = scheme(S);
    std::mt19937_64 rng(seed);
    std::vector<CurveClass> out;
    while ((int)out.size() < n) {
        CurveClass c = gens[rng() % gens.size()];
        for (int k = 0; k < len; ++k) c = twist(S, gens[rng() % gens.size()], c, (rng() & 1) ? 1 : -1);
        out.push_back(c);
    }
    return out;
}

} // namespace

TEST(Twist, DisjointCurvesFixed)
{
    Surface S(3);
    auto a1 = S.std_curve(StdKind::A, 1), a2 = S.std_curve(StdKind::A, 2), p1 = S.std_curve(StdKind::Petal, 1);
    EXPECT_EQ(twist(S, a1, a2, 3), a2);
    EXPECT_EQ(twist(S, a1, a1, -2), a1);
    EXPECT_EQ(twist(S, p1, a1, 1), a1);
    EXPECT_EQ(twist(S, a1, p1, 0), p1);
}

// i(T_a^n(b), b) = |n| i(a,b)^2
TEST(Twist, IntersectionGrowth)
{
    for (int g = 2; g <= 4; ++g) {
        Surface S(g);
        auto cs = pool(S, 100 + g, 12, 2);
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = 0; j < cs.size(); j += 3) {
                auto k = intersection_number(S, cs[i], cs[j]);
                if (k > 6) continue;
                for (int n : {-2, -1, 1, 3}) {
                    auto t = twist(S, cs[i], cs[j], n);
                    EXPECT_EQ(intersection_number(S, t, cs[j]), std::abs(n) * k * k);
                    EXPECT_EQ(intersection_number(S, t, cs[i]), k);
                }
            }
    }
}

// Picard-Lefschetz: [T_a^n b] = [b] + e n w(a,b) [a] with one sign e throughout
TEST(Twist, HomologyAction)
{
    for (int g = 2; g <= 4; ++g) {
        Surface S(g);
        auto cs = pool(S, 7 * g, 10, 2);
        int sign = 0;
        for (auto& a : cs)
            for (auto& b : cs)
                for (int n : {1, -1, 2}) {
                    auto ha = S.homology(a), hb = S.homology(b), ht = S.homology(twist(S, a, b, n));
                    int64_t w = omega(ha, hb);
                    if (w == 0) {
                        // up to orientation
                        bool same = ht == hb;
                        for (auto& x : hb) x = -x;
                        EXPECT_TRUE(same || ht == hb);
                        continue;
                    }
                    // b keeps its orientation only up to sign; compare both
                    bool found = false;
                    for (int e : {1, -1})
                        for (int o : {1, -1}) {
                            std::vector<int64_t> want(hb.size());
                            for (size_t i = 0; i < hb.size(); ++i) want[i] = o * (hb[i] + e * n * w * ha[i]);
                            if (want == ht) {
                                if (sign == 0) sign = e;
                                EXPECT_EQ(sign, e);
                                found = true;
                            }
                        }
                    EXPECT_TRUE(found);
                }
    }
}

TEST(Twist, BraidAndCommutation)
{
    Surface S(3);
    auto a1 = S.std_curve(StdKind::A, 1), b1 = S.std_curve(StdKind::B, 1), a2 = S.std_curve(StdKind::A, 2);
    // T_a T_b (a) = b when i(a,b) = 1
    EXPECT_EQ(twist(S, b1, twist(S, a1, b1, 1), 1), a1);
    for (auto& c : pool(S, 11, 15, 3)) {
        auto aba = twist(S, a1, twist(S, b1, twist(S, a1, c, 1), 1), 1);
        auto bab = twist(S, b1, twist(S, a1, twist(S, b1, c, 1), 1), 1);
        EXPECT_EQ(aba, bab);
        EXPECT_EQ(twist(S, a1, twist(S, a2, c, 1), 1), twist(S, a2, twist(S, a1, c, 1), 1));
        EXPECT_EQ(twist(S, a1, twist(S, a1, c, 1), 1), twist(S, a1, c, 2));
    }
}

TEST(Maps, InverseAndComposition)
{
    for (int g = 3; g <= 5; ++g) {
        Surface S(g);
        auto gens = meridian_generators(S);
        std::mt19937_64 rng(g);
        auto cs = pool(S, 3 * g, 8, 2);
        for (int t = 0; t < 6; ++t) {
            auto m = random_map(gens, 4, rng), m2 = random_map(gens, 2, rng);
            for (auto& c : cs) {
                auto x = apply_map(S, m, c);
                EXPECT_EQ(apply_map(S, m.inverse(), x), c);
                EXPECT_EQ(apply_map(S, m.then(m2), c), apply_map(S, m2, x));
                // mapping classes preserve intersection
                EXPECT_EQ(intersection_number(S, x, apply_map(S, m, cs[0])), intersection_number(S, c, cs[0]));
                // handlebody maps keep meridians meridians
                EXPECT_EQ(S.is_meridian(x), S.is_meridian(c));
            }
        }
    }
}

TEST(Maps, HandlebodyMapRejectsNonMeridian)
{
    Surface S(3);
    EXPECT_THROW(handlebody_map(S, {{S.std_curve(StdKind::A, 1), 1}}), Error);
    EXPECT_THROW(handlebody_map(S, {{S.std_curve(StdKind::B, 1), 0}}), Error);
    EXPECT_NO_THROW(handlebody_map(S, {{S.std_curve(StdKind::B, 1), -1}}));
}

TEST(Maps, GeneratorsAreMeridians)
{
    for (int g = 2; g <= 6; ++g) {
        Surface S(g);
        auto gens = meridian_generators(S);
        EXPECT_EQ((int)gens.size(), g + g * (g - 1) / 2 + std::max(0, g - 2));
        for (auto& n : gens) {
            EXPECT_TRUE(S.is_meridian(n.curve));
            EXPECT_TRUE(path_is_simple(S.model(), S.path(n.curve)));
        }
    }
}

// orbit enumeration against a plain BFS over (curve, depth)
TEST(Orbit, MatchesBruteForce)
{
    Surface S(3);
    auto gens = meridian_generators(S);
    std::vector<MCGMap> maps;
    for (size_t i = 0; i < 4; ++i) {
        maps.push_back(MCGMap{{{gens[i].curve, 1}}});
        maps.push_back(MCGMap{{{gens[i].curve, -1}}});
    }
    std::vector<CurveClass> seeds{S.std_curve(StdKind::A, 1), S.std_curve(StdKind::Petal, 2)};
    auto keep = [&](const CurveClass& c) { return c.total() % 2 == 0; };
    auto got = enumerate_orbit(S, seeds, maps, 3, keep);

    std::map<CurveClass, int> dist;
    std::deque<CurveClass> q;
    for (auto& s : seeds)
        if (dist.emplace(s, 0).second) q.push_back(s);
    while (!q.empty()) {
        auto c = q.front();
        q.pop_front();
        if (dist[c] == 3) continue;
        for (auto& m : maps) {
            auto x = apply_map(S, m, c);
            if (dist.emplace(x, dist[c] + 1).second) q.push_back(x);
        }
    }
    std::set<CurveClass> want;
    for (auto& [c, d] : dist)
        if (keep(c)) want.insert(c);
    EXPECT_EQ(std::set<CurveClass>(got.begin(), got.end()), want);
    EXPECT_EQ(got.size(), want.size());
}
