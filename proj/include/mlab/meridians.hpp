#pragma once

#include <random>
#include <string>
#include <vector>

#include "surgery.hpp"

namespace mlab {

// Named meridians used as twist curves for handlebody maps:
//   B(i), M(i,j) = B(i) and B(j) banded along an arc missing the other B's,
//   S(i,j;k) = the same band sum with the arc forced once across B(k).
struct NamedCurve {
    std::string name;
    CurveClass curve;
};

inline CurveClass meridian_pair(const Surface& S, int i, int j)
{
    std::vector<CurveClass> avoid;
    for (int k = 1; k <= S.genus(); ++k)
        if (k != i && k != j) avoid.push_back(S.std_curve(StdKind::B, k));
    auto bi = S.std_curve(StdKind::B, i), bj = S.std_curve(StdKind::B, j);
    auto arc = connect_arc(S, bi, bj, avoid);
    if (!arc) fail(ErrorKind::verification, "no arc between B curves");
    return join(S, bi, bj, *arc);
}

inline CurveClass meridian_slide(const Surface& S, int i, int j, int k)
{
    std::vector<CurveClass> avoid;
    for (int x = 1; x <= S.genus(); ++x)
        if (x != i && x != j && x != k) avoid.push_back(S.std_curve(StdKind::B, x));
    auto bi = S.std_curve(StdKind::B, i), bj = S.std_curve(StdKind::B, j);
    auto arc = connect_arc(S, bi, bj, avoid, {S.std_curve(StdKind::B, k)});
    if (!arc) fail(ErrorKind::verification, "no arc between B curves across the third");
    return join(S, bi, bj, *arc);
}

// Twist curves generating the handlebody maps used in sampling.
inline std::vector<NamedCurve> meridian_generators(const Surface& S)
{
    const int g = S.genus();
    std::vector<NamedCurve> out;
    for (int i = 1; i <= g; ++i) out.push_back({"B" + std::to_string(i), S.std_curve(StdKind::B, i)});
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            out.push_back({"M" + std::to_string(i) + "_" + std::to_string(j), meridian_pair(S, i, j)});
    for (int i = 1; i + 2 <= g; ++i)
        out.push_back({"S" + std::to_string(i) + "_" + std::to_string(i + 2) + "_" + std::to_string(i + 1),
                       meridian_slide(S, i, i + 2, i + 1)});
    for (auto& c : out)
        if (!S.is_meridian(c.curve)) fail(ErrorKind::verification, "generator " + c.name + " is not a meridian");
    return out;
}

// Random word of exactly `len` twists with exponents +-1 (no immediate cancellation).
inline MCGMap random_map(const std::vector<NamedCurve>& gens, int len, std::mt19937_64& rng)
{
    MCGMap m;
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    size_t last = gens.size();
    int last_e = 0;
    while ((int)m.word.size() < len) {
        size_t k = pick(rng);
        int e = sign(rng) ? 1 : -1;
        if (k == last && e == -last_e) continue;
        m.word.push_back({gens[k].curve, e});
        last = k;
        last_e = e;
    }
    return m;
}

// Deterministic curve meeting d once: first scheme curve A(1), B(1), A(2), ... that
// does, otherwise one built from an arc.
inline CurveClass default_dual(const Surface& S, const CurveClass& d)
{
    for (int i = 1; i <= S.genus(); ++i)
        for (auto k : {StdKind::A, StdKind::B}) {
            auto c = S.std_curve(k, i);
            if (intersection_number(S, c, d) == 1) return c;
        }
    auto c = dual_curve(S, d);
    if (!c) fail(ErrorKind::verification, "no dual curve");
    return *c;
}

// Image of a non-separating meridian d computed through a (1,g-1)-meridian around it.
inline CurveClass phi_M(const Surface& S, const MCGMap& m, const CurveClass& d, const CurveClass& sigma)
{
    auto mi = classify(S, d);
    if (!mi.is_meridian || mi.separating) fail(ErrorKind::precondition, "phi_M needs a non-separating meridian");
    CurveClass Z = band_double(S, d, sigma);
    return delta(S, apply_map(S, m, Z));
}

inline CurveClass phi_M(const Surface& S, const MCGMap& m, const CurveClass& d)
{
    auto mi = classify(S, d);
    if (!mi.is_meridian || mi.separating) fail(ErrorKind::precondition, "phi_M needs a non-separating meridian");
    return phi_M(S, m, d, default_dual(S, d));
}

} // namespace mlab
