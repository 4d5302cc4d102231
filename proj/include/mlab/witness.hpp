#pragma once

#include <vector>

#include "complexes.hpp"
#include "meridians.hpp"

namespace mlab {

// B(i) joined to B(j) along a shortest arc missing the other B's and `keep_off`.
inline CurveClass side_meridian(const Surface& S, int i, int j, const std::vector<CurveClass>& keep_off)
{
    std::vector<CurveClass> avoid = keep_off;
    for (int x = 1; x <= S.genus(); ++x)
        if (x != i && x != j) avoid.push_back(S.std_curve(StdKind::B, x));
    auto bi = S.std_curve(StdKind::B, i), bj = S.std_curve(StdKind::B, j);
    auto arc = connect_arc(S, bi, bj, avoid);
    if (!arc) fail(ErrorKind::verification, "no arc for side meridian");
    return join(S, bi, bj, *arc);
}

// Standard pairwise disjoint separating meridians: Petal(1..g), Group(2..g-2).
inline std::vector<CurveClass> standard_family(const Surface& S)
{
    std::vector<CurveClass> out;
    for (int i = 1; i <= S.genus(); ++i) out.push_back(S.std_curve(StdKind::Petal, i));
    for (int k = 2; k <= S.genus() - 2; ++k) out.push_back(S.std_curve(StdKind::Group, k));
    return out;
}

struct LinkSample {
    CurveClass D;
    FlagComplex complex;
    std::vector<int> side; // 0: inside the genus-k side of D, 1: the other side
    std::vector<std::string> names;
};

// Finite piece of the link of D = Petal(1) (k = 1) or Group(k) (k >= 2) among
// separating meridians: the standard curves on each side plus twists of petals
// about meridians M(i,i+1) supported on the same side.
inline LinkSample link_sample(const Surface& S, int k)
{
    const int g = S.genus();
    if (k < 1 || k > g - 1 || (k >= 2 && k > g - 2)) fail(ErrorKind::precondition, "link sample: bad genus type");
    LinkSample ls;
    ls.D = k == 1 ? S.std_curve(StdKind::Petal, 1) : S.std_curve(StdKind::Group, k);
    std::vector<CurveClass> vs;
    auto add = [&](const CurveClass& c, const std::string& name) {
        for (auto& v : vs)
            if (v == c) return;
        vs.push_back(c);
        ls.names.push_back(name);
    };
    for (int i = 1; i <= g; ++i)
        if (!(k == 1 && i == 1)) add(S.std_curve(StdKind::Petal, i), "P" + std::to_string(i));
    for (int j = 2; j <= g - 2; ++j)
        if (j != k) add(S.std_curve(StdKind::Group, j), "G" + std::to_string(j));
    // perturbations: handles i, i+1 on the same side of D
    for (int i = 1; i < g; ++i) {
        bool same = (i + 1 <= k) || (i > k);
        if (!same) continue;
        CurveClass M = side_meridian(S, i, i + 1, {ls.D});
        for (int h : {i, i + 1})
            for (int e : {1, -1}) {
                CurveClass c = twist(S, M, S.std_curve(StdKind::Petal, h), e);
                if (intersection_number(S, c, ls.D) != 0) continue;
                add(c, "T" + std::string(e > 0 ? "+" : "-") + "M" + std::to_string(i) + "_" + std::to_string(i + 1) +
                           "(P" + std::to_string(h) + ")");
            }
    }
    ls.complex = build_subcomplex(S, vs, Restrict::separating_meridians);
    if (ls.complex.size() != (int)vs.size()) fail(ErrorKind::verification, "link sample: non-meridian vertex");
    auto pieces = cut_along(S, {ls.D}, vs);
    int kpiece = -1;
    for (int p = 0; p < (int)pieces.size(); ++p)
        if (pieces[p].genus == k) kpiece = p;
    // (k,k): the side holding handle 1
    if (pieces.size() == 2 && pieces[0].genus == pieces[1].genus) {
        auto hp = cut_along(S, {ls.D}, {S.std_curve(StdKind::B, 1)});
        kpiece = hp[0].content.empty() ? 1 : 0;
    }
    ls.side.assign(vs.size(), 0);
    for (int p = 0; p < (int)pieces.size(); ++p)
        for (int v : pieces[p].content) ls.side[v] = p == kpiece ? 0 : 1;
    return ls;
}

} // namespace mlab
