#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "surface.hpp"

namespace mlab {

// true when chord u (oriented p->q) is crossed by v going from its right to its left
inline bool crosses_right_to_left(const Arrangement::Chord& u, const Arrangement::Chord& v)
{
    return Arrangement::in_ccw_open(u.q, u.p, v.q);
}

// n-th power of the Dehn twist about t applied to c. The twist is the identity
// away from a thin annulus around t, so any transverse drawing of the pair works:
// at every crossing c takes |n| full turns along t.
inline CurveClass twist(const Surface& S, const CurveClass& t, const CurveClass& c, int n)
{
    if (n == 0) return c;
    Arrangement A(S);
    A.add(t, false);
    A.add(c, false);
    auto ix = A.index();
    auto tc = A.chords(ix, 0), cc = A.chords(ix, 1);
    const Path& pt = A.path(0);
    const Path& pc = A.path(1);
    const int lt = (int)pt.size(), lc = (int)pc.size();

    struct Ins {
        int seg;
        int64_t ord;
        int tseg;
        bool fwd;
    };
    std::vector<Ins> ins;
    const int64_t span = 3 * Arrangement::kBig;
    for (int tri = 0; tri < S.model().n_tris; ++tri)
        Arrangement::for_each_cross(cc[tri], tc[tri], [&](const Arrangement::Chord& u, const Arrangement::Chord& v) {
            int64_t ec = Arrangement::in_ccw_open(u.p, u.q, v.p) ? v.p : v.q;
            int64_t ord = ((ec - u.p) % span + span) % span;
            bool rl = crosses_right_to_left(u, v);
            ins.push_back({u.seg, ord, v.seg, (n > 0) == rl});
        });
    if (ins.empty()) return c;
    std::sort(ins.begin(), ins.end(), [](auto& a, auto& b) { return std::pair(a.seg, a.ord) < std::pair(b.seg, b.ord); });

    Path out;
    size_t k = 0;
    const int reps = std::abs(n);
    for (int i = 0; i < lc; ++i) {
        out.push_back(pc[i]);
        for (; k < ins.size() && ins[k].seg == i; ++k)
            for (int r = 0; r < reps; ++r)
                for (int s = 1; s <= lt; ++s) {
                    if (ins[k].fwd)
                        out.push_back(pt[(ins[k].tseg + s) % lt]);
                    else
                        out.push_back(rev(pt[((ins[k].tseg - s + 1) % lt + lt) % lt]));
                }
    }
    // out is the path starting at c's point 0; segments between consecutive points
    Path r = reduce_path(out);
    Weights w = weights_of(S.model(), r);
    check_cap(w);
    return S.canonical(r);
}

struct TwistStep {
    CurveClass curve;
    int power = 1;
};

struct MCGMap {
    std::vector<TwistStep> word; // applied left to right

    MCGMap inverse() const
    {
        MCGMap r;
        for (auto it = word.rbegin(); it != word.rend(); ++it) r.word.push_back({it->curve, -it->power});
        return r;
    }
    MCGMap then(const MCGMap& o) const
    {
        MCGMap r = *this;
        r.word.insert(r.word.end(), o.word.begin(), o.word.end());
        return r;
    }
    bool empty() const { return word.empty(); }
};

// Builds a map whose twist curves must all be meridians (such twists extend over
// the handlebody).
inline MCGMap handlebody_map(const Surface& S, std::vector<TwistStep> steps)
{
    for (auto& s : steps) {
        if (s.power == 0) fail(ErrorKind::precondition, "twist exponent must be nonzero");
        if (!S.is_meridian(s.curve)) fail(ErrorKind::precondition, "handlebody map twists about a non-meridian");
    }
    return MCGMap{std::move(steps)};
}

inline CurveClass apply_map(const Surface& S, const MCGMap& m, CurveClass c)
{
    for (auto& s : m.word) c = twist(S, s.curve, c, s.power);
    return c;
}

inline std::vector<CurveClass> apply_map(const Surface& S, const MCGMap& m, const std::vector<CurveClass>& cs)
{
    std::vector<CurveClass> out;
    for (auto& c : cs) out.push_back(apply_map(S, m, c));
    return out;
}

// Images of seeds under all generator words of length <= depth, deduplicated.
// Breadth-first in generator order, so the result order is deterministic.
inline std::vector<CurveClass> enumerate_orbit(const Surface& S, const std::vector<CurveClass>& seeds,
                                               const std::vector<MCGMap>& gens, int depth,
                                               const std::function<bool(const CurveClass&)>& keep,
                                               size_t max_size = 200000)
{
    std::set<CurveClass> seen;
    std::vector<CurveClass> frontier, out;
    for (auto& s : seeds)
        if (seen.insert(s).second) frontier.push_back(s);
    for (auto& s : frontier)
        if (keep(s)) out.push_back(s);
    for (int d = 0; d < depth; ++d) {
        std::vector<CurveClass> next;
        for (auto& c : frontier)
            for (auto& g : gens) {
                CurveClass x = apply_map(S, g, c);
                if (!seen.insert(x).second) continue;
                if (seen.size() > max_size) fail(ErrorKind::resource, "orbit enumeration too large");
                next.push_back(x);
                if (keep(x)) out.push_back(x);
            }
        frontier = std::move(next);
    }
    return out;
}

} // namespace mlab
