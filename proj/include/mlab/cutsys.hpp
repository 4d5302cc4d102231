#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "meridians.hpp"

namespace mlab {

inline CutSystem sorted_system(CutSystem c)
{
    std::sort(c.curves.begin(), c.curves.end());
    return c;
}

// Edge rule of the cut system graph: g-1 members in common, the other two disjoint.
inline bool cutsys_edge(const Surface& S, const CutSystem& a, const CutSystem& b)
{
    std::vector<CurveClass> x = sorted_system(a).curves, y = sorted_system(b).curves, common, ox, oy;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(ox));
    std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(oy));
    if ((int)common.size() != S.genus() - 1 || ox.size() != 1 || oy.size() != 1) return false;
    return intersection_number(S, ox[0], oy[0]) == 0;
}

class CutSystemSearch {
public:
    // pool: candidate replacement curves (non-separating meridians are kept)
    CutSystemSearch(const Surface& S, const std::vector<CurveClass>& pool) : S_(S)
    {
        std::set<CurveClass> seen;
        for (auto& c : pool) {
            if (!seen.insert(c).second) continue;
            auto mi = classify(S, c);
            if (mi.is_meridian && !mi.separating) pool_.push_back(c);
        }
    }

    // Twist-generated pool: images of the members under generator words of length <= depth.
    static std::vector<CurveClass> twist_pool(const Surface& S, const std::vector<CurveClass>& members,
                                              const std::vector<NamedCurve>& gens, int depth)
    {
        std::vector<MCGMap> maps;
        for (auto& g : gens)
            for (int e : {1, -1}) maps.push_back(MCGMap{{TwistStep{g.curve, e}}});
        return enumerate_orbit(S, members, maps, depth, [](const CurveClass&) { return true; });
    }

    const std::vector<CurveClass>& pool() const { return pool_; }

    // Handle slides of members over each other along shortest arcs.
    std::vector<CurveClass> slides(const CutSystem& c)
    {
        std::vector<CurveClass> out;
        const auto& m = c.curves;
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                std::vector<CurveClass> avoid;
                for (size_t k = 0; k < m.size(); ++k)
                    if (k != i && k != j) avoid.push_back(m[k]);
                auto arc = connect_arc(S_, m[i], m[j], avoid);
                if (arc) out.push_back(join(S_, m[i], m[j], *arc));
            }
        return out;
    }

    std::vector<CutSystem> neighbors(const CutSystem& c0)
    {
        CutSystem c = sorted_system(c0);
        std::vector<CurveClass> cand = pool_;
        for (auto& s : slides(c)) cand.push_back(s);
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<CutSystem> out;
        std::set<std::vector<CurveClass>> seen;
        for (auto& p : cand) {
            if (std::find(c.curves.begin(), c.curves.end(), p) != c.curves.end()) continue;
            bool disjoint = true;
            for (auto& m : c.curves) disjoint = disjoint && inter(p, m) == 0;
            if (!disjoint) continue;
            for (size_t i = 0; i < c.curves.size(); ++i) {
                CutSystem n = c;
                n.curves[i] = p;
                n = sorted_system(n);
                if (!seen.insert(n.curves).second) continue;
                try {
                    validate_cut_system(S_, n.curves);
                } catch (const Error&) {
                    continue;
                }
                out.push_back(n);
            }
        }
        return out;
    }

    // Shortest path of at most `bound` edges; breadth-first from both ends.
    std::optional<std::vector<CutSystem>> path(const CutSystem& a, const CutSystem& b, int bound)
    {
        using Key = std::vector<CurveClass>;
        Key s = sorted_system(a).curves, t = sorted_system(b).curves;
        if (s == t) return std::vector<CutSystem>{CutSystem{s}};
        std::map<Key, Key> prev[2];
        prev[0][s] = {};
        prev[1][t] = {};
        std::vector<Key> frontier[2] = {{s}, {t}};
        int depth[2] = {0, 0};
        while (depth[0] + depth[1] < bound) {
            int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
            if (frontier[side].empty()) side = 1 - side;
            if (frontier[side].empty()) break;
            std::vector<Key> next;
            for (auto& x : frontier[side])
                for (auto& y : neighbors(CutSystem{x})) {
                    if (prev[side].count(y.curves)) continue;
                    prev[side][y.curves] = x;
                    if (prev[1 - side].count(y.curves)) {
                        std::vector<CutSystem> left, right;
                        for (Key k = y.curves; !k.empty(); k = prev[0][k]) left.push_back(CutSystem{k});
                        std::reverse(left.begin(), left.end());
                        for (Key k = prev[1][y.curves]; !k.empty(); k = prev[1][k]) right.push_back(CutSystem{k});
                        left.insert(left.end(), right.begin(), right.end());
                        return left;
                    }
                    next.push_back(y.curves);
                    if (prev[0].size() + prev[1].size() > 200000)
                        fail(ErrorKind::resource, "cut system search too large");
                }
            frontier[side] = std::move(next);
            ++depth[side];
        }
        return std::nullopt;
    }

private:
    int64_t inter(const CurveClass& a, const CurveClass& b)
    {
        auto key = a < b ? std::pair(a, b) : std::pair(b, a);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        return memo_[key] = intersection_number(S_, a, b);
    }

    const Surface& S_;
    std::vector<CurveClass> pool_;
    std::map<std::pair<CurveClass, CurveClass>, int64_t> memo_;
};

inline std::vector<CutSystem> cutsys_neighbors(const Surface& S, const CutSystem& c,
                                               const std::vector<NamedCurve>& gens, int depth)
{
    CutSystemSearch search(S, CutSystemSearch::twist_pool(S, c.curves, gens, depth));
    return search.neighbors(c);
}

// Pool = members of both ends; handle slides are generated on the way.
inline std::optional<std::vector<CutSystem>> cutsys_path(const Surface& S, const CutSystem& a, const CutSystem& b,
                                                         int bound)
{
    std::vector<CurveClass> pool = a.curves;
    pool.insert(pool.end(), b.curves.begin(), b.curves.end());
    CutSystemSearch search(S, pool);
    auto p = search.path(a, b, bound);
    if (p)
        for (size_t k = 1; k < p->size(); ++k)
            if (!cutsys_edge(S, (*p)[k - 1], (*p)[k])) fail(ErrorKind::verification, "cut system path: bad edge");
    return p;
}

} // namespace mlab
