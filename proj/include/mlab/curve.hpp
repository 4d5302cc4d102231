#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "model.hpp"
#include "words.hpp"

namespace mlab {

using Weights = std::vector<int64_t>;
using Path = std::vector<int>; // cyclic sequence of half-edges

inline int64_t weight_cap() { return 1000000; }

// Canonical isotopy class of an essential simple closed curve (or a multicurve
// when built directly from weights).
struct CurveClass {
    Weights w;
    bool operator==(const CurveClass& o) const { return w == o.w; }
    bool operator!=(const CurveClass& o) const { return w != o.w; }
    bool operator<(const CurveClass& o) const { return w < o.w; }
    int64_t total() const
    {
        int64_t s = 0;
        for (auto x : w) s += x;
        return s;
    }
};

struct TracedComponent {
    Path he;
    std::vector<int> idx; // position of each crossing along its edge (edge orientation)
};

inline int64_t corner_count(const Weights& w, const SurfaceModel& m, int t, int c)
{
    const auto& s = m.tris[t];
    return (w[s[c].edge] + w[s[(c + 1) % 3].edge] - w[s[(c + 2) % 3].edge]) / 2;
}

inline bool is_normal(const SurfaceModel& m, const Weights& w)
{
    if ((int)w.size() != m.n_edges) return false;
    for (auto x : w)
        if (x < 0) return false;
    for (int t = 0; t < m.n_tris; ++t) {
        int64_t a = w[m.tris[t][0].edge], b = w[m.tris[t][1].edge], c = w[m.tris[t][2].edge];
        if ((a + b + c) % 2) return false;
        if (a > b + c || b > a + c || c > a + b) return false;
    }
    return true;
}

inline void check_cap(const Weights& w)
{
    for (auto x : w)
        if (x > weight_cap()) fail(ErrorKind::resource, "weight cap exceeded (" + std::to_string(x) + ")");
}

inline Weights weights_of(const SurfaceModel& m, const Path& p)
{
    Weights w(m.n_edges, 0);
    for (int h : p) ++w[edge_of(h)];
    return w;
}

inline Path reduce_path(const Path& p)
{
    Path out;
    out.reserve(p.size());
    for (int h : p) {
        if (!out.empty() && out.back() == rev(h))
            out.pop_back();
        else
            out.push_back(h);
    }
    size_t i = 0, j = out.size();
    while (j - i >= 2 && out[i] == rev(out[j - 1])) {
        ++i;
        --j;
    }
    return Path(out.begin() + i, out.begin() + j);
}

inline Path reverse_path(const Path& p)
{
    Path r(p.rbegin(), p.rend());
    for (int& h : r) h = rev(h);
    return r;
}

inline Word path_word(const SurfaceModel& m, const Path& p)
{
    Word w;
    for (int h : p)
        if (int l = m.letter(h)) w.push_back(l);
    return w;
}

// Homotopy in the punctured surface: a cyclic word in crossing letters becomes a
// closed dual path (tree moves through diagonals between scheme crossings).
inline Path path_from_word(const SurfaceModel& m, const Word& word)
{
    Path p;
    if (word.empty()) return p;
    auto walk = [&](int from, int to) {
        while (from < to) {
            p.push_back(m.out_he(from, 2));
            ++from;
        }
        while (from > to) {
            p.push_back(m.out_he(from, 0));
            --from;
        }
    };
    auto he_of = [&](int x) {
        int g = std::abs(x);
        int e = -1;
        for (int k = 0; k < m.n_edges; ++k)
            if (m.gen[k] == g) e = k;
        if (e < 0) fail(ErrorKind::precondition, "letter out of range");
        return 2 * e + (x > 0 ? 0 : 1);
    };
    int start = m.src(he_of(word[0]));
    int cur = start;
    for (int x : word) {
        int h = he_of(x);
        walk(cur, m.src(h));
        p.push_back(h);
        cur = m.dst(h);
    }
    walk(cur, start);
    return reduce_path(p);
}

class Tracer {
public:
    Tracer(const SurfaceModel& m, const Weights& w) : m_(m), w_(w)
    {
        off_.assign(m.n_edges + 1, 0);
        for (int e = 0; e < m.n_edges; ++e) off_[e + 1] = off_[e] + w[e];
    }

    int64_t pos_in(int t, int j, int64_t idx) const
    {
        const Side& s = m_.tris[t][j];
        return s.agrees ? idx : w_[s.edge] - 1 - idx;
    }
    int64_t idx_in(int t, int j, int64_t pos) const { return pos_in(t, j, pos); }

    // arc inside triangle t from (side j, ccw pos p)
    std::pair<int, int64_t> partner(int t, int j, int64_t p) const
    {
        int jp = (j + 2) % 3, jn = (j + 1) % 3;
        int64_t cprev = corner_count(w_, m_, t, jp);
        if (p < cprev) return {jp, w_[m_.tris[t][jp].edge] - 1 - p};
        int64_t q = w_[m_.tris[t][j].edge] - 1 - p;
        return {jn, q};
    }

    std::vector<TracedComponent> components() const
    {
        std::vector<char> seen(off_.back(), 0);
        std::vector<TracedComponent> out;
        for (int e = 0; e < m_.n_edges; ++e)
            for (int64_t i = 0; i < w_[e]; ++i) {
                if (seen[off_[e] + i]) continue;
                TracedComponent c;
                int h = 2 * e;
                int64_t idx = i;
                while (true) {
                    int ee = edge_of(h);
                    if (seen[off_[ee] + idx]) break;
                    seen[off_[ee] + idx] = 1;
                    c.he.push_back(h);
                    c.idx.push_back((int)idx);
                    int t = m_.dst(h);
                    int j = m_.side_in(t, ee);
                    auto [j2, p2] = partner(t, j, pos_in(t, j, idx));
                    h = m_.out_he(t, j2);
                    idx = idx_in(t, j2, p2);
                }
                out.push_back(std::move(c));
            }
        return out;
    }

private:
    const SurfaceModel& m_;
    const Weights& w_;
    std::vector<int64_t> off_;
};

inline std::vector<TracedComponent> trace_components(const SurfaceModel& m, const Weights& w)
{
    if (!is_normal(m, w)) fail(ErrorKind::precondition, "weights violate parity/triangle inequalities");
    check_cap(w);
    return Tracer(m, w).components();
}

inline bool same_cyclic(const Path& a, const Path& b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const size_t n = a.size();
    for (int flip = 0; flip < 2; ++flip) {
        Path c = flip ? reverse_path(b) : b;
        for (size_t s = 0; s < n; ++s) {
            if (c[s] != a[0]) continue;
            size_t k = 0;
            while (k < n && c[(s + k) % n] == a[k]) ++k;
            if (k == n) return true;
        }
    }
    return false;
}

// True when the reduced path is carried by a single embedded normal curve.
inline bool path_is_simple(const SurfaceModel& m, const Path& p)
{
    Path r = reduce_path(p);
    if (r.empty()) return false;
    Weights w = weights_of(m, r);
    if (!is_normal(m, w)) return false;
    for (auto x : w)
        if (x > weight_cap()) return false;
    auto comps = Tracer(m, w).components();
    return comps.size() == 1 && same_cyclic(comps[0].he, r);
}


// Pushing a strand that hugs the vertex across it. The surface is closed, so
// this is an isotopy; minimal-weight representatives are joined by such moves.
class Canonicalizer {
public:
    explicit Canonicalizer(const SurfaceModel& m) : m_(m) {}

    CurveClass operator()(const Path& input) const
    {
        Path p = reduce_path(input);
        if (p.empty()) fail(ErrorKind::precondition, "curve is inessential (null-homotopic)");
        if (!path_is_simple(m_, p)) fail(ErrorKind::precondition, "curve is not simple");
        return from_weights(weights_of(m_, p));
    }

    CurveClass from_weights(Weights w) const
    {
        check_cap(w);
        while (true) {
            w = descend(w);
            auto [best, lower] = plateau(w);
            if (!lower) return CurveClass{best};
            w = *lower;
        }
    }

    // every push available from w, with resulting weights
    std::vector<Weights> pushes(const Weights& w, int64_t max_delta) const
    {
        auto comps = trace_components(m_, w);
        if (comps.size() != 1) fail(ErrorKind::precondition, "weights carry a multicurve");
        const TracedComponent& c = comps[0];
        const int d = m_.degree();
        std::vector<int64_t> cnt(d);
        bool all = true;
        for (int i = 0; i < d; ++i) {
            cnt[i] = corner_count(w, m_, m_.link_corner[i].first, m_.link_corner[i].second);
            if (cnt[i] == 0) all = false;
        }
        if (all) fail(ErrorKind::precondition, "curve is inessential (bounds a disk around the vertex)");
        std::vector<Weights> out;
        int z = 0;
        while (cnt[z] != 0) ++z;
        for (int s = 1; s <= d; ++s) {
            int i1 = (z + s) % d;
            if (cnt[i1] == 0 || cnt[(i1 + d - 1) % d] != 0) continue;
            int k = 0;
            while (cnt[(i1 + k) % d] != 0) ++k;
            if (k >= (int)c.he.size()) continue;
            // the pushed path may reduce further, so the gain is only known afterwards
            if (d - 2 * k - 2 > max_delta + 2 * (int64_t)c.he.size()) continue;
            Path np = push(c, i1, k, w);
            Path r = reduce_path(np);
            Weights nw = weights_of(m_, r);
            if (r.empty() || !is_normal(m_, nw)) fail(ErrorKind::verification, "vertex push broke normality");
            if (sum(nw) - sum(w) > max_delta) continue;
            out.push_back(std::move(nw));
        }
        return out;
    }

private:
    Path push(const TracedComponent& c, int i1, int k, const Weights& w) const
    {
        const int d = m_.degree();
        const int n = (int)c.he.size();
        int h0 = m_.link_he[(i1 - 1 + d) % d];
        auto [t0, c0] = m_.link_corner[(i1 - 1 + d) % d];
        int e0 = edge_of(h0);
        int idx0 = m_.tris[t0][c0].agrees ? (int)w[e0] - 1 : 0;
        int at = -1;
        for (int i = 0; i < n; ++i)
            if (edge_of(c.he[i]) == e0 && c.idx[i] == idx0) at = i;
        if (at < 0) fail(ErrorKind::verification, "vertex push: strand not found");
        Path p(n);
        if (c.he[at] == h0) {
            for (int i = 0; i < n; ++i) p[i] = c.he[(at + i) % n];
        } else {
            // traversed clockwise: reverse so the strand reads forward
            for (int i = 0; i < n; ++i) p[i] = rev(c.he[((at - i) % n + n) % n]);
        }
        if (p[0] != h0) fail(ErrorKind::verification, "vertex push: orientation mismatch");
        for (int q = 0; q <= k; ++q)
            if (p[q] != m_.link_he[(i1 - 1 + q + d) % d]) fail(ErrorKind::verification, "vertex push: strand mismatch");
        Path out;
        out.reserve(n + d);
        for (int q = 0; q <= d - k - 2; ++q) out.push_back(rev(m_.link_he[((i1 - 2 - q) % d + d) % d]));
        for (int i = k + 1; i < n; ++i) out.push_back(p[i]);
        return out;
    }

    static int64_t sum(const Weights& w)
    {
        int64_t s = 0;
        for (auto x : w) s += x;
        return s;
    }

    Weights descend(Weights w) const
    {
        while (true) {
            auto ps = pushes(w, -1);
            if (ps.empty()) return w;
            w = *std::min_element(ps.begin(), ps.end(),
                                  [](const Weights& a, const Weights& b) { return sum(a) < sum(b); });
        }
    }

    std::pair<Weights, std::optional<Weights>> plateau(const Weights& w) const
    {
        const int64_t base = sum(w);
        std::set<Weights> seen{w};
        std::deque<Weights> q{w};
        while (!q.empty()) {
            Weights cur = q.front();
            q.pop_front();
            for (auto& nw : pushes(cur, 0)) {
                if (sum(nw) < base) return {w, nw};
                if (seen.insert(nw).second) {
                    if (seen.size() > 20000) fail(ErrorKind::resource, "canonical form search too large");
                    q.push_back(nw);
                }
            }
        }
        return {*seen.begin(), std::nullopt};
    }

    const SurfaceModel& m_;
};

} // namespace mlab
