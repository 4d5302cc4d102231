#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "curve.hpp"
#include "surface.hpp"

namespace mlab {

// Several closed curves drawn together in the triangulation. Each curve is a
// cyclic list of crossing points with edges; points on one edge are ordered by
// `key` (edge orientation). Segment i of a curve lies in dst(he[i]) and joins
// point i to point i+1.
struct Crossing {
    int c1, s1; // curve, segment
    int c2, s2;
};

class Arrangement {
public:
    explicit Arrangement(const Surface& S) : S_(&S), m_(&S.model()) {}

    const Surface& surface() const { return *S_; }
    const SurfaceModel& model() const { return *m_; }
    int size() const { return (int)he_.size(); }
    const Path& path(int c) const { return he_[c]; }
    int64_t key(int c, int i) const { return key_[c][i]; }

    // add a curve in normal position; only the new curve is moved to remove
    // bigons with the curves already present
    int add(const CurveClass& cls, bool minimize = true)
    {
        auto comps = trace_components(*m_, cls.w);
        if (comps.size() != 1) fail(ErrorKind::precondition, "arrangement: curve is not connected");
        return add_traced(comps[0], minimize);
    }

    int add_traced(const TracedComponent& tc, bool minimize = true)
    {
        const int c = size();
        he_.push_back(tc.he);
        key_.emplace_back(tc.he.size(), 0);
        merge_in(c, tc.idx);
        if (minimize)
            for (int a = 0; a < c; ++a) minimize_pair(c, a);
        return c;
    }

    // ------------------------------------------------------------ geometry
    struct EdgeIndex {
        std::vector<std::vector<std::pair<int, int>>> pts; // per edge, sorted (curve, point)
        std::vector<std::vector<int>> rank;                // per curve per point
    };

    EdgeIndex index() const
    {
        EdgeIndex ix;
        ix.pts.assign(m_->n_edges, {});
        ix.rank.resize(size());
        for (int c = 0; c < size(); ++c) {
            ix.rank[c].assign(he_[c].size(), 0);
            for (int i = 0; i < (int)he_[c].size(); ++i) ix.pts[edge_of(he_[c][i])].push_back({c, i});
        }
        std::vector<std::tuple<int64_t, int, int>> buf;
        for (auto& v : ix.pts) {
            buf.clear();
            for (auto& [c, i] : v) buf.emplace_back(key_[c][i], c, i);
            std::sort(buf.begin(), buf.end());
            for (int r = 0; r < (int)v.size(); ++r) {
                auto [k, c, i] = buf[r];
                v[r] = {c, i};
                ix.rank[c][i] = r;
            }
        }
        return ix;
    }

    static constexpr int64_t kBig = int64_t(1) << 40;

    // position of point i of curve c on the boundary circle of triangle t
    int64_t circle(const EdgeIndex& ix, int t, int c, int i) const
    {
        int e = edge_of(he_[c][i]);
        int j = m_->side_in(t, e);
        int64_t n = (int64_t)ix.pts[e].size();
        int64_t r = ix.rank[c][i];
        int64_t pos = m_->tris[t][j].agrees ? r : n - 1 - r;
        return j * kBig + pos;
    }

    struct Chord {
        int curve, seg;
        int64_t p, q; // circle coordinates of start / end
    };

    std::vector<std::vector<Chord>> chords(const EdgeIndex& ix, int c) const
    {
        std::vector<std::vector<Chord>> out(m_->n_tris);
        const int n = (int)he_[c].size();
        for (int i = 0; i < n; ++i) {
            int t = m_->dst(he_[c][i]);
            out[t].push_back({c, i, circle(ix, t, c, i), circle(ix, t, c, (i + 1) % n)});
        }
        return out;
    }

    static bool in_ccw_open(int64_t a, int64_t b, int64_t x)
    {
        // x strictly inside the ccw arc from a to b
        if (a < b) return a < x && x < b;
        return x > a || x < b;
    }
    static bool cross(const Chord& u, const Chord& v)
    {
        return in_ccw_open(u.p, u.q, v.p) != in_ccw_open(u.p, u.q, v.q);
    }

    // Calls f(u, v) for every crossing pair u in U, v in V (chords of one
    // triangle). Chords of one curve never cross each other, so a sweep over the
    // endpoints with one stack per side finds the pairs in output-sensitive time.
    template <class F>
    static void for_each_cross(const std::vector<Chord>& U, const std::vector<Chord>& V, F&& f)
    {
        if (U.empty() || V.empty()) return;
        struct Ev {
            int64_t at;
            int side, k;
            bool open;
        };
        std::vector<Ev> ev;
        ev.reserve(2 * (U.size() + V.size()));
        for (int side = 0; side < 2; ++side) {
            const auto& W = side ? V : U;
            for (int k = 0; k < (int)W.size(); ++k) {
                ev.push_back({std::min(W[k].p, W[k].q), side, k, true});
                ev.push_back({std::max(W[k].p, W[k].q), side, k, false});
            }
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) { return a.at < b.at; });
        std::vector<std::pair<int64_t, int>> open[2]; // (start, chord)
        for (auto& e : ev) {
            if (e.open) {
                open[e.side].push_back({e.at, e.k});
                continue;
            }
            auto& mine = open[e.side];
            int64_t start = mine.back().first;
            mine.pop_back();
            const auto& other = open[1 - e.side];
            for (size_t j = other.size(); j-- > 0 && other[j].first > start;) {
                if (e.side == 0) f(U[e.k], V[other[j].second]);
                else f(U[other[j].second], V[e.k]);
            }
        }
    }

    std::vector<Crossing> crossings(const EdgeIndex& ix, int c, int a) const
    {
        auto cc = chords(ix, c), aa = chords(ix, a);
        std::vector<Crossing> out;
        for (int t = 0; t < m_->n_tris; ++t)
            for_each_cross(cc[t], aa[t], [&](const Chord& u, const Chord& v) { out.push_back({c, u.seg, a, v.seg}); });
        std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
            return std::pair(x.s1, x.s2) < std::pair(y.s1, y.s2);
        });
        return out;
    }

    int64_t count_crossings(int c, int a) const { return (int64_t)crossings(index(), c, a).size(); }

    // ------------------------------------------------------------ bigons
    // Remove bigons between c and a by rerouting c. Returns number removed.
    int minimize_pair(int c, int a)
    {
        int removed = 0;
        // innermost bigons with distinct corners are disjoint disks: remove them together
        while (true) {
            auto bs = find_bigons(c, a, true);
            if (bs.empty()) break;
            reroute(c, a, bs);
            removed += (int)bs.size();
        }
        return removed;
    }

    bool has_bigon(int c, int a) const { return !find_bigons(c, a, false).empty(); }

    // rank each curve's points along its own segments for one partner curve
    struct Along {
        int seg;
        int64_t ord; // position along the segment
    };

private:
    struct Bigon {
        int sx, sy;   // c segments of x and y (alpha runs forward from x to y)
        int ax, ay;   // a segments of x and y
        int bdir;     // +1: beta forward along a, -1 backward
        Crossing x;   // for the side test
    };

    // ccw distance from p of a chord endpoint lying on the ccw arc p->q
    static int64_t arc_dist(int64_t p, int64_t x)
    {
        int64_t span = 3 * kBig;
        return ((x - p) % span + span) % span;
    }

    std::vector<Bigon> find_bigons(int c, int a, bool all) const
    {
        std::vector<Bigon> found;
        EdgeIndex ix = index();
        auto cc = chords(ix, c), aa = chords(ix, a);
        struct X {
            int sc, sa;
            int64_t oc, oa;
        };
        std::vector<X> xs;
        for (int t = 0; t < m_->n_tris; ++t)
            for_each_cross(cc[t], aa[t], [&](const Chord& u, const Chord& v) {
                int64_t ec = in_ccw_open(u.p, u.q, v.p) ? v.p : v.q;
                int64_t ea = in_ccw_open(v.p, v.q, u.p) ? u.p : u.q;
                xs.push_back({u.seg, v.seg, arc_dist(u.p, ec), arc_dist(v.p, ea)});
            });
        const int n = (int)xs.size();
        if (n < 2) return found;
        std::vector<int> byc(n), bya(n), posa(n);
        std::vector<char> used(n, 0);
        for (int i = 0; i < n; ++i) byc[i] = bya[i] = i;
        std::sort(byc.begin(), byc.end(), [&](int p, int q) { return std::pair(xs[p].sc, xs[p].oc) < std::pair(xs[q].sc, xs[q].oc); });
        std::sort(bya.begin(), bya.end(), [&](int p, int q) { return std::pair(xs[p].sa, xs[p].oa) < std::pair(xs[q].sa, xs[q].oa); });
        for (int i = 0; i < n; ++i) posa[bya[i]] = i;
        const int lc = (int)he_[c].size(), la = (int)he_[a].size();

        for (int k = 0; k < n; ++k) {
            int xi = byc[k], yi = byc[(k + 1) % n];
            if (used[xi] || used[yi]) continue;
            const X &x = xs[xi], &y = xs[yi];
            // alpha: forward along c from x to y
            bool same_seg = x.sc == y.sc;
            bool wraps = same_seg && !(x.oc < y.oc);
            if (wraps) continue; // alpha would be all of c
            Path alpha;
            if (!same_seg)
                for (int s = x.sc + 1;; ++s) {
                    int q = s % lc;
                    alpha.push_back(he_[c][q]);
                    if (q == y.sc) break;
                }
            for (int bdir : {+1, -1}) {
                int want = (posa[xi] + (bdir > 0 ? 1 : n - 1)) % n;
                if (bya[want] != yi) continue;
                Path beta;
                if (bdir > 0) {
                    bool ss = x.sa == y.sa;
                    if (ss && !(x.oa < y.oa)) continue;
                    if (!ss)
                        for (int s = x.sa + 1;; ++s) {
                            int q = s % la;
                            beta.push_back(he_[a][q]);
                            if (q == y.sa) break;
                        }
                } else {
                    bool ss = x.sa == y.sa;
                    if (ss && !(y.oa < x.oa)) continue;
                    if (!ss)
                        for (int s = x.sa;; --s) {
                            int q = ((s % la) + la) % la;
                            beta.push_back(rev(he_[a][q]));
                            if (((q - 1) % la + la) % la == y.sa) break;
                        }
                }
                Path loop = alpha;
                Path rb = reverse_path(beta);
                loop.insert(loop.end(), rb.begin(), rb.end());
                if (!S_->dehn().is_trivial(path_word(*m_, loop))) continue;
                found.push_back(Bigon{x.sc, y.sc, x.sa, y.sa, bdir, Crossing{c, x.sc, a, x.sa}});
                used[xi] = used[yi] = 1;
                break;
            }
            if (!all && !found.empty()) break;
        }
        return found;
    }

    // Replace alpha by a copy of beta pushed off a, for pairwise disjoint bigons.
    void reroute(int c, int a, const std::vector<Bigon>& bs)
    {
        EdgeIndex ix = index();
        const int lc = (int)he_[c].size(), la = (int)he_[a].size();
        std::vector<char> left(bs.size());
        for (size_t j = 0; j < bs.size(); ++j) {
            const Bigon& b = bs[j];
            // side of beta holding c's incoming point, decided in the triangle of x
            int t = m_->dst(he_[c][b.sx]);
            int64_t pin = circle(ix, t, c, b.sx);
            int64_t u = circle(ix, t, a, b.ax), w = circle(ix, t, a, (b.ax + 1) % la);
            int64_t from = b.bdir > 0 ? u : w, to = b.bdir > 0 ? w : u;
            left[j] = in_ccw_open(to, from, pin);
        }

        // normalize keys so there is room next to every point
        for (int k = 0; k < size(); ++k)
            for (int i = 0; i < (int)he_[k].size(); ++i) key_[k][i] = 4 * (int64_t)ix.rank[k][i] + 2;

        std::vector<char> drop(lc, 0);
        std::vector<int> after(lc, -1);
        for (size_t j = 0; j < bs.size(); ++j) {
            for (int s = bs[j].sx; s != bs[j].sy;) {
                s = (s + 1) % lc;
                drop[s] = 1;
            }
            after[bs[j].sx] = (int)j;
        }
        Path nh;
        std::vector<int64_t> nk;
        for (int i = 0; i < lc; ++i) {
            if (!drop[i]) {
                nh.push_back(he_[c][i]);
                nk.push_back(key_[c][i]);
            }
            if (after[i] < 0) continue;
            const Bigon& b = bs[after[i]];
            auto put = [&](int q, int hh) {
                bool up = (hh % 2 == 0) == (bool)left[after[i]];
                nh.push_back(hh);
                nk.push_back(key_[a][q] + (up ? 1 : -1));
            };
            if (b.ax == b.ay) continue;
            if (b.bdir > 0)
                for (int s = b.ax + 1;; ++s) {
                    int q = s % la;
                    put(q, he_[a][q]);
                    if (q == b.ay) break;
                }
            else
                for (int s = b.ax;; --s) {
                    int q = ((s % la) + la) % la;
                    put(q, rev(he_[a][q]));
                    if (((q - 1) % la + la) % la == b.ay) break;
                }
        }
        drop_backtracks(nh, nk);
        if (nh.empty()) fail(ErrorKind::verification, "bigon removal collapsed a curve");
        he_[c] = std::move(nh);
        key_[c] = std::move(nk);
    }

    static void drop_backtracks(Path& h, std::vector<int64_t>& k)
    {
        Path oh;
        std::vector<int64_t> ok;
        for (size_t i = 0; i < h.size(); ++i) {
            if (!oh.empty() && oh.back() == rev(h[i])) {
                oh.pop_back();
                ok.pop_back();
            } else {
                oh.push_back(h[i]);
                ok.push_back(k[i]);
            }
        }
        size_t i = 0, j = oh.size();
        while (j - i >= 2 && oh[i] == rev(oh[j - 1])) {
            ++i;
            --j;
        }
        h.assign(oh.begin() + i, oh.begin() + j);
        k.assign(ok.begin() + i, ok.begin() + j);
    }

    // ------------------------------------------------------------ merging
    // +1 when point P lies left of Q for travel through half-edge 2e (larger
    // index along the edge), -1 when right, 0 when the paths never separate
    int follow(int pc, int pi, int pd, int qc, int qi, int qd) const
    {
        const Path &P = he_[pc], &Q = he_[qc];
        const int lp = (int)P.size(), lq = (int)Q.size();
        auto H = [](const Path& X, int i, int d) {
            int n = (int)X.size();
            i = ((i % n) + n) % n;
            return d > 0 ? X[i] : rev(X[i]);
        };
        int hp = H(P, pi, pd);
        const int limit = lp + lq + 2;
        for (int step = 1; step <= limit; ++step) {
            int np = H(P, pi + (pd > 0 ? step : -step), pd);
            int nq = H(Q, qi + (qd > 0 ? step : -step), qd);
            if (np != nq) {
                int tt = m_->dst(hp);
                int j = m_->side_in(tt, edge_of(hp));
                int jp = m_->side_in(tt, edge_of(np)), jq = m_->side_in(tt, edge_of(nq));
                if (jp == j || jq == j) return 0;
                return jp == (j + 2) % 3 ? +1 : -1;
            }
            hp = np;
        }
        return 0;
    }

    int side_of(int pc, int pi, int qc, int qi) const
    {
        int e = edge_of(he_[pc][pi]);
        int fwd = 2 * e;
        int pd = he_[pc][pi] == fwd ? 1 : -1, qd = he_[qc][qi] == fwd ? 1 : -1;
        if (int r = follow(pc, pi, pd, qc, qi, qd)) return r;
        if (int r = follow(pc, pi, -pd, qc, qi, -qd)) return -r;
        if (pc < qc) return he_[pc][pi] == fwd ? 1 : -1;
        return he_[qc][qi] == fwd ? -1 : 1;
    }

    void merge_in(int c, const std::vector<int>& idx)
    {
        EdgeIndex ix;
        ix.pts.assign(m_->n_edges, {});
        for (int k = 0; k < c; ++k)
            for (int i = 0; i < (int)he_[k].size(); ++i) ix.pts[edge_of(he_[k][i])].push_back({k, i});
        std::vector<std::vector<int>> mine(m_->n_edges);
        for (int i = 0; i < (int)he_[c].size(); ++i) mine[edge_of(he_[c][i])].push_back(i);
        for (int e = 0; e < m_->n_edges; ++e) {
            auto& old = ix.pts[e];
            std::sort(old.begin(), old.end(), [&](auto& p, auto& q) { return key_[p.first][p.second] < key_[q.first][q.second]; });
            auto& nw = mine[e];
            std::sort(nw.begin(), nw.end(), [&](int p, int q) { return idx[p] < idx[q]; });
            size_t i = 0, j = 0;
            int64_t r = 0;
            while (i < old.size() || j < nw.size()) {
                bool take_new;
                if (i == old.size())
                    take_new = true;
                else if (j == nw.size())
                    take_new = false;
                else
                    take_new = side_of(c, nw[j], old[i].first, old[i].second) < 0;
                if (take_new)
                    key_[c][nw[j++]] = 4 * r++ + 2;
                else {
                    key_[old[i].first][old[i].second] = 4 * r++ + 2;
                    ++i;
                }
            }
        }
    }

    const Surface* S_;
    const SurfaceModel* m_;
    std::vector<Path> he_;
    std::vector<std::vector<int64_t>> key_;
};

inline int64_t intersection_number(const Surface& S, const CurveClass& x, const CurveClass& y)
{
    Arrangement A(S);
    A.add(x);
    A.add(y);
    return A.count_crossings(1, 0);
}

} // namespace mlab
