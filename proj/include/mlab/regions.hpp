#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "arrangement.hpp"

namespace mlab {

// Complementary regions of a set of pairwise disjoint curves ("barriers") drawn in
// an arrangement. A region is one polygon inside one triangle; regions glue
// across the edge gaps between consecutive barrier points into pieces.
class Regions {
public:
    struct Link {
        int to;
        int he;    // half-edge crossed, or -1 for a chord crossing
        int curve; // chord owner when he == -1
    };

    Regions(const Arrangement& A, std::vector<int> barriers) : A_(A), m_(A.model()), bar_(std::move(barriers))
    {
        const int nc = A.size();
        is_bar_.assign(nc, 0);
        for (int c : bar_) is_bar_[c] = 1;
        for (size_t i = 0; i < bar_.size(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (A.count_crossings(bar_[i], bar_[j]) != 0)
                    fail(ErrorKind::precondition, "barrier curves are not disjoint");
        ix_ = A.index();
        build();
    }

    int n_regions() const { return n_regions_; }
    int n_pieces() const { return n_pieces_; }
    int piece_of_region(int r) const { return piece_[r]; }
    int region_tri(int r) const { return rtri_[r]; }
    const std::vector<std::vector<Link>>& links() const { return adj_; }

    // region on the right / left of segment s of barrier curve c
    int right_region(int c, int s) const { return chord_right_.at({c, s}); }
    int left_region(int c, int s) const { return chord_left_.at({c, s}); }
    int right_piece(int c) const { return piece_[right_region(c, 0)]; }
    int left_piece(int c) const { return piece_[left_region(c, 0)]; }

    // piece holding a curve disjoint from all barriers (located at its point 0)
    int piece_of_curve(int c) const
    {
        if (is_bar_[c]) fail(ErrorKind::precondition, "curve is a barrier");
        return piece_[gap_region(c, 0)];
    }

    int vertex_piece() const { return piece_[gap_reg_[0][0][0]]; }

    // Euler characteristic of each piece
    std::vector<int> euler() const
    {
        std::vector<int> chi(n_pieces_, 0);
        for (int r = 0; r < n_regions_; ++r) ++chi[piece_[r]];
        for (int e = 0; e < m_.n_edges; ++e)
            for (size_t k = 0; k < gap_reg_[e][0].size(); ++k) --chi[piece_[gap_reg_[e][0][k]]];
        ++chi[vertex_piece()];
        return chi;
    }

    std::vector<int> boundary_counts() const
    {
        std::vector<int> b(n_pieces_, 0);
        for (int c : bar_) {
            ++b[left_piece(c)];
            ++b[right_piece(c)];
        }
        return b;
    }

    // Region of the edge gap holding point i of curve c (c not a barrier).
    int gap_region(int c, int i) const
    {
        int e = edge_of(A_.path(c)[i]);
        int64_t key = A_.key(c, i);
        int k = 0;
        for (auto& p : ix_.pts[e])
            if (is_bar_[p.first] && A_.key(p.first, p.second) < key) ++k;
        return gap_reg_[e][0][k];
    }

    // Shortest region path from any source to any target; passable chords belong
    // to curves in `pass` (bit index = position in pass). Every curve in `pass`
    // must be crossed at least once. Regions may repeat, so the caller decides
    // whether a route is usable (`accept`); rejected routes send the search on to
    // longer walks. Returns half-edges along the way plus the region sequence.
    struct Route {
        std::vector<int> regions;
        Path he;
    };
    using RouteCheck = std::function<bool(const Route&)>;

    std::optional<Route> route(const std::vector<int>& sources, const std::vector<char>& target,
                               const std::vector<int>& pass, const std::vector<char>& region_ok,
                               const RouteCheck& accept = {}) const
    {
        auto r = state_route(sources, target, pass, region_ok);
        if (!r || !accept || accept(*r)) return r;
        return walk_route(sources, target, pass, region_ok, accept, (int)r->regions.size());
    }

private:
    int pass_bit(const std::vector<int>& pass, int curve) const
    {
        auto it = std::find(pass.begin(), pass.end(), curve);
        return it == pass.end() ? -1 : (int)(it - pass.begin());
    }

    // iterative deepening over walks (no immediate step back), lengths from_len up
    std::optional<Route> walk_route(const std::vector<int>& sources, const std::vector<char>& target,
                                    const std::vector<int>& pass, const std::vector<char>& region_ok,
                                    const RouteCheck& accept, int from_len) const
    {
        const int full = (1 << pass.size()) - 1;
        // distance to a target ignoring the mask: an admissible bound
        std::vector<int> dist(n_regions_, INT32_MAX);
        std::deque<int> q;
        for (int r = 0; r < n_regions_; ++r)
            if (target[r] && region_ok[r]) {
                dist[r] = 0;
                q.push_back(r);
            }
        while (!q.empty()) {
            int r = q.front();
            q.pop_front();
            for (auto& l : adj_[r]) {
                if (!region_ok[l.to] || dist[l.to] != INT32_MAX) continue;
                if (l.he < 0 && pass_bit(pass, l.curve) < 0) continue;
                dist[l.to] = dist[r] + 1;
                q.push_back(l.to);
            }
        }
        Route cur;
        std::vector<const Link*> links;
        int64_t budget = 4000000;
        int bound = 0;
        auto dfs = [&](auto&& self, int r, int mask) -> bool {
            if (--budget < 0) fail(ErrorKind::resource, "arc search exceeded its budget");
            if (target[r] && mask == full && accept(cur)) return true;
            if ((int)cur.regions.size() + dist[r] > bound) return false;
            for (auto& l : adj_[r]) {
                if (!region_ok[l.to] || dist[l.to] == INT32_MAX) continue;
                // crossing the same chord straight back
                if (!links.empty() && links.back()->to == r && l.to == cur.regions[cur.regions.size() - 2] &&
                    l.he == (links.back()->he < 0 ? -1 : rev(links.back()->he)) && l.curve == links.back()->curve)
                    continue;
                int nm = mask;
                if (l.he < 0) {
                    int b = pass_bit(pass, l.curve);
                    if (b < 0) continue;
                    nm |= 1 << b;
                }
                cur.regions.push_back(l.to);
                links.push_back(&l);
                if (l.he >= 0) cur.he.push_back(l.he);
                if (self(self, l.to, nm)) return true;
                if (l.he >= 0) cur.he.pop_back();
                links.pop_back();
                cur.regions.pop_back();
            }
            return false;
        };
        for (bound = from_len; bound <= from_len + 4 * n_regions_; ++bound)
            for (int s : sources) {
                if (!region_ok[s] || dist[s] == INT32_MAX) continue;
                cur = Route{{s}, {}};
                links.clear();
                if (dfs(dfs, s, 0)) return cur;
            }
        return std::nullopt;
    }

    std::optional<Route> state_route(const std::vector<int>& sources, const std::vector<char>& target,
                               const std::vector<int>& pass, const std::vector<char>& region_ok) const
    {
        const int full = (1 << pass.size()) - 1;
        const int S = n_regions_ * (full + 1);
        std::vector<int> prev(S, -2), via(S, -1);
        std::deque<int> q;
        for (int r : sources) {
            if (!region_ok[r]) continue;
            int s = r * (full + 1);
            if (prev[s] == -2) {
                prev[s] = -1;
                q.push_back(s);
            }
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop_front();
            int r = s / (full + 1), mask = s % (full + 1);
            if (target[r] && mask == full) {
                Route out;
                for (int x = s; x != -1; x = prev[x]) {
                    out.regions.push_back(x / (full + 1));
                    if (via[x] >= 0) out.he.push_back(via[x]);
                }
                std::reverse(out.regions.begin(), out.regions.end());
                std::reverse(out.he.begin(), out.he.end());
                return out;
            }
            for (auto& l : adj_[r]) {
                if (!region_ok[l.to]) continue;
                int nm = mask;
                if (l.he < 0) {
                    auto it = std::find(pass.begin(), pass.end(), l.curve);
                    if (it == pass.end()) continue;
                    nm |= 1 << (it - pass.begin());
                }
                int ns = l.to * (full + 1) + nm;
                if (prev[ns] != -2) continue;
                prev[ns] = s;
                via[ns] = l.he;
                q.push_back(ns);
            }
        }
        return std::nullopt;
    }

private:
    void build()
    {
        gap_reg_.assign(m_.n_edges, {});
        for (int e = 0; e < m_.n_edges; ++e) {
            int nb = 0;
            for (auto& p : ix_.pts[e])
                if (is_bar_[p.first]) ++nb;
            gap_reg_[e][0].assign(nb + 1, -1);
            gap_reg_[e][1].assign(nb + 1, -1);
        }
        n_regions_ = 0;
        std::vector<std::pair<int, int>> chord_regions; // per open chord: (inner, outer)
        for (int t = 0; t < m_.n_tris; ++t) {
            int cur = n_regions_++;
            rtri_.push_back(t);
            std::vector<std::pair<std::pair<int, int>, int>> stack; // chord, outer region
            for (int j = 0; j < 3; ++j) {
                const Side& sd = m_.tris[t][j];
                const int e = sd.edge;
                // barrier points in ccw order along this side
                std::vector<std::pair<int, int>> bp;
                for (auto& p : ix_.pts[e])
                    if (is_bar_[p.first]) bp.push_back(p);
                if (!sd.agrees) std::reverse(bp.begin(), bp.end());
                const int nb = (int)bp.size();
                const int slot = (m_.inc[e][0].tri == t && m_.inc[e][0].side == j) ? 0 : 1;
                auto set_gap = [&](int g) { gap_reg_[e][slot][sd.agrees ? g : nb - g] = cur; };
                set_gap(0);
                for (int g = 0; g < nb; ++g) {
                    auto [c, i] = bp[g];
                    const Path& P = A_.path(c);
                    const int n = (int)P.size();
                    bool starts = m_.dst(P[i]) == t; // this point starts segment i here
                    std::pair<int, int> chord{c, starts ? i : (i - 1 + n) % n};
                    if (!stack.empty() && stack.back().first == chord) {
                        int inner = cur;
                        cur = stack.back().second;
                        stack.pop_back();
                        // the chord was opened at its other endpoint
                        bool opened_at_start = !starts;
                        set_chord(chord, inner, cur, opened_at_start);
                    } else {
                        stack.push_back({chord, cur});
                        cur = n_regions_++;
                        rtri_.push_back(t);
                    }
                    set_gap(g + 1);
                }
            }
            if (!stack.empty()) fail(ErrorKind::verification, "regions: crossing barrier chords");
        }
        adj_.assign(n_regions_, {});
        std::vector<int> uf(n_regions_);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (int e = 0; e < m_.n_edges; ++e)
            for (size_t k = 0; k < gap_reg_[e][0].size(); ++k) {
                int r0 = gap_reg_[e][0][k], r1 = gap_reg_[e][1][k];
                if (r0 < 0 || r1 < 0) fail(ErrorKind::verification, "regions: unassigned gap");
                adj_[r0].push_back({r1, 2 * e, -1});
                adj_[r1].push_back({r0, 2 * e + 1, -1});
                uf[find(r0)] = find(r1);
            }
        for (auto& [ch, rr] : chord_right_) {
            int l = chord_left_[ch];
            adj_[rr].push_back({l, -1, ch.first});
            adj_[l].push_back({rr, -1, ch.first});
        }
        std::map<int, int> pid;
        piece_.assign(n_regions_, 0);
        for (int r = 0; r < n_regions_; ++r) {
            int root = find(r);
            auto it = pid.find(root);
            if (it == pid.end()) it = pid.emplace(root, (int)pid.size()).first;
            piece_[r] = it->second;
        }
        n_pieces_ = (int)pid.size();
    }

    void set_chord(std::pair<int, int> chord, int inner, int outer, bool opened_at_start)
    {
        // inner lies on the ccw arc from the opening endpoint: that is the right
        // side when the chord was opened at its start
        chord_right_[chord] = opened_at_start ? inner : outer;
        chord_left_[chord] = opened_at_start ? outer : inner;
    }

    const Arrangement& A_;
    const SurfaceModel& m_;
    std::vector<int> bar_;
    std::vector<char> is_bar_;
    Arrangement::EdgeIndex ix_;
    int n_regions_ = 0, n_pieces_ = 0;
    std::vector<int> rtri_, piece_;
    std::vector<std::array<std::vector<int>, 2>> gap_reg_; // [edge][slot][edge gap]
    std::map<std::pair<int, int>, int> chord_right_, chord_left_;
    std::vector<std::vector<Link>> adj_;
};

struct SurfacePiece {
    int genus = 0;
    int boundary_count = 0;
    int euler = 0;
    std::vector<int> boundary_owners; // input curve index per boundary circle
    std::vector<int> content;         // tracked curve indices inside the piece
};

// Cut along pairwise disjoint curves; tracked curves (disjoint from the cut
// curves) are reported by piece.
inline std::vector<SurfacePiece> cut_along(const Surface& S, const std::vector<CurveClass>& cuts,
                                           const std::vector<CurveClass>& tracked = {})
{
    Arrangement A(S);
    std::vector<int> bars;
    for (auto& c : cuts) {
        int id = A.add(c);
        for (int b : bars)
            if (A.count_crossings(id, b)) fail(ErrorKind::precondition, "cut curves are not disjoint");
        bars.push_back(id);
    }
    std::vector<int> tr;
    for (auto& c : tracked) {
        int id = A.add(c);
        for (int b : bars)
            if (A.count_crossings(id, b)) fail(ErrorKind::precondition, "tracked curve meets a cut curve");
        tr.push_back(id);
    }
    Regions R(A, bars);
    auto chi = R.euler();
    auto bc = R.boundary_counts();
    std::vector<SurfacePiece> out(R.n_pieces());
    for (int p = 0; p < R.n_pieces(); ++p) {
        out[p].euler = chi[p];
        out[p].boundary_count = bc[p];
        int twice = 2 - chi[p] - bc[p];
        if (twice < 0 || twice % 2) fail(ErrorKind::verification, "cut piece with inconsistent Euler data");
        out[p].genus = twice / 2;
    }
    for (size_t i = 0; i < bars.size(); ++i) {
        out[R.left_piece(bars[i])].boundary_owners.push_back((int)i);
        out[R.right_piece(bars[i])].boundary_owners.push_back((int)i);
    }
    for (size_t i = 0; i < tr.size(); ++i) out[R.piece_of_curve(tr[i])].content.push_back((int)i);
    return out;
}

} // namespace mlab
