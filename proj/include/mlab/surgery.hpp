#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "handlebody.hpp"
#include "mcg.hpp"
#include "regions.hpp"

namespace mlab {

// An embedded arc between two curves, drawn against fixed representatives.
// Segment / side anchors refer to from_path and to_path; `he` lists the edges the
// arc crosses, starting in the triangle of from segment from_seg.
struct ArcEmbedding {
    Path from_path, to_path;
    int from_seg = 0, to_seg = 0;
    bool from_right = true, to_right = true;
    Path he;
};

// forward loop of p starting and ending in segment s; reversed when !fwd
inline Path loop_at(const Path& p, int s, bool fwd)
{
    const int n = (int)p.size();
    Path out;
    for (int k = 1; k <= n; ++k) out.push_back(p[(s + k) % n]);
    return fwd ? out : reverse_path(out);
}

// forward sub-path of p from segment a to segment b (points a+1 .. b)
inline Path sub_path(const Path& p, int a, int b)
{
    const int n = (int)p.size();
    Path out;
    for (int s = a; s != b; s = (s + 1) % n) out.push_back(p[(s + 1) % n]);
    return out;
}

namespace detail {

// The curve an arc closes up to: band sum of its two end curves, or (dual case)
// the arc followed back along the curve it starts and ends on.
inline Path closed_path(const ArcEmbedding& tau, bool band)
{
    Path p;
    if (band) {
        p = loop_at(tau.from_path, tau.from_seg, tau.from_right);
        p.insert(p.end(), tau.he.begin(), tau.he.end());
        Path l2 = loop_at(tau.to_path, tau.to_seg, tau.to_right);
        p.insert(p.end(), l2.begin(), l2.end());
        Path back = reverse_path(tau.he);
        p.insert(p.end(), back.begin(), back.end());
    } else {
        p = tau.he;
        Path back = sub_path(tau.to_path, tau.to_seg, tau.from_seg);
        p.insert(p.end(), back.begin(), back.end());
    }
    return reduce_path(p);
}

struct Anchor {
    int seg;
    bool right;
};

// Arc search. from == to (same index) asks for an arc leaving c on its left and
// returning on its right.
inline std::optional<ArcEmbedding> search_arc(const Surface& S, const CurveClass& from, const CurveClass* to,
                                              const std::vector<CurveClass>& avoid,
                                              const std::vector<CurveClass>& must_hit)
{
    Arrangement A(S);
    std::vector<int> walls;
    int f = A.add(from);
    walls.push_back(f);
    int t = f;
    if (to) {
        t = A.add(*to);
        walls.push_back(t);
    }
    for (auto& c : avoid) walls.push_back(A.add(c));
    std::vector<int> pass;
    for (auto& c : must_hit) {
        int id = A.add(c);
        for (int w : walls)
            if (A.count_crossings(id, w)) fail(ErrorKind::precondition, "must-hit curve meets a wall curve");
        pass.push_back(id);
    }
    if (pass.size() > 16) fail(ErrorKind::resource, "too many must-hit curves");
    std::vector<int> bars = walls;
    bars.insert(bars.end(), pass.begin(), pass.end());
    Regions R(A, bars);

    const int nr = R.n_regions();
    std::vector<std::vector<Anchor>> src(nr), dst(nr);
    const int nf = (int)A.path(f).size(), nt = (int)A.path(t).size();
    for (int s = 0; s < nf; ++s) {
        if (to) src[R.right_region(f, s)].push_back(Anchor{s, true});
        src[R.left_region(f, s)].push_back(Anchor{s, false});
    }
    for (int s = 0; s < nt; ++s) {
        dst[R.right_region(t, s)].push_back(Anchor{s, true});
        if (to) dst[R.left_region(t, s)].push_back(Anchor{s, false});
    }
    std::vector<int> sources;
    std::vector<char> target(nr, 0), ok(nr, 1);
    for (int r = 0; r < nr; ++r) {
        if (!src[r].empty()) sources.push_back(r);
        if (!dst[r].empty()) target[r] = 1;
    }
    ArcEmbedding arc;
    arc.from_path = A.path(f);
    arc.to_path = A.path(t);
    // a route is usable when some choice of end anchors closes it up into a
    // simple curve: the band sum, or for a dual the arc closed along the curve
    auto accept = [&](const Regions::Route& rt) {
        for (auto& a0 : src[rt.regions.front()])
            for (auto& a1 : dst[rt.regions.back()]) {
                arc.from_seg = a0.seg;
                arc.from_right = a0.right;
                arc.to_seg = a1.seg;
                arc.to_right = a1.right;
                arc.he = rt.he;
                if (path_is_simple(S.model(), closed_path(arc, to != nullptr))) return true;
            }
        return false;
    };
    auto route = R.route(sources, target, pass, ok, accept);
    if (!route) return std::nullopt;
    return arc;
}

} // namespace detail

// Shortest embedded arc from `from` to `to` whose interior misses every curve in
// avoid and crosses every curve in must_hit. Curves in avoid, from and to must be
// pairwise disjoint, and must_hit curves disjoint from all of them.
inline std::optional<ArcEmbedding> connect_arc(const Surface& S, const CurveClass& from, const CurveClass& to,
                                               const std::vector<CurveClass>& avoid = {},
                                               const std::vector<CurveClass>& must_hit = {})
{
    if (from == to) fail(ErrorKind::precondition, "arc endpoints must lie on different curves");
    return detail::search_arc(S, from, &to, avoid, must_hit);
}

// A curve meeting C exactly once: an arc from the left of C back to its right,
// closed up along C. Returns none if C separates in the complement of `avoid`.
inline std::optional<CurveClass> dual_curve(const Surface& S, const CurveClass& C,
                                            const std::vector<CurveClass>& avoid = {},
                                            const std::vector<CurveClass>& must_hit = {})
{
    auto arc = detail::search_arc(S, C, nullptr, avoid, must_hit);
    if (!arc) return std::nullopt;
    Path r = detail::closed_path(*arc, false);
    if (!path_is_simple(S.model(), r)) fail(ErrorKind::verification, "dual curve is not simple");
    CurveClass d = S.canonical(r);
    if (intersection_number(S, C, d) != 1) fail(ErrorKind::verification, "dual curve does not meet C once");
    return d;
}

// D1 and D2 joined by a band along tau.
inline CurveClass join(const Surface& S, const CurveClass& D1, const CurveClass& D2, const ArcEmbedding& tau)
{
    if (S.canonical(tau.from_path) != D1 || S.canonical(tau.to_path) != D2)
        fail(ErrorKind::precondition, "arc endpoints are not on the given curves");
    if (intersection_number(S, D1, D2) != 0) fail(ErrorKind::precondition, "joined curves are not disjoint");
    // each loop is run so that the arc is attached on its right
    Path r = detail::closed_path(tau, true);
    if (!path_is_simple(S.model(), r)) fail(ErrorKind::verification, "band sum is not simple");
    return S.canonical(r);
}

// Segments (on c1, on c2) of every crossing of two curves in minimal position.
inline std::vector<std::pair<int, int>> crossing_segments(const Arrangement& A, int c1, int c2)
{
    std::vector<std::pair<int, int>> out;
    for (auto& x : A.crossings(A.index(), c1, c2)) out.push_back({x.s1, x.s2});
    return out;
}

// Boundary of a neighbourhood of C and sigma, where sigma meets C once.
inline CurveClass band_double(const Surface& S, const CurveClass& C, const CurveClass& sigma)
{
    Arrangement A(S);
    int c = A.add(C);
    int s = A.add(sigma);
    auto xs = crossing_segments(A, c, s);
    if (xs.size() != 1)
        fail(ErrorKind::precondition, "band double needs i(C, sigma) = 1, got " + std::to_string(xs.size()));
    auto [sc, ss] = xs[0];
    const Path& pc = A.path(c);
    const Path& ps = A.path(s);
    Path p = loop_at(pc, sc, true);
    Path l2 = loop_at(ps, ss, true);
    p.insert(p.end(), l2.begin(), l2.end());
    Path l3 = loop_at(pc, sc, false);
    p.insert(p.end(), l3.begin(), l3.end());
    Path l4 = loop_at(ps, ss, false);
    p.insert(p.end(), l4.begin(), l4.end());
    Path r = reduce_path(p);
    if (!path_is_simple(S.model(), r)) fail(ErrorKind::verification, "band double is not simple");
    return S.canonical(r);
}

// X and D meet twice; the four curves made of one half of X and one half of D.
namespace detail {

struct PlacedCrossing {
    int s1;
    int64_t o1; // position along segment s1 of the first curve
    int s2;
    int64_t o2;
};

inline std::vector<PlacedCrossing> placed_crossings(const Arrangement& A, int c1, int c2)
{
    auto ix = A.index();
    auto cc = A.chords(ix, c1), dd = A.chords(ix, c2);
    const int64_t span = 3 * Arrangement::kBig;
    auto dist = [&](int64_t p, int64_t x) { return ((x - p) % span + span) % span; };
    std::vector<PlacedCrossing> out;
    for (size_t t = 0; t < cc.size(); ++t)
        Arrangement::for_each_cross(cc[t], dd[t], [&](const Arrangement::Chord& u, const Arrangement::Chord& v) {
            int64_t eu = Arrangement::in_ccw_open(u.p, u.q, v.p) ? v.p : v.q;
            int64_t ev = Arrangement::in_ccw_open(v.p, v.q, u.p) ? u.p : u.q;
            out.push_back({u.seg, dist(u.p, eu), v.seg, dist(v.p, ev)});
        });
    return out;
}

// forward piece of p from the point (sa, oa) to the point (sb, ob)
inline Path piece(const Path& p, int sa, int64_t oa, int sb, int64_t ob)
{
    if (sa != sb) return sub_path(p, sa, sb);
    if (oa < ob) return {};
    return loop_at(p, sa, true);
}

} // namespace detail

inline std::array<CurveClass, 4> surgery_along_arc(const Surface& S, const CurveClass& X, const CurveClass& D)
{
    Arrangement A(S);
    int x = A.add(X);
    int d = A.add(D);
    auto xs = detail::placed_crossings(A, x, d);
    if (xs.size() != 2) fail(ErrorKind::precondition, "surgery needs i(X, D) = 2, got " + std::to_string(xs.size()));
    const Path& px = A.path(x);
    const Path& pd = A.path(d);
    auto& c1 = xs[0];
    auto& c2 = xs[1];
    // halves of X: 1 -> 2 and 2 -> 1; halves of D as arcs 2 -> 1
    Path x12 = detail::piece(px, c1.s1, c1.o1, c2.s1, c2.o1), x21 = detail::piece(px, c2.s1, c2.o1, c1.s1, c1.o1);
    Path d21 = detail::piece(pd, c2.s2, c2.o2, c1.s2, c1.o2), d12 = detail::piece(pd, c1.s2, c1.o2, c2.s2, c2.o2);
    Path d21b = reverse_path(d12), d12b = reverse_path(d21);
    std::array<Path, 4> raw;
    auto cat = [](Path a, const Path& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    raw[0] = cat(x12, d21);
    raw[1] = cat(x12, d21b);
    raw[2] = cat(x21, d12);
    raw[3] = cat(x21, d12b);
    std::array<CurveClass, 4> out;
    for (int k = 0; k < 4; ++k) {
        Path r = reduce_path(raw[k]);
        if (r.empty()) fail(ErrorKind::verification, "surgery produced an inessential curve");
        out[k] = S.canonical(r);
    }
    return out;
}

// ------------------------------------------------------------------ stripes

struct StripeArc {
    int from = 0, to = 0;  // crossing indices along E (arc runs from -> to)
    bool boundary_parallel = false;
    int partner = -1;      // arc index of the other half of its stripe
};

struct StripeReport {
    std::vector<StripeArc> arcs;
    bool all_stripes = true;
    int64_t crossings = 0; // i(E, Z)
};

namespace detail {

// E drawn against Z; crossings listed along E, positions along Z, and the arcs of
// E on one side of Z paired into stripes.
class StripeScan {
public:
    struct X {
        int eseg;
        int64_t eord;
        int zseg;
        int64_t zord;
        bool rl; // E crosses Z from its right to its left
        int pos = 0;
    };

    // side_genus_one: scan the genus-1 side of Z, otherwise the other side
    StripeScan(const Surface& S, const CurveClass& E, const CurveClass& Z, bool side_genus_one) : S_(S), A_(S)
    {
        z_ = A_.add(Z);
        e_ = A_.add(E);
        Regions R(A_, {z_});
        auto chi = R.euler();
        int n1 = chi[0] == -1 ? 0 : 1;
        if (chi[n1] != -1) fail(ErrorKind::precondition, "Z does not cut off a genus-1 piece");
        int piece = side_genus_one ? n1 : 1 - n1;
        target_left_ = R.left_piece(z_) == piece;

        auto ix = A_.index();
        auto ec = A_.chords(ix, e_), zc = A_.chords(ix, z_);
        const int64_t span = 3 * Arrangement::kBig;
        auto offset = [&](const Arrangement::Chord& u, const Arrangement::Chord& v) {
            int64_t x = Arrangement::in_ccw_open(u.p, u.q, v.p) ? v.p : v.q;
            return ((x - u.p) % span + span) % span;
        };
        for (int t = 0; t < S.model().n_tris; ++t)
            Arrangement::for_each_cross(ec[t], zc[t], [&](const Arrangement::Chord& u, const Arrangement::Chord& v) {
                xs_.push_back({u.seg, offset(u, v), v.seg, offset(v, u), crosses_right_to_left(v, u)});
            });
        std::sort(xs_.begin(), xs_.end(),
                  [](const X& a, const X& b) { return std::pair(a.eseg, a.eord) < std::pair(b.eseg, b.eord); });
        const int n = (int)xs_.size();
        std::vector<int> ord(n);
        for (int k = 0; k < n; ++k) ord[k] = k;
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
            return std::pair(xs_[a].zseg, xs_[a].zord) < std::pair(xs_[b].zseg, xs_[b].zord);
        });
        for (int q = 0; q < n; ++q) xs_[ord[q]].pos = q;
        at_pos_ = ord;

        for (int k = 0; k < n; ++k)
            if (xs_[k].rl == target_left_) arcs_.push_back(StripeArc{k, (k + 1) % n});
        pair_arcs();
    }

    int n() const { return (int)xs_.size(); }
    const std::vector<StripeArc>& arcs() const { return arcs_; }

    StripeReport report() const
    {
        StripeReport r;
        r.arcs = arcs_;
        r.crossings = n();
        for (auto& a : arcs_) r.all_stripes = r.all_stripes && a.boundary_parallel;
        return r;
    }

    // Candidate eliminations, outermost stripes first. Each result is E with the
    // stripe's two arcs pushed across the empty Z sub-arc.
    std::vector<CurveClass> eliminations() const
    {
        std::vector<CurveClass> out;
        for (int i = 0; i < (int)arcs_.size(); ++i) {
            int j = arcs_[i].partner;
            if (j < i) continue;
            for (int which = 0; which < 2; ++which) {
                const StripeArc& a = arcs_[which ? j : i];
                const StripeArc& b = arcs_[which ? i : j];
                int d1 = step_dir(xs_[a.to].pos, xs_[b.from].pos);
                // empty side next to a: its endpoints are adjacent away from b
                if (wrap(xs_[a.to].pos - d1) != xs_[a.from].pos) continue;
                std::vector<Path> pieces;
                for (int k = 0; k < n(); ++k) {
                    if (k == a.from)
                        pieces.push_back(z_walk(xs_[a.from].pos, d1, 1));
                    else if (k == b.from)
                        pieces.push_back(z_walk(xs_[b.from].pos, -d1, 3));
                    else
                        pieces.push_back(e_arc(k));
                }
                Path p;
                for (auto& x : pieces) p.insert(p.end(), x.begin(), x.end());
                Path r = reduce_path(p);
                if (r.empty() || !path_is_simple(S_.model(), r)) continue;
                out.push_back(S_.canonical(r));
            }
        }
        return out;
    }

private:
    int wrap(int q) const { return ((q % n()) + n()) % n(); }

    int step_dir(int from, int to) const
    {
        if (wrap(from + 1) == to) return 1;
        if (wrap(from - 1) == to) return -1;
        return 0;
    }

    // E from crossing k to crossing k+1
    Path e_arc(int k) const
    {
        const Path& pe = A_.path(e_);
        int a = xs_[k].eseg, b = xs_[(k + 1) % n()].eseg;
        if (a == b && k + 1 == n()) return loop_at(pe, a, true);
        return sub_path(pe, a, b);
    }

    // Z from position q to q+1
    Path z_step(int q) const
    {
        const Path& pz = A_.path(z_);
        int a = xs_[at_pos_[q]].zseg, b = xs_[at_pos_[(q + 1) % n()]].zseg;
        if (a == b && q + 1 == n()) return loop_at(pz, a, true);
        return sub_path(pz, a, b);
    }

    Path z_walk(int q, int d, int steps) const
    {
        Path out;
        for (int s = 0; s < steps; ++s) {
            Path x = d > 0 ? z_step(q) : reverse_path(z_step(wrap(q - 1)));
            out.insert(out.end(), x.begin(), x.end());
            q = wrap(q + d);
        }
        return out;
    }

    // a and b cobound a rectangle with two short Z sub-arcs
    bool rectangle(const StripeArc& a, const StripeArc& b) const
    {
        int d1 = step_dir(xs_[a.to].pos, xs_[b.from].pos);
        int d2 = step_dir(xs_[b.to].pos, xs_[a.from].pos);
        if (!d1 || !d2) return false;
        Path p = e_arc(a.from);
        Path x = z_walk(xs_[a.to].pos, d1, 1);
        p.insert(p.end(), x.begin(), x.end());
        x = e_arc(b.from);
        p.insert(p.end(), x.begin(), x.end());
        x = z_walk(xs_[b.to].pos, d2, 1);
        p.insert(p.end(), x.begin(), x.end());
        return S_.dehn().is_trivial(path_word(S_.model(), reduce_path(p)));
    }

    void pair_arcs()
    {
        const int m = (int)arcs_.size();
        std::vector<std::vector<int>> cand(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && rectangle(arcs_[i], arcs_[j])) cand[i].push_back(j);
        // candidate graph has degree <= 2: match from the ends of its paths
        for (;;) {
            int best = -1, bc = 1 << 30;
            for (int i = 0; i < m; ++i) {
                if (arcs_[i].partner >= 0) continue;
                int c = 0;
                for (int j : cand[i]) c += arcs_[j].partner < 0;
                if (c > 0 && c < bc) {
                    bc = c;
                    best = i;
                }
            }
            if (best < 0) break;
            for (int j : cand[best])
                if (arcs_[j].partner < 0) {
                    arcs_[best].partner = j;
                    arcs_[j].partner = best;
                    arcs_[best].boundary_parallel = arcs_[j].boundary_parallel = true;
                    break;
                }
        }
    }

    const Surface& S_;
    Arrangement A_;
    int z_ = 0, e_ = 0;
    bool target_left_ = false;
    std::vector<X> xs_;
    std::vector<int> at_pos_;
    std::vector<StripeArc> arcs_;
};

inline void require_one_meridian(const Surface& S, const CurveClass& c, const char* what)
{
    if (!is_sep_meridian(S, c, 1)) fail(ErrorKind::precondition, std::string(what) + " must be a (1,g-1)-meridian");
}

} // namespace detail

inline StripeReport find_stripes(const Surface& S, const CurveClass& E, const CurveClass& Z)
{
    detail::require_one_meridian(S, Z, "Z");
    auto mi = classify(S, E);
    if (!mi.is_meridian || !mi.separating) fail(ErrorKind::precondition, "E must be a separating meridian");
    if (intersection_number(S, E, delta(S, Z)) != 0) fail(ErrorKind::precondition, "E meets delta(Z)");
    return detail::StripeScan(S, E, Z, true).report();
}

// Removes the outermost stripe of E in the genus-1 side of Z.
inline CurveClass eliminate_stripe(const Surface& S, const CurveClass& E, const CurveClass& Z)
{
    auto rep = find_stripes(S, E, Z);
    detail::StripeScan scan(S, E, Z, true);
    if (scan.arcs().empty() || !std::any_of(rep.arcs.begin(), rep.arcs.end(), [](auto& a) { return a.partner >= 0; }))
        fail(ErrorKind::precondition, "no stripe to eliminate");
    auto type = classify(S, E);
    const int64_t n = rep.crossings;
    auto cands = scan.eliminations();
    // removing the stripe can leave bigons with Z; the clean case first
    for (int64_t cap : {n - 4, n - 8})
        for (auto& c : cands) {
            auto m = intersection_number(S, c, Z);
            if (m > cap || m % 4 != n % 4 || (cap == n - 4 && m != cap)) continue;
            auto t = classify(S, c);
            if (!t.is_meridian || t.separating != type.separating || t.k != type.k) continue;
            return c;
        }
    fail(ErrorKind::verification, "stripe elimination failed");
}

// One step: a (1,g-1)-meridian meeting Z fewer times, with the same delta.
inline CurveClass reduce_intersection(const Surface& S, const CurveClass& X, const CurveClass& Z)
{
    detail::require_one_meridian(S, X, "X");
    detail::require_one_meridian(S, Z, "Z");
    const int64_t n = intersection_number(S, X, Z);
    if (n == 0) return X;
    CurveClass dx = delta(S, X);
    detail::StripeScan scan(S, X, Z, false);
    if (!scan.report().all_stripes) fail(ErrorKind::precondition, "X meets the far side of Z in non-stripes");
    // a clean removal of one stripe first, otherwise anything lower
    auto cands = scan.eliminations();
    for (int64_t cap : {n - 4, n - 8})
        for (auto& c : cands) {
            auto m = intersection_number(S, c, Z);
            if (m > cap || m % 4 != n % 4 || (cap == n - 4 && m != cap)) continue;
            if (!is_sep_meridian(S, c, 1) || delta(S, c) != dx) continue;
            return c;
        }
    fail(ErrorKind::verification, "no stripe elimination preserves delta");
}

// Z_i = band double of C_i along a dual curve avoiding the other members and the
// Z_j already built; delta(Z_i) = C_i.
inline SepCutSystem induced_sep_cut_system(const Surface& S, const CutSystem& cs)
{
    const auto& C = cs.curves;
    std::vector<CurveClass> zs;
    for (size_t i = 0; i < C.size(); ++i) {
        std::vector<CurveClass> avoid = zs;
        for (size_t j = 0; j < C.size(); ++j)
            if (j != i) avoid.push_back(C[j]);
        auto d = dual_curve(S, C[i], avoid);
        if (!d) fail(ErrorKind::verification, "no dual curve in the cut system complement");
        zs.push_back(band_double(S, C[i], *d));
    }
    auto z = validate_sep_cut_system(S, zs);
    for (size_t i = 0; i < C.size(); ++i)
        if (delta(S, zs[i]) != C[i]) fail(ErrorKind::verification, "induced system: delta mismatch");
    return z;
}

} // namespace mlab
