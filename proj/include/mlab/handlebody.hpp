#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcg.hpp"
#include "regions.hpp"
#include "surface.hpp"

namespace mlab {

struct MeridianInfo {
    bool is_meridian = false;
    bool separating = false;
    int k = 0, l = 0; // genus type (k <= l) when separating

    std::string str() const
    {
        if (!is_meridian) return separating ? "non-meridian separating" : "non-meridian";
        if (!separating) return "meridian non-separating";
        return "meridian separating (" + std::to_string(k) + "," + std::to_string(l) + ")";
    }
};

inline bool is_zero(const std::vector<int64_t>& v)
{
    return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

inline MeridianInfo classify(const Surface& S, const CurveClass& c)
{
    MeridianInfo mi;
    mi.is_meridian = S.is_meridian(c);
    mi.separating = is_zero(S.homology(c));
    if (mi.separating) {
        auto ps = cut_along(S, {c});
        if (ps.size() != 2) fail(ErrorKind::verification, "null-homologous curve does not separate");
        mi.k = std::min(ps[0].genus, ps[1].genus);
        mi.l = std::max(ps[0].genus, ps[1].genus);
    }
    return mi;
}

inline bool is_sep_meridian(const Surface& S, const CurveClass& c, int k)
{
    auto mi = classify(S, c);
    return mi.is_meridian && mi.separating && mi.k == k;
}

// a-part of a homology vector (image in H1 of the handlebody)
inline std::vector<int64_t> a_part(const std::vector<int64_t>& h)
{
    std::vector<int64_t> a;
    for (size_t i = 0; i < h.size(); i += 2) a.push_back(h[i]);
    return a;
}

namespace detail {

inline bool homology_pm_equal(const std::vector<int64_t>& x, const std::vector<int64_t>& y)
{
    if (x == y) return true;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i] != -y[i]) return false;
    return true;
}

inline std::vector<int64_t> lin(int64_t p, const std::vector<int64_t>& a, int64_t q, const std::vector<int64_t>& b)
{
    std::vector<int64_t> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = p * a[i] + q * b[i];
    return r;
}

// Curve of slope (p,q) in the one-holed torus spanned by c1, c2 (meeting once),
// built by a Euclidean chain of twists. s1: T_c1 adds s1*c1 per unit of c2, s2 likewise.
inline CurveClass realize_slope(const Surface& S, const CurveClass& c1, const CurveClass& c2, int s1, int s2, int64_t p,
                                int64_t q)
{
    if (q == 0) return c1;
    if (p == 0) return c2;
    if (std::llabs(p) >= std::llabs(q)) {
        // p' = p - k*s1*q with |p'| < |q|
        int64_t aq = std::llabs(q);
        int64_t pp = ((p % aq) + aq) % aq;
        if (pp * 2 > aq) pp -= aq;
        if (std::llabs(pp) >= aq) pp = 0;
        int64_t k = (p - pp) / (s1 * q);
        CurveClass base = realize_slope(S, c1, c2, s1, s2, pp, q);
        if (k > 1000) fail(ErrorKind::resource, "slope too large");
        return twist(S, c1, base, (int)k);
    }
    int64_t ap = std::llabs(p);
    int64_t qq = ((q % ap) + ap) % ap;
    if (qq * 2 > ap) qq -= ap;
    int64_t k = (q - qq) / (s2 * p);
    CurveClass base = realize_slope(S, c1, c2, s1, s2, p, qq);
    if (k > 1000) fail(ErrorKind::resource, "slope too large");
    return twist(S, c2, base, (int)k);
}

} // namespace detail

// A curve c1 inside the genus-1 side of X that is non-separating, and a curve c2
// in the same side meeting c1 exactly once.
struct TorusBasis {
    CurveClass c1, c2;
};

inline TorusBasis torus_basis(const Surface& S, const CurveClass& X)
{
    const SurfaceModel& m = S.model();
    Arrangement A(S);
    int x = A.add(X);
    Regions R(A, {x});
    if (R.n_pieces() != 2) fail(ErrorKind::precondition, "curve is not separating");
    auto chi = R.euler();
    // genus-1 side: chi = -1 with one boundary
    int N = -1;
    for (int p = 0; p < 2; ++p)
        if (chi[p] == -1) N = p;
    if (N < 0) fail(ErrorKind::precondition, "curve does not cut off a genus-1 piece");

    // fundamental cycles of the region graph inside N
    const int nr = R.n_regions();
    std::vector<int> par(nr, -2), parhe(nr, -1), depth(nr, 0);
    int root = -1;
    for (int r = 0; r < nr; ++r)
        if (R.piece_of_region(r) == N) {
            root = r;
            break;
        }
    std::deque<int> q{root};
    par[root] = -1;
    std::vector<int> order;
    while (!q.empty()) {
        int r = q.front();
        q.pop_front();
        order.push_back(r);
        for (auto& l : R.links()[r]) {
            if (l.he < 0 || par[l.to] != -2) continue;
            par[l.to] = r;
            parhe[l.to] = l.he;
            depth[l.to] = depth[r] + 1;
            q.push_back(l.to);
        }
    }
    auto to_root = [&](int r) {
        Path p; // from root down to r
        for (; par[r] >= 0; r = par[r]) p.push_back(parhe[r]);
        std::reverse(p.begin(), p.end());
        return p;
    };
    std::optional<CurveClass> c1;
    for (int r : order) {
        for (auto& l : R.links()[r]) {
            if (l.he < 0) continue;
            if (par[l.to] == r && parhe[l.to] == l.he) continue;
            if (par[r] == l.to && parhe[r] == rev(l.he)) continue;
            Path cyc = to_root(r);
            cyc.push_back(l.he);
            Path back = reverse_path(to_root(l.to));
            cyc.insert(cyc.end(), back.begin(), back.end());
            Path red = reduce_path(cyc);
            if (red.empty() || is_zero(S.homology(red))) continue;
            if (!path_is_simple(m, red)) continue;
            c1 = S.canonical(red);
            break;
        }
        if (c1) break;
    }
    if (!c1) fail(ErrorKind::verification, "no non-separating cycle in the genus-1 piece");

    // arc in N minus c1 from the left of c1 to its right, closed along c1
    Arrangement B(S);
    int bx = B.add(X);
    int bc = B.add(*c1);
    if (B.count_crossings(bc, bx) != 0) fail(ErrorKind::verification, "basis curve leaves its piece");
    Regions R2(B, {bx, bc});
    const Path& P1 = B.path(bc);
    const int n1 = (int)P1.size();
    int side_piece = R2.piece_of_region(R2.left_region(bc, 0));
    std::vector<char> ok(R2.n_regions(), 0), target(R2.n_regions(), 0);
    std::vector<int> seg_of(R2.n_regions(), -1);
    for (int r = 0; r < R2.n_regions(); ++r) ok[r] = R2.piece_of_region(r) == side_piece;
    for (int s = 0; s < n1; ++s) {
        int rr = R2.right_region(bc, s);
        target[rr] = 1;
        if (seg_of[rr] < 0) seg_of[rr] = s;
    }
    auto route = R2.route({R2.left_region(bc, 0)}, target, {}, ok);
    if (!route) fail(ErrorKind::verification, "no dual arc in the genus-1 piece");
    Path c2p = route->he;
    int s2 = seg_of[route->regions.back()];
    for (int s = s2 + 1; s2 != 0 && s <= n1; ++s) c2p.push_back(P1[s % n1]);
    Path red2 = reduce_path(c2p);
    CurveClass c2 = S.canonical(red2);
    if (intersection_number(S, *c1, c2) != 1) fail(ErrorKind::verification, "dual curve does not meet basis curve once");
    return TorusBasis{*c1, c2};
}

// delta(X): the non-separating meridian on the genus-1 side of a (1,g-1)-meridian.
inline CurveClass delta(const Surface& S, const CurveClass& X)
{
    const int g = S.genus();
    if (g < 3) fail(ErrorKind::precondition, "delta needs genus >= 3 (both sides have genus 1 at g = 2)");
    auto mi = classify(S, X);
    if (!(mi.is_meridian && mi.separating && mi.k == 1))
        fail(ErrorKind::precondition, "delta is only defined for (1,g-1)-meridians; got " + mi.str());

    TorusBasis tb = torus_basis(S, X);
    auto h1 = S.homology(tb.c1), h2 = S.homology(tb.c2);
    auto hp = S.homology(twist(S, tb.c1, tb.c2, 1));
    int s1 = detail::homology_pm_equal(hp, detail::lin(1, h2, 1, h1)) ? 1 : -1;
    if (s1 < 0 && !detail::homology_pm_equal(hp, detail::lin(1, h2, -1, h1)))
        fail(ErrorKind::verification, "twist homology mismatch");
    auto hq = S.homology(twist(S, tb.c2, tb.c1, 1));
    int s2 = detail::homology_pm_equal(hq, detail::lin(1, h1, 1, h2)) ? 1 : -1;

    auto a1 = a_part(h1), a2 = a_part(h2);
    int64_t p = 0, q = 0;
    if (is_zero(a1)) {
        p = 1;
    } else if (is_zero(a2)) {
        q = 1;
    } else {
        for (size_t i = 0; i < a1.size(); ++i)
            if (a1[i] || a2[i]) {
                p = a2[i];
                q = -a1[i];
                break;
            }
        int64_t d = std::gcd(std::llabs(p), std::llabs(q));
        p /= d;
        q /= d;
        if (!is_zero(detail::lin(p, a1, q, a2))) fail(ErrorKind::verification, "handle homology is not rank one");
    }
    auto ok = [&](const CurveClass& c) {
        return S.is_meridian(c) && !is_zero(S.homology(c)) && intersection_number(S, c, X) == 0;
    };
    CurveClass d = detail::realize_slope(S, tb.c1, tb.c2, s1, s2, p, q);
    if (ok(d)) return d;

    // fallback: bounded search in the orbit of the basis under its own twists
    std::vector<MCGMap> gens;
    for (auto* c : {&tb.c1, &tb.c2})
        for (int e : {1, -1}) gens.push_back(MCGMap{{TwistStep{*c, e}}});
    auto found = enumerate_orbit(S, {tb.c1, tb.c2}, gens, 6, ok);
    if (found.empty()) fail(ErrorKind::verification, "delta: no meridian found on the genus-1 side");
    return found.front();
}

// ------------------------------------------------------------------ cut systems

struct CutSystem {
    std::vector<CurveClass> curves;
};

struct SepCutSystem {
    std::vector<CurveClass> curves;
};

namespace detail {

inline void check_distinct_disjoint(const Surface& S, const std::vector<CurveClass>& cs)
{
    if ((int)cs.size() != S.genus())
        fail(ErrorKind::precondition, "system needs " + std::to_string(S.genus()) + " curves, got " +
                                          std::to_string(cs.size()));
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (cs[i] == cs[j])
                fail(ErrorKind::precondition, "members " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                                  " are the same curve");
            if (intersection_number(S, cs[i], cs[j]) != 0)
                fail(ErrorKind::precondition, "members " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                                  " are not disjoint");
        }
}

} // namespace detail

inline CutSystem validate_cut_system(const Surface& S, const std::vector<CurveClass>& cs)
{
    for (size_t i = 0; i < cs.size(); ++i) {
        auto mi = classify(S, cs[i]);
        if (!mi.is_meridian) fail(ErrorKind::precondition, "member " + std::to_string(i + 1) + " is not a meridian");
        if (mi.separating) fail(ErrorKind::precondition, "member " + std::to_string(i + 1) + " is separating");
    }
    detail::check_distinct_disjoint(S, cs);
    auto ps = cut_along(S, cs);
    if (ps.size() != 1 || ps[0].genus != 0 || ps[0].boundary_count != 2 * S.genus())
        fail(ErrorKind::precondition, "complement is not a sphere with 2g holes");
    return CutSystem{cs};
}

inline SepCutSystem validate_sep_cut_system(const Surface& S, const std::vector<CurveClass>& zs)
{
    for (size_t i = 0; i < zs.size(); ++i)
        if (!is_sep_meridian(S, zs[i], 1))
            fail(ErrorKind::precondition, "member " + std::to_string(i + 1) + " is not a (1,g-1)-meridian");
    detail::check_distinct_disjoint(S, zs);
    auto ps = cut_along(S, zs);
    const int g = S.genus();
    int planar = 0;
    for (auto& p : ps) {
        if (p.genus == 0 && p.boundary_count == g) {
            auto o = p.boundary_owners;
            std::sort(o.begin(), o.end());
            if (std::unique(o.begin(), o.end()) - o.begin() == g) ++planar;
        }
    }
    if (planar != 1) fail(ErrorKind::precondition, "no planar piece bounded once by every member");
    return SepCutSystem{zs};
}

} // namespace mlab
