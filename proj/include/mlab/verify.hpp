#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "cutsys.hpp"
#include "io.hpp"
#include "meridians.hpp"
#include "witness.hpp"

namespace mlab {

struct SuiteOptions {
    int genus = 4;
    uint64_t seed = 1;
    int samples = -1; // -1: suite default
    int depth = -1;   // -1: suite default
};

namespace suites {

inline std::string yesno(bool b) { return b ? "yes" : "no"; }

// random curve from the orbit of the standard curves under arbitrary twists
// (meridian generators and the non-meridians A(i))
inline CurveClass random_curve(const Surface& S, const std::vector<NamedCurve>& gens, std::mt19937_64& rng, int maxlen)
{
    const int g = S.genus();
    std::vector<CurveClass> seeds;
    for (int i = 1; i <= g; ++i)
        for (auto k : {StdKind::A, StdKind::B, StdKind::Petal}) seeds.push_back(S.std_curve(k, i));
    for (int k = 2; k <= g - 2; ++k) seeds.push_back(S.std_curve(StdKind::Group, k));
    std::vector<NamedCurve> all = gens;
    for (int i = 1; i <= g; ++i) all.push_back({"A" + std::to_string(i), S.std_curve(StdKind::A, i)});
    CurveClass c = seeds[std::uniform_int_distribution<size_t>(0, seeds.size() - 1)(rng)];
    int len = std::uniform_int_distribution<int>(0, maxlen)(rng);
    return apply_map(S, random_map(all, len, rng), c);
}

inline void require_genus(const SuiteOptions& o, int lo, int hi, const std::string& suite)
{
    if (o.genus < lo || o.genus > hi)
        fail(ErrorKind::precondition, suite + " runs for genus " + std::to_string(lo) + ".." + std::to_string(hi));
}

// ---------------------------------------------------------------- dim-sm
inline void dim_sm(const Surface& S, VerificationReport& r)
{
    const int g = S.genus();
    auto fam = standard_family(S);
    r.check((int)fam.size() == 2 * g - 3, "family-size", std::to_string(2 * g - 3), std::to_string(fam.size()));
    for (size_t i = 0; i < fam.size(); ++i) {
        auto mi = classify(S, fam[i]);
        r.check(mi.is_meridian && mi.separating, "member-" + std::to_string(i), "separating meridian", mi.str());
        for (size_t j = 0; j < i; ++j) {
            auto x = intersection_number(S, fam[i], fam[j]);
            r.check(x == 0, "disjoint-" + std::to_string(j) + "-" + std::to_string(i), "0", std::to_string(x));
        }
    }
    auto c = build_subcomplex(S, fam, Restrict::separating_meridians);
    int d = complex_dim(c);
    r.check(d == 2 * g - 4, "dim", std::to_string(2 * g - 4), std::to_string(d));
    r.notes.push_back("witness dim " + std::to_string(d) + " from " + std::to_string(c.size()) + " vertices");
}

// ---------------------------------------------------------------- link-split
inline void link_split(const Surface& S, VerificationReport& r)
{
    const int g = S.genus();
    for (int k = 2; k <= g / 2; ++k) {
        auto ls = link_sample(S, k);
        const auto& c = ls.complex;
        std::string id = "(" + std::to_string(k) + "," + std::to_string(g - k) + ")";
        int inter[2] = {0, 0};
        std::vector<int> side_v[2];
        for (int i = 0; i < c.size(); ++i) {
            side_v[ls.side[i]].push_back(i);
            for (int j = 0; j < i; ++j)
                if (!c.edge(i, j) && ls.side[i] == ls.side[j]) ++inter[ls.side[i]];
        }
        r.check(c.size() >= 12, id + "-size", ">= 12", std::to_string(c.size()));
        r.check(inter[0] >= 2 && inter[1] >= 2, id + "-witness-pairs", ">= 2 per side",
                std::to_string(inter[0]) + "/" + std::to_string(inter[1]));
        auto s = split_join(c, ls.side);
        r.check(s.splits && s.components.size() == 2, id + "-split", "2 complement components",
                std::to_string(s.components.size()));
        r.check(s.K == side_v[0] && s.L == side_v[1], id + "-sides", "parts = cut-piece sides",
                s.K == side_v[0] ? "K ok, L differs" : "K differs");
        int mk = (int)max_clique(induced(c, side_v[0])).size();
        int ml = (int)max_clique(induced(c, side_v[1])).size();
        r.check(mk == 2 * k - 2, id + "-clique-K", std::to_string(2 * k - 2), std::to_string(mk));
        r.check(ml == 2 * (g - k) - 2, id + "-clique-L", std::to_string(2 * (g - k) - 2), std::to_string(ml));
        r.notes.push_back(id + ": " + std::to_string(c.size()) + " vertices, split into " +
                          std::to_string(side_v[0].size()) + " + " + std::to_string(side_v[1].size()));
    }
}

// (1,g-1): witness samples must not split
inline void link_nosplit(const Surface& S, VerificationReport& r)
{
    auto ls = link_sample(S, 1);
    auto s = split_join(ls.complex);
    r.check(!s.splits, "(1," + std::to_string(S.genus() - 1) + ")-nosplit", "no split",
            std::to_string(s.components.size()) + " complement components");
    r.notes.push_back("(1," + std::to_string(S.genus() - 1) + "): " + std::to_string(ls.complex.size()) +
                      " vertices, no split found");
}

// ---------------------------------------------------------------- intersection
inline void intersection_invariance(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    auto gens = meridian_generators(S);
    std::uniform_int_distribution<int> len(1, 6);
    for (int t = 0; t < samples; ++t) {
        auto x = random_curve(S, gens, rng, 2), y = random_curve(S, gens, rng, 2);
        auto m = random_map(gens, len(rng), rng);
        auto before = intersection_number(S, x, y);
        auto after = intersection_number(S, apply_map(S, m, x), apply_map(S, m, y));
        r.check(before == after, "pair-" + std::to_string(t), std::to_string(before), std::to_string(after));
        auto back = apply_map(S, m.inverse(), apply_map(S, m, x));
        r.check(back == x, "inverse-" + std::to_string(t), "x", "different class");
    }
}

// ---------------------------------------------------------------- delta-natural
inline void delta_natural(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    const int g = S.genus();
    auto gens = meridian_generators(S);
    std::uniform_int_distribution<int> len(1, 4), hd(1, g);
    int moved = 0;
    for (int t = 0; t < samples; ++t) {
        std::string id = "case-" + std::to_string(t);
        int i = hd(rng);
        auto X = apply_map(S, random_map(gens, len(rng), rng), S.std_curve(StdKind::Petal, i));
        auto m = random_map(gens, len(rng), rng);
        auto lhs = delta(S, apply_map(S, m, X));
        auto rhs = apply_map(S, m, delta(S, X));
        r.check(lhs == rhs, id + "-natural", "delta(mX) = m delta(X)", "differ");

        auto f = random_map(gens, len(rng), rng);
        auto d = apply_map(S, f, S.std_curve(StdKind::B, i));
        auto s1 = default_dual(S, d);
        // second dual: twist s1 about a curve that misses d and moves the band double
        std::vector<CurveClass> cand;
        for (int j = 1; j <= g; ++j)
            if (j != i)
                for (auto k : {StdKind::A, StdKind::Petal}) cand.push_back(apply_map(S, f, S.std_curve(k, j)));
        for (auto& y : gens) cand.push_back(y.curve);
        CurveClass s2 = twist(S, d, s1, 1);
        for (auto& y : cand)
            if (intersection_number(S, y, d) == 0 && intersection_number(S, y, s1) > 0) {
                auto t2 = twist(S, y, s1, 1);
                if (band_double(S, d, t2) != band_double(S, d, s1)) {
                    s2 = t2;
                    break;
                }
            }
        auto p1 = phi_M(S, m, d, s1), p2 = phi_M(S, m, d, s2);
        moved += band_double(S, d, s1) != band_double(S, d, s2);
        r.check(p1 == p2, id + "-sigma-free", "equal", "differ");
        r.check(p1 == apply_map(S, m, d), id + "-phiM", "m d", "differ");
    }
    r.notes.push_back(std::to_string(moved) + " of " + std::to_string(samples) +
                      " phi_M cases used two different (1,g-1)-meridians");
}

// ---------------------------------------------------------------- join-arith
inline std::string type_str(int a, int b)
{
    return "(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
}

inline std::string type_of(const Surface& S, const CurveClass& c)
{
    auto mi = classify(S, c);
    return mi.is_meridian && mi.separating ? type_str(mi.k, mi.l) : mi.str();
}

inline void join_arith(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    const int g = S.genus();
    auto gens = meridian_generators(S);
    std::uniform_int_distribution<int> len(0, 4), hd(1, g), kind(0, 1);
    for (int t = 0; t < samples; ++t) {
        // E, F with disjoint small sides: two petals, or Group(k) and a petal outside it
        CurveClass E, F;
        int gE = 1, gF = 1;
        if (g >= 4 && kind(rng)) {
            int k = std::uniform_int_distribution<int>(2, g - 2)(rng);
            int j = std::uniform_int_distribution<int>(k + 1, g)(rng);
            E = S.std_curve(StdKind::Group, k);
            F = S.std_curve(StdKind::Petal, j);
            gE = k;
        } else {
            int i = hd(rng), j = hd(rng);
            while (j == i) j = hd(rng);
            E = S.std_curve(StdKind::Petal, i);
            F = S.std_curve(StdKind::Petal, j);
        }
        auto m = random_map(gens, len(rng), rng);
        E = apply_map(S, m, E);
        F = apply_map(S, m, F);
        auto tau = connect_arc(S, E, F);
        std::string id = "join-" + std::to_string(t);
        if (!tau) {
            r.check(false, id, "arc", "none");
            continue;
        }
        auto J = join(S, E, F, *tau);
        r.check(type_of(S, J) == type_str(gE + gF, g - gE - gF), id, type_str(gE + gF, g - gE - gF), type_of(S, J));
    }
}

// E^2 = P1 + P2, E^j = E^(j-1) + Pj, each joined along a shortest arc
inline void join_chain(const Surface& S, VerificationReport& r)
{
    const int g = S.genus();
    auto P = [&](int i) { return S.std_curve(StdKind::Petal, i); };
    CurveClass E = P(1);
    for (int j = 2; j <= g - 1; ++j) {
        auto tau = connect_arc(S, E, P(j));
        if (!tau) {
            r.check(false, "chain-E" + std::to_string(j), "arc", "none");
            return;
        }
        E = join(S, E, P(j), *tau);
        r.check(type_of(S, E) == type_str(j, g - j), "chain-E" + std::to_string(j), type_str(j, g - j), type_of(S, E));
    }
    if (g >= 4) {
        auto j23 = join(S, P(2), P(3), *connect_arc(S, P(2), P(3)));
        auto right = join(S, P(1), j23, *connect_arc(S, P(1), j23));
        auto j12 = join(S, P(1), P(2), *connect_arc(S, P(1), P(2)));
        auto left = join(S, j12, P(3), *connect_arc(S, j12, P(3)));
        r.check(left == right, "chain-assoc", "(P1+P2)+P3 = P1+(P2+P3)", "differ");
    }
}

// ---------------------------------------------------------------- stripes
inline std::vector<CurveClass> curves_missing(const Surface& S, int i, int j)
{
    const int g = S.genus();
    std::vector<CurveClass> out;
    for (int l = 1; l <= g; ++l) {
        if (l == i || l == j) continue;
        for (auto k : {StdKind::A, StdKind::B, StdKind::Petal}) out.push_back(S.std_curve(k, l));
        out.push_back(side_meridian(S, i, l, {S.std_curve(StdKind::B, j)}));
    }
    return out;
}

inline void stripes(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    const int g = S.genus();
    auto A = [&](int i) { return S.std_curve(StdKind::A, i); };
    auto B = [&](int i) { return S.std_curve(StdKind::B, i); };
    auto P = [&](int i) { return S.std_curve(StdKind::Petal, i); };
    for (int i = 1; i <= g; ++i) {
        int j = i % g + 1;
        std::string id = "single-" + std::to_string(i);
        // sigma meets B(j) once and enters Petal(i)'s side around B(i)
        auto sigma = join(S, A(j), B(i), *connect_arc(S, A(j), B(i)));
        auto E = band_double(S, B(j), sigma);
        auto rep = find_stripes(S, E, P(i));
        r.check(rep.arcs.size() == 2 && rep.all_stripes, id + "-report", "one stripe (2 arcs)",
                std::to_string(rep.arcs.size()) + " arcs, all=" + yesno(rep.all_stripes));
        auto Eb = eliminate_stripe(S, E, P(i));
        auto x = intersection_number(S, Eb, P(i));
        r.check(x == 0, id + "-disjoint", "0", std::to_string(x));
        r.check(type_of(S, Eb) == type_of(S, E), id + "-type", type_of(S, E), type_of(S, Eb));
        r.check(delta(S, Eb) == delta(S, E), id + "-delta", "preserved", "changed");

        // reduce_intersection: X around B(i) leaving Petal(i)'s side once
        auto sig2 = join(S, A(i), B(j), *connect_arc(S, A(i), B(j)));
        auto X = band_double(S, B(i), sig2);
        auto Xb = reduce_intersection(S, X, P(i));
        auto y = intersection_number(S, Xb, P(i));
        r.check(y == 0, id + "-reduce", "0", std::to_string(y));
        r.check(delta(S, Xb) == B(i), id + "-reduce-delta", "B(i)", "changed");
    }
    // many stripes: twist the band core about curves missing B(i) and B(j)
    std::uniform_int_distribution<int> hd(1, g);
    int skipped = 0, clean = 0, total = 0;
    for (int t = 0; t < samples; ++t) {
        int i = hd(rng), j = i % g + 1;
        auto pool = curves_missing(S, i, j);
        std::vector<NamedCurve> named;
        for (auto& c : pool) named.push_back({"", c});
        auto m = random_map(named, 4, rng);
        bool outside = t % 2 == 0;
        std::string id = std::string(outside ? "elim-" : "reduce-") + std::to_string(t);
        CurveClass core = outside ? join(S, A(j), B(i), *connect_arc(S, A(j), B(i)))
                                  : join(S, A(i), B(j), *connect_arc(S, A(i), B(j)));
        core = apply_map(S, m, core);
        CurveClass cur = band_double(S, outside ? B(j) : B(i), core);
        CurveClass d0 = delta(S, cur);
        auto n = intersection_number(S, cur, P(i));
        // only instances meeting the scanned side in stripes qualify
        if (outside && !find_stripes(S, cur, P(i)).all_stripes) {
            ++skipped;
            continue;
        }
        int steps = 0;
        bool exact = true;
        while (n > 0 && steps < 64) {
            try {
                cur = outside ? eliminate_stripe(S, cur, P(i)) : reduce_intersection(S, cur, P(i));
            } catch (const Error& e) {
                if (!outside && steps == 0 && e.kind == ErrorKind::precondition) {
                    ++skipped;
                    exact = false;
                    n = -1;
                    break;
                }
                exact = false;
                r.notes.push_back(id + " step " + std::to_string(steps) + ": " + e.what());
                break;
            }
            auto n2 = intersection_number(S, cur, P(i));
            // one stripe is 4 crossings; bigons left behind may take more with it
            exact = exact && n2 < n && (n - n2) % 4 == 0;
            clean += n2 == n - 4;
            ++total;
            n = n2;
            ++steps;
        }
        if (n < 0) continue;
        r.check(n == 0 && exact, id + "-steps", "drops by multiples of 4 down to 0",
                "ended at " + std::to_string(n) + (exact ? "" : ", bad drop"));
        r.check(delta(S, cur) == d0, id + "-delta", "preserved", "changed");
    }
    if (skipped) r.notes.push_back(std::to_string(skipped) + " random instances not in stripes, skipped");
    r.notes.push_back(std::to_string(clean) + " of " + std::to_string(total) + " random steps removed exactly 4 crossings");
}

// ---------------------------------------------------------------- claim1
inline void claim1(const Surface& S, VerificationReport& r, int depth)
{
    const int g = S.genus();
    std::vector<CurveClass> Bs, Ps;
    for (int i = 1; i <= g; ++i) {
        Bs.push_back(S.std_curve(StdKind::B, i));
        Ps.push_back(S.std_curve(StdKind::Petal, i));
    }
    std::vector<MCGMap> maps;
    for (auto& x : meridian_generators(S))
        for (int e : {1, -1}) maps.push_back(MCGMap{{TwistStep{x.curve, e}}});
    auto keep = [&](const CurveClass& c) {
        for (auto& b : Bs)
            if (intersection_number(S, c, b)) return false;
        return is_sep_meridian(S, c, 1);
    };
    auto found = enumerate_orbit(S, Ps, maps, depth, keep);
    for (size_t t = 0; t < found.size(); ++t) {
        auto d = delta(S, found[t]);
        bool in = std::find(Bs.begin(), Bs.end(), d) != Bs.end();
        r.check(in, "X-" + std::to_string(t), "delta in {B(i)}", "outside the cut system");
    }
    r.notes.push_back(std::to_string(found.size()) + " (1," + std::to_string(g - 1) +
                      ")-meridians disjoint from the cut system at depth " + std::to_string(depth));
}

// ---------------------------------------------------------------- cutsys-path
inline void cutsys(const Surface& S, VerificationReport& r, int bound)
{
    const int g = S.genus();
    std::vector<CurveClass> Bs;
    for (int i = 1; i <= g; ++i) Bs.push_back(S.std_curve(StdKind::B, i));
    CutSystem std_sys = validate_cut_system(S, Bs);

    // a handle slide neighbour
    auto slide = join(S, Bs[0], Bs[1], *connect_arc(S, Bs[0], Bs[1], {Bs.begin() + 2, Bs.end()}));
    CutSystem nb = std_sys;
    nb.curves[0] = slide;
    bool valid = true;
    try {
        validate_cut_system(S, nb.curves);
    } catch (const Error&) {
        valid = false;
    }
    r.check(valid && cutsys_edge(S, std_sys, nb), "slide-edge", "valid edge", "invalid");

    // target: standard system under the first length-2 meridian twist word that moves it
    auto gens = meridian_generators(S);
    std::reverse(gens.begin(), gens.end()); // slide meridians first
    std::optional<MCGMap> word;
    std::string wname;
    for (auto& a : gens) {
        for (auto& b : gens) {
            MCGMap m{{TwistStep{a.curve, 1}, TwistStep{b.curve, 1}}};
            if (sorted_system(CutSystem{apply_map(S, m, Bs)}).curves != sorted_system(std_sys).curves &&
                a.name != b.name) {
                word = m;
                wname = a.name + " " + b.name;
                break;
            }
        }
        if (word) break;
    }
    if (!word) fail(ErrorKind::verification, "no moving twist word");
    CutSystem target = validate_cut_system(S, apply_map(S, *word, Bs));
    auto path = cutsys_path(S, std_sys, target, bound);
    r.check(path.has_value(), "path", "found within " + std::to_string(bound), "none");
    if (path) {
        for (size_t k = 1; k < path->size(); ++k)
            r.check(cutsys_edge(S, (*path)[k - 1], (*path)[k]), "edge-" + std::to_string(k), "edge rule", "violated");
        r.notes.push_back("word " + wname + ": path of length " + std::to_string(path->size() - 1));
    }
    auto zero = cutsys_path(S, std_sys, std_sys, bound);
    r.check(zero && zero->size() == 1, "self-path", "length 0", zero ? std::to_string(zero->size() - 1) : "none");
}

// ---------------------------------------------------------------- word-homology
inline void word_homology(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    const int g = S.genus();
    const SurfaceModel& m = S.model();
    auto gens = meridian_generators(S);
    int mer = 0, sep = 0;
    for (int t = 0; t < samples; ++t) {
        auto c = random_curve(S, gens, rng, 4);
        std::string id = "curve-" + std::to_string(t);
        // coordinates round trip
        CurveTable tab{g, {{"c", c}}};
        auto back = parse_curves(serialize_curves(tab), &S);
        r.check(back == tab, id + "-file", "round trip", "differs");
        r.check(S.canonical(S.path(c)) == c, id + "-trace", "round trip", "differs");
        // word of the handlebody: drop b letters, keep a letters
        Word w;
        for (int l : path_word(m, S.path(c)))
            if (std::abs(l) % 2 == 1) w.push_back(l);
        bool trivial = cyclic_reduce(free_reduce(w)).empty();
        bool is_m = S.is_meridian(c);
        r.check(trivial == is_m, id + "-meridian", yesno(trivial), yesno(is_m));
        auto h = S.homology(c);
        if (is_m) r.check(is_zero(a_part(h)), id + "-a-part", "0", "nonzero");
        // separating: homology, cut pieces, Euler characteristic
        auto pieces = cut_along(S, {c});
        int chi = 0, bsum = 0, gsum = 0;
        for (auto& p : pieces) {
            chi += p.euler;
            bsum += p.boundary_count;
            gsum += p.genus;
        }
        r.check(chi == 2 - 2 * g, id + "-chi", std::to_string(2 - 2 * g), std::to_string(chi));
        r.check(bsum == 2, id + "-boundary", "2", std::to_string(bsum));
        bool zero = is_zero(h), two = pieces.size() == 2;
        r.check(zero == two, id + "-separating", "zero homology = two pieces", yesno(zero) + "/" + yesno(two));
        r.check(gsum == (two ? g : g - 1), id + "-genus", std::to_string(two ? g : g - 1), std::to_string(gsum));
        mer += is_m;
        sep += two;
    }
    r.notes.push_back(std::to_string(mer) + " meridians, " + std::to_string(sep) + " separating");
}

// ---------------------------------------------------------------- surgery4
inline void surgery4(const Surface& S, VerificationReport& r, std::mt19937_64& rng, int samples)
{
    const int g = S.genus();
    auto G2 = S.std_curve(StdKind::Group, 2);
    auto P1 = S.std_curve(StdKind::Petal, 1), Pg = S.std_curve(StdKind::Petal, g);
    auto tau = connect_arc(S, P1, Pg, {}, {G2});
    if (!tau) fail(ErrorKind::verification, "no arc across Group(2)");
    auto D0 = join(S, P1, Pg, *tau);
    auto gens = meridian_generators(S);
    std::uniform_int_distribution<int> len(1, 4);
    for (int t = 0; t <= samples; ++t) {
        auto m = t == 0 ? MCGMap{} : random_map(gens, len(rng), rng);
        auto X = apply_map(S, m, G2), D = apply_map(S, m, D0);
        std::string id = "case-" + std::to_string(t);
        auto W = surgery_along_arc(S, X, D);
        for (int k = 0; k < 4; ++k) {
            auto mi = classify(S, W[k]);
            std::string wid = id + "-W" + std::to_string(k);
            r.check(mi.is_meridian && mi.separating, wid + "-type", "separating meridian", mi.str());
            auto a = intersection_number(S, W[k], X), b = intersection_number(S, W[k], D);
            r.check(a == 0 && b == 0, wid + "-disjoint", "0/0", std::to_string(a) + "/" + std::to_string(b));
        }
    }
}

} // namespace suites

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> n = {"dim-sm",      "link-split", "delta-natural",
                                               "join-arith",  "stripes",    "claim1",
                                               "cutsys-path", "word-homology", "surgery4",
                                               "intersection"};
    return n;
}

inline VerificationReport run_suite(const std::string& name, const SuiteOptions& o)
{
    using namespace suites;
    VerificationReport r;
    r.suite = name;
    r.genus = o.genus;
    r.seed = o.seed;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed);
    auto samples = [&](int d) { return o.samples >= 0 ? o.samples : d; };
    auto depth = [&](int d) { return o.depth >= 0 ? o.depth : d; };
    if (name == "dim-sm") {
        require_genus(o, 3, 8, name);
        dim_sm(Surface(o.genus), r);
    } else if (name == "link-split") {
        require_genus(o, 4, 7, name);
        Surface S(o.genus);
        link_split(S, r);
        link_nosplit(S, r);
    } else if (name == "delta-natural") {
        require_genus(o, 3, 8, name);
        delta_natural(Surface(o.genus), r, rng, samples(50));
    } else if (name == "join-arith") {
        require_genus(o, 3, 8, name);
        Surface S(o.genus);
        join_arith(S, r, rng, samples(100));
        join_chain(S, r);
    } else if (name == "stripes") {
        require_genus(o, 3, 8, name);
        stripes(Surface(o.genus), r, rng, samples(10));
    } else if (name == "claim1") {
        require_genus(o, 3, 4, name);
        claim1(Surface(o.genus), r, depth(o.genus == 3 ? 4 : 2));
    } else if (name == "cutsys-path") {
        require_genus(o, 3, 5, name);
        cutsys(Surface(o.genus), r, depth(8));
    } else if (name == "word-homology") {
        require_genus(o, 2, 8, name);
        word_homology(Surface(o.genus), r, rng, samples(500));
    } else if (name == "surgery4") {
        require_genus(o, 4, 8, name);
        surgery4(Surface(o.genus), r, rng, samples(10));
    } else if (name == "intersection") {
        require_genus(o, 2, 8, name);
        intersection_invariance(Surface(o.genus), r, rng, samples(200));
    } else {
        fail(ErrorKind::parse, "unknown suite '" + name + "'");
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace mlab
