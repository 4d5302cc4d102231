#pragma once

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "handlebody.hpp"

namespace mlab {

// Flag complex given by its 1-skeleton. Vertex curves are optional (synthetic
// complexes carry adjacency only).
struct FlagComplex {
    std::vector<CurveClass> vertices;
    std::vector<std::vector<char>> adj;

    int size() const { return (int)adj.size(); }
    bool edge(int i, int j) const { return adj[i][j] != 0; }

    int index_of(const CurveClass& c) const
    {
        for (int i = 0; i < (int)vertices.size(); ++i)
            if (vertices[i] == c) return i;
        return -1;
    }

    static FlagComplex from_adjacency(std::vector<std::vector<char>> adj)
    {
        const int n = (int)adj.size();
        for (int i = 0; i < n; ++i) {
            if ((int)adj[i].size() != n) fail(ErrorKind::precondition, "adjacency is not square");
            if (adj[i][i]) fail(ErrorKind::precondition, "self-adjacent vertex");
            for (int j = 0; j < n; ++j)
                if (adj[i][j] != adj[j][i]) fail(ErrorKind::precondition, "adjacency is not symmetric");
        }
        FlagComplex c;
        c.adj = std::move(adj);
        return c;
    }
};

enum class Restrict { all, separating_meridians };

// Induced subcomplex on the given curves: vertices deduplicated, adjacency =
// disjointness.
inline FlagComplex build_subcomplex(const Surface& S, const std::vector<CurveClass>& vs,
                                    Restrict r = Restrict::all)
{
    FlagComplex c;
    std::set<CurveClass> seen;
    for (auto& v : vs) {
        if (r == Restrict::separating_meridians) {
            auto mi = classify(S, v);
            if (!mi.is_meridian || !mi.separating) continue;
        }
        if (seen.insert(v).second) c.vertices.push_back(v);
    }
    const int n = (int)c.vertices.size();
    c.adj.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            c.adj[i][j] = c.adj[j][i] = intersection_number(S, c.vertices[i], c.vertices[j]) == 0;
    return c;
}

inline FlagComplex induced(const FlagComplex& c, const std::vector<int>& keep)
{
    FlagComplex out;
    for (int i : keep)
        if (!c.vertices.empty()) out.vertices.push_back(c.vertices[i]);
    out.adj.assign(keep.size(), std::vector<char>(keep.size(), 0));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) out.adj[a][b] = c.adj[keep[a]][keep[b]];
    return out;
}

inline FlagComplex link(const FlagComplex& c, int v)
{
    if (v < 0 || v >= c.size()) fail(ErrorKind::precondition, "link: vertex not in complex");
    std::vector<int> keep;
    for (int i = 0; i < c.size(); ++i)
        if (c.edge(v, i)) keep.push_back(i);
    return induced(c, keep);
}

inline FlagComplex link(const FlagComplex& c, const CurveClass& v)
{
    int i = c.index_of(v);
    if (i < 0) fail(ErrorKind::precondition, "link: vertex not in complex");
    return link(c, i);
}

// Components of the complement graph (non-adjacency), ordered by least vertex.
inline std::vector<std::vector<int>> complement_components(const FlagComplex& c)
{
    const int n = c.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (int y = 0; y < n; ++y)
                if (y != x && !c.edge(x, y) && comp[y] < 0) {
                    comp[y] = comp[s];
                    stack.push_back(y);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

struct SplitResult {
    bool splits = false;
    bool degenerate = false; // complement has no edges: the complex is a simplex
    std::vector<int> K, L;
    std::vector<std::vector<int>> components;
    bool K_splits_further = false, L_splits_further = false;
};

// K + L decomposition. With side labels (one per vertex), components are grouped
// by label when every component is single-labelled and exactly two labels occur;
// otherwise K is the first complement component and L the rest.
inline SplitResult split_join(const FlagComplex& c, const std::vector<int>& side = {})
{
    if (c.size() < 2) fail(ErrorKind::precondition, "split_join needs at least two vertices");
    SplitResult r;
    r.components = complement_components(c);
    r.splits = r.components.size() >= 2;
    r.degenerate = (int)r.components.size() == c.size();
    if (!r.splits) return r;
    bool grouped = false;
    if (!side.empty()) {
        std::set<int> labels;
        bool pure = true;
        for (auto& comp : r.components) {
            for (int v : comp) pure = pure && side[v] == side[comp[0]];
            labels.insert(side[comp[0]]);
        }
        if (pure && labels.size() == 2) {
            int lk = *labels.begin();
            for (auto& comp : r.components)
                for (int v : comp) (side[v] == lk ? r.K : r.L).push_back(v);
            grouped = true;
        }
    }
    if (!grouped) {
        r.K = r.components[0];
        for (size_t k = 1; k < r.components.size(); ++k)
            r.L.insert(r.L.end(), r.components[k].begin(), r.components[k].end());
    }
    std::sort(r.K.begin(), r.K.end());
    std::sort(r.L.begin(), r.L.end());
    auto further = [&](const std::vector<int>& part) {
        return part.size() >= 2 && complement_components(induced(c, part)).size() >= 2;
    };
    r.K_splits_further = further(r.K);
    r.L_splits_further = further(r.L);
    return r;
}

// Exact maximum clique (branch and bound over candidate sets).
inline std::vector<int> max_clique(const FlagComplex& c, int cap = 40)
{
    const int n = c.size();
    if (n > cap) fail(ErrorKind::resource, "clique search limited to " + std::to_string(cap) + " vertices");
    std::vector<int> best, cur;
    auto rec = [&](auto&& self, std::vector<int> cand) -> void {
        if (cand.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        while (!cand.empty()) {
            if (cur.size() + cand.size() <= best.size()) return;
            int v = cand.back();
            cand.pop_back();
            std::vector<int> next;
            for (int u : cand)
                if (c.edge(u, v)) next.push_back(u);
            cur.push_back(v);
            self(self, next);
            cur.pop_back();
        }
        if (cur.size() > best.size()) best = cur;
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    rec(rec, all);
    std::sort(best.begin(), best.end());
    return best;
}

// dimension = max clique size - 1 (-1 for the empty complex)
inline int complex_dim(const FlagComplex& c) { return (int)max_clique(c).size() - 1; }

// ------------------------------------------------------------------ DOT

inline uint64_t coords_hash(const CurveClass& c)
{
    uint64_t h = 1469598103934665603ull; // FNV-1a
    for (auto w : c.w) {
        for (int b = 0; b < 8; ++b) {
            h ^= (uint64_t(w) >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    }
    return h;
}

inline std::string dot_node(int k, const CurveClass& c)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "v%d_%016llx", k, (unsigned long long)coords_hash(c));
    return buf;
}

inline std::string to_dot(const FlagComplex& c, int genus, const std::vector<std::string>& labels = {})
{
    std::ostringstream os;
    os << "graph G {\n  genus=" << genus << ";\n";
    std::vector<std::string> names;
    for (int k = 0; k < c.size(); ++k) {
        names.push_back(k < (int)c.vertices.size() ? dot_node(k, c.vertices[k]) : "v" + std::to_string(k));
        os << "  " << names[k];
        if (k < (int)labels.size()) os << " [label=\"" << labels[k] << "\"]";
        os << ";\n";
    }
    for (int i = 0; i < c.size(); ++i)
        for (int j = i + 1; j < c.size(); ++j)
            if (c.edge(i, j)) os << "  " << names[i] << " -- " << names[j] << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace mlab
