#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlab {

enum class ErrorKind { parse, precondition, verification, resource };

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::parse: return 2;
    case ErrorKind::precondition: return 3;
    case ErrorKind::verification: return 4;
    case ErrorKind::resource: return 5;
    }
    return 1;
}

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

// Side j of a triangle runs ccw from corner j-1 to corner j.
// `agrees` is true when that direction matches the edge orientation.
struct Side {
    int edge = -1;
    bool agrees = true;
};

struct Incidence {
    int tri = -1;
    int side = -1;
};

// Half-edge h = 2e + s crosses edge e out of inc[e][s].tri into the other triangle.
inline int edge_of(int h) { return h >> 1; }
inline int rev(int h) { return h ^ 1; }

struct SurfaceModel {
    int genus = 0;
    int n_edges = 0;
    int n_tris = 0;
    std::vector<std::array<Side, 3>> tris;
    std::vector<std::array<Incidence, 2>> inc;
    std::vector<int> gen;             // 1..2g for scheme edges (a_i = 2i-1, b_i = 2i), 0 for diagonals
    std::vector<std::pair<int, int>> link_corner; // ccw around the vertex: (tri, corner)
    std::vector<int> link_he;         // half-edge from link_corner[i] into link_corner[i+1]
    std::vector<int> relator;         // vertex link word

    int degree() const { return 3 * n_tris; }
    int src(int h) const { return inc[edge_of(h)][h & 1].tri; }
    int dst(int h) const { return inc[edge_of(h)][(h & 1) ^ 1].tri; }
    // side index of edge e inside triangle t
    int side_in(int t, int e) const
    {
        for (int j = 0; j < 3; ++j)
            if (tris[t][j].edge == e) return j;
        return -1;
    }
    // half-edge leaving triangle t through side j
    int out_he(int t, int j) const
    {
        int e = tris[t][j].edge;
        return 2 * e + (inc[e][0].tri == t && inc[e][0].side == j ? 0 : 1);
    }
    int letter(int h) const
    {
        int g = gen[edge_of(h)];
        if (g == 0) return 0;
        return (h & 1) ? -g : g;
    }
    bool is_scheme(int e) const { return gen[e] != 0; }
};

inline SurfaceModel build_model(int g)
{
    if (g < 2) fail(ErrorKind::precondition, "unsupported genus " + std::to_string(g) + " (need g >= 2)");
    SurfaceModel m;
    m.genus = g;
    const int nsides = 4 * g;
    m.n_tris = nsides - 2;
    m.n_edges = 6 * g - 3;
    m.tris.assign(m.n_tris, {});
    m.inc.assign(m.n_edges, {});
    m.gen.assign(m.n_edges, 0);
    for (int i = 0; i < g; ++i) {
        m.gen[2 * i] = 2 * i + 1;
        m.gen[2 * i + 1] = 2 * i + 2;
    }
    auto diag = [&](int k) { return 2 * g + (k - 2); }; // P0 -> Pk, k = 2..4g-2
    auto poly = [&](int j) {                            // polygon side P_j -> P_{j+1}
        int h = j / 4, r = j % 4;
        Side s;
        s.edge = 2 * h + (r % 2);
        s.agrees = r < 2;
        return s;
    };
    // triangle t has corners P0, Pk, Pk+1 with k = t+1
    for (int t = 0; t < m.n_tris; ++t) {
        int k = t + 1;
        Side s0 = (k == 1) ? poly(0) : Side{diag(k), true};
        Side s1 = poly(k);
        Side s2 = (k + 1 == nsides - 1) ? poly(nsides - 1) : Side{diag(k + 1), false};
        m.tris[t] = {s0, s1, s2};
    }
    std::vector<int> seen(m.n_edges, 0);
    for (int t = 0; t < m.n_tris; ++t)
        for (int j = 0; j < 3; ++j) {
            const Side& s = m.tris[t][j];
            int slot = s.agrees ? 0 : 1;
            m.inc[s.edge][slot] = {t, j};
            ++seen[s.edge];
        }
    for (int e = 0; e < m.n_edges; ++e)
        if (seen[e] != 2) fail(ErrorKind::verification, "triangulation: edge not glued twice");

    // walk ccw around the single vertex
    int t = 0, c = 0;
    std::vector<char> hit(m.degree(), 0);
    for (int step = 0; step < m.degree(); ++step) {
        if (hit[3 * t + c]++) fail(ErrorKind::verification, "triangulation: more than one vertex");
        m.link_corner.push_back({t, c});
        int h = m.out_he(t, c);
        m.link_he.push_back(h);
        int t2 = m.dst(h);
        int j2 = m.side_in(t2, edge_of(h));
        t = t2;
        c = (j2 + 2) % 3;
        if (int l = m.letter(h)) m.relator.push_back(l);
    }
    if (t != 0 || c != 0) fail(ErrorKind::verification, "triangulation: vertex link not a single cycle");
    if ((int)m.relator.size() != 4 * g) fail(ErrorKind::verification, "triangulation: bad relator length");
    return m;
}

inline int euler_characteristic(const SurfaceModel& m) { return 1 - m.n_edges + m.n_tris; }

} // namespace mlab
