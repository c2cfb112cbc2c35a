#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "quartic/oracle/rooted_map.hpp"

namespace quartic::oracle {

enum class root_class { b0, b0_star, b1 };

inline const char* name(root_class c)
{
    switch (c) {
    case root_class::b0: return "0";
    case root_class::b0_star: return "0*";
    case root_class::b1: return "1";
    }
    return "?";
}

// Vertex and face incidence of a map, computed once.
struct map_structure {
    std::vector<int> vertex_of, face_of;
    std::vector<int> vertex_degree, face_degree;

    explicit map_structure(const rooted_map& m)
    {
        int nv = 0, nf = 0;
        std::tie(vertex_of, nv) = orbits(m.sigma);
        std::tie(face_of, nf) = orbits(m.face_permutation());
        vertex_degree.assign(nv, 0);
        face_degree.assign(nf, 0);
        for (int d = 0; d < m.darts(); ++d) {
            ++vertex_degree[vertex_of[d]];
            ++face_degree[face_of[d]];
        }
    }
};

inline int edge_id(const rooted_map& m, int d) { return std::min(d, m.alpha[d]); }

// Degree-2 elements (vertices, or faces through the dual) none of whose
// neighbours has degree 1 or 2. The degree-1 exclusion makes the middle
// vertex of the path with two edges not count, as the series require.
inline std::vector<char> isolated_degree_two(const rooted_map& m, const std::vector<int>& of,
                                             const std::vector<int>& degree)
{
    std::vector<char> out(degree.size(), 0);
    for (std::size_t v = 0; v < degree.size(); ++v)
        out[v] = degree[v] == 2;
    for (int d = 0; d < m.darts(); ++d) {
        const int v = of[d], u = of[m.alpha[d]];
        if (degree[u] <= 2 && degree[v] == 2 && (u != v))
            out[v] = 0;
    }
    return out;
}

struct quadrangulation_stats {
    int faces = 0;
    int two_vertices = 0;
    bool simple = false;
    root_class root = root_class::b0;
};

inline bool is_simple(const rooted_map& m, const map_structure& s)
{
    std::set<std::pair<int, int>> seen;
    for (int d = 0; d < m.darts(); ++d) {
        const int u = s.vertex_of[d], v = s.vertex_of[m.alpha[d]];
        if (u == v)
            return false;
        if (d < m.alpha[d] && !seen.insert({std::min(u, v), std::max(u, v)}).second)
            return false;
    }
    return true;
}

// The two faces at the root edge are 4-cycles on four distinct vertices that
// share three edges; the edge they do not share touches the root edge. This
// is the single quadrangle with an edge next to the root replaced by a
// quadrangulation of a 2-cycle.
inline bool is_b0_star_shape(const rooted_map& q, const map_structure& s)
{
    const int r = 0, ra = q.alpha[0];
    const int f1 = s.face_of[r], f2 = s.face_of[ra];
    if (f1 == f2 || s.face_degree[f1] != 4 || s.face_degree[f2] != 4)
        return false;
    auto boundary = [&](int start) {
        std::vector<int> darts;
        int d = start;
        do {
            darts.push_back(d);
            d = q.face_step(d);
        } while (d != start);
        return darts;
    };
    const auto b1 = boundary(r), b2 = boundary(ra);
    std::set<int> verts, e2;
    for (int d : b1)
        verts.insert(s.vertex_of[d]);
    if (verts.size() != 4)
        return false;
    for (int d : b2)
        e2.insert(edge_id(q, d));
    int shared = 0, unshared = -1;
    for (int d : b1) {
        if (e2.count(edge_id(q, d)))
            ++shared;
        else
            unshared = d;
    }
    if (shared != 3)
        return false;
    const int u = s.vertex_of[r], v = s.vertex_of[ra];
    const int a = s.vertex_of[unshared], b = s.vertex_of[q.alpha[unshared]];
    return a == u || a == v || b == u || b == v;
}

inline quadrangulation_stats classify_quadrangulation(const rooted_map& q)
{
    const map_structure s(q);
    quadrangulation_stats out;
    out.faces = static_cast<int>(s.face_degree.size());
    const auto two = isolated_degree_two(q, s.vertex_of, s.vertex_degree);
    out.two_vertices = static_cast<int>(std::count(two.begin(), two.end(), 1));
    out.simple = is_simple(q, s);
    if (two[s.vertex_of[0]] || two[s.vertex_of[q.alpha[0]]])
        out.root = root_class::b1;
    else if (is_b0_star_shape(q, s))
        out.root = root_class::b0_star;
    else
        out.root = root_class::b0;
    return out;
}

struct four_regular_stats {
    int vertices = 0;
    int two_faces = 0;
    int ordinary_edges = 0;
    bool four_regular = false;
};

inline four_regular_stats classify_four_regular(const rooted_map& m)
{
    const map_structure s(m);
    four_regular_stats out;
    out.vertices = static_cast<int>(s.vertex_degree.size());
    out.four_regular = std::all_of(s.vertex_degree.begin(), s.vertex_degree.end(), [](int k) { return k == 4; });
    // Faces are adjacent when they share an edge: work in the dual.
    const rooted_map d = dual(m);
    const auto two = isolated_degree_two(d, s.face_of, s.face_degree);
    out.two_faces = static_cast<int>(std::count(two.begin(), two.end(), 1));
    for (int e = 0; e < m.darts(); ++e)
        if (e < m.alpha[e] && !two[s.face_of[e]] && !two[s.face_of[m.alpha[e]]])
            ++out.ordinary_edges;
    return out;
}

// Simple underlying graph on at least four vertices that stays connected after
// removing any two vertices.
inline bool is_three_connected(const rooted_map& m)
{
    const map_structure s(m);
    const int n = static_cast<int>(s.vertex_degree.size());
    if (n < 4 || !is_simple(m, s))
        return false;
    std::vector<std::vector<int>> adj(n);
    for (int d = 0; d < m.darts(); ++d)
        adj[s.vertex_of[d]].push_back(s.vertex_of[m.alpha[d]]);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            std::vector<char> seen(n, 0);
            seen[x] = seen[y] = 1;
            int start = 0;
            while (seen[start])
                ++start;
            std::vector<int> stack{start};
            seen[start] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int u : adj[v])
                    if (!seen[u]) {
                        seen[u] = 1;
                        ++reached;
                        stack.push_back(u);
                    }
            }
            if (reached != n - 2)
                return false;
        }
    return true;
}

} // namespace quartic::oracle
