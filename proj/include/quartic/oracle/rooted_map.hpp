#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quartic::oracle {

// A map on darts 0..2m-1 given by its rotation sigma (next dart around the
// same vertex) and edge involution alpha. Dart 0 is the root. Faces are the
// orbits of alpha . sigma, so the corner between d and sigma(d) lies on the
// face of d.
struct rooted_map {
    std::vector<int> sigma;
    std::vector<int> alpha;

    int darts() const { return static_cast<int>(sigma.size()); }
    int edges() const { return darts() / 2; }

    int face_step(int d) const { return alpha[sigma[d]]; }

    std::vector<int> face_permutation() const
    {
        std::vector<int> p(sigma.size());
        for (int d = 0; d < darts(); ++d)
            p[d] = face_step(d);
        return p;
    }
};

// Orbit index of every dart under a permutation, and the number of orbits.
inline std::pair<std::vector<int>, int> orbits(const std::vector<int>& perm)
{
    std::vector<int> id(perm.size(), -1);
    int count = 0;
    for (std::size_t d = 0; d < perm.size(); ++d) {
        if (id[d] >= 0)
            continue;
        for (int e = static_cast<int>(d); id[e] < 0; e = perm[e])
            id[e] = count;
        ++count;
    }
    return {std::move(id), count};
}

inline std::vector<int> orbit_sizes(const std::vector<int>& perm)
{
    auto [id, n] = orbits(perm);
    std::vector<int> size(n, 0);
    for (int i : id)
        ++size[i];
    return size;
}

inline int vertex_count(const rooted_map& m) { return orbits(m.sigma).second; }
inline int face_count(const rooted_map& m) { return orbits(m.face_permutation()).second; }

inline bool is_connected(const rooted_map& m)
{
    if (m.darts() == 0)
        return true;
    std::vector<char> seen(m.darts(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.sigma[d], m.alpha[d]})
            if (!seen[e]) {
                seen[e] = 1;
                ++reached;
                stack.push_back(e);
            }
    }
    return reached == m.darts();
}

// Connected and V - E + F = 2.
inline bool is_planar(const rooted_map& m)
{
    return is_connected(m) && vertex_count(m) - m.edges() + face_count(m) == 2;
}

inline rooted_map dual(const rooted_map& m) { return {m.face_permutation(), m.alpha}; }

// Radial quadrangulation: one vertex per vertex and per face of m,
// one edge per corner. Dart 2d leaves the vertex of d towards the face of the
// corner (d, sigma d); dart 2d + 1 is its reverse. The rooting is preserved:
// the result is rooted at dart 0.
inline rooted_map radial_quadrangulation(const rooted_map& m)
{
    const int n = m.darts();
    std::vector<int> g = m.face_permutation();
    std::vector<int> g_inv(n);
    for (int d = 0; d < n; ++d)
        g_inv[g[d]] = d;

    for (const std::vector<int>* around_face : {&g_inv, &g}) {
        rooted_map q{std::vector<int>(2 * n), std::vector<int>(2 * n)};
        for (int d = 0; d < n; ++d) {
            q.alpha[2 * d] = 2 * d + 1;
            q.alpha[2 * d + 1] = 2 * d;
            q.sigma[2 * d] = 2 * m.sigma[d];
            q.sigma[2 * d + 1] = 2 * (*around_face)[d] + 1;
        }
        if (!is_planar(q))
            continue;
        bool quad = true;
        for (int s : orbit_sizes(q.face_permutation()))
            quad = quad && s == 4;
        if (quad)
            return q;
    }
    throw std::logic_error("radial construction did not give a planar quadrangulation");
}

// The 4-regular map dual to the radial quadrangulation.
inline rooted_map medial(const rooted_map& m) { return dual(radial_quadrangulation(m)); }

} // namespace quartic::oracle
