#pragma once

#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace quartic::oracle {

namespace detail {

inline bool planar(int n, const std::vector<std::pair<int, int>>& edges)
{
    using graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    graph g(n);
    for (auto [a, b] : edges)
        boost::add_edge(a, b, g);
    return boost::boyer_myrvold_planarity_test(g);
}

// Completes the neighbourhood of each vertex in turn, only ever adding edges
// to later vertices.
class regular_search {
public:
    regular_search(int n, int degree) : n_(n), k_(degree), deg_(n, 0) {}

    long count_planar()
    {
        if (n_ <= k_)
            return 0;
        complete(0, 1);
        return planar_;
    }

private:
    void complete(int v, int from)
    {
        if (v == n_) {
            if (planar(n_, edges_))
                ++planar_;
            return;
        }
        if (deg_[v] == k_) {
            complete(v + 1, v + 2);
            return;
        }
        for (int u = from; u < n_; ++u) {
            if (deg_[u] == k_)
                continue;
            edges_.emplace_back(v, u);
            ++deg_[v];
            ++deg_[u];
            complete(v, u + 1);
            --deg_[v];
            --deg_[u];
            edges_.pop_back();
        }
    }

    int n_, k_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> edges_;
    long planar_ = 0;
};

} // namespace detail

// Labelled simple 4-regular planar graphs on n vertices, by exhaustion.
inline long count_labelled_4regular_planar(int n) { return detail::regular_search(n, 4).count_planar(); }

} // namespace quartic::oracle
