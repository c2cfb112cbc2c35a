#pragma once

#include <functional>
#include <vector>

#include "quartic/oracle/rooted_map.hpp"

namespace quartic::oracle {

namespace detail {

// Darts are labelled in the order a traversal from the root discovers them:
// dart d is processed after every smaller label, first fixing alpha(d), then
// sigma(d). Each image is either an already labelled dart or the next fresh
// label, so every rooted map is produced exactly once, already connected.
class map_search {
public:
    map_search(int edges, const std::function<void(const rooted_map&)>& visit, bool planar_only)
        : n_(2 * edges), visit_(visit), planar_only_(planar_only)
    {
        m_.sigma.assign(n_, -1);
        m_.alpha.assign(n_, -1);
        image_.assign(n_, 0);
    }

    void run()
    {
        if (n_ == 0)
            return;
        labelled_ = 1;
        place_alpha(0);
    }

private:
    void place_alpha(int d)
    {
        if (d == labelled_) {
            if (labelled_ == n_ && (!planar_only_ || vertex_count(m_) - n_ / 2 + face_count(m_) == 2))
                visit_(m_);
            return;
        }
        if (m_.alpha[d] >= 0) {
            place_sigma(d);
            return;
        }
        for (int e = d + 1; e < labelled_; ++e) {
            if (m_.alpha[e] >= 0)
                continue;
            m_.alpha[d] = e;
            m_.alpha[e] = d;
            place_sigma(d);
            m_.alpha[d] = m_.alpha[e] = -1;
        }
        if (labelled_ < n_) {
            const int e = labelled_++;
            m_.alpha[d] = e;
            m_.alpha[e] = d;
            place_sigma(d);
            m_.alpha[d] = m_.alpha[e] = -1;
            --labelled_;
        }
    }

    void place_sigma(int d)
    {
        for (int e = 0; e < labelled_; ++e) {
            if (image_[e])
                continue;
            image_[e] = 1;
            m_.sigma[d] = e;
            place_alpha(d + 1);
            image_[e] = 0;
        }
        if (labelled_ < n_) {
            const int e = labelled_++;
            image_[e] = 1;
            m_.sigma[d] = e;
            place_alpha(d + 1);
            image_[e] = 0;
            --labelled_;
        }
        m_.sigma[d] = -1;
    }

    int n_;
    int labelled_ = 0;
    const std::function<void(const rooted_map&)>& visit_;
    bool planar_only_;
    rooted_map m_;
    std::vector<char> image_;
};

} // namespace detail

// Calls visit once for every rooted map with the given number of edges
// (planar ones only unless planar_only is false).
inline void for_each_rooted_map(int edges, const std::function<void(const rooted_map&)>& visit,
                                bool planar_only = true)
{
    detail::map_search(edges, visit, planar_only).run();
}

} // namespace quartic::oracle
