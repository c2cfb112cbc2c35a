#pragma once

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quartic/count_table.hpp"
#include "quartic/networks.hpp"

namespace quartic {

struct pipeline_options {
    // Extra degrees carried through the quadrangulation stage.
    int trunc_slack = 4;
    // Stage timings go to `log` when set.
    bool profile = false;
    std::ostream* log = nullptr;
    solve_options solver{};
};

// Runs the stages on demand, each once, from quadrangulations up to graphs.
// Every stage failure is reported as a stage_error naming the stage.
class pipeline {
public:
    // `degree` is the largest vertex count (or core degree k + l) wanted.
    explicit pipeline(int degree, pipeline_options opt = {}) : degree_(degree), opt_(opt)
    {
        if (degree < 1)
            throw std::invalid_argument("degree must be at least 1");
        if (opt.trunc_slack < 0)
            throw std::invalid_argument("truncation slack must be non-negative");
    }

    int degree() const { return degree_; }
    int quadrangulation_bound() const { return degree_ + opt_.trunc_slack; }

    const simple_quadrangulations& simple_quads()
    {
        return stage(simple_, "simple quadrangulations",
                     [&] { return solve_simple_quadrangulations(quadrangulation_bound(), opt_.solver); });
    }

    const arbitrary_quadrangulations& arbitrary_quads()
    {
        const auto& sq = simple_quads();
        return stage(arbitrary_, "arbitrary quadrangulations",
                     [&] { return solve_arbitrary_quadrangulations(sq, quadrangulation_bound(), opt_.solver); });
    }

    const map_series& maps()
    {
        const auto& aq = arbitrary_quads();
        return stage(maps_, "4-regular map decomposition", [&] { return solve_map_system(aq); });
    }

    // Degree to which the cores are known exactly.
    int core_bound()
    {
        const auto& m = maps();
        return std::min({m.D.bound(), m.F.bound(), m.H.bound(), m.H2.bound()});
    }

    const three_connected_series& cores()
    {
        const auto& m = maps();
        const int bound = core_bound();
        return stage(cores_, "3-connected cores", [&] {
            if (bound < degree_)
                throw precision_loss("cores are only known to degree " + std::to_string(bound) + ", " +
                                     std::to_string(degree_) + " requested; raise the truncation slack");
            return compute_three_connected(m, bound, opt_.solver);
        });
    }

    const three_connected_counts& core_counts()
    {
        const auto& c = cores();
        return stage(core_counts_, "3-connected counts", [&] { return extract_counts(c.T, degree_); });
    }

    const graph_series& graphs()
    {
        const auto& c = cores();
        return stage(graphs_, "graph networks", [&] {
            const series kernel = double_edge_kernel(c.T, coefficient(1, 2));
            const int bound = std::min(c.T.bound(), kernel.bound() + 1);
            return connected_and_all_graphs(solve_graph_networks(c.T, kernel, bound, opt_.solver));
        });
    }

    const graph_counts& graph_numbers()
    {
        const auto& g = graphs();
        return stage(graph_counts_, "graph counts", [&] {
            auto counts = extract_graph_counts(g, degree_);
            if (static_cast<int>(counts.all.size()) <= degree_)
                throw precision_loss("graph series only known to degree " + std::to_string(counts.all.size() - 1));
            return counts;
        });
    }

    const simple_map_series& simple_map_networks()
    {
        const auto& c = cores();
        return stage(simple_maps_, "simple map networks", [&] {
            const series kernel = double_edge_kernel(c.T, coefficient(1));
            const int bound = std::min(c.T.bound(), kernel.bound() + 1);
            return simple_maps(solve_map_networks(c.T, kernel, bound, opt_.solver));
        });
    }

    const std::vector<mpz_class>& simple_map_numbers()
    {
        const auto& s = simple_map_networks();
        return stage(simple_counts_, "simple map counts", [&] {
            auto counts = extract_simple_map_counts(s, degree_);
            if (static_cast<int>(counts.size()) <= degree_)
                throw precision_loss("simple map series only known to degree " + std::to_string(counts.size() - 1));
            return counts;
        });
    }

    // Every residual computed by the stages run so far plus all remaining ones.
    std::vector<residual> all_residuals()
    {
        std::vector<residual> out;
        auto add = [&](const std::vector<residual>& r) { out.insert(out.end(), r.begin(), r.end()); };
        add(simple_quads().residuals);
        add(arbitrary_quads().residuals);
        add(maps().residuals);
        add(cores().residuals);
        add(graphs().net.residuals);
        add(graphs().residuals);
        add(simple_map_networks().net.residuals);
        return out;
    }

    count_table graphs_table()
    {
        count_table t{"graphs", {"n", "g_n", "c_n", "t_n"}, {}};
        if (degree_ < 6)
            return t;
        const auto& g = graph_numbers();
        const auto& c = core_counts();
        for (int n = 6; n <= degree_; ++n)
            t.rows.push_back({std::to_string(n), g.all[n].get_str(), g.connected[n].get_str(), c.labelled[n].get_str()});
        return t;
    }

    // Non-zero t_{k,l} with k + l <= degree, by k then l.
    count_table maps3c_table()
    {
        count_table t{"maps3c", {"k", "l", "t"}, {}};
        for (const auto& [kl, v] : core_counts().t)
            if (kl.first + kl.second <= degree_)
                t.rows.push_back({std::to_string(kl.first), std::to_string(kl.second), v.get_str()});
        return t;
    }

    count_table simple_maps_table()
    {
        count_table t{"simple-maps", {"n", "t_n0", "M_n"}, {}};
        if (degree_ < 6)
            return t;
        const auto& m = simple_map_numbers();
        const auto& c = core_counts();
        for (int n = 6; n <= degree_; ++n)
            t.rows.push_back({std::to_string(n), c.rooted[n].get_str(), m[n].get_str()});
        return t;
    }

private:
    template <class T, class F>
    const T& stage(std::optional<T>& slot, const char* name, F&& f)
    {
        if (!slot) {
            const auto start = std::chrono::steady_clock::now();
            slot.emplace(in_stage(name, std::forward<F>(f)));
            if (opt_.profile && opt_.log) {
                const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", s);
                *opt_.log << "[profile] " << name << ": " << buf << " s\n";
            }
        }
        return *slot;
    }

    int degree_;
    pipeline_options opt_;
    std::optional<simple_quadrangulations> simple_;
    std::optional<arbitrary_quadrangulations> arbitrary_;
    std::optional<map_series> maps_;
    std::optional<three_connected_series> cores_;
    std::optional<three_connected_counts> core_counts_;
    std::optional<graph_series> graphs_;
    std::optional<graph_counts> graph_counts_;
    std::optional<simple_map_series> simple_maps_;
    std::optional<std::vector<mpz_class>> simple_counts_;
};

} // namespace quartic
