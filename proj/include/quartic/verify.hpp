#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "quartic/oracle/classify.hpp"
#include "quartic/oracle/enumerate.hpp"
#include "quartic/oracle/labelled_graphs.hpp"
#include "quartic/pipeline.hpp"

namespace quartic {

struct check_result {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct verify_options {
    int stats_edges = 6;   // maps enumerated with full classification
    int total_edges = 7;   // maps enumerated for totals only
    int labelled_max = 8;  // labelled graphs enumerated up to this order
    int formula_max = 20;  // M_n compared with the closed form up to this n
};

// Statistics of all rooted planar maps up to a number of edges.
struct oracle_census {
    std::vector<long> totals;                               // by edges
    std::map<std::tuple<int, int, int>, long> quadrangulations;  // (class, faces, 2-vertices)
    std::map<std::tuple<int, int, int>, long> four_regular;      // (class, ordinary/2, 2-faces)
    std::map<std::pair<int, int>, long> simple_quadrangulations; // (faces - 1, 2-vertices)
    std::vector<long> three_connected;                      // by edges
};

inline oracle_census take_census(int stats_edges, int total_edges)
{
    oracle_census c;
    c.totals.assign(total_edges + 1, 0);
    c.three_connected.assign(stats_edges + 1, 0);
    for (int e = 1; e <= total_edges; ++e) {
        const bool stats = e <= stats_edges;
        oracle::for_each_rooted_map(e, [&](const oracle::rooted_map& m) {
            ++c.totals[e];
            if (!stats)
                return;
            const auto q = oracle::radial_quadrangulation(m);
            const auto qs = oracle::classify_quadrangulation(q);
            const int cls = static_cast<int>(qs.root);
            ++c.quadrangulations[{cls, qs.faces, qs.two_vertices}];
            const auto fs = oracle::classify_four_regular(oracle::dual(q));
            if (fs.four_regular)
                ++c.four_regular[{cls, fs.ordinary_edges / 2, fs.two_faces}];
            if (qs.simple && qs.faces >= 2)
                ++c.simple_quadrangulations[{qs.faces - 1, qs.two_vertices}];
            if (oracle::is_three_connected(m))
                ++c.three_connected[e];
        });
    }
    return c;
}

namespace detail {

// Compares the terms of s with total degree at most `top` against an oracle
// table keyed by the two exponents. Returns the number of mismatches.
inline int compare_bivariate(const series& s, int top, std::map<std::pair<int, int>, long> oracle, std::string& detail,
                             const std::string& label)
{
    int bad = 0;
    auto note = [&](int a, int b, const std::string& got, long want) {
        if (bad++ == 0)
            detail += label + " at (" + std::to_string(a) + "," + std::to_string(b) + "): series " + got +
                      ", oracle " + std::to_string(want) + "; ";
    };
    for (const auto& t : s.terms()) {
        const int a = static_cast<int>(t.mono[0]), b = static_cast<int>(t.mono[1]);
        if (s.space().degree(t.mono) > top)
            continue;
        const long want = oracle[{a, b}];
        if (t.coef != want)
            note(a, b, t.coef.get_str(), want);
        oracle.erase({a, b});
    }
    for (const auto& [k, v] : oracle)
        if (v)
            note(k.first, k.second, "0", v);
    return bad;
}

inline std::map<std::pair<int, int>, long> slice(const std::map<std::tuple<int, int, int>, long>& m, int cls)
{
    std::map<std::pair<int, int>, long> out;
    for (const auto& [k, v] : m)
        if (std::get<0>(k) == cls)
            out[{std::get<1>(k), std::get<2>(k)}] += v;
    return out;
}

} // namespace detail

inline check_result check_map_totals(const oracle_census& c)
{
    check_result r{"rooted planar map totals match the closed form", true, ""};
    for (std::size_t e = 1; e < c.totals.size(); ++e)
        if (rooted_map_count(e) != c.totals[e]) {
            r.passed = false;
            r.detail += std::to_string(e) + " edges: " + std::to_string(c.totals[e]) + "; ";
        }
    if (r.passed)
        r.detail = "up to " + std::to_string(c.totals.size() - 1) + " edges";
    return r;
}

inline std::vector<check_result> check_against_census(pipeline& p, const oracle_census& c, int stats_edges)
{
    std::vector<check_result> out;
    const auto& sq = p.simple_quads();
    const auto& aq = p.arbitrary_quads();
    const auto& m = p.maps();
    const std::string range = "up to " + std::to_string(stats_edges) + " edges";

    check_result quads{"quadrangulations by root class match the oracle", true, ""};
    const series* bs[3] = {&aq.B0, &aq.B0_star, &aq.B1};
    const series* ms[3] = {&m.M0, &m.M0_star, &m.M1};
    const char* names[3] = {"0", "0*", "1"};
    check_result maps{"4-regular maps by root class match the oracle", true, ""};
    for (int cls = 0; cls < 3; ++cls) {
        if (detail::compare_bivariate(*bs[cls], stats_edges, detail::slice(c.quadrangulations, cls), quads.detail,
                                      std::string("B") + names[cls]))
            quads.passed = false;
        if (detail::compare_bivariate(*ms[cls], stats_edges, detail::slice(c.four_regular, cls), maps.detail,
                                      std::string("M") + names[cls]))
            maps.passed = false;
    }
    for (auto* r : {&quads, &maps})
        if (r->passed)
            r->detail = range;
    out.push_back(quads);
    out.push_back(maps);

    check_result simple{"simple quadrangulations match the oracle", true, range};
    std::string d;
    if (detail::compare_bivariate(truncate(sq.Q, stats_edges - 1), stats_edges - 1, c.simple_quadrangulations, d,
                                  "Q")) {
        simple.passed = false;
        simple.detail = d;
    }
    out.push_back(simple);

    check_result tc{"3-connected maps match the simple core series", true, range};
    for (int e = 1; e < static_cast<int>(c.three_connected.size()); ++e)
        if (sq.S.coeff({static_cast<unsigned>(e - 1)}) != c.three_connected[e]) {
            tc.passed = false;
            tc.detail += std::to_string(e) + " edges: oracle " + std::to_string(c.three_connected[e]) + "; ";
        }
    out.push_back(tc);
    return out;
}

inline check_result check_labelled_graphs(pipeline& p, int upto)
{
    check_result r{"labelled 4-regular planar graphs match exhaustive search", true, ""};
    const auto& g = p.graph_numbers();
    const int top = std::min(upto, static_cast<int>(g.all.size()) - 1);
    for (int n = 1; n <= top; ++n) {
        const long want = oracle::count_labelled_4regular_planar(n);
        if (g.all[n] != want) {
            r.passed = false;
            r.detail += "g_" + std::to_string(n) + " = " + g.all[n].get_str() + ", search " + std::to_string(want) + "; ";
        }
    }
    if (r.passed)
        r.detail = "n <= " + std::to_string(top);
    return r;
}

inline check_result check_residuals(pipeline& p)
{
    check_result r{"every system residual vanishes", true, ""};
    const auto all = p.all_residuals();
    for (const auto& res : all)
        if (!res.vanishes()) {
            r.passed = false;
            r.detail += res.equation + " at degree " + std::to_string(res.first_nonzero) + "; ";
        }
    if (r.passed)
        r.detail = std::to_string(all.size()) + " equations";
    return r;
}

inline check_result check_map_formula(pipeline& p, int upto)
{
    check_result r{"rooted 4-regular maps match the closed form", true, ""};
    const series total = p.maps().total();
    const int top = std::min(upto, total.bound());
    std::vector<coefficient> by_n(top + 1);
    for (const auto& t : total.terms()) {
        const int n = static_cast<int>(t.mono[0] + t.mono[1]);
        if (n <= top)
            by_n[n] += t.coef;
    }
    for (int n = 1; n <= top; ++n)
        if (by_n[n] != rooted_map_count(n)) {
            r.passed = false;
            r.detail += "n = " + std::to_string(n) + ": " + by_n[n].get_str() + "; ";
        }
    if (r.passed)
        r.detail = "n <= " + std::to_string(top);
    return r;
}

inline check_result check_rooted_labelled(pipeline& p)
{
    check_result r{"8n t_n = n! T_n", true, ""};
    const auto& c = p.core_counts();
    for (int n = 1; n <= c.degree; ++n)
        if (8 * n * c.labelled[n] != factorial(n) * c.rooted[n]) {
            r.passed = false;
            r.detail += "n = " + std::to_string(n) + "; ";
        }
    if (r.passed)
        r.detail = "n <= " + std::to_string(c.degree);
    return r;
}

inline check_result check_kernels(pipeline& p)
{
    check_result r{"double-edge kernels agree with T2 / v", true, ""};
    const auto& c = p.cores();
    const series graph_kernel = double_edge_kernel(c.T, coefficient(1, 2));
    const series map_kernel = double_edge_kernel(c.T, coefficient(1));
    const int d1 = first_difference(graph_kernel, c.T2_by_v);
    const int d2 = first_difference(map_kernel, coefficient(2) * c.T2_by_v);
    if (d1 != INT_MAX) {
        r.passed = false;
        r.detail += "graph kernel differs at degree " + std::to_string(d1) + "; ";
    }
    if (d2 != INT_MAX) {
        r.passed = false;
        r.detail += "map kernel differs at degree " + std::to_string(d2) + "; ";
    }
    if (r.passed)
        r.detail = "through degree " + std::to_string(std::min(graph_kernel.bound(), c.T2_by_v.bound()));
    return r;
}

inline check_result check_connected_derivative(pipeline& p)
{
    check_result r{"G' = C' G", false, "residual missing"};
    for (const auto& res : p.graphs().residuals)
        if (res.equation == "G' = C' G") {
            r.passed = res.vanishes();
            r.detail = r.passed ? "through degree " + std::to_string(res.checked_to)
                                : "differs at degree " + std::to_string(res.first_nonzero);
        }
    return r;
}

// Runs every internal consistency and oracle check.
inline std::vector<check_result> verify_all(pipeline& p, const verify_options& opt = {})
{
    std::vector<check_result> out;
    const int stats = std::min(opt.stats_edges, p.quadrangulation_bound());
    const auto census = take_census(stats, std::max(opt.total_edges, stats));
    out.push_back(check_map_totals(census));
    for (auto& r : check_against_census(p, census, stats))
        out.push_back(std::move(r));
    out.push_back(check_residuals(p));
    out.push_back(check_map_formula(p, opt.formula_max));
    out.push_back(check_rooted_labelled(p));
    out.push_back(check_connected_derivative(p));
    out.push_back(check_kernels(p));
    out.push_back(check_labelled_graphs(p, opt.labelled_max));
    return out;
}

} // namespace quartic
