#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "quartic/quartic.hpp"
#include "quartic/verify.hpp"

namespace {

struct common_flags {
    int max_n = 16;
    int trunc_slack = 4;
    std::string format = "csv";
    bool profile = false;
};

void add_common(CLI::App* cmd, common_flags& f, bool with_format = true)
{
    cmd->add_option("--trunc-slack", f.trunc_slack, "Extra degrees carried through the quadrangulation stage")
        ->check(CLI::NonNegativeNumber);
    if (with_format)
        cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--profile", f.profile, "Print stage timings to stderr");
}

quartic::pipeline_options options(const common_flags& f)
{
    quartic::pipeline_options o;
    o.trunc_slack = f.trunc_slack;
    o.profile = f.profile;
    o.log = &std::cerr;
    return o;
}

void emit(const quartic::count_table& t, const std::string& format)
{
    std::cout << (format == "json" ? t.to_json() : t.to_csv());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact counts of 4-regular planar graphs and maps"};
    app.require_subcommand(1);

    common_flags f;
    int max_degree = 10;
    quartic::verify_options vopt;

    auto* graphs = app.add_subcommand("graphs", "Labelled 4-regular planar graphs: all, connected, 3-connected");
    graphs->add_option("--max-n", f.max_n, "Largest number of vertices")->check(CLI::PositiveNumber);
    add_common(graphs, f);

    auto* maps3c = app.add_subcommand("maps3c", "Rooted 3-connected cores t_{k,l} with k + l up to the degree");
    maps3c->add_option("--max-degree", max_degree, "Largest k + l")->check(CLI::PositiveNumber);
    add_common(maps3c, f);

    auto* simple = app.add_subcommand("simple-maps", "Rooted simple 4-regular maps and their 3-connected part");
    simple->add_option("--max-n", f.max_n, "Largest number of vertices")->check(CLI::PositiveNumber);
    add_common(simple, f);

    auto* verify = app.add_subcommand("verify", "Run the consistency and brute-force checks");
    verify->add_option("--max-n", f.max_n, "Degree the series are solved to")->check(CLI::PositiveNumber);
    verify->add_option("--max-edges", vopt.total_edges, "Largest map enumerated for totals")
        ->check(CLI::Range(1, 9));
    verify->add_option("--stats-edges", vopt.stats_edges, "Largest map enumerated with full statistics")
        ->check(CLI::Range(1, 7));
    add_common(verify, f, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*maps3c) {
            quartic::pipeline p(max_degree, options(f));
            emit(p.maps3c_table(), f.format);
        } else if (*graphs) {
            quartic::pipeline p(f.max_n, options(f));
            emit(p.graphs_table(), f.format);
        } else if (*simple) {
            quartic::pipeline p(f.max_n, options(f));
            emit(p.simple_maps_table(), f.format);
        } else {
            quartic::pipeline p(f.max_n, options(f));
            bool ok = true;
            for (const auto& r : quartic::verify_all(p, vopt)) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
