#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "quartic/pipeline.hpp"
#include "quartic/verify.hpp"

using namespace quartic;

namespace {

// Reference values: graphs by n, cores t_{k,l}, simple maps by n.
const std::vector<std::array<const char*, 4>> graph_values = {
    {"6", "15", "15", "15"},
    {"7", "0", "0", "0"},
    {"8", "2520", "2520", "2520"},
    {"9", "30240", "30240", "30240"},
    {"10", "1315440", "1315440", "1315440"},
    {"11", "39916800", "39916800", "39916800"},
    {"12", "1606755150", "1606651200", "1546776000"},
    {"13", "66356690400", "66356690400", "63826963200"},
    {"14", "3068088823800", "3067975310400", "2879997120000"},
    {"15", "152398096250400", "152395825982400", "142057025510400"},
    {"16", "8196374895508800", "8196176020032000", "7534165871232000"},
    {"17", "472595587079616000", "472586324386176000", "430559631710208000"},
    {"18", "29138462100216869400", "29137847418231552000", "26287924131076608000"},
    {"19", "1912269800864459836800", "1912231517504083776000", "1710786280874711040000"},
    {"20", "133143916957026288112800", "133141260589657512192000", "118162522829227548672000"},
    {"21", "9803331490189678577136000", "9803140616698955285760000", "8635690901034837319680000"},
    {"22", "761176404797020723326816000", "761161832514030029322240000", "665819208405772061921280000"},
    {"23", "62162810722904469623293248000", "62161644432203364801392640000", "54014719048912416098304000000"},
    {"24", "5327113727746428410913561441000", "5327015666189741660374318080000", "4599666299608288403199344640000"},
};

// One row per l, columns k = 2..12; empty cells are zero.
const std::vector<std::array<const char*, 11>> core_values = {
    {"0", "0", "0", "0", "1", "0", "4", "6", "29", "88", "310"},
    {"0", "0", "0", "0", "12", "28", "128", "396", "1460", "5148", "18696"},
    {"2", "6", "16", "40", "156", "546", "2192", "8316", "32380", "125510", "489708"},
    {"0", "8", "56", "260", "1152", "4900", "21344", "92160", "397960", "1708300", "7303040"},
    {"0", "0", "46", "510", "3630", "21350", "115440", "593622", "2959160", "14407250", "68862960"},
    {"0", "0", "0", "312", "4920", "46508", "347984", "2282544", "13791064", "78760836", "431601120"},
    {"0", "0", "0", "0", "2388", "48860", "579736", "5267640", "40819100", "284712736", "1843137520"},
    {"0", "0", "0", "0", "0", "19728", "498352", "7123464", "76274560", "683057672", "5415222384"},
    {"0", "0", "0", "0", "0", "0", "172374", "5190462", "86891050", "1072179834", "10906813890"},
    {"0", "0", "0", "0", "0", "0", "0", "1571096", "54988280", "1055746780", "14758457040"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "14800940", "590784084", "12801068400"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "143190896", "6422227344"},
    {"0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1415859276"},
};

const std::vector<std::array<const char*, 3>> simple_map_values = {
    {"6", "1", "1"},
    {"7", "0", "0"},
    {"8", "4", "4"},
    {"9", "6", "6"},
    {"10", "29", "29"},
    {"11", "88", "88"},
    {"12", "310", "334"},
    {"13", "1066", "1196"},
    {"14", "3700", "4386"},
    {"15", "13036", "16066"},
    {"16", "46092", "59164"},
    {"17", "164628", "218824"},
    {"18", "591259", "812503"},
    {"19", "2137690", "3028600"},
    {"20", "7770968", "11329468"},
    {"21", "28396346", "42527120"},
    {"22", "104256321", "160148795"},
    {"23", "384446150", "604932614"},
    {"24", "1423383358", "2291617406"},
};

int failures = 0;

void report(const std::string& id, bool ok, const std::string& what, const std::string& detail, bool gating = true)
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << " " << what;
    if (!detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << (gating ? "" : " [stretch, non-gating]") << std::endl;
    if (!ok && gating)
        ++failures;
}

std::string graph_mismatch(pipeline& p, int upto)
{
    const auto& g = p.graph_numbers();
    const auto& t = p.core_counts();
    for (const auto& row : graph_values) {
        const int n = std::stoi(row[0]);
        if (n > upto)
            break;
        if (g.all[n] != mpz_class(row[1]) || g.connected[n] != mpz_class(row[2]) || t.labelled[n] != mpz_class(row[3]))
            return "first mismatch at n = " + std::to_string(n);
    }
    return "";
}

std::string core_mismatch(pipeline& p, int max_k, int& compared)
{
    const auto& t = p.core_counts();
    compared = 0;
    for (std::size_t l = 0; l < core_values.size(); ++l)
        for (int k = 2; k <= max_k; ++k) {
            const mpz_class want(core_values[l][k - 2]);
            if (want == 0)
                continue;
            ++compared;
            if (t.at(k, static_cast<int>(l)) != want)
                return "t(" + std::to_string(k) + "," + std::to_string(l) + ") = " + t.at(k, static_cast<int>(l)).get_str();
        }
    return "";
}

std::string simple_map_mismatch(pipeline& p, int upto)
{
    const auto& m = p.simple_map_numbers();
    const auto& t = p.core_counts();
    for (const auto& row : simple_map_values) {
        const int n = std::stoi(row[0]);
        if (n > upto)
            break;
        if (t.rooted[n] != mpz_class(row[1]) || m[n] != mpz_class(row[2]))
            return "first mismatch at n = " + std::to_string(n);
    }
    return "";
}

template <class F>
void guarded(const std::string& id, const std::string& what, F&& f, bool gating = true)
{
    try {
        f();
    } catch (const std::exception& e) {
        report(id, false, what, e.what(), gating);
    }
}

} // namespace

int main()
{
    pipeline p(16);

    guarded("1", "graph counts g_n, c_n, t_n for 6 <= n <= 16", [&] {
        const auto d = graph_mismatch(p, 16);
        report("1", d.empty(), "graph counts g_n, c_n, t_n for 6 <= n <= 16", d);
    });

    guarded("2", "core counts t_{k,l} for k <= 8", [&] {
        int compared = 0;
        const auto d = core_mismatch(p, 8, compared);
        report("2", d.empty(), "core counts t_{k,l} for k <= 8",
               d.empty() ? std::to_string(compared) + " entries" : d);
    });

    guarded("3", "simple map counts t_{n,0} and M_n for 6 <= n <= 16", [&] {
        auto d = simple_map_mismatch(p, 16);
        const bool split = p.core_counts().rooted[12] == 310 && p.simple_map_numbers()[12] == 334;
        if (d.empty() && !split)
            d = "n = 12 does not split 310 / 334";
        report("3", d.empty(), "simple map counts t_{n,0} and M_n for 6 <= n <= 16", d.empty() ? "310 vs 334 at n = 12" : d);
    });

    guarded("4", "(M0 + M1 + M0*)(q,q) against the closed form for n <= 20", [&] {
        const auto r = check_map_formula(p, 20);
        report("4", r.passed && r.detail == "n <= 20", "(M0 + M1 + M0*)(q,q) against the closed form for n <= 20",
               r.detail);
    });

    guarded("5", "8n t_n = n! T_n", [&] {
        const auto r = check_rooted_labelled(p);
        report("5", r.passed, "8n t_n = n! T_n", r.detail);
    });

    guarded("6", "reversion identities and S2(a,b) = v^2 / (1 + v)", [&] {
        bool ok = true;
        int seen = 0, upto = INT_MAX;
        for (const auto& r : p.cores().residuals) {
            const auto& e = r.equation;
            if (e.rfind("a(", 0) == 0 || e.rfind("b(", 0) == 0 || e.rfind("u = ", 0) == 0 || e.rfind("v = ", 0) == 0 ||
                e.rfind("S2(a,b)", 0) == 0) {
                ++seen;
                ok = ok && r.vanishes();
                upto = std::min(upto, r.checked_to);
            }
        }
        report("6", ok && seen == 5, "reversion identities and S2(a,b) = v^2 / (1 + v)",
               std::to_string(seen) + " identities through degree " + std::to_string(upto));
    });

    guarded("7", "every system residual vanishes", [&] {
        const auto r = check_residuals(p);
        report("7", r.passed, "every system residual vanishes", r.detail);
    });

    guarded("8", "brute-force map and graph enumeration agree with the series", [&] {
        const auto census = take_census(5, 7);
        bool ok = true;
        std::string detail;
        auto add = [&](const check_result& r) {
            ok = ok && r.passed;
            if (!r.passed)
                detail += r.name + ": " + r.detail + "; ";
        };
        add(check_map_totals(census));
        for (const auto& r : check_against_census(p, census, 5))
            add(r);
        const auto& g = p.graph_numbers();
        const long g6 = oracle::count_labelled_4regular_planar(6), g7 = oracle::count_labelled_4regular_planar(7),
                   g8 = oracle::count_labelled_4regular_planar(8);
        if (g6 != 15 || g7 != 0 || g8 != 2520 || g.all[6] != g6 || g.all[7] != g7 || g.all[8] != g8) {
            ok = false;
            detail += "labelled search " + std::to_string(g6) + ", " + std::to_string(g7) + ", " + std::to_string(g8);
        }
        report("8", ok, "brute-force map and graph enumeration agree with the series",
               ok ? "stats to 5 edges, totals to 7 edges, g6 = 15, g7 = 0, g8 = 2520" : detail);
    });

    guarded("9", "G' = C' G", [&] {
        const auto r = check_connected_derivative(p);
        report("9", r.passed, "G' = C' G", r.detail);
    });

    guarded("1+", "all reference values up to n = 24", [&] {
        pipeline big(24);
        std::string d = graph_mismatch(big, 24);
        if (d.empty())
            d = simple_map_mismatch(big, 24);
        int compared = 0;
        if (d.empty())
            d = core_mismatch(big, 12, compared);
        report("1+", d.empty(), "all reference values up to n = 24", d, false);
    }, false);

    std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria pass") << std::endl;
    return failures ? 1 : 0;
}
