// Command-line front end: construct or load posets, enumerate packed
// labelings, decompose operator orbits, run the theorem checks, reproduce
// the published tables, and test statistics (homomesy / homometry / CSP).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pml/analysis.hpp"
#include "pml/dynamics.hpp"
#include "pml/io.hpp"
#include "pml/labeling.hpp"
#include "pml/orbits.hpp"
#include "pml/polynomial.hpp"
#include "pml/poset.hpp"
#include "pml/verify.hpp"

namespace {

using namespace pml;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Format {
    std::string value = "pretty";  // pretty | json | tsv
};

void add_format_option(CLI::App* cmd, Format& format) {
    cmd->add_option("--format", format.value, "output format")
        ->check(CLI::IsMember({"pretty", "json", "tsv"}))
        ->capture_default_str();
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    return out;
}

int run_enumerate(const std::string& spec, int m, const Format& format, long long limit) {
    Poset p = parse_poset_spec(spec);
    if (format.value == "json") {
        Json out;
        out["poset"] = poset_to_json(p);
        out["m"] = m;
        auto labelings = Json::array();
        long long count = 0;
        for_each_packed(p, m, [&](const Labels& l) {
            labelings.push_back(std::vector<int>(l.begin(), l.end()));
            return limit < 0 || ++count < limit;
        });
        out["labelings"] = labelings;
        out["count"] = labelings.size();
        std::cout << out.dump(2) << "\n";
        return kExitPass;
    }
    long long count = 0;
    for_each_packed(p, m, [&](const Labels& l) {
        std::cout << labels_to_text(l) << "\n";
        return limit < 0 || ++count < limit;
    });
    return kExitPass;
}

int run_orbits(const std::string& spec, int m, Operator op, const Format& format, int threads) {
    Poset p = parse_poset_spec(spec);
    auto decomp = orbit_decomposition(p, m, op, threads);
    if (format.value == "json") {
        std::cout << decomposition_to_json(p, decomp).dump(2) << "\n";
    } else if (format.value == "tsv") {
        std::cout << "size\trepresentative\n";
        for (auto& orbit : decomp.orbits)
            std::cout << orbit.size() << "\t" << labels_to_text(orbit.front()) << "\n";
    } else {
        for (std::size_t i = 0; i < decomp.orbits.size(); ++i)
            std::cout << "orbit " << i + 1 << " (size " << decomp.orbits[i].size()
                      << "): " << labels_to_text(decomp.orbits[i].front()) << "\n";
        std::cout << "multiset: " << multiset_to_string(decomp.size_multiset()) << "\n";
        std::cout << "order: " << decomp.order.str() << "\n";
    }
    return kExitPass;
}

int run_order(const std::string& spec, int m, Operator op, int threads) {
    Poset p = parse_poset_spec(spec);
    std::cout << order_of(p, m, op, threads).str() << "\n";
    return kExitPass;
}

int run_verify(const std::string& name, const std::vector<std::string>& params,
               const Format& format) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            fail(ErrorCode::InvalidParameter, "theorem '" + name + "' takes " +
                                                  std::to_string(count) + " parameter(s)");
    };
    CheckReport report;
    if (name == "existence") {
        need(1);
        report = check_existence(parse_poset_spec(params[0]), params[0]);
    } else if (name == "trunk") {
        need(1);
        report = check_trunk(parse_poset_spec(params[0]), params[0]);
    } else if (name == "branch-divisibility") {
        need(2);
        report = check_branch_divisibility(parse_poset_spec(params[0]), std::stoi(params[1]),
                                           params[0]);
    } else if (name == "bounded-union") {
        need(2);
        report = check_bounded_union(parse_poset_spec(params[0]), parse_poset_spec(params[1]),
                                     params[0] + " + " + params[1]);
    } else if (name == "equivariance") {
        need(1);
        report = check_equivariance(parse_poset_spec(params[0]), params[0]);
    } else if (name == "star-order") {
        need(2);
        report = check_star_order(parse_int_list(params[0]), std::stoi(params[1]));
    } else if (name == "star-uniform") {
        need(2);
        report = check_star_uniform(std::stoi(params[0]), std::stoi(params[1]));
    } else if (name == "comb-max") {
        need(1);
        report = check_comb_max(std::stoi(params[0]));
    } else if (name == "comb-min") {
        need(1);
        report = check_comb_min(std::stoi(params[0]));
    } else if (name == "zipper-min") {
        need(1);
        report = check_zipper_min(std::stoi(params[0]));
    } else if (name == "three-leaf") {
        need(1);
        report = check_three_leaf(std::stoi(params[0]));
    } else {
        fail(ErrorCode::InvalidParameter, "unknown theorem '" + name + "'");
    }
    if (format.value == "json")
        std::cout << check_report_to_json(report).dump(2) << "\n";
    else
        std::cout << check_report_to_text(report);
    return report.pass() ? kExitPass : kExitFail;
}

int run_table(const std::string& family_name, const std::string& n_range,
              const std::string& m_range, const Format& format, int threads) {
    TableFamily family;
    std::pair<int, int> n;
    if (family_name == "comb") {
        family = TableFamily::Comb;
        n = {3, 6};
    } else if (family_name == "zipper") {
        family = TableFamily::Zipper;
        n = {1, 2};
    } else {
        fail(ErrorCode::InvalidParameter, "family must be comb or zipper");
    }
    if (!n_range.empty()) n = parse_range(n_range);
    std::optional<std::pair<int, int>> m;
    if (!m_range.empty() && m_range != "all") m = parse_range(m_range);

    TableReport report = reproduce_table(family, n.first, n.second, m, threads);
    if (format.value == "json")
        std::cout << table_report_to_json(report).dump(2) << "\n";
    else
        std::cout << table_report_to_text(report, format.value == "tsv");
    return report.all_match() ? kExitPass : kExitFail;
}

int run_csp(const std::string& spec, int m, const std::string& poly, Operator op,
            const Format& format, int threads) {
    Poset p = parse_poset_spec(spec);
    IntPolynomial f;
    if (poly == "hook") {
        f = q_hook_polynomial(p);
    } else {
        std::ifstream in(poly);
        if (!in) fail(ErrorCode::InvalidParameter, "cannot open polynomial file '" + poly + "'");
        Json j;
        in >> j;
        std::vector<BigInt> coeffs;
        for (auto& c : j) coeffs.emplace_back(c.get<long long>());
        f = IntPolynomial(std::move(coeffs));
    }
    auto decomp = orbit_decomposition(p, m, op, threads);
    auto report = csp_check(decomp, f);
    if (format.value == "json") {
        std::cout << csp_report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << csp_report_to_tsv(report);
        std::cout << "polynomial: " << f.to_string() << "\n";
        std::cout << "coefficients:";
        for (auto& c : f.coefficients()) std::cout << " " << c.str();
        std::cout << "\n";
        if (auto factors = q_int_factorization(f))
            std::cout << "q-product: " << (factors->empty() ? "1" : q_product_string(*factors))
                      << "\n";
        std::cout << "csp: " << (report.holds ? "holds" : "fails") << "\n";
    }
    return kExitPass;
}

int run_stats(const std::string& spec, int m, const std::string& stat_name,
              const std::string& which, Operator op, const Format& format, int threads) {
    Poset p = parse_poset_spec(spec);
    Statistic stat;
    if (stat_name == "M") {
        stat = stat_min_labeled(p);
    } else if (stat_name == "sum") {
        stat = stat_label_sum();
    } else if (stat_name.rfind("label:", 0) == 0) {
        stat = stat_label_of(std::stoi(stat_name.substr(6)));
    } else {
        fail(ErrorCode::InvalidParameter, "statistic must be M, sum, or label:<element>");
    }
    auto decomp = orbit_decomposition(p, m, op, threads);
    if (which == "homomesy") {
        auto report = homomesy_check(decomp, stat);
        if (format.value == "json") {
            Json j;
            j["check"] = "homomesy";
            j["homomesic"] = report.homomesic;
            if (report.constant) {
                j["constant"] = {{"numerator", numerator(*report.constant).str()},
                                 {"denominator", denominator(*report.constant).str()}};
            }
            auto averages = Json::array();
            for (std::size_t i = 0; i < report.averages.size(); ++i)
                averages.push_back({{"orbit", i + 1},
                                    {"size", decomp.orbits[i].size()},
                                    {"average", report.averages[i].str()}});
            j["averages"] = averages;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < report.averages.size(); ++i)
                std::cout << "orbit " << i + 1 << " (size " << decomp.orbits[i].size()
                          << "): average " << report.averages[i].str() << "\n";
            std::cout << "homomesic: " << (report.homomesic ? "yes" : "no");
            if (report.constant) std::cout << " (constant " << report.constant->str() << ")";
            std::cout << "\n";
        }
    } else {
        auto report = homometry_check(decomp, stat);
        if (format.value == "json") {
            Json j;
            j["check"] = "homometry";
            j["homometric"] = report.homometric;
            auto by_size = Json::object();
            for (auto& [size, sums] : report.sums_by_size)
                by_size[std::to_string(size)] = sums;
            j["sums_by_size"] = by_size;
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& [size, sums] : report.sums_by_size) {
                std::cout << "size " << size << ": sums";
                for (auto s : sums) std::cout << " " << s;
                std::cout << "\n";
            }
            std::cout << "homometric: " << (report.homometric ? "yes" : "no") << "\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-promotion on m-packed poset labelings: enumeration, orbit analysis, "
                 "and theorem checks"};
    app.require_subcommand(1);

    std::string spec, theorem;
    std::vector<std::string> params;
    int m = 0, threads = 1;
    long long limit_ll = -1;
    std::string operator_name_arg = "kpromotion";
    std::string family, n_range, m_range = "all", poly = "hook", stat_name = "M",
                which = "homomesy";
    Format format;

    auto* enumerate = app.add_subcommand("enumerate", "list all m-packed labelings");
    enumerate->add_option("poset", spec, "family literal or poset file")->required();
    enumerate->add_option("m", m, "label bound")->required();
    enumerate->add_option("--limit", limit_ll, "stop after this many labelings");
    add_format_option(enumerate, format);

    auto* orbits = app.add_subcommand("orbits", "orbit decomposition of an operator");
    orbits->add_option("poset", spec)->required();
    orbits->add_option("m", m)->required();
    orbits->add_option("--operator", operator_name_arg,
                       "kpromotion | kpromotion-inverse | promotion | rowmotion | "
                       "rowmotion-inverse")
        ->capture_default_str();
    orbits->add_option("--threads", threads)->capture_default_str();
    add_format_option(orbits, format);

    auto* order = app.add_subcommand("order", "order of an operator (lcm of orbit sizes)");
    order->add_option("poset", spec)->required();
    order->add_option("m", m)->required();
    order->add_option("--operator", operator_name_arg)->capture_default_str();
    order->add_option("--threads", threads)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a theorem check; exit 1 on failure");
    verify->add_option("theorem", theorem,
                       "existence | trunk | branch-divisibility | bounded-union | "
                       "equivariance | star-order | star-uniform | comb-max | comb-min | "
                       "zipper-min | three-leaf")
        ->required();
    verify->add_option("params", params, "theorem parameters");
    add_format_option(verify, format);

    auto* table = app.add_subcommand("table", "orbit-size tables vs the published values");
    table->add_option("family", family, "comb | zipper")->required();
    table->add_option("--n", n_range, "n range, e.g. 3..6 (default: published range)");
    table->add_option("--m", m_range, "m range or 'all'")->capture_default_str();
    table->add_option("--threads", threads)->capture_default_str();
    add_format_option(table, format);

    auto* csp = app.add_subcommand("csp", "cyclic sieving report");
    csp->add_option("poset", spec)->required();
    csp->add_option("m", m)->required();
    csp->add_option("--poly", poly, "'hook' or a JSON coefficient file")->capture_default_str();
    csp->add_option("--operator", operator_name_arg)->capture_default_str();
    csp->add_option("--threads", threads)->capture_default_str();
    add_format_option(csp, format);

    auto* stats = app.add_subcommand("stats", "orbit statistics");
    stats->add_option("poset", spec)->required();
    stats->add_option("m", m)->required();
    stats->add_option("--stat", stat_name, "M | sum | label:<element>")->capture_default_str();
    stats->add_option("--check", which, "homomesy | homometry")
        ->check(CLI::IsMember({"homomesy", "homometry"}))
        ->capture_default_str();
    stats->add_option("--operator", operator_name_arg)->capture_default_str();
    stats->add_option("--threads", threads)->capture_default_str();
    add_format_option(stats, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return run_enumerate(spec, m, format, limit_ll);
        Operator op = operator_from_name(operator_name_arg);
        if (*orbits) return run_orbits(spec, m, op, format, threads);
        if (*order) return run_order(spec, m, op, threads);
        if (*verify) return run_verify(theorem, params, format);
        if (*table) return run_table(family, n_range, m_range, format, threads);
        if (*csp) return run_csp(spec, m, poly, op, format, threads);
        if (*stats) return run_stats(spec, m, stat_name, which, op, format, threads);
    } catch (const pml::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool usage = e.code() == pml::ErrorCode::InvalidParameter ||
                     e.code() == pml::ErrorCode::LimitExceeded;
        return usage ? kExitUsage : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
