#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynred/errors.hpp"
#include "dynred/instances.hpp"
#include "dynred/oracles.hpp"
#include "dynred/reduction_diameter.hpp"
#include "dynred/report.hpp"
#include "dynred/workbench.hpp"

namespace {

using dynred::GuardViolation;
using dynred::ParseError;
using nlohmann::json;

// exit-code contract: 0 success/agreement, 1 disagreement, 2 parse error,
// 3 guard violation
constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

void emit(const json& report, const std::string& report_path, bool quiet) {
    std::string text = report.dump(2) + "\n";
    if (!report_path.empty())
        write_file(report_path, text);
    else if (quiet)
        ; // nothing to print
    else
        std::cout << text;
}

// digest + path + any generator metadata embedded in the instance file
json instance_info_from_file(const std::string& path, const std::string& text) {
    json info;
    info["digest"] = dynred::digest_hex(text);
    info["path"] = path;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
        if (!j.is_discarded() && j.contains("meta")) info["meta"] = j["meta"];
    }
    return info;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) sizes.push_back(std::stoull(item));
    if (sizes.empty()) throw ParseError("empty size list");
    return sizes;
}

// "A..B" (inclusive) or a single number
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    std::size_t dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t v = std::stoull(text);
            return {v, v};
        }
        std::size_t lo = std::stoull(text.substr(0, dots));
        std::size_t hi = std::stoull(text.substr(dots + 2));
        if (lo > hi) throw ParseError("range " + text + " is reversed");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw ParseError("bad range: " + text);
    }
}

struct GenArgs {
    std::string out;
    std::uint64_t seed = 1;
    // oumv
    std::size_t n = 8;
    double density = 0.5;
    // cnf
    std::uint32_t vars = 8;
    std::size_t clauses = 16;
    std::uint32_t width = 3;
    bool raw_dimacs = false;
    // tcstar
    std::uint32_t tc_n = 6, tc_delta = 2, tc_p = 2;
    double bc_density = 0.5;
    std::string plant; // "i,a,b"
};

json with_meta(const std::string& text, json meta) {
    json j = json::parse(text);
    j["meta"] = std::move(meta);
    return j;
}

int run_gen_oumv(const GenArgs& args, bool quiet) {
    dynred::OuMvInstance inst = dynred::gen_oumv(args.n, args.density, args.seed);
    json j = with_meta(dynred::to_json(inst), json{{"generator", "gen_oumv"},
                                                   {"n", args.n},
                                                   {"density", args.density},
                                                   {"seed", args.seed}});
    write_file(args.out, j.dump(2) + "\n");
    if (!quiet) std::cout << "wrote " << args.out << "\n";
    return kExitOk;
}

int run_gen_cnf(const GenArgs& args, bool quiet) {
    dynred::CnfFormula f = dynred::gen_cnf(args.vars, args.clauses, args.width, args.seed);
    if (args.raw_dimacs) {
        write_file(args.out, dynred::to_dimacs(f));
    } else {
        json j = with_meta(dynred::to_json(f), json{{"generator", "gen_cnf"},
                                                    {"num_vars", args.vars},
                                                    {"num_clauses", args.clauses},
                                                    {"width", args.width},
                                                    {"seed", args.seed}});
        write_file(args.out, j.dump(2) + "\n");
    }
    if (!quiet) std::cout << "wrote " << args.out << "\n";
    return kExitOk;
}

int run_gen_tcstar(const GenArgs& args, bool quiet) {
    dynred::TcStarInstance inst;
    json meta{{"n", args.tc_n}, {"delta", args.tc_delta}, {"p", args.tc_p}, {"seed", args.seed}};
    if (!args.plant.empty()) {
        std::uint32_t i, a, b;
        if (std::sscanf(args.plant.c_str(), "%u,%u,%u", &i, &a, &b) != 3)
            throw ParseError("--plant expects i,a,b");
        inst = dynred::plant_tcstar(args.tc_n, args.tc_delta, args.tc_p, args.seed, {i, a, b});
        meta["generator"] = "plant_tcstar";
        meta["target"] = {i, a, b};
    } else {
        inst = dynred::gen_tcstar(args.tc_n, args.tc_delta, args.tc_p, args.bc_density, args.seed);
        meta["generator"] = "gen_tcstar";
        meta["bc_density"] = args.bc_density;
    }
    dynred::ValidationReport validation = dynred::validate_tcstar(inst);
    if (!validation.ok) throw std::logic_error("generated instance failed validation");
    json j = with_meta(dynred::to_json(inst), std::move(meta));
    write_file(args.out, j.dump(2) + "\n");
    if (!quiet) std::cout << "wrote " << args.out << "\n";
    return kExitOk;
}

int report_exit(const json& report, bool quiet, const std::string& report_path) {
    emit(report, report_path, quiet);
    bool agreement = report.at("agreement").get<bool>();
    if (!quiet)
        std::cerr << (agreement ? "agreement: reduction matches oracle\n"
                                : "DISAGREEMENT between reduction and oracle\n");
    return agreement ? kExitOk : kExitDisagreement;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynred: gadget-reduction workbench for partially dynamic "
                 "matching, max-flow and diameter"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress the human-readable summary");

    GenArgs gen_args;
    std::string instance_path, report_path, mode = "static", format = "csv";
    std::string sizes_text, range_text;
    bool decremental = false, early_exit = false;
    double gamma = 1.0;
    double alpha = dynred::solve_alpha();
    std::size_t subdivide = 0;
    std::size_t count = 100;
    std::uint64_t seed = 1;

    // gen
    CLI::App* gen = app.add_subcommand("gen", "generate a problem instance file");
    gen->require_subcommand(1);
    CLI::App* gen_oumv = gen->add_subcommand("oumv");
    gen_oumv->add_option("--n", gen_args.n)->required();
    gen_oumv->add_option("--density", gen_args.density);
    gen_oumv->add_option("--seed", gen_args.seed);
    gen_oumv->add_option("--out", gen_args.out)->required();
    CLI::App* gen_cnf = gen->add_subcommand("cnf");
    gen_cnf->add_option("--vars", gen_args.vars)->required();
    gen_cnf->add_option("--clauses", gen_args.clauses)->required();
    gen_cnf->add_option("--width", gen_args.width);
    gen_cnf->add_option("--seed", gen_args.seed);
    gen_cnf->add_flag("--dimacs", gen_args.raw_dimacs, "write raw DIMACS instead of the JSON wrapper");
    gen_cnf->add_option("--out", gen_args.out)->required();
    CLI::App* gen_tcstar = gen->add_subcommand("tcstar");
    gen_tcstar->add_option("--n", gen_args.tc_n)->required();
    gen_tcstar->add_option("--delta", gen_args.tc_delta);
    gen_tcstar->add_option("--p", gen_args.tc_p);
    gen_tcstar->add_option("--density", gen_args.bc_density);
    gen_tcstar->add_option("--seed", gen_args.seed);
    gen_tcstar->add_option("--plant", gen_args.plant, "plant a triangle-free triple i,a,b");
    gen_tcstar->add_option("--out", gen_args.out)->required();

    // solve
    CLI::App* solve = app.add_subcommand("solve", "run a reduction and compare with the oracle");
    solve->require_subcommand(1);
    CLI::App* solve_matching = solve->add_subcommand("matching");
    solve_matching->add_option("--instance", instance_path)->required();
    solve_matching->add_flag("--decremental", decremental);
    solve_matching->add_option("--report", report_path);
    CLI::App* solve_flow = solve->add_subcommand("flow");
    solve_flow->add_option("--cnf", instance_path)->required();
    solve_flow->add_flag("--early-exit", early_exit);
    solve_flow->add_flag("--decremental", decremental);
    solve_flow->add_option("--report", report_path);
    CLI::App* solve_diameter = solve->add_subcommand("diameter");
    solve_diameter->add_option("--instance", instance_path)->required();
    solve_diameter->add_option("--mode", mode)
        ->check(CLI::IsMember({"static", "incremental", "node-add"}));
    solve_diameter->add_option("--gamma", gamma);
    solve_diameter->add_option("--alpha", alpha);
    solve_diameter->add_option("--subdivide", subdivide);
    solve_diameter->add_option("--report", report_path);

    // verify
    CLI::App* verify = app.add_subcommand("verify", "oracle-agreement sweep over random instances");
    verify->require_subcommand(1);
    CLI::App* verify_matching = verify->add_subcommand("matching");
    verify_matching->add_option("--count", count);
    verify_matching->add_option("--n", range_text, "size range, e.g. 2..16");
    verify_matching->add_option("--seed", seed);
    CLI::App* verify_flow = verify->add_subcommand("flow");
    verify_flow->add_option("--count", count);
    verify_flow->add_option("--vars", range_text, "variable range, e.g. 4..14");
    verify_flow->add_option("--seed", seed);
    CLI::App* verify_diameter = verify->add_subcommand("diameter");
    verify_diameter->add_option("--count", count);
    verify_diameter->add_option("--n", range_text, "color range, e.g. 2..10");
    verify_diameter->add_option("--seed", seed);

    // bench
    CLI::App* bench = app.add_subcommand("bench", "operation-count scaling table");
    bench->require_subcommand(1);
    CLI::App* bench_matching = bench->add_subcommand("matching");
    CLI::App* bench_flow = bench->add_subcommand("flow");
    CLI::App* bench_diameter = bench->add_subcommand("diameter");
    for (CLI::App* b : {bench_matching, bench_flow, bench_diameter}) {
        b->add_option("--sizes", sizes_text, "comma-separated, ascending")->required();
        b->add_option("--seed", seed);
        b->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        b->add_option("--report", report_path);
    }

    // let global flags like --quiet appear after any subcommand
    auto enable_fallthrough = [](CLI::App* node, auto&& self) -> void {
        node->fallthrough();
        for (CLI::App* sub : node->get_subcommands({})) self(sub, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_oumv->parsed()) return run_gen_oumv(gen_args, quiet);
        if (gen_cnf->parsed()) return run_gen_cnf(gen_args, quiet);
        if (gen_tcstar->parsed()) return run_gen_tcstar(gen_args, quiet);

        if (solve_matching->parsed()) {
            std::string text = read_file(instance_path);
            dynred::OuMvInstance inst = dynred::oumv_from_json(text);
            json report = dynred::solve_matching_report(
                inst, instance_info_from_file(instance_path, text), decremental);
            return report_exit(report, quiet, report_path);
        }
        if (solve_flow->parsed()) {
            std::string text = read_file(instance_path);
            dynred::CnfFormula f = dynred::parse_cnf_text(text);
            json report = dynred::solve_flow_report(
                f, instance_info_from_file(instance_path, text), early_exit, decremental);
            return report_exit(report, quiet, report_path);
        }
        if (solve_diameter->parsed()) {
            std::string text = read_file(instance_path);
            dynred::TcStarInstance inst = dynred::tcstar_from_json(text);
            dynred::DiameterSolveOptions options{mode, gamma, alpha, subdivide};
            json report = dynred::solve_diameter_report(
                inst, instance_info_from_file(instance_path, text), options);
            return report_exit(report, quiet, report_path);
        }

        if (verify->parsed()) {
            dynred::VerifySummary summary;
            if (verify_matching->parsed()) {
                auto [lo, hi] = parse_range(range_text.empty() ? "2..16" : range_text);
                summary = dynred::verify_matching(count, lo, hi, seed);
            } else if (verify_flow->parsed()) {
                auto [lo, hi] = parse_range(range_text.empty() ? "4..14" : range_text);
                summary = dynred::verify_flow(count, static_cast<std::uint32_t>(lo),
                                              static_cast<std::uint32_t>(hi), seed);
            } else {
                auto [lo, hi] = parse_range(range_text.empty() ? "2..10" : range_text);
                summary = dynred::verify_diameter(count, static_cast<std::uint32_t>(lo),
                                                  static_cast<std::uint32_t>(hi), seed);
            }
            if (!quiet)
                std::cout << summary.runs << " runs, " << summary.failures.size()
                          << " failures\n";
            for (const std::string& failure : summary.failures) std::cerr << failure << "\n";
            return summary.failures.empty() ? kExitOk : kExitDisagreement;
        }

        if (bench->parsed()) {
            std::vector<std::size_t> sizes = parse_size_list(sizes_text);
            if (!std::is_sorted(sizes.begin(), sizes.end()))
                throw ParseError("--sizes must be ascending");
            std::vector<dynred::BenchRow> rows;
            if (bench_matching->parsed())
                rows = dynred::bench_matching(sizes, seed);
            else if (bench_flow->parsed())
                rows = dynred::bench_flow(sizes, seed);
            else
                rows = dynred::bench_diameter(sizes, seed);
            std::string text = format == "json" ? dynred::bench_json(rows).dump(2) + "\n"
                                                : dynred::bench_csv(rows);
            if (!report_path.empty())
                write_file(report_path, text);
            else
                std::cout << text;
            return kExitOk;
        }
    } catch (const GuardViolation& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return kExitGuard;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    }
    return kExitOk;
}
