#include "dynred/workbench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "dynred/diameter_engine.hpp"
#include "dynred/errors.hpp"
#include "dynred/oracles.hpp"
#include "dynred/reduction_diameter.hpp"
#include "dynred/reduction_flow.hpp"
#include "dynred/reduction_matching.hpp"
#include "dynred/report.hpp"
#include "dynred/rng.hpp"

namespace dynred {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json base_report(const char* problem, json instance_info) {
    json j;
    j["schema_version"] = 1;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["problem"] = problem;
    j["instance"] = std::move(instance_info);
    return j;
}

} // namespace

json counters_to_json(const OpCounters& c) {
    return json{{"insertions", c.insertions},
                {"queries", c.queries},
                {"elementary_steps", c.elementary_steps}};
}

json ledger_to_json(const CreditLedger& ledger) {
    json phases = json::array();
    for (const PhaseRecord& r : ledger.phases())
        phases.push_back(json{{"k", r.ops},
                              {"n_hat", r.node_count},
                              {"cost", r.cost},
                              {"kept", r.kept}});
    return json{{"alpha", ledger.alpha()},
                {"phases", std::move(phases)},
                {"kept_cost", ledger.kept_cost()},
                {"rolled_cost", ledger.rolled_cost()}};
}

json solve_matching_report(const OuMvInstance& inst, json instance_info, bool decremental) {
    auto start = Clock::now();
    json report = base_report("matching", std::move(instance_info));
    report["mode"] = decremental ? "decremental" : "incremental";
    report["instance"]["n"] = inst.matrix.n;

    BoolVec oracle_bits = oumv_oracle(inst);
    json oracle_json = json::array();
    for (auto b : oracle_bits) oracle_json.push_back(static_cast<int>(b));

    std::vector<int> reduction_bits;
    bool agreement = true;
    if (decremental) {
        DecrementalMatchingRun run = solve_oumv_via_matching_decremental(inst);
        reduction_bits = run.bits;
        // the decremental run visits the phases in reverse order
        agreement = run.bits.size() == oracle_bits.size();
        for (std::size_t i = 0; agreement && i < run.bits.size(); ++i)
            agreement = run.bits[i] == oracle_bits[oracle_bits.size() - 1 - i];
        report["counters"] = counters_to_json(run.counters);
    } else {
        MatchGadget gadget(inst.matrix);
        for (const auto& [u, v] : inst.pairs) reduction_bits.push_back(gadget.run_phase(u, v).bit);
        agreement = reduction_bits.size() == oracle_bits.size();
        for (std::size_t i = 0; agreement && i < reduction_bits.size(); ++i)
            agreement = reduction_bits[i] == static_cast<int>(oracle_bits[i]);
        report["counters"] = counters_to_json(gadget.graph().counters());
    }
    report["answers"] = {{"reduction", reduction_bits}, {"oracle", oracle_json}};
    report["agreement"] = agreement;
    report["wall_time_ms"] = elapsed_ms(start);
    return report;
}

json solve_flow_report(const CnfFormula& f, json instance_info, bool early_exit,
                       bool decremental) {
    auto start = Clock::now();
    json report = base_report("flow", std::move(instance_info));
    report["mode"] = decremental ? "decremental" : "incremental";
    report["early_exit"] = early_exit;
    report["instance"]["num_vars"] = f.num_vars;
    report["instance"]["num_clauses"] = f.clauses.size();
    // phases are 1-based: the phase-i threshold is i*N
    report["phase_indexing"] = "1-based";

    bool oracle = sat_oracle(f);
    bool reduction;
    if (decremental) {
        DecrementalFlowRun run = solve_sat_via_flow_decremental(f);
        reduction = run.answer;
        report["phase_values"] = run.values;
        report["counters"] = counters_to_json(run.counters);
    } else {
        FlowGadget gadget(f);
        FlowRunTrace trace;
        for (std::int64_t i = 0; i < gadget.big_n(); ++i) {
            FlowPhaseResult r = gadget.run_phase();
            trace.phase_values.push_back(r.value);
            if (r.satisfiable_hint) {
                trace.answer = true;
                if (early_exit) break;
            }
        }
        reduction = trace.answer;
        report["phase_values"] = trace.phase_values;
        report["counters"] = counters_to_json(gadget.graph().counters());
    }
    report["answers"] = {{"reduction", reduction}, {"oracle", oracle}};
    report["agreement"] = reduction == oracle;
    report["wall_time_ms"] = elapsed_ms(start);
    return report;
}

json solve_diameter_report(const TcStarInstance& inst, json instance_info,
                           const DiameterSolveOptions& options) {
    auto start = Clock::now();
    json report = base_report("diameter", std::move(instance_info));
    report["instance"]["n"] = inst.n;
    report["instance"]["delta"] = inst.delta;
    report["instance"]["p"] = inst.p;

    bool oracle = tcstar_oracle(inst).answer;
    bool reduction;
    if (options.subdivide > 0) {
        report["mode"] = "subdivided-static";
        report["subdivide"] = options.subdivide;
        HGraph h = build_H(inst, 1.0, 0);
        DynGraph divided = subdivide(h.graph, options.subdivide);
        DiameterAnswer answer = exact_diameter(divided);
        const std::int64_t scale = static_cast<std::int64_t>(options.subdivide) + 1;
        if (answer.infinite || (answer.value != 3 * scale && answer.value != 4 * scale))
            throw GuardViolation("subdivided diameter outside the scaled 3-vs-4 range");
        reduction = answer.value == 4 * scale;
        report["diameter"] = answer.value;
        report["counters"] = counters_to_json(divided.counters());
    } else if (options.mode == "static") {
        report["mode"] = "static";
        report["gamma"] = options.gamma;
        reduction = solve_tcstar_static(inst, options.gamma);
    } else if (options.mode == "incremental") {
        report["mode"] = "incremental";
        IncrementalDiameterRun run = solve_tcstar_incremental(inst);
        reduction = run.answer;
        report["counters"] = counters_to_json(run.counters);
    } else if (options.mode == "node-add") {
        report["mode"] = "node-add";
        report["alpha"] = options.alpha;
        NodeAdditionRun run = solve_tcstar_node_addition(inst, options.alpha);
        reduction = run.answer;
        report["counters"] = counters_to_json(run.counters);
        report["credit_ledger"] = ledger_to_json(run.ledger);
    } else {
        throw std::invalid_argument("solve_diameter_report: unknown mode " + options.mode);
    }
    report["answers"] = {{"reduction", reduction}, {"oracle", oracle}};
    report["agreement"] = reduction == oracle;
    report["wall_time_ms"] = elapsed_ms(start);
    return report;
}

VerifySummary verify_matching(std::size_t count, std::size_t n_min, std::size_t n_max,
                              std::uint64_t seed) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("verify_matching: bad n range");
    Rng rng(seed);
    VerifySummary summary;
    for (std::size_t run = 0; run < count; ++run) {
        std::size_t n = n_min + rng.uniform(n_max - n_min + 1);
        double density = 0.1 + 0.8 * rng.next_double();
        std::uint64_t sub_seed = rng.next_u64();
        OuMvInstance inst = gen_oumv(n, density, sub_seed);
        std::vector<int> bits = solve_oumv_via_matching(inst);
        BoolVec oracle = oumv_oracle(inst);
        bool ok = bits.size() == oracle.size();
        for (std::size_t i = 0; ok && i < bits.size(); ++i)
            ok = bits[i] == static_cast<int>(oracle[i]);
        ++summary.runs;
        if (!ok)
            summary.failures.push_back("matching run " + std::to_string(run) + ": n=" +
                                       std::to_string(n) + " seed=" + std::to_string(sub_seed));
    }
    return summary;
}

VerifySummary verify_flow(std::size_t count, std::uint32_t vars_min, std::uint32_t vars_max,
                          std::uint64_t seed) {
    if (vars_min < 2 || vars_min > vars_max)
        throw std::invalid_argument("verify_flow: bad vars range");
    Rng rng(seed);
    VerifySummary summary;
    for (std::size_t run = 0; run < count; ++run) {
        std::uint32_t vars = vars_min + static_cast<std::uint32_t>(
                                            rng.uniform(vars_max - vars_min + 1));
        if (vars % 2 != 0) vars = vars == vars_max ? vars - 1 : vars + 1;
        std::size_t clauses = 2 + rng.uniform(4 * vars - 1); // {2 .. 4*vars}
        std::uint64_t sub_seed = rng.next_u64();
        CnfFormula f = gen_cnf(vars, clauses, 3, sub_seed);
        bool oracle = sat_oracle(f);
        bool full = solve_sat_via_flow(f, /*early_exit=*/false);
        bool quick = solve_sat_via_flow(f, /*early_exit=*/true);
        ++summary.runs;
        if (full != oracle || quick != oracle)
            summary.failures.push_back("flow run " + std::to_string(run) + ": vars=" +
                                       std::to_string(vars) + " clauses=" +
                                       std::to_string(clauses) + " seed=" +
                                       std::to_string(sub_seed));
    }
    return summary;
}

VerifySummary verify_diameter(std::size_t count, std::uint32_t n_min, std::uint32_t n_max,
                              std::uint64_t seed) {
    if (n_min < 2 || n_min > n_max)
        throw std::invalid_argument("verify_diameter: n range must start at 2");
    Rng rng(seed);
    const double alpha = solve_alpha();
    VerifySummary summary;
    for (std::size_t run = 0; run < count; ++run) {
        std::uint32_t n = n_min + static_cast<std::uint32_t>(rng.uniform(n_max - n_min + 1));
        std::uint32_t delta = 1 + static_cast<std::uint32_t>(rng.uniform(3));
        std::uint32_t p = 1 + static_cast<std::uint32_t>(rng.uniform(3));
        double density = 0.3 + 0.4 * rng.next_double();
        std::uint64_t sub_seed = rng.next_u64();
        TcStarInstance inst;
        if (run % 2 == 0) {
            inst = gen_tcstar(n, delta, p, density, sub_seed);
        } else {
            ColorTriple target{static_cast<std::uint32_t>(rng.uniform(n)),
                               static_cast<std::uint32_t>(rng.uniform(n)),
                               static_cast<std::uint32_t>(rng.uniform(n))};
            inst = plant_tcstar(n, delta, p, sub_seed, target);
        }
        bool oracle = tcstar_oracle(inst).answer;
        bool ok = solve_tcstar_static(inst, 1.0) == oracle &&
                  solve_tcstar_static(inst, 0.5) == oracle &&
                  solve_tcstar_incremental(inst).answer == oracle &&
                  solve_tcstar_node_addition(inst, alpha).answer == oracle;
        ++summary.runs;
        if (!ok)
            summary.failures.push_back("diameter run " + std::to_string(run) + ": n=" +
                                       std::to_string(n) + " delta=" + std::to_string(delta) +
                                       " p=" + std::to_string(p) + " seed=" +
                                       std::to_string(sub_seed));
    }
    return summary;
}

std::vector<BenchRow> bench_matching(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        OuMvInstance inst = gen_oumv(n, 0.5, rng.next_u64());
        MatchGadget gadget(inst.matrix);
        for (const auto& [u, v] : inst.pairs) (void)gadget.run_phase(u, v);
        rows.push_back({n, gadget.graph().counters()});
    }
    return rows;
}

std::vector<BenchRow> bench_flow(const std::vector<std::size_t>& vars_sizes, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BenchRow> rows;
    for (std::size_t vars : vars_sizes) {
        CnfFormula f = gen_cnf(static_cast<std::uint32_t>(vars), 3 * vars, 3, rng.next_u64());
        FlowGadget gadget(f);
        for (std::int64_t i = 0; i < gadget.big_n(); ++i) (void)gadget.run_phase();
        rows.push_back({vars, gadget.graph().counters()});
    }
    return rows;
}

std::vector<BenchRow> bench_diameter(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        TcStarInstance inst =
            gen_tcstar(static_cast<std::uint32_t>(n), 2, 2, 0.5, rng.next_u64());
        IncrementalDiameterRun run = solve_tcstar_incremental(inst);
        rows.push_back({n, run.counters});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "size,insertions,queries,elementary_steps\n";
    for (const BenchRow& r : rows)
        os << r.size << ',' << r.counters.insertions << ',' << r.counters.queries << ','
           << r.counters.elementary_steps << '\n';
    if (rows.size() >= 2) {
        std::vector<std::pair<double, double>> steps, inserts;
        for (const BenchRow& r : rows) {
            steps.emplace_back(static_cast<double>(r.size),
                               static_cast<double>(r.counters.elementary_steps));
            inserts.emplace_back(static_cast<double>(r.size),
                                 static_cast<double>(r.counters.insertions));
        }
        ScalingFit fit_steps = fit_exponent(steps);
        ScalingFit fit_inserts = fit_exponent(inserts);
        os << "# fit elementary_steps exponent=" << fit_steps.exponent
           << " residual=" << fit_steps.residual << '\n';
        os << "# fit insertions exponent=" << fit_inserts.exponent
           << " residual=" << fit_inserts.residual << '\n';
    }
    return os.str();
}

json bench_json(const std::vector<BenchRow>& rows) {
    json out;
    json table = json::array();
    for (const BenchRow& r : rows)
        table.push_back(json{{"size", r.size},
                             {"insertions", r.counters.insertions},
                             {"queries", r.counters.queries},
                             {"elementary_steps", r.counters.elementary_steps}});
    out["rows"] = std::move(table);
    if (rows.size() >= 2) {
        std::vector<std::pair<double, double>> steps;
        for (const BenchRow& r : rows)
            steps.emplace_back(static_cast<double>(r.size),
                               static_cast<double>(r.counters.elementary_steps));
        ScalingFit fit = fit_exponent(steps);
        out["fit"] = {{"series", "elementary_steps"},
                      {"exponent", fit.exponent},
                      {"residual", fit.residual}};
    }
    return out;
}

} // namespace dynred
