#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynred/amortization.hpp"
#include "dynred/dyngraph.hpp"
#include "dynred/instances.hpp"

namespace dynred {

// Shared machinery behind the CLI: report assembly, oracle-agreement sweeps
// and the operation-count benchmarks. All randomness flows from the single
// seed handed in.

nlohmann::json counters_to_json(const OpCounters& c);
nlohmann::json ledger_to_json(const CreditLedger& ledger);

// `instance_info` carries at least the digest; the CLI adds the source path
// and any generator metadata found in the file.
nlohmann::json solve_matching_report(const OuMvInstance& inst, nlohmann::json instance_info,
                                     bool decremental);
nlohmann::json solve_flow_report(const CnfFormula& f, nlohmann::json instance_info,
                                 bool early_exit, bool decremental);

struct DiameterSolveOptions {
    std::string mode = "static"; // static | incremental | node-add
    double gamma = 1.0;
    double alpha = 0.6180339887498949;
    std::size_t subdivide = 0; // > 0: subdivided static run, mode ignored
};

nlohmann::json solve_diameter_report(const TcStarInstance& inst, nlohmann::json instance_info,
                                     const DiameterSolveOptions& options);

struct VerifySummary {
    std::size_t runs = 0;
    std::vector<std::string> failures;
};

VerifySummary verify_matching(std::size_t count, std::size_t n_min, std::size_t n_max,
                              std::uint64_t seed);
VerifySummary verify_flow(std::size_t count, std::uint32_t vars_min, std::uint32_t vars_max,
                          std::uint64_t seed);
VerifySummary verify_diameter(std::size_t count, std::uint32_t n_min, std::uint32_t n_max,
                              std::uint64_t seed);

struct BenchRow {
    std::size_t size;
    OpCounters counters;
};

std::vector<BenchRow> bench_matching(const std::vector<std::size_t>& sizes, std::uint64_t seed);
std::vector<BenchRow> bench_flow(const std::vector<std::size_t>& vars_sizes, std::uint64_t seed);
std::vector<BenchRow> bench_diameter(const std::vector<std::size_t>& sizes, std::uint64_t seed);

// CSV table with trailing comment lines carrying the log-log fits.
std::string bench_csv(const std::vector<BenchRow>& rows);
nlohmann::json bench_json(const std::vector<BenchRow>& rows);

} // namespace dynred
