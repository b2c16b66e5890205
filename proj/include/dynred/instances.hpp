#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dynred {

using BoolVec = std::vector<std::uint8_t>;

struct BitMatrix {
    std::size_t n = 0;
    BoolVec bits; // row-major, n*n entries of 0/1

    bool at(std::size_t i, std::size_t j) const { return bits[i * n + j] != 0; }
    void set(std::size_t i, std::size_t j, bool value) { bits[i * n + j] = value ? 1 : 0; }
    std::size_t popcount() const;
};

// Boolean n x n matrix plus the n online (u, v) vector pairs. The pairs are
// pre-materialized; the online constraint is enforced by the reduction
// drivers consuming them strictly in order.
struct OuMvInstance {
    BitMatrix matrix;
    std::vector<std::pair<BoolVec, BoolVec>> pairs;
};

struct Literal {
    std::uint32_t var;
    bool positive;

    friend bool operator==(const Literal&, const Literal&) = default;
};
using Clause = std::vector<Literal>;

struct CnfFormula {
    std::uint32_t num_vars = 0; // even; the variables split into halves A and B
    std::vector<Clause> clauses;
};

// One B-C edge with both endpoint coordinates kept verbatim, so the validator
// can flag pairs whose j coordinates differ.
struct BcEdge {
    std::uint32_t bi, bj, bx;
    std::uint32_t ci, cj, cy;

    friend bool operator==(const BcEdge&, const BcEdge&) = default;
};

/// Structured tripartite node-colored instance with parameters (n, delta, p).
/// ab[...] and ac[...] are total on [n] x [delta] x [n]: for each (i, j, i')
/// exactly one x in [p] such that (a^i_j, b^{i'}_{j,x}) is an edge, and
/// likewise one y for the C side.
struct TcStarInstance {
    std::uint32_t n = 0, delta = 0, p = 0;
    std::vector<std::uint32_t> ab; // [(i*delta + j)*n + i2] -> x
    std::vector<std::uint32_t> ac; // [(i*delta + j)*n + i2] -> y
    std::vector<BcEdge> bc;

    std::uint32_t ab_at(std::uint32_t i, std::uint32_t j, std::uint32_t i2) const {
        return ab[(static_cast<std::size_t>(i) * delta + j) * n + i2];
    }
    std::uint32_t ac_at(std::uint32_t i, std::uint32_t j, std::uint32_t i2) const {
        return ac[(static_cast<std::size_t>(i) * delta + j) * n + i2];
    }
};

struct ColorTriple {
    std::uint32_t i, alpha, beta;

    friend bool operator==(const ColorTriple&, const ColorTriple&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations; // each names the offending coordinates
};

ValidationReport validate_tcstar(const TcStarInstance& inst);

// Seeded generators. Pure functions of their arguments: identical arguments
// give bit-identical instances.
OuMvInstance gen_oumv(std::size_t n, double density, std::uint64_t seed);
CnfFormula gen_cnf(std::uint32_t num_vars, std::size_t num_clauses, std::uint32_t width,
                   std::uint64_t seed);
TcStarInstance gen_tcstar(std::uint32_t n, std::uint32_t delta, std::uint32_t p,
                          double bc_density, std::uint64_t seed);

// Random instance that is guaranteed to answer YES with `target` triangle-free:
// every bc edge completing a triangle through a^{i*}_j is deleted.
TcStarInstance plant_tcstar(std::uint32_t n, std::uint32_t delta, std::uint32_t p,
                            std::uint64_t seed, ColorTriple target);

// Canonical JSON (sorted keys, schema_version field). from_json ignores
// unknown fields such as the generator metadata the CLI embeds.
std::string to_json(const OuMvInstance& inst);
OuMvInstance oumv_from_json(const std::string& text);
std::string to_json(const CnfFormula& f);
CnfFormula cnf_from_json(const std::string& text);
std::string to_json(const TcStarInstance& inst);
TcStarInstance tcstar_from_json(const std::string& text);

std::string to_dimacs(const CnfFormula& f);
CnfFormula cnf_from_dimacs(const std::string& text);

// Accepts either the JSON wrapper or raw DIMACS text.
CnfFormula parse_cnf_text(const std::string& text);

} // namespace dynred
