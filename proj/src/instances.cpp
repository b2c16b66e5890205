#include "dynred/instances.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dynred/errors.hpp"
#include "dynred/rng.hpp"

namespace dynred {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

BoolVec random_bits(Rng& rng, std::size_t count, double density) {
    BoolVec bits(count, 0);
    for (std::size_t i = 0; i < count; ++i)
        bits[i] = rng.bernoulli(density) ? 1 : 0;
    return bits;
}

json bits_to_json(const BoolVec& bits) {
    json arr = json::array();
    for (auto b : bits) arr.push_back(static_cast<int>(b));
    return arr;
}

BoolVec bits_from_json(const json& arr) {
    BoolVec bits;
    bits.reserve(arr.size());
    for (const auto& b : arr) {
        int v = b.get<int>();
        if (v != 0 && v != 1) throw ParseError("bit value out of range");
        bits.push_back(static_cast<std::uint8_t>(v));
    }
    return bits;
}

} // namespace

std::size_t BitMatrix::popcount() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
}

ValidationReport validate_tcstar(const TcStarInstance& inst) {
    ValidationReport report;
    auto flag = [&report](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    const std::size_t table = static_cast<std::size_t>(inst.n) * inst.delta * inst.n;
    if (inst.ab.size() != table)
        flag("ab table has " + std::to_string(inst.ab.size()) + " entries, expected " +
             std::to_string(table));
    if (inst.ac.size() != table)
        flag("ac table has " + std::to_string(inst.ac.size()) + " entries, expected " +
             std::to_string(table));

    auto check_table = [&](const std::vector<std::uint32_t>& t, const char* name) {
        if (t.size() != table) return;
        for (std::uint32_t i = 0; i < inst.n; ++i)
            for (std::uint32_t j = 0; j < inst.delta; ++j)
                for (std::uint32_t i2 = 0; i2 < inst.n; ++i2) {
                    std::uint32_t x = t[(static_cast<std::size_t>(i) * inst.delta + j) * inst.n + i2];
                    if (x >= inst.p)
                        flag(std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(i2) + ") = " + std::to_string(x) +
                             " outside [0," + std::to_string(inst.p) + ")");
                }
    };
    check_table(inst.ab, "ab");
    check_table(inst.ac, "ac");

    for (const BcEdge& e : inst.bc) {
        auto coord = [](const BcEdge& b) {
            return "((" + std::to_string(b.bi) + "," + std::to_string(b.bj) + "," +
                   std::to_string(b.bx) + "),(" + std::to_string(b.ci) + "," +
                   std::to_string(b.cj) + "," + std::to_string(b.cy) + "))";
        };
        if (e.bj != e.cj)
            flag("bc edge " + coord(e) + " joins different j coordinates");
        if (e.bi >= inst.n || e.ci >= inst.n || e.bj >= inst.delta || e.cj >= inst.delta ||
            e.bx >= inst.p || e.cy >= inst.p)
            flag("bc edge " + coord(e) + " has coordinates out of range");
    }
    return report;
}

OuMvInstance gen_oumv(std::size_t n, double density, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_oumv: n must be >= 1");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("gen_oumv: density must be in [0,1]");
    Rng rng(seed);
    OuMvInstance inst;
    inst.matrix.n = n;
    inst.matrix.bits = random_bits(rng, n * n, density);
    inst.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        BoolVec u = random_bits(rng, n, density);
        BoolVec v = random_bits(rng, n, density);
        inst.pairs.emplace_back(std::move(u), std::move(v));
    }
    return inst;
}

CnfFormula gen_cnf(std::uint32_t num_vars, std::size_t num_clauses, std::uint32_t width,
                   std::uint64_t seed) {
    if (num_vars < 2 || num_vars % 2 != 0)
        throw std::invalid_argument("gen_cnf: num_vars must be even and >= 2");
    if (width < 1) throw std::invalid_argument("gen_cnf: width must be >= 1");
    if (width > num_vars)
        throw std::invalid_argument("gen_cnf: width exceeds variable count");
    Rng rng(seed);
    CnfFormula f;
    f.num_vars = num_vars;
    f.clauses.reserve(num_clauses);
    std::vector<std::uint32_t> pool(num_vars);
    for (std::uint32_t v = 0; v < num_vars; ++v) pool[v] = v;
    for (std::size_t c = 0; c < num_clauses; ++c) {
        // partial Fisher-Yates: the first `width` entries become the clause
        for (std::uint32_t k = 0; k < width; ++k) {
            std::size_t pick = k + rng.uniform(num_vars - k);
            std::swap(pool[k], pool[pick]);
        }
        Clause clause;
        clause.reserve(width);
        for (std::uint32_t k = 0; k < width; ++k)
            clause.push_back({pool[k], rng.bernoulli(0.5)});
        std::sort(clause.begin(), clause.end(),
                  [](const Literal& a, const Literal& b) { return a.var < b.var; });
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

TcStarInstance gen_tcstar(std::uint32_t n, std::uint32_t delta, std::uint32_t p,
                          double bc_density, std::uint64_t seed) {
    if (n < 1 || delta < 1 || p < 1)
        throw std::invalid_argument("gen_tcstar: n, delta, p must be >= 1");
    if (bc_density < 0.0 || bc_density > 1.0)
        throw std::invalid_argument("gen_tcstar: bc_density must be in [0,1]");
    Rng rng(seed);
    TcStarInstance inst;
    inst.n = n;
    inst.delta = delta;
    inst.p = p;
    const std::size_t table = static_cast<std::size_t>(n) * delta * n;
    inst.ab.resize(table);
    inst.ac.resize(table);
    for (std::size_t k = 0; k < table; ++k) inst.ab[k] = static_cast<std::uint32_t>(rng.uniform(p));
    for (std::size_t k = 0; k < table; ++k) inst.ac[k] = static_cast<std::uint32_t>(rng.uniform(p));
    // bc edges are only allowed between identical j coordinates
    for (std::uint32_t j = 0; j < delta; ++j)
        for (std::uint32_t bi = 0; bi < n; ++bi)
            for (std::uint32_t bx = 0; bx < p; ++bx)
                for (std::uint32_t ci = 0; ci < n; ++ci)
                    for (std::uint32_t cy = 0; cy < p; ++cy)
                        if (rng.bernoulli(bc_density))
                            inst.bc.push_back({bi, j, bx, ci, j, cy});
    return inst;
}

TcStarInstance plant_tcstar(std::uint32_t n, std::uint32_t delta, std::uint32_t p,
                            std::uint64_t seed, ColorTriple target) {
    if (target.i >= n || target.alpha >= n || target.beta >= n)
        throw std::invalid_argument("plant_tcstar: target colors out of range");
    TcStarInstance inst = gen_tcstar(n, delta, p, 0.5, seed);
    // destroy every triangle a^{i*}_j - b^{alpha*}_{j,x} - c^{beta*}_{j,y}
    std::erase_if(inst.bc, [&](const BcEdge& e) {
        return e.bi == target.alpha && e.ci == target.beta &&
               e.bx == inst.ab_at(target.i, e.bj, target.alpha) &&
               e.cy == inst.ac_at(target.i, e.cj, target.beta);
    });
    return inst;
}

std::string to_json(const OuMvInstance& inst) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["problem"] = "oumv";
    j["n"] = inst.matrix.n;
    json rows = json::array();
    for (std::size_t i = 0; i < inst.matrix.n; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < inst.matrix.n; ++k)
            row.push_back(inst.matrix.at(i, k) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    json pairs = json::array();
    for (const auto& [u, v] : inst.pairs)
        pairs.push_back(json::array({bits_to_json(u), bits_to_json(v)}));
    j["pairs"] = std::move(pairs);
    return j.dump(2) + "\n";
}

OuMvInstance oumv_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        OuMvInstance inst;
        std::size_t n = j.at("n").get<std::size_t>();
        if (n == 0) throw ParseError("oumv: n must be >= 1");
        inst.matrix.n = n;
        inst.matrix.bits.reserve(n * n);
        const json& rows = j.at("matrix");
        if (rows.size() != n) throw ParseError("oumv: matrix row count != n");
        for (const auto& row : rows) {
            BoolVec r = bits_from_json(row);
            if (r.size() != n) throw ParseError("oumv: matrix row length != n");
            inst.matrix.bits.insert(inst.matrix.bits.end(), r.begin(), r.end());
        }
        const json& pairs = j.at("pairs");
        if (pairs.size() != n) throw ParseError("oumv: pair count != n");
        for (const auto& pair : pairs) {
            BoolVec u = bits_from_json(pair.at(0));
            BoolVec v = bits_from_json(pair.at(1));
            if (u.size() != n || v.size() != n) throw ParseError("oumv: vector length != n");
            inst.pairs.emplace_back(std::move(u), std::move(v));
        }
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("oumv json: ") + e.what());
    }
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream os;
    os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& clause : f.clauses) {
        for (const Literal& lit : clause)
            os << (lit.positive ? static_cast<std::int64_t>(lit.var) + 1
                                : -(static_cast<std::int64_t>(lit.var) + 1))
               << ' ';
        os << "0\n";
    }
    return os.str();
}

CnfFormula cnf_from_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    CnfFormula f;
    bool header_seen = false;
    std::size_t declared_clauses = 0;
    Clause current;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> f.num_vars >> declared_clauses) || cnf != "cnf")
                throw ParseError("dimacs: bad problem line");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("dimacs: clause before problem line");
        std::int64_t lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                std::uint32_t var = static_cast<std::uint32_t>(lit > 0 ? lit : -lit) - 1;
                if (var >= f.num_vars) throw ParseError("dimacs: literal out of range");
                current.push_back({var, lit > 0});
            }
        }
    }
    if (!header_seen) throw ParseError("dimacs: missing problem line");
    if (!current.empty()) throw ParseError("dimacs: clause not terminated by 0");
    if (f.clauses.size() != declared_clauses)
        throw ParseError("dimacs: clause count does not match header");
    return f;
}

std::string to_json(const CnfFormula& f) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["problem"] = "cnf";
    j["num_vars"] = f.num_vars;
    j["num_clauses"] = f.clauses.size();
    j["dimacs"] = to_dimacs(f);
    return j.dump(2) + "\n";
}

CnfFormula cnf_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        CnfFormula f = cnf_from_dimacs(j.at("dimacs").get<std::string>());
        if (j.contains("num_vars") && j["num_vars"].get<std::uint32_t>() != f.num_vars)
            throw ParseError("cnf json: num_vars disagrees with dimacs header");
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("cnf json: ") + e.what());
    }
}

CnfFormula parse_cnf_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return cnf_from_json(text);
    return cnf_from_dimacs(text);
}

std::string to_json(const TcStarInstance& inst) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["problem"] = "tcstar";
    j["n"] = inst.n;
    j["delta"] = inst.delta;
    j["p"] = inst.p;
    json ab = json::array();
    json ac = json::array();
    for (std::uint32_t i = 0; i < inst.n; ++i)
        for (std::uint32_t jj = 0; jj < inst.delta; ++jj)
            for (std::uint32_t i2 = 0; i2 < inst.n; ++i2) {
                ab.push_back(json::array({i, jj, i2, inst.ab_at(i, jj, i2)}));
                ac.push_back(json::array({i, jj, i2, inst.ac_at(i, jj, i2)}));
            }
    j["ab"] = std::move(ab);
    j["ac"] = std::move(ac);
    json bc = json::array();
    for (const BcEdge& e : inst.bc)
        bc.push_back(json::array(
            {json::array({e.bi, e.bj, e.bx}), json::array({e.ci, e.cj, e.cy})}));
    j["bc"] = std::move(bc);
    return j.dump(2) + "\n";
}

TcStarInstance tcstar_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        TcStarInstance inst;
        inst.n = j.at("n").get<std::uint32_t>();
        inst.delta = j.at("delta").get<std::uint32_t>();
        inst.p = j.at("p").get<std::uint32_t>();
        if (inst.n < 1 || inst.delta < 1 || inst.p < 1)
            throw ParseError("tcstar: n, delta, p must be >= 1");
        const std::size_t table = static_cast<std::size_t>(inst.n) * inst.delta * inst.n;
        inst.ab.assign(table, 0);
        inst.ac.assign(table, 0);
        auto fill = [&](const json& arr, std::vector<std::uint32_t>& t, const char* name) {
            if (arr.size() != table)
                throw ParseError(std::string("tcstar: ") + name + " entry count mismatch");
            for (const auto& row : arr) {
                std::uint32_t i = row.at(0).get<std::uint32_t>();
                std::uint32_t jj = row.at(1).get<std::uint32_t>();
                std::uint32_t i2 = row.at(2).get<std::uint32_t>();
                std::uint32_t x = row.at(3).get<std::uint32_t>();
                if (i >= inst.n || jj >= inst.delta || i2 >= inst.n)
                    throw ParseError(std::string("tcstar: ") + name + " coordinates out of range");
                t[(static_cast<std::size_t>(i) * inst.delta + jj) * inst.n + i2] = x;
            }
        };
        fill(j.at("ab"), inst.ab, "ab");
        fill(j.at("ac"), inst.ac, "ac");
        for (const auto& pair : j.at("bc")) {
            const auto& b = pair.at(0);
            const auto& c = pair.at(1);
            inst.bc.push_back({b.at(0).get<std::uint32_t>(), b.at(1).get<std::uint32_t>(),
                               b.at(2).get<std::uint32_t>(), c.at(0).get<std::uint32_t>(),
                               c.at(1).get<std::uint32_t>(), c.at(2).get<std::uint32_t>()});
        }
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("tcstar json: ") + e.what());
    }
}

} // namespace dynred
