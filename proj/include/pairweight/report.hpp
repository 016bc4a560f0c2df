#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pairweight/codefile.hpp"
#include "pairweight/combinat.hpp"
#include "pairweight/criterion.hpp"
#include "pairweight/hierarchy.hpp"
#include "pairweight/iso.hpp"
#include "pairweight/oracle.hpp"

namespace pairweight {

// Machine-readable reports. Keys keep insertion order and rationals render
// as exact "num/den" strings, so the same input always produces the same
// bytes.
using Json = nlohmann::ordered_json;

inline Json code_summary(const LinearCode& c) {
    Json j;
    j["q"] = c.field.q();
    if (c.field.e() > 1) j["poly"] = c.field.modulus();
    j["n"] = c.n;
    j["k"] = c.k;
    return j;
}

inline Json verdict_json(const Verdict& v) {
    Json j;
    j["answer"] = answer_to_string(v.answer);
    j["decided_by"] = v.decided_by;
    if (v.common_weight) j["common_pair_weight"] = *v.common_weight;
    if (v.witness_lines) {
        j["witness"]["lines"] = {vector_to_string(v.witness_lines->first),
                                 vector_to_string(v.witness_lines->second)};
    }
    if (v.witness_values) {
        j["witness"]["values"] = {v.witness_values->first.to_string(),
                                  v.witness_values->second.to_string()};
    }
    if (v.note) j["note"] = *v.note;
    return j;
}

inline Json weights_report(const LinearCode& c) {
    if (gaussian_binomial(1, c.k, c.field.q()) > 1000000)
        throw guard_error("weights: line count exceeds the 10^6 guard");
    Json j;
    j["command"] = "weights";
    j["code"] = code_summary(c);

    Json rows = Json::array();
    for (int r = 0; r < c.k; ++r) {
        std::vector<int> row = c.gen.row(r);
        rows.push_back({{"row", r + 1},
                        {"hamming_weight", hamming_weight(row)},
                        {"pair_weight", pair_weight(row)}});
    }
    j["generator_rows"] = rows;

    MgMap mg = compute_mg(c);
    Json mg_json = Json::array();
    for (const auto& [s, count] : mg)
        mg_json.push_back({{"span", subspace_to_string(s)}, {"dim", s.dim()}, {"count", count}});
    j["column_pair_spans"] = mg_json;

    Json omega = Json::array();
    PairSpanProfile prof = pair_span_profile(c);
    for (const Subspace& line : enumerate_pg(c.field, 1, c.k)) {
        auto it = prof.line_sums.find(line);
        Rational val = it == prof.line_sums.end() ? Rational(0) : it->second;
        omega.push_back({{"line", vector_to_string(line.basis.row(0))}, {"sum", val.to_string()}});
    }
    j["line_sums"] = omega;

    j["min_hamming_weight"] = hamming_hierarchy(c, 1).values[0];
    j["min_pair_weight"] = pair_hierarchy(c, 1).values[0];
    return j;
}

inline Json equiweight_report(const LinearCode& c, int r, const Verdict& pair_verdict,
                              bool hamming_equi) {
    Json j;
    j["command"] = "equiweight";
    j["code"] = code_summary(c);
    j["r"] = r;
    j["pair_equiweight"] = verdict_json(pair_verdict);
    j["hamming_equiweight"] = {{"answer", hamming_equi ? "YES" : "NO"}, {"decided_by", "brute-force"}};
    return j;
}

inline Json hierarchy_report(const LinearCode& c, const Hierarchy& hamming, const Hierarchy& pair) {
    Json j;
    j["command"] = "hierarchy";
    j["code"] = code_summary(c);
    j["hamming"] = hamming.values;
    j["pair"] = pair.values;
    return j;
}

inline Json mpds_report_json(const LinearCode& c, const MpdsReport& rep) {
    Json j;
    j["command"] = "mpds";
    j["code"] = code_summary(c);
    j["is_mpds"] = rep.is_mpds;
    Json table = Json::array();
    for (const auto& row : rep.table)
        table.push_back({{"r", row.r}, {"pair_weight", row.value}, {"singleton_bound", row.bound}});
    j["table"] = table;
    return j;
}

inline Json ldp_report(const LinearCode& c, const std::vector<int>& profile) {
    Json j;
    j["command"] = "ldp";
    j["code"] = code_summary(c);
    j["profile"] = profile;
    return j;
}

inline Json iso_report(const IsoPair& p, const GapAnalysis& gap, const Verdict& verdict) {
    Json j;
    j["command"] = "iso";
    j["code"] = code_summary(p.source);
    j["constant_gap"] = gap.constant_gap;
    if (gap.gap) j["gap"] = *gap.gap;
    if (gap.failing_lines)
        j["failing_lines"] = {vector_to_string(gap.failing_lines->first),
                              vector_to_string(gap.failing_lines->second)};
    if (gap.failing_values)
        j["failing_values"] = {gap.failing_values->first.to_string(),
                               gap.failing_values->second.to_string()};
    j["preserves_pair_weights"] = verdict_json(verdict);
    return j;
}

inline Json tmatrix_report(const Field& f, int k, const IdentityReport& rep) {
    Json j;
    j["command"] = "tmatrix";
    j["q"] = f.q();
    j["k"] = k;
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    j["identities"] = checks;
    j["all_passed"] = rep.all_passed();
    return j;
}

inline Json bench_report(const LinearCode& c, std::uint64_t seed, const BenchmarkResult& res) {
    Json j;
    j["command"] = "bench";
    j["code"] = code_summary(c);
    j["seed"] = seed;
    j["criterion_work"] = res.criterion_work;
    j["bruteforce_work"] = res.bruteforce_work;
    j["criterion_ns"] = res.criterion_ns;
    j["bruteforce_ns"] = res.bruteforce_ns;
    j["criterion_equiweight"] = res.criterion_equiweight;
    if (res.bruteforce_run) j["bruteforce_equiweight"] = res.bruteforce_equiweight;
    return j;
}

inline std::string bench_csv(const LinearCode& c, const BenchmarkResult& res) {
    std::string row = "q,n,k,criterion_work,bruteforce_work,criterion_ns,bruteforce_ns\n";
    row += std::to_string(c.field.q()) + "," + std::to_string(c.n) + "," + std::to_string(c.k) + "," +
           std::to_string(res.criterion_work) + "," + std::to_string(res.bruteforce_work) + "," +
           std::to_string(res.criterion_ns) + "," + std::to_string(res.bruteforce_ns) + "\n";
    return row;
}

}  // namespace pairweight
