// Command-line front end: parse code files, dispatch the analyses, and
// print human-readable or JSON reports.
//
// Exit codes: 0 = analysis completed (the verdict itself is in the
// payload), 2 = input error, 3 = internal consistency fault (a fast
// criterion contradicted the brute-force oracle under --verify, or an
// identity the library guarantees failed).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pairweight/pairweight.hpp"
#include "pairweight/report.hpp"

namespace pw = pairweight;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFault = 3;

void emit(const pw::Json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string describe_verdict(const pw::Verdict& v) {
    std::string out = pw::answer_to_string(v.answer) + " (rule: " + v.decided_by + ")";
    if (v.common_weight) out += ", common pair weight " + std::to_string(*v.common_weight);
    if (v.witness_lines) {
        out += "\n  differing lines: " + pw::vector_to_string(v.witness_lines->first) + " vs " +
               pw::vector_to_string(v.witness_lines->second);
        if (v.witness_values)
            out += " (sums " + v.witness_values->first.to_string() + " vs " +
                   v.witness_values->second.to_string() + ")";
    }
    if (v.note) out += "\n  note: " + *v.note;
    return out;
}

std::string describe_code(const pw::LinearCode& c) {
    return "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "] code over " + c.field.name();
}

int run_weights(const std::string& path, bool as_json) {
    pw::LinearCode code = pw::load_code_file(path);
    pw::Json j = pw::weights_report(code);
    std::string text = describe_code(code) + "\n";
    text += "generator rows (hamming, pair):\n";
    for (const auto& row : j["generator_rows"])
        text += "  g" + std::to_string(row["row"].get<int>()) + ": " +
                std::to_string(row["hamming_weight"].get<int>()) + ", " +
                std::to_string(row["pair_weight"].get<int>()) + "\n";
    text += "column pair spans (span: count):\n";
    for (const auto& e : j["column_pair_spans"])
        text += "  " + e["span"].get<std::string>() + ": " + std::to_string(e["count"].get<long long>()) + "\n";
    text += "line sums:\n";
    for (const auto& e : j["line_sums"])
        text += "  " + e["line"].get<std::string>() + ": " + e["sum"].get<std::string>() + "\n";
    text += "min hamming weight: " + std::to_string(j["min_hamming_weight"].get<int>()) + "\n";
    text += "min pair weight: " + std::to_string(j["min_pair_weight"].get<int>()) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_equiweight(const std::string& path, int r, bool verify, bool as_json) {
    pw::LinearCode code = pw::load_code_file(path);
    if (r < 1 || (code.k >= 2 && r > code.k - 1) || (code.k == 1 && r != 1)) {
        std::cerr << "error: --r must lie in [1, max(1, k-1)]\n";
        return kExitInput;
    }
    pw::Verdict verdict = r == 1 ? pw::is_pair_equiweight(code) : pw::r_equiweight_analysis(code, r);
    if (verify) {
        bool oracle = pw::bf_equiweight(code, r);
        if (verdict.answer == pw::Answer::Indeterminate) {
            verdict.answer = oracle ? pw::Answer::Yes : pw::Answer::No;
            verdict.decided_by = "brute-force";
            verdict.note.reset();
        } else if ((verdict.answer == pw::Answer::Yes) != oracle) {
            std::cerr << "consistency fault: criterion verdict contradicts the brute-force oracle\n";
            return kExitFault;
        }
    }
    bool hamming = pw::bf_hamming_equiweight(code, r);
    pw::Json j = pw::equiweight_report(code, r, verdict, hamming);
    std::string text = describe_code(code) + ", r = " + std::to_string(r) + "\n";
    text += "pair equiweight: " + describe_verdict(verdict) + "\n";
    text += "hamming equiweight: " + std::string(hamming ? "YES" : "NO") + " (rule: brute-force)\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_hierarchy(const std::string& path, int max_r, bool as_json) {
    pw::LinearCode code = pw::load_code_file(path);
    if (max_r == 0) max_r = code.k;
    pw::Hierarchy hamming = pw::hamming_hierarchy(code, max_r);
    pw::Hierarchy pair = pw::pair_hierarchy(code, max_r);
    pw::Json j = pw::hierarchy_report(code, hamming, pair);
    std::string text = describe_code(code) + "\n r | hamming | pair\n";
    for (int r = 1; r <= max_r; ++r)
        text += " " + std::to_string(r) + " | " + std::to_string(hamming.values[r - 1]) + " | " +
                std::to_string(pair.values[r - 1]) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_mpds(const std::string& path, bool as_json) {
    pw::LinearCode code = pw::load_code_file(path);
    pw::MpdsReport rep = pw::mpds_report(code);
    pw::Json j = pw::mpds_report_json(code, rep);
    std::string text = describe_code(code) + "\n";
    text += std::string("maximum pair distance separable: ") + (rep.is_mpds ? "true" : "false") + "\n";
    text += " r | pair weight | singleton bound\n";
    for (const auto& row : rep.table)
        text += " " + std::to_string(row.r) + " | " + std::to_string(row.value) + " | " +
                std::to_string(row.bound) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_ldp(const std::string& path, bool verify, bool as_json) {
    pw::LinearCode code = pw::load_code_file(path);
    std::vector<int> profile = pw::ldp(code);
    if (verify) {
        pw::Hierarchy pair = pw::pair_hierarchy(code, code.k);
        if (profile != pair.values) {
            std::cerr << "consistency fault: length/dimension profile differs from the pair hierarchy\n";
            return kExitFault;
        }
    }
    pw::Json j = pw::ldp_report(code, profile);
    std::string text = describe_code(code) + "\nlength/dimension profile:";
    for (int m : profile) text += " " + std::to_string(m);
    text += "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_iso(const std::string& path, bool verify, bool as_json) {
    pw::IsoPair pair = pw::load_iso_file(path);
    pw::GapAnalysis gap = pw::gap_analysis(pair);
    pw::Verdict verdict = pw::preserves_pair_weights(pair);
    if (verify) {
        bool oracle = pw::bf_iso(pair);
        if ((verdict.answer == pw::Answer::Yes) != oracle) {
            std::cerr << "consistency fault: gap criterion contradicts the brute-force oracle\n";
            return kExitFault;
        }
    }
    pw::Json j = pw::iso_report(pair, gap, verdict);
    std::string text = describe_code(pair.source) + " -> matched-rows isomorphism\n";
    text += std::string("constant weight gap: ") + (gap.constant_gap ? "true" : "false");
    if (gap.gap) text += " (gap " + std::to_string(*gap.gap) + ")";
    text += "\n";
    text += "preserves pair weights: " + describe_verdict(verdict) + "\n";
    emit(j, as_json, text);
    return kExitOk;
}

int run_tmatrix(long long q, int k, int r, int s, bool as_json) {
    pw::Field f = pw::Field::from_order(q);
    if (r >= 0 || s >= 0) {
        if (r < 0 || s < 0) {
            std::cerr << "error: --r and --s must be given together\n";
            return kExitInput;
        }
        pw::IncidenceMatrix t = pw::build_incidence(f, r, s, k);
        pw::Json j;
        j["command"] = "tmatrix";
        j["q"] = q;
        j["k"] = k;
        j["r"] = r;
        j["s"] = s;
        pw::Json rows = pw::Json::array();
        std::string text = "containment matrix over " + f.name() + ": " +
                           std::to_string(t.entries.size()) + " x " +
                           std::to_string(t.entries.empty() ? 0 : t.entries[0].size()) + "\n";
        for (size_t i = 0; i < t.entries.size(); ++i) {
            rows.push_back(t.entries[i]);
            text += "  " + pw::subspace_to_string(t.row_spaces[i]) + " :";
            for (int v : t.entries[i]) text += " " + std::to_string(v);
            text += "\n";
        }
        j["entries"] = rows;
        emit(j, as_json, text);
        return kExitOk;
    }
    pw::IdentityReport rep = pw::check_incidence_identities(f, k);
    pw::Json j = pw::tmatrix_report(f, k, rep);
    std::string text = "containment matrix identities over " + f.name() + ", k = " + std::to_string(k) + "\n";
    for (const auto& c : rep.checks)
        text += "  " + c.name + ": " + (c.passed ? "pass" : "FAIL") + "\n";
    emit(j, as_json, text);
    return rep.all_passed() ? kExitOk : kExitFault;
}

int run_random(long long q, int n, int k, std::uint64_t seed) {
    pw::Field f = pw::Field::from_order(q);
    pw::LinearCode code = pw::random_code(f, n, k, seed);
    std::cout << "# seed " << seed << "\n" << pw::format_code_file(code);
    return kExitOk;
}

int run_bench(long long q, int n, int k, std::uint64_t seed, bool skip_brute, bool as_json) {
    pw::Field f = pw::Field::from_order(q);
    pw::LinearCode code = pw::random_code(f, n, k, seed);
    pw::BenchmarkResult res = pw::benchmark_equiweight(code, !skip_brute);
    if (as_json)
        std::cout << pw::bench_report(code, seed, res).dump(2) << "\n";
    else
        std::cout << pw::bench_csv(code, res);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbol-pair weight analysis for linear codes over small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::string path;
    int r = 1;
    int max_r = 0;
    bool verify = false;
    long long q = 2;
    int n = 4, k = 2;
    std::uint64_t seed = 1;
    bool skip_brute = false;

    auto* weights = app.add_subcommand("weights", "per-row weights, column pair spans and line sums");
    weights->add_option("file", path, "code file")->required();

    auto* equi = app.add_subcommand("equiweight", "decide whether all rank-r subcodes share one pair weight");
    equi->add_option("file", path, "code file")->required();
    equi->add_option("--r", r, "subcode rank (default 1)");
    equi->add_flag("--verify", verify, "cross-check against the brute-force oracle");

    auto* hier = app.add_subcommand("hierarchy", "generalized hamming and pair weight hierarchies");
    hier->add_option("file", path, "code file")->required();
    hier->add_option("--max-r", max_r, "highest rank to compute (default k)");

    auto* mpds = app.add_subcommand("mpds", "pair Singleton bounds and separability");
    mpds->add_option("file", path, "code file")->required();

    auto* ldp = app.add_subcommand("ldp", "length/dimension profile of the pair-restricted subcodes");
    ldp->add_option("file", path, "code file")->required();
    ldp->add_flag("--verify", verify, "cross-check against the pair hierarchy");

    auto* iso = app.add_subcommand("iso", "pair-weight preservation of a matched-rows isomorphism");
    iso->add_option("file", path, "isomorphism file (two blocks split by ---)")->required();
    iso->add_flag("--verify", verify, "cross-check against the brute-force oracle");

    int tm_r = -1, tm_s = -1;
    auto* tmat = app.add_subcommand("tmatrix", "verify the subspace containment matrix identities");
    tmat->add_option("--q", q, "field order")->required();
    tmat->add_option("--k", k, "ambient dimension")->required();
    tmat->add_option("--r", tm_r, "print the r-into-s containment matrix instead");
    tmat->add_option("--s", tm_s, "print the r-into-s containment matrix instead");

    auto* rnd = app.add_subcommand("random", "emit a seeded random code in file format");
    rnd->add_option("--q", q, "field order")->required();
    rnd->add_option("--n", n, "length")->required();
    rnd->add_option("--k", k, "dimension")->required();
    rnd->add_option("--seed", seed, "64-bit seed")->required();

    auto* bench = app.add_subcommand("bench", "line-sum criterion vs exhaustive codeword scan");
    bench->add_option("--q", q, "field order")->required();
    bench->add_option("--n", n, "length")->required();
    bench->add_option("--k", k, "dimension")->required();
    bench->add_option("--seed", seed, "64-bit seed")->required();
    bench->add_flag("--skip-bruteforce", skip_brute, "measure only the criterion path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (weights->parsed()) return run_weights(path, as_json);
        if (equi->parsed()) return run_equiweight(path, r, verify, as_json);
        if (hier->parsed()) return run_hierarchy(path, max_r, as_json);
        if (mpds->parsed()) return run_mpds(path, as_json);
        if (ldp->parsed()) return run_ldp(path, verify, as_json);
        if (iso->parsed()) return run_iso(path, verify, as_json);
        if (tmat->parsed()) return run_tmatrix(q, k, tm_r, tm_s, as_json);
        if (rnd->parsed()) return run_random(q, n, k, seed);
        if (bench->parsed()) return run_bench(q, n, k, seed, skip_brute, as_json);
    } catch (const pw::consistency_fault& e) {
        std::cerr << "consistency fault: " << e.what() << "\n";
        return kExitFault;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
