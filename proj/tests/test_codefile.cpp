#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "pairweight/codefile.hpp"
#include "pairweight/oracle.hpp"
#include "pairweight/report.hpp"

using namespace pairweight;

namespace {

std::string fixture(const std::string& name) {
    return std::string(PAIRWEIGHT_FIXTURE_DIR) + "/" + name;
}

// run the CLI and capture exit status and stdout
struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string tmp = "cli_capture.tmp";
    std::string cmd = std::string(PAIRWEIGHT_CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CliResult res;
    res.status = rc >= 0 ? WEXITSTATUS(rc) : -1;
    std::ifstream in(tmp);
    std::string line;
    while (std::getline(in, line)) res.out += line + "\n";
    std::remove(tmp.c_str());
    return res;
}

}  // namespace

TEST_CASE("parsing a plain code file") {
    LinearCode c = parse_code_file("# a comment\nq 2\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n");
    CHECK(c.field.q() == 2);
    CHECK(c.n == 4);
    CHECK(c.k == 2);
    CHECK(c.gen.row(0) == std::vector<int>{1, 0, 1, 0});
    CHECK(c.gen.row(1) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_code_file(text);
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("n 4\nq 2\nk 2\n1 0 1 0\n0 1 0 1\n", 1);           // header order
    expect_error("q 2\nn 4\nk 2\n1 0 1 0\n0 1 0 5\n", 5);           // range
    expect_error("q 3\nn 4\nk 2\n1 0 1 0\n0 1 0 5\n", 5);           // range under q 3
    expect_error("q 2\nn 4\nk 2\n1 0 1 0\n1 0 1 0\n", 1);           // rank deficient
    expect_error("q 2\nn 4\nk 2\n1 0 1 0\n", 4);                    // missing row -> eof
    expect_error("q 2\nn 4\nk 2\n1 0 1 0 1\n0 1 0 1\n", 4);         // long row
    expect_error("q 2\nn 1\nk 1\n1\n", 2);                          // n too small
    expect_error("q 6\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n", 1);           // not a prime power
    expect_error("q 2 poly 1 1 1\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n", 1);  // poly on a prime
    expect_error("q 4 poly 1 0 1\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n", 1);  // reducible poly
    expect_error("q 2\nn 4\nk 2\n1 0 1 0\n0 1 0 1\nstray\n", 6);    // trailing junk
    expect_error("", 1);                                            // empty
}

TEST_CASE("extension field headers") {
    LinearCode def = parse_code_file("q 4\nn 3\nk 1\n1 2 3\n");
    CHECK(def.field.e() == 2);
    CHECK(def.field.modulus() == std::vector<int>{1, 1, 1});
    LinearCode expl = parse_code_file("q 9 poly 1 0 1\nn 2\nk 1\n1 8\n");
    CHECK(expl.field.q() == 9);
    CHECK(expl.field.modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("isomorphism files") {
    IsoPair p = load_iso_file(fixture("iso_swap02_f2_n4k3.iso"));
    CHECK(p.source.n == 4);
    CHECK(p.target.gen.row(0) == std::vector<int>{0, 0, 1, 0});

    CHECK_THROWS_AS(parse_iso_file("q 2\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n"), parse_error);
    // mismatched dimensions across the separator
    CHECK_THROWS_AS(parse_iso_file("q 2\nn 4\nk 2\n1 0 1 0\n0 1 0 1\n---\nq 2\nn 4\nk 1\n1 0 1 0\n"),
                    parse_error);
    // mismatched fields
    CHECK_THROWS_AS(parse_iso_file("q 2\nn 4\nk 1\n1 0 1 0\n---\nq 3\nn 4\nk 1\n1 0 1 0\n"),
                    parse_error);
}

TEST_CASE("format and parse round-trip") {
    SplitMix64 rng(80);
    for (long long q : {2, 3, 4, 9}) {
        Field f = Field::from_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 4 + static_cast<int>(rng.below(5));
            int k = 1 + static_cast<int>(rng.below(3));
            LinearCode c = random_code(f, n, k, rng.next());
            LinearCode back = parse_code_file(format_code_file(c));
            CHECK(back.gen == c.gen);
            CHECK(back.field == c.field);
            // formatting is a fixed point
            CHECK(format_code_file(back) == format_code_file(c));
        }
    }
}

TEST_CASE("fixture files all load") {
    for (const char* name :
         {"pair_equiweight_f2_n4k2.code", "hamming_equiweight_f2_n4k2.code", "mpds_f3_n4k2.code",
          "full_pair_support_f2_n3k2.code", "split_blocks_f2_n4k2.code", "equiweight14_f2_n21k3.code",
          "base_f2_n4k3.code", "swap02_f2_n4k3.code", "swap12_f2_n4k3.code", "singer_f2_n15k4.code"}) {
        INFO(name);
        CHECK_NOTHROW(load_code_file(fixture(name)));
    }
}

TEST_CASE("json reports are stable and round-trip") {
    LinearCode c = load_code_file(fixture("base_f2_n4k3.code"));
    Json a = weights_report(c);
    Json b = weights_report(c);
    CHECK(a.dump(2) == b.dump(2));
    // parse and re-render: identical bytes
    Json parsed = Json::parse(a.dump(2));
    CHECK(parsed.dump(2) == a.dump(2));

    Verdict v = is_pair_equiweight(c);
    Json e = equiweight_report(c, 1, v, bf_hamming_equiweight(c, 1));
    CHECK(Json::parse(e.dump(2)).dump(2) == e.dump(2));
    CHECK(e["pair_equiweight"]["answer"] == "NO");

    // rationals render as exact fractions
    bool saw_fraction = false;
    for (const auto& entry : a["line_sums"])
        if (entry["sum"].get<std::string>() == "1/2") saw_fraction = true;
    CHECK(saw_fraction);
}

TEST_CASE("cli end-to-end") {
    CliResult equi = run_cli("equiweight " + fixture("pair_equiweight_f2_n4k2.code"));
    CHECK(equi.status == 0);
    CHECK(equi.out.find("YES") != std::string::npos);
    CHECK(equi.out.find("common pair weight 4") != std::string::npos);

    CliResult mpds = run_cli("mpds " + fixture("mpds_f3_n4k2.code") + " --json");
    CHECK(mpds.status == 0);
    Json parsed = Json::parse(mpds.out);
    CHECK(parsed["is_mpds"] == true);

    // deterministic bytes for a fixed input
    CliResult again = run_cli("mpds " + fixture("mpds_f3_n4k2.code") + " --json");
    CHECK(again.out == mpds.out);

    CliResult iso = run_cli("iso " + fixture("iso_swap12_f2_n4k3.iso") + " --verify");
    CHECK(iso.status == 0);
    CHECK(iso.out.find("NO") != std::string::npos);

    // the inconclusive rank-2 case resolves through the oracle under --verify
    CliResult indet = run_cli("equiweight " + fixture("singer_f2_n15k4.code") + " --r 2 --verify --json");
    CHECK(indet.status == 0);
    Json ij = Json::parse(indet.out);
    CHECK(ij["pair_equiweight"]["answer"] == "NO");
    CHECK(ij["pair_equiweight"]["decided_by"] == "brute-force");

    CliResult bad_cmd = run_cli("frobnicate");
    CHECK(bad_cmd.status == 2);
    CliResult bad_file = run_cli("equiweight no_such_file.code");
    CHECK(bad_file.status == 2);
    CliResult bad_flag = run_cli("equiweight --no-such-flag x.code");
    CHECK(bad_flag.status == 2);
    CliResult bad_r = run_cli("equiweight --r 7 " + fixture("base_f2_n4k3.code"));
    CHECK(bad_r.status == 2);

    CliResult rnd = run_cli("random --q 3 --n 5 --k 2 --seed 11");
    CHECK(rnd.status == 0);
    CliResult rnd2 = run_cli("random --q 3 --n 5 --k 2 --seed 11");
    CHECK(rnd2.out == rnd.out);

    CliResult tmat = run_cli("tmatrix --q 2 --k 3 --json");
    CHECK(tmat.status == 0);
    CHECK(Json::parse(tmat.out)["all_passed"] == true);
}
