#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "cli_app.hpp"

using chemtree::cli::run_cli;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"chemtree"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("index command") {
    CliResult r = run({"index", "--tree", "O(C(C))", "--index", "wio"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    CliResult m2 = run({"index", "--tree", "O(C(C,C,C))", "--index", "m2"});
    CHECK(m2.out == "16\n");

    // Rooted-only index on a free tree: precondition violation.
    CliResult bad = run({"index", "--tree", "C(C,C)", "--index", "wio"});
    CHECK(bad.exit_code == 3);

    // Grammar error.
    CliResult syntax = run({"index", "--tree", "C(C", "--index", "m1"});
    CHECK(syntax.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"index", "--tree", "O(C(C))"}).exit_code == 2);  // missing --index
    CHECK(run({"nonsense"}).exit_code == 2);
    CHECK(run({"enumerate", "--order", "5", "--bogus"}).exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CliResult help = run({"--help"});
    CHECK(help.exit_code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("enumerate command") {
    CliResult count = run({"enumerate", "--order", "7", "--count-only"});
    CHECK(count.exit_code == 0);
    CHECK(count.out == "9\n");

    CliResult rooted = run({"enumerate", "--order", "5", "--rooted", "--count-only"});
    CHECK(rooted.out == "4\n");

    CliResult listing = run({"enumerate", "--order", "4"});
    CHECK(listing.out == "C(C,C(C))\nC(C,C,C)\n");

    CliResult bad = run({"enumerate", "--order", "1"});
    CHECK(bad.exit_code == 3);
}

TEST_CASE("minimize command") {
    CliResult r = run({"minimize", "--order", "5", "--objective", "wio", "--rooted", "--method",
                       "brute"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "value 7\nO(C(C,C,C))\n");

    // Theory with coefficients violating the characterization conditions.
    CliResult blocked = run({"minimize", "--order", "6", "--objective", "c", "--coeffs",
                             "0,9.514,9.380,0", "--b3", "1.486", "--method", "theory"});
    CHECK(blocked.exit_code == 3);
    CHECK(blocked.err.find("error") != std::string::npos);
}

TEST_CASE("huffman command") {
    CliResult r = run({"huffman", "--weights", "1,2,3,4,1,2", "--degrees", "1,1,1,1,3,3",
                       "--trace"});
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "edges 0-4 1-4 2-5 3-5 4-5\n"
          "terminal 5\n"
          "vwwi 136\n"
          "step 1: merge 4 attach 0 1 weight 4\n"
          "step 2: merge 5 attach 2 3 4 weight 13\n");

    CliResult invalid = run({"huffman", "--weights", "1,1", "--degrees", "1,2"});
    CHECK(invalid.exit_code == 3);
}

TEST_CASE("verify c-conditions reports and succeeds") {
    CliResult r = run({"verify", "--check", "c-conditions", "--model", "basic"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("cond_23 (c1+c4+18*b3 < c2+c3): false") != std::string::npos);
    CHECK(r.out.find("cond_22 (c1+c3+8*b3 < 2*c2): false") != std::string::npos);
    CHECK(r.out.find("cond_33 (c2+c4+8*b3 < 2*c3): false") != std::string::npos);
    CHECK(r.out.find("cond_23bis (c1+c4+17*b3 < c2+c3): false") != std::string::npos);

    CliResult one = run({"verify", "--check", "c-conditions", "--model", "reg1"});
    CHECK(one.out.find("cond_23 (c1+c4+18*b3 < c2+c3): false") != std::string::npos);
    CHECK(one.out.find("applies_n_le_17: true") != std::string::npos);
}

TEST_CASE("verify majorization-suite passes") {
    CliResult r = run({"verify", "--check", "majorization-suite", "--trials", "50", "--seed", "7"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("failures 0") != std::string::npos);
}

TEST_CASE("verify conjecture-bp0 reports the order-13 counterexample") {
    CliResult ok = run({"verify", "--check", "conjecture-bp0", "--orders", "4..8"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("PASS") != std::string::npos);

    CliResult counterexample = run({"verify", "--check", "conjecture-bp0", "--orders", "12..14"});
    CHECK(counterexample.exit_code == 4);
    CHECK(counterexample.out.find("order 13") != std::string::npos);
    CHECK(counterexample.out.find("NOT-extremely-branched") != std::string::npos);
}

TEST_CASE("verify eps-reduction reports the order-7 counterexample") {
    CliResult r = run({"verify", "--check", "eps-reduction", "--orders", "7..7"});
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("DIFFER") != std::string::npos);
    CHECK(r.out.find("only in wio argmin") != std::string::npos);
}

TEST_CASE("json outputs carry the schema version") {
    for (CliResult r : {run({"enumerate", "--order", "5", "--json"}),
                        run({"index", "--tree", "O(C(C))", "--index", "wio", "--json"}),
                        run({"descriptors", "--tree", "O(C(C))", "--json"}),
                        run({"predict", "--model", "basic", "--tree", "O(C(C))", "--json"}),
                        run({"minimize", "--order", "5", "--objective", "wio", "--rooted",
                             "--json"}),
                        run({"huffman", "--weights", "1,1", "--degrees", "1,1", "--json"}),
                        run({"verify", "--check", "c-conditions", "--model", "reg2", "--json"})}) {
        REQUIRE(r.exit_code == 0);
        nlohmann::json doc = nlohmann::json::parse(r.out);
        CHECK(doc.at("schema_version") == 1);
        CHECK(doc.contains("command"));
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    CliResult a = run({"minimize", "--order", "9", "--objective", "bp0", "--json"});
    CliResult b = run({"minimize", "--order", "9", "--objective", "bp0", "--json"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    CliResult v1 = run({"verify", "--check", "majorization-suite", "--trials", "20", "--seed", "3",
                        "--json"});
    CliResult v2 = run({"verify", "--check", "majorization-suite", "--trials", "20", "--seed", "3",
                        "--json"});
    CHECK(v1.out == v2.out);
}

TEST_CASE("fit and stats round trip through files") {
    const char* data_path = "chemtree_cli_fit.csv";
    const char* model_path = "chemtree_cli_model.json";
    {
        std::ofstream out(data_path);
        out << "name,skeleton,bp_celsius\n";
        // Exact affine data in the n2 descriptor.
        out << "a,O(C(C)),10\n";          // n2 = 1
        out << "b,O(C(C(C))),20\n";       // n2 = 2
        out << "c,O(C(C(C(C)))),30\n";    // n2 = 3
        out << "d,\"O(C(C,C))\",0\n";     // n2 = 0
    }
    CliResult fit = run({"fit", "--data", data_path, "--active", "n2", "--out", model_path});
    CHECK(fit.exit_code == 0);

    CliResult fit_json = run({"fit", "--data", data_path, "--active", "n2", "--json"});
    nlohmann::json fit_doc = nlohmann::json::parse(fit_json.out);
    CHECK(fit_doc.at("schema_version") == 1);
    CHECK(fit_doc.at("model").contains("b0"));

    CliResult stats = run({"stats", "--model", model_path, "--data", data_path, "--json"});
    CHECK(stats.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(stats.out);
    CHECK(doc.at("correlation").get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(doc.at("sd").get<double>() == doctest::Approx(0.0).epsilon(1e-6));

    std::remove(data_path);
    std::remove(model_path);
}

TEST_SUITE_END();
