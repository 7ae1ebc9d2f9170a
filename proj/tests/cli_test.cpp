#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "sct/chartable.hpp"
#include "sct/cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = sct::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"partitions"}).code == 2);  // missing --n
    CHECK(run({"partitions", "--n", "-1"}).code == 2);
    CHECK(run({"table", "--n", "3", "--kind", "sigma-tau"}).code == 2);
    CHECK(run({"table", "--n", "3", "--kind", "chi-kappa", "--format", "xml"}).code == 2);
    CHECK(run({"seq", "--name", "unknown", "--max-n", "4"}).code == 2);

    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    CHECK(run({"table", "--help"}).code == 0);
}

TEST_CASE("size ceilings") {
    const CliResult blocked = run({"partitions", "--n", "11"});
    CHECK(blocked.code == 2);
    CHECK(blocked.err.find("--allow-large") != std::string::npos);
    CHECK(run({"table", "--n", "8", "--kind", "chi-kappa"}).code == 2);
    CHECK(run({"verify", "--n", "8"}).code == 2);
    CHECK(run({"seq", "--name", "arcs", "--max-n", "13"}).code == 2);
    CHECK(run({"seq", "--name", "b3", "--max-n", "13", "--route", "both"}).code == 2);
    // Pure recurrences and closed forms are not capped.
    CHECK(run({"seq", "--name", "b3", "--max-n", "13", "--route", "formula"}).code == 0);
    CHECK(run({"seq", "--name", "bell", "--max-n", "30"}).code == 0);
    CHECK(run({"seq", "--name", "aitken", "--max-n", "20", "--format", "csv"}).code == 0);
}

TEST_CASE("partitions command") {
    const CliResult r = run({"partitions", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "0: n=3:\n1: n=3:1-2\n2: n=3:2-3\n3: n=3:1-2,2-3\n4: n=3:1-3\n");

    const CliResult stats = run({"partitions", "--n", "3", "--stats"});
    CHECK(stats.code == 0);
    CHECK(stats.out.find("3: n=3:1-2,2-3  arcs=2 dim=2 dimv=[1,1] rnode=[3,2]") !=
          std::string::npos);

    const CliResult csv = run({"partitions", "--n", "3", "--format", "csv", "--stats"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("index,key,arcs,dim,dimv,rnode") == 0);
    CHECK(csv.out.find("4,\"n=3:1-3\",1,2,\"[2]\",\"[3]\"") != std::string::npos);

    const CliResult json = run({"partitions", "--n", "4", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    REQUIRE(parsed.is_array());
    CHECK(parsed.size() == 15);
    CHECK(parsed[14]["key"] == "n=4:1-4,2-3");

    CHECK(run({"partitions", "--n", "0"}).out == "0: n=0:\n");
}

TEST_CASE("table command") {
    const CliResult csv = run({"table", "--n", "2", "--kind", "chi-kappa",
                               "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out ==
          "chi-kappa,\"n=2:\",\"n=2:1-2\"\n"
          "\"n=2:\",1,1\n"
          "\"n=2:1-2\",q - 1,-1\n");

    const CliResult at2 = run({"table", "--n", "2", "--kind", "chi-kappa",
                               "--format", "csv", "--q", "2"});
    CHECK(at2.code == 0);
    CHECK(at2.out ==
          "chi-kappa at q=2,\"n=2:\",\"n=2:1-2\"\n"
          "\"n=2:\",1,1\n"
          "\"n=2:1-2\",1,-1\n");

    const CliResult json = run({"table", "--n", "3", "--kind", "chi-rho",
                                "--format", "json"});
    CHECK(json.code == 0);
    const sct::BasisMatrix round =
        sct::matrix_from_json(nlohmann::ordered_json::parse(json.out));
    CHECK(round == sct::build_matrix(3, sct::MatrixKind::chi_rho));

    const CliResult pretty = run({"table", "--n", "2", "--kind", "rho-kappa"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("rho-kappa") == 0);

    // Negative exponents cannot be evaluated at q=0.
    const CliResult at0 = run({"table", "--n", "4", "--kind", "rho-kappa", "--q", "0"});
    CHECK(at0.code == 1);
    CHECK(at0.err.find("error:") == 0);
}

TEST_CASE("verify command") {
    const CliResult r = run({"verify", "--n", "3"});
    CHECK(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["n"] == 3);
    CHECK(parsed["all_passed"] == true);
    CHECK(parsed["checks"].size() == 15);  // 8 decomposition + 7 sequence checks

    const CliResult filtered =
        run({"verify", "--n", "3", "--checks", "lu-product,diagonal-formula"});
    CHECK(filtered.code == 0);
    CHECK(nlohmann::json::parse(filtered.out)["checks"].size() == 2);

    CHECK(run({"verify", "--n", "3", "--checks", "no-such-check"}).code == 2);

    const CliResult zero = run({"verify", "--n", "0"});
    CHECK(zero.code == 0);
    CHECK(nlohmann::json::parse(zero.out)["checks"].size() == 8);
}

TEST_CASE("det command") {
    const CliResult pretty = run({"det", "--n", "2"});
    CHECK(pretty.code == 0);
    CHECK(pretty.out.find("det(n=2) = -q") != std::string::npos);
    CHECK(pretty.out.find("symbolic match: yes") != std::string::npos);

    const CliResult json = run({"det", "--n", "4", "--format", "json"});
    CHECK(json.code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["determinant"] == "-q^32");
    CHECK(parsed["symbolic_match"] == true);
    CHECK(parsed["numeric_match"] == true);
    CHECK(parsed["q"] == 2);
    CHECK(parsed["table_determinant_at_q"] == "-4294967296");

    CHECK(run({"det", "--n", "3", "--q", "5"}).code == 0);
}

TEST_CASE("seq command") {
    const CliResult bell = run({"seq", "--name", "bell", "--max-n", "4",
                                "--format", "csv"});
    CHECK(bell.code == 0);
    CHECK(bell.out == "n,value\n0,1\n1,1\n2,2\n3,5\n4,15\n");

    const CliResult aitken = run({"seq", "--name", "aitken", "--max-n", "3"});
    CHECK(aitken.code == 0);
    CHECK(aitken.out == "1\n1 2\n2 3 5\n");

    const CliResult arcs = run({"seq", "--name", "arcs", "--max-n", "6",
                                "--route", "both", "--format", "csv"});
    CHECK(arcs.code == 0);
    CHECK(arcs.out.find("n,enumerate,formula,match\n") == 0);
    CHECK(arcs.out.find("4,23,23,true\n") != std::string::npos);

    const CliResult nst = run({"seq", "--name", "nst", "--max-n", "5"});
    CHECK(nst.code == 0);
    CHECK(nst.out.find("nst(4) = 1") != std::string::npos);

    // The recursion and the direct count disagree on the row before the shift.
    const CliResult b3 = run({"seq", "--name", "b3", "--max-n", "4",
                              "--route", "both", "--format", "csv"});
    CHECK(b3.code == 0);
    CHECK(b3.out.find("n,k,j,enumerate,formula,match\n") == 0);
    CHECK(b3.out.find("4,3,1,1,2,false\n") != std::string::npos);
    CHECK(b3.out.find("4,2,1,1,1,true\n") != std::string::npos);

    const CliResult b3json = run({"seq", "--name", "b3", "--max-n", "4",
                                  "--route", "enumerate", "--format", "json"});
    CHECK(b3json.code == 0);
    const auto parsed = nlohmann::json::parse(b3json.out);
    CHECK(parsed[0]["n"] == 3);
    CHECK(parsed[0]["value"] == "1");
}

TEST_CASE("output redirection") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "sct_cli_test_output.csv";
    const CliResult r = run({"table", "--n", "3", "--kind", "chi-kappa",
                             "--format", "csv", "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream file(path);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() ==
          sct::matrix_to_csv(sct::build_matrix(3, sct::MatrixKind::chi_kappa)));
    fs::remove(path);

    const CliResult bad = run({"partitions", "--n", "2", "--output",
                               "/no/such/dir/out.txt"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("cannot open") != std::string::npos);
}
