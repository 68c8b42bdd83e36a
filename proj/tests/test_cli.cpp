#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fredombi/cli.hpp"
#include "fredombi/io.hpp"

namespace fs = std::filesystem;
using fredombi::cli::run;

namespace {

struct Run {
    int exit_code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Scratch files live under the system temp directory and are removed on exit.
class TempFile {
public:
    explicit TempFile(const std::string& name, const std::string& content = {}) {
        path_ = fs::temp_directory_path() / ("fredombi_test_" + name);
        if (!content.empty()) {
            std::ofstream file(path_, std::ios::binary);
            file << content;
        }
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path_, ec);
    }
    [[nodiscard]] std::string str() const { return path_.string(); }
    [[nodiscard]] const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::string example1_doc() {
    return fredombi::io::serialize_instance(fixtures::example1());
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("solve reports the reference solution") {
    const TempFile doc("example1.json", example1_doc());

    const auto table = invoke({"solve", doc.str(), "--output", "table"});
    CHECK(table.exit_code == 0);
    CHECK(contains(table.out, "feasible:         yes"));
    CHECK(contains(table.out, "minimal solutions (3):"));
    CHECK(contains(table.out, "optimal value:    1.000000"));
    CHECK(contains(table.out, "0.726637"));
    CHECK(table.err.empty());

    const auto json = invoke({"solve", doc.str()});
    CHECK(json.exit_code == 0);
    CHECK(contains(json.out, "\"feasible\": true"));
    CHECK(contains(json.out, "\"candidate_count\": 12"));
    CHECK(contains(json.out, "\"optimal_value\": 1"));
}

TEST_CASE("solve reads stdin when the file is -") {
    std::istringstream feed(example1_doc());
    std::streambuf* saved = std::cin.rdbuf(feed.rdbuf());
    const auto res = invoke({"solve", "-", "--quiet"});
    std::cin.rdbuf(saved);
    CHECK(res.exit_code == 0);
    CHECK(res.out.empty());
}

TEST_CASE("solve flags override the document") {
    const TempFile doc("override.json", example1_doc());
    const auto base = invoke({"solve", doc.str()});
    const auto eps = invoke({"solve", doc.str(), "--epsilon", "1e-6"});
    CHECK(eps.exit_code == 0);
    CHECK(contains(eps.out, "\"epsilon\": 9.9999999999999995e-07"));
    CHECK(eps.out != base.out);
    const auto lam = invoke({"solve", doc.str(), "--lambda", "0.5"});
    CHECK(contains(lam.out, "\"lambda\": 0.5"));
    CHECK(lam.out != base.out);
}

TEST_CASE("solve detects infeasibility") {
    const TempFile doc("infeasible.json",
                       R"({"lambda": 2, "A": [[1, 0], [1, 0]], "b": [0.3, 0.7]})");
    const auto res = invoke({"solve", doc.str()});
    CHECK(res.exit_code == 1);
    CHECK(contains(res.out, "\"feasible\": false"));
}

TEST_CASE("solve honours the candidate cap") {
    const TempFile doc("capped.json", example1_doc());
    const auto res = invoke({"solve", doc.str(), "--max-candidates", "5"});
    CHECK(res.exit_code == 3);
    CHECK(contains(res.err, "12"));
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).exit_code == 2);
    CHECK(invoke({"solve"}).exit_code == 2);
    CHECK(invoke({"solve", "/nonexistent/no.json"}).exit_code == 2);
    CHECK(invoke({"frobnicate"}).exit_code == 2);
    CHECK(invoke({"solve", "x.json", "--output", "xml"}).exit_code == 2);
    const TempFile doc("broken.json", "{");
    const auto res = invoke({"solve", doc.str()});
    CHECK(res.exit_code == 2);
    CHECK_FALSE(res.err.empty());
}

TEST_CASE("help exits cleanly") {
    const auto res = invoke({"--help"});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "solve"));
    CHECK(contains(res.out, "generate"));
}

TEST_CASE("check accepts a known solution") {
    const TempFile doc("check.json", example1_doc());
    const auto pass = invoke({"check", doc.str(), "--point", "0,0,0,0,1,0.7675",
                              "--output", "table"});
    CHECK(pass.exit_code == 0);
    CHECK(contains(pass.out, "check: PASS"));

    const auto fail = invoke({"check", doc.str(), "--point", "1,1,1,1,1,1"});
    CHECK(fail.exit_code == 1);
    CHECK(contains(fail.out, "\"pass\": false"));

    const auto short_point = invoke({"check", doc.str(), "--point", "0.5,0.5"});
    CHECK(short_point.exit_code == 2);

    // a tight tolerance rejects the rounded point
    const auto tight = invoke({"check", doc.str(), "--point", "0,0,0,0,1,0.7675",
                               "--tol", "1e-9"});
    CHECK(tight.exit_code == 1);
}

TEST_CASE("generate emits a solvable document") {
    const auto gen = invoke({"generate", "--seed", "11", "-m", "3", "-n", "4"});
    CHECK(gen.exit_code == 0);
    CHECK(contains(gen.out, "\"witness\""));
    CHECK(contains(gen.out, "\"seed\": 11"));

    const TempFile doc("generated.json", gen.out);
    const auto solved = invoke({"solve", doc.str()});
    CHECK(solved.exit_code == 0);
    CHECK(contains(solved.out, "\"feasible\": true"));

    // deterministic: the same seed prints the same document
    const auto again = invoke({"generate", "--seed", "11", "-m", "3", "-n", "4"});
    CHECK(again.out == gen.out);
}

TEST_CASE("verify runs a corpus and writes the result file") {
    const TempFile result("verify_result.json");
    const auto res = invoke({"verify", "--runs", "25", "--seed", "555",
                             "--box-samples", "10", "--result-file", result.str()});
    CHECK(res.exit_code == 0);
    CHECK(contains(res.out, "runs:                   25"));
    CHECK(contains(res.out, "result: PASS"));

    std::ifstream file(result.path());
    std::stringstream body;
    body << file.rdbuf();
    CHECK(contains(body.str(), "\"passed\": true"));
    CHECK(contains(body.str(), "\"runs\": 25"));
}

TEST_SUITE_END();
