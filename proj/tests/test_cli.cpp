#include "oracles.hpp"

#include "torus_tunnels/cli.hpp"
#include "torus_tunnels/record.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::initializer_list<std::string> args) {
    std::vector<std::string> argv{"torus-tunnels"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = torus_tunnels::cli::run(argv, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

class TempFile {
  public:
    explicit TempFile(const std::string& contents)
        : path_(std::filesystem::temp_directory_path() /
                ("torus_tunnels_batch_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt")) {
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

  private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("golden transcripts") {
    CHECK(run_cli({"middle-slopes", "41", "29"}).out == "[1/3], 5, 17, 29, 99, 169, 577\n");
    CHECK(run_cli({"middle-slopes", "181", "-48"}).out ==
          "[6/7], -15, -23, -31, -151, -271, -883, -2157, -3431\n");
    CHECK(run_cli({"intermediates", "41", "29"}).out == "(3,2), (4,3), (7,5), (10,7), (17,12), (24,17), (41,29)\n");
    CHECK(run_cli({"binaries", "41", "29"}).out == "[1, 0, 1, 0, 1]\n");
    CHECK(run_cli({"upper-slopes", "18", "7"}).out == "[1/5], 11, 15, 21, 25, 31\n");
    CHECK(run_cli({"upper-slopes", "7", "18"}).out == "[1/3], 3, 3, 5, 5, 7, 7, 7, 9, 9, 11, 11, 11, 13, 13\n");
    CHECK(run_cli({"lower-slopes", "18", "7"}).out == "[1/3], 3, 3, 5, 5, 7, 7, 7, 9, 9, 11, 11, 11, 13, 13\n");
}

TEST_CASE("other text outputs") {
    CHECK(run_cli({"intermediates", "3", "2"}).out == "(3,2)\n");
    CHECK(run_cli({"binaries", "7", "3"}).out == "[]\n");
    CHECK(run_cli({"binaries", "181", "-48"}).out == "[0, 0, 1, 0, 1, 1, 0]\n");
    CHECK(run_cli({"classify", "5", "4"}).out == "case I: 1 distinct tunnel (middle = upper = lower)\n");
    CHECK(run_cli({"classify", "7", "3"}).out == "case II: 2 distinct tunnels (middle = upper; lower distinct)\n");
    CHECK(run_cli({"classify", "41", "29"}).out == "case III: 3 distinct tunnels\n");
}

TEST_CASE("errors exit with code 2 and one diagnostic line") {
    const Result gcd = run_cli({"middle-slopes", "4", "2"});
    CHECK(gcd.code == 2);
    CHECK(gcd.out.empty());
    CHECK(gcd.err == "error: (4,2) is not a knot (gcd = 2)\n");

    const Result zero = run_cli({"intermediates", "7", "0"});
    CHECK(zero.code == 2);
    CHECK(lines_of(zero.err).size() == 1);

    const Result unknot = run_cli({"upper-slopes", "1", "9"});
    CHECK(unknot.code == 2);
    CHECK(unknot.err == "error: (1,9) is the unknot\n");

    CHECK(run_cli({"middle-slopes", "abc", "3"}).code == 2);
    CHECK(run_cli({"middle-slopes", "5"}).code == 2);
    CHECK(run_cli({"middle-slopes"}).code == 2);
    CHECK(run_cli({"middle-slopes", "5", "3", "--format", "xml"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"enumerate", "--max", "1"}).code == 2);
    CHECK(run_cli({"enumerate", "--max", "5", "--tunnel", "sideways"}).code == 2);
}

TEST_CASE("help exits 0") {
    const Result help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("middle-slopes") != std::string::npos);
}

TEST_CASE("json output parses back") {
    const Result r = run_cli({"middle-slopes", "181", "-48", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto record = torus_tunnels::record_from_json(nlohmann::json::parse(r.out));
    CHECK(record.p == 181);
    CHECK(record.q == -48);
    CHECK(record.tunnel == torus_tunnels::TunnelKind::middle);
    CHECK(record.simple_slope == torus_tunnels::SimpleSlope(6, 7));
    CHECK(record.slopes.back() == -3431);
    CHECK(torus_tunnels::to_json(record).dump() + "\n" == r.out);

    const Result c = run_cli({"classify", "7", "3", "--format", "json"});
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j["case"] == "II");
    CHECK(j["distinct_count"] == 2);
    CHECK(j["classes"] == nlohmann::json::parse(R"([["middle","upper"],["lower"]])"));
}

TEST_CASE("csv output") {
    const Result r = run_cli({"upper-slopes", "18", "7", "--format", "csv"});
    CHECK(r.out == "p,q,tunnel,simple_slope,slopes,binaries,case,distinct_count\n"
                   "18,7,upper,1/5,11;15;21;25;31,,,\n");

    const Result c = run_cli({"classify", "7", "3", "--format", "csv"});
    CHECK(lines_of(c.out) == std::vector<std::string>{
                                 "p,q,tunnel,simple_slope,slopes,binaries,case,distinct_count",
                                 "7,3,middle,1/5,9,,II,2",
                                 "7,3,upper,1/5,9,,II,2",
                                 "7,3,lower,1/3,3;5;5,,II,2",
                             });
}

TEST_CASE("batch files are processed in order") {
    TempFile file("41 29\n\n18 7\n4 2\n3 2\n");
    const Result r = run_cli({"middle-slopes", "--batch", file.path()});
    CHECK(r.code == 2);
    CHECK(lines_of(r.out) == std::vector<std::string>{"[1/3], 5, 17, 29, 99, 169, 577", "[1/5], 11, 31, 51",
                                                      "[1/3]"});
    CHECK(r.err == "error: line 4: (4,2) is not a knot (gcd = 2)\n");

    TempFile clean("5 4\n7 3\n");
    const Result ok = run_cli({"classify", "--batch", clean.path()});
    CHECK(ok.code == 0);
    CHECK(lines_of(ok.out).size() == 2);

    CHECK(run_cli({"middle-slopes", "--batch", "/nonexistent/pairs.txt"}).code == 2);
    CHECK(run_cli({"middle-slopes", "5", "3", "--batch", clean.path()}).code == 2);
}

TEST_CASE("enumerate") {
    const Result csv = run_cli({"enumerate", "--max", "5", "--tunnel", "middle", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(lines_of(csv.out) == std::vector<std::string>{
                                   "p,q,tunnel,simple_slope,slopes,binaries,case,distinct_count",
                                   "3,2,middle,1/3,,,I,1",
                                   "4,3,middle,1/3,5,,I,1",
                                   "5,2,middle,1/5,,,II,2",
                                   "5,3,middle,1/3,7,,II,2",
                                   "5,4,middle,1/3,5;7,0,I,1",
                               });

    const Result text = run_cli({"enumerate", "--max", "4"});
    CHECK(lines_of(text.out) == std::vector<std::string>{
                                    "(3,2) middle: [1/3]",
                                    "(3,2) upper: [1/3]",
                                    "(3,2) lower: [1/3]",
                                    "(4,3) middle: [1/3], 5",
                                    "(4,3) upper: [1/3], 5",
                                    "(4,3) lower: [1/3], 5",
                                });
}

TEST_CASE("enumerate json: one record per pair and tunnel, independent of worker count") {
    const Result one = run_cli({"enumerate", "--max", "60", "--format", "json", "--jobs", "1"});
    const Result four = run_cli({"enumerate", "--max", "60", "--format", "json", "--jobs", "4"});
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);

    const auto lines = lines_of(one.out);
    CHECK(lines.size() == static_cast<std::size_t>(3 * oracle::count_pairs(60)));
    std::vector<std::pair<oracle::i64, oracle::i64>> seen;
    for (std::size_t i = 0; i < lines.size(); i += 3) {
        const auto r = torus_tunnels::record_from_json(nlohmann::json::parse(lines[i]));
        REQUIRE(r.classification.has_value());
        seen.emplace_back(static_cast<oracle::i64>(r.p), static_cast<oracle::i64>(r.q));
    }
    std::vector<std::pair<oracle::i64, oracle::i64>> expected;
    oracle::for_each_pair(60, [&](oracle::i64 p, oracle::i64 q) { expected.emplace_back(p, q); });
    CHECK(seen == expected);
}
