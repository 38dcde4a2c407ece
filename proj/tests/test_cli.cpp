#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dinv/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = dinv::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name + ".tsv") {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("version and help") {
    auto v = cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == "0.1.0\n");
    auto h = cli({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("dlens") != std::string::npos);
    CHECK(h.out.find("obstruct") != std::string::npos);
    auto bare = cli({});
    CHECK(bare.code == 0);
    CHECK_FALSE(bare.out.empty());
}

TEST_CASE("dlens single label and sweep") {
    auto one = cli({"dlens", "--p", "49", "--q", "6", "--label", "27"});
    CHECK(one.code == 0);
    CHECK(one.out == "27\t0\n");
    CHECK(one.err.empty());

    auto sweep = cli({"dlens", "--p", "2", "--q", "1", "--all"});
    CHECK(sweep.code == 0);
    CHECK(sweep.out == "0\t1/4\n1\t-1/4\n");

    auto neg = cli({"dlens", "--p", "49", "--q", "6", "--label", "-1"});
    CHECK(neg.out == "-1\t0\n"); // label echoed as given, value at 48
}

TEST_CASE("dlens json form") {
    auto r = cli({"--format", "json", "dlens", "--p", "5", "--q", "1", "--label", "0"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("command") == "dlens");
    CHECK(j.at("p") == "5");
    CHECK(j.at("values").size() == 1);
    CHECK(j.at("values")[0].at("label") == "0");
    CHECK(j.at("values")[0].at("d") == "1");
}

TEST_CASE("dlens argument errors") {
    auto both = cli({"dlens", "--p", "49", "--q", "6", "--label", "1", "--all"});
    CHECK(both.code == 1);
    CHECK(both.err.find("error\tparse\t") == 0);

    auto neither = cli({"dlens", "--p", "49", "--q", "6"});
    CHECK(neither.code == 1);

    auto missing = cli({"dlens", "--q", "6", "--all"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("error\tusage\t") == 0);

    auto bad = cli({"dlens", "--p", "49", "--q", "7", "--label", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error\tdomain\t") == 0);
    CHECK(bad.out.empty());

    auto huge = cli({"dlens", "--p", "10000001", "--q", "2", "--all"});
    CHECK(huge.code == 1);
    CHECK(huge.err.find("error\ttoo-large\t") == 0);
}

TEST_CASE("dsurgery values and guards") {
    auto r = cli({"dsurgery", "--knot", "torus:2,5", "--slope", "49/6", "--label", "48"});
    CHECK(r.code == 0);
    CHECK(r.out == "48\t-2\n");

    auto u = cli({"dsurgery", "--knot", "unknot", "--slope", "2/1", "--all"});
    CHECK(u.out == "0\t1/4\n1\t-1/4\n");

    auto low = cli({"dsurgery", "--knot", "torus:2,5", "--slope", "2/1", "--label", "0"});
    CHECK(low.code == 1);
    CHECK(low.err.find("error\tprecondition\t") == 0);

    auto badknot = cli({"dsurgery", "--knot", "granny", "--slope", "5/1", "--label", "0"});
    CHECK(badknot.code == 1);
    CHECK(badknot.err.find("error\tparse\t") == 0);
}

TEST_CASE("torsion report") {
    auto r = cli({"torsion", "--knot", "torus:2,5"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "knot\tT(2,5)");
    CHECK(rows[1] == "alexander\t1 - (t + t^-1) + (t^2 + t^-2)");
    CHECK(rows[2] == "machine\t-2:1,-1:-1,0:1,1:-1,2:1");
    CHECK(rows[3] == "genus\t2");
    CHECK(rows[4] == "torsion\t0\t1");
    CHECK(rows[5] == "torsion\t1\t1");
    CHECK(rows[6] == "torsion\t2\t0");

    auto j = nlohmann::json::parse(cli({"--format", "json", "torsion", "--knot", "unknot"}).out);
    CHECK(j.at("genus") == 0);
    CHECK(j.at("torsion").size() == 1);
}

TEST_CASE("sigma summary") {
    auto r = cli({"sigma", "--p", "3"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "p\t3");
    CHECK(rows[1] == "order\t49");
    CHECK(rows[2] == "slope\t49/6");
    CHECK(rows[3] == "negative_indices\t3,4");
}

TEST_CASE("sigma table") {
    auto r = cli({"sigma", "--p", "3", "--table"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0] == "# k\traw\tik\tfloor\ttorsion\td");
    CHECK(rows[1] == "0\t125\t-22\t-4\t0\t0");
    CHECK(rows[4] == "3\t146\t-1\t-1\t1\t-2");
    CHECK(rows[5] == "4\t153\t6\t1\t1\t-2");
    CHECK(rows[7] == "6\t167\t20\t3\t0\t0");

    auto bad = cli({"sigma", "--p", "4", "--table"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error\tdomain\t") == 0);
}

TEST_CASE("sigma json carries the same rows") {
    auto j = nlohmann::json::parse(cli({"--format", "json", "sigma", "--p", "5", "--table"}).out);
    CHECK(j.at("order") == "121");
    CHECK(j.at("negative_indices") == nlohmann::json::array({5, 6}));
    REQUIRE(j.at("rows").size() == 11);
    CHECK(j.at("rows")[5].at("d") == "-2");
    CHECK(j.at("rows")[0].at("d") == "0");
}

TEST_CASE("obstruct json certificate and exit codes") {
    auto r = cli({"obstruct", "--combo", "1*K3"});
    CHECK(r.code == 0); // obstructed
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("obstructed") == true);
    CHECK(j.at("q") == 3);
    CHECK(j.at("witness_element") == "28");
    CHECK(j.at("witness_label") == "48");
    CHECK(j.at("d_witness") == "-2");
    CHECK(j.at("total_d") == "-2");
    REQUIRE(j.at("summands").size() == 1);
    CHECK(j.at("summands")[0].at("group_order") == "49");
    CHECK(j.at("narrative").is_array());
    CHECK(j.at("scope").is_string());

    auto none = cli({"obstruct", "--combo", "1*K3 - 1*K3"});
    CHECK(none.code == 2); // parses fine but nothing to obstruct
    CHECK(nlohmann::json::parse(none.out).at("obstructed") == false);

    auto bad = cli({"obstruct", "--combo", "1*K4"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error\tdomain\t") == 0);

    auto garbled = cli({"obstruct", "--combo", "7*seven"});
    CHECK(garbled.code == 1);
    CHECK(garbled.err.find("error\tparse\t") == 0);
}

TEST_CASE("obstruct respects an explicit tsv format") {
    auto r = cli({"--format", "tsv", "obstruct", "--combo", "2*K3 - 1*K5"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    bool saw_total = false, saw_summand = false;
    for (const auto& row : rows) {
        if (row == "total_d\t-2") saw_total = true;
        if (row.find("summand\t5\t-1\t121\t") == 0) saw_summand = true;
    }
    CHECK(saw_total);
    CHECK(saw_summand);
}

TEST_CASE("obstruct alexander-one flag round trips") {
    auto r = cli({"obstruct", "--combo", "1*K5", "--alexander-one"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("alexander_one") == true);
    CHECK(j.at("witness_element") == "66");
}

TEST_CASE("cfk tensor output and comparisons") {
    auto r = cli({"cfk", "tensor", "--a", "staircase:1", "--b", "staircase:1", "--split",
                  "--compare", "staircase:2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gen aa 0 2 0\n") != std::string::npos);
    CHECK(r.out.find("recombines\ttrue\n") != std::string::npos);
    CHECK(r.out.find("compare\tstaircase:2\ttrue\n") != std::string::npos);

    auto wrong = cli({"cfk", "tensor", "--a", "staircase:1", "--b", "staircase:1",
                      "--compare", "staircase:3"});
    CHECK(wrong.code == 2);
    CHECK(wrong.out.find("compare\tstaircase:3\tfalse\n") != std::string::npos);

    auto plain = cli({"cfk", "tensor", "--a", "unknot", "--b", "unknot"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("gen aa 0 0 0\n") != std::string::npos);

    auto badknot = cli({"cfk", "tensor", "--a", "mystery:1", "--b", "unknot"});
    CHECK(badknot.code == 1);
    CHECK(badknot.err.find("error\tparse\t") == 0);
}

TEST_CASE("cfk json form") {
    auto j = nlohmann::json::parse(cli({"--format", "json", "cfk", "tensor", "--a",
                                        "staircase:1", "--b", "staircase:1", "--split"})
                                       .out);
    CHECK(j.at("tensor").at("generators").size() == 9);
    CHECK(j.at("tensor").at("arrows").size() == 12);
    CHECK(j.at("split").at("recombines") == true);
    CHECK(j.at("split").at("summands").size() == 2);
}

TEST_CASE("unknown options fail as usage errors") {
    auto r = cli({"dlens", "--p", "49", "--q", "6", "--label", "1", "--wat"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error\tusage\t") == 0);
    auto sub = cli({"frobnicate"});
    CHECK(sub.code == 1);
    CHECK(sub.err.find("error\tusage\t") == 0);
}

TEST_CASE("runs are deterministic") {
    auto a = cli({"sigma", "--p", "5", "--table"});
    auto b = cli({"sigma", "--p", "5", "--table"});
    CHECK(a.out == b.out);
    auto c = cli({"obstruct", "--combo", "2*K3 - 1*K5"});
    auto d = cli({"obstruct", "--combo", "2*K3 - 1*K5"});
    CHECK(c.out == d.out);
}

TEST_CASE("cache keeps stdout byte-identical and reports to stderr") {
    TempFile f("cachecli");
    auto plain = cli({"sigma", "--p", "3", "--table"});
    auto first = cli({"--cache", f.path, "sigma", "--p", "3", "--table"});
    auto second = cli({"--cache", f.path, "sigma", "--p", "3", "--table"});
    CHECK(first.out == plain.out);
    CHECK(second.out == plain.out);
    CHECK(plain.err.empty());
    CHECK(first.err == "cache\thits\t0\tstores\t7\n");
    CHECK(second.err == "cache\thits\t7\tstores\t0\n");

    // cached obstruct reports replay identically, including the exit code
    auto o1 = cli({"--cache", f.path, "obstruct", "--combo", "1*K3"});
    auto o2 = cli({"--cache", f.path, "obstruct", "--combo", "1*K3"});
    CHECK(o1.code == 0);
    CHECK(o2.code == 0);
    CHECK(o1.out == o2.out);
    CHECK(o2.err.find("cache\thits\t1") == 0);
}

TEST_CASE("corrupt cache lines warn on stderr but leave results intact") {
    TempFile f("corruptcli");
    {
        std::FILE* out = std::fopen(f.path.c_str(), "w");
        REQUIRE(out != nullptr);
        std::fputs("garbage line with no tabs\n", out);
        std::fclose(out);
    }
    auto r = cli({"--cache", f.path, "dlens", "--p", "49", "--q", "6", "--label", "27"});
    CHECK(r.code == 0);
    CHECK(r.out == "27\t0\n");
    CHECK(r.err.find("cache\twarning\tskipped corrupt cache line 1\n") == 0);
}

TEST_CASE("shared surgery cache is reused across commands") {
    TempFile f("sharedcli");
    auto sweep = cli({"--cache", f.path, "sigma", "--p", "3", "--table"});
    CHECK(sweep.err == "cache\thits\t0\tstores\t7\n");
    // the sigma rows were stored under dsurgery keys, so a direct query hits
    auto direct = cli({"--cache", f.path, "dsurgery", "--knot", "torus:2,5", "--slope", "49/6",
                       "--label", "48"});
    CHECK(direct.out == "48\t-2\n");
    CHECK(direct.err == "cache\thits\t1\tstores\t0\n");
}
