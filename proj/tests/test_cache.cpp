#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dinv/cache.hpp"
#include "dinv/errors.hpp"
#include "dinv/version.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace dinv;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cache_test_" + name + ".tsv") {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("disabled cache is a transparent no-op") {
    ResultCache c;
    CHECK_FALSE(c.enabled());
    CHECK_FALSE(c.lookup("k").has_value());
    c.store("k", "v");
    CHECK_FALSE(c.lookup("k").has_value());
    int calls = 0;
    CHECK(c.remember("k", [&] { ++calls; return "computed"; }) == "computed");
    CHECK(c.remember("k", [&] { ++calls; return "computed"; }) == "computed");
    CHECK(calls == 2);
    CHECK(c.hits() == 0);
    CHECK(c.stores() == 0);
}

TEST_CASE("store then reload round trip") {
    TempFile f("roundtrip");
    {
        ResultCache c(f.path);
        CHECK(c.enabled());
        CHECK_FALSE(c.lookup("dlens:p=49,q=6,i=27").has_value());
        c.store("dlens:p=49,q=6,i=27", "0");
        c.store("dlens:p=49,q=6,i=0", "48/49");
        CHECK(c.stores() == 2);
        CHECK(c.lookup("dlens:p=49,q=6,i=27") == std::string("0"));
        CHECK(c.hits() == 1);
    }
    ResultCache c(f.path);
    CHECK(c.lookup("dlens:p=49,q=6,i=0") == std::string("48/49"));
    CHECK(c.warnings().empty());
}

TEST_CASE("remember computes exactly once per key") {
    TempFile f("remember");
    ResultCache c(f.path);
    int calls = 0;
    auto fn = [&] { ++calls; return "value"; };
    CHECK(c.remember("k", fn) == "value");
    CHECK(c.remember("k", fn) == "value");
    CHECK(calls == 1);
    CHECK(c.hits() == 1);
    CHECK(c.stores() == 1);
}

TEST_CASE("corrupt lines are skipped with a warning") {
    TempFile f("corrupt");
    {
        std::ofstream out(f.path);
        out << version_tag << "\tgood\t1\n";
        out << "no tabs at all\n";
        out << version_tag << "\ttoo\tmany\tfields\n";
        out << version_tag << "\tgood2\t2\n";
    }
    ResultCache c(f.path);
    CHECK(c.lookup("good") == std::string("1"));
    CHECK(c.lookup("good2") == std::string("2"));
    REQUIRE(c.warnings().size() == 2);
    CHECK(c.warnings()[0].find("line 2") != std::string::npos);
    CHECK(c.warnings()[1].find("line 3") != std::string::npos);
}

TEST_CASE("records from other versions are ignored silently") {
    TempFile f("versions");
    {
        std::ofstream out(f.path);
        out << "0.0.0-old\tk\tstale\n";
        out << version_tag << "\tk\tfresh\n";
    }
    ResultCache c(f.path);
    CHECK(c.lookup("k") == std::string("fresh"));
    CHECK(c.warnings().empty());
}

TEST_CASE("later records win within a version") {
    TempFile f("later");
    {
        std::ofstream out(f.path);
        out << version_tag << "\tk\tfirst\n";
        out << version_tag << "\tk\tsecond\n";
    }
    ResultCache c(f.path);
    CHECK(c.lookup("k") == std::string("second"));
}

TEST_CASE("tabs and newlines are rejected in fields") {
    TempFile f("fields");
    ResultCache c(f.path);
    CHECK_THROWS_AS(c.store("bad\tkey", "v"), InternalError);
    CHECK_THROWS_AS(c.store("k", "bad\nvalue"), InternalError);
}

TEST_CASE("unwritable path degrades to in-memory operation") {
    ResultCache c("no_such_directory/deep/cache.tsv");
    CHECK(c.enabled());
    c.store("k", "v");
    CHECK(c.lookup("k") == std::string("v")); // in-memory record still works
    CHECK(c.stores() == 0);
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("not writable") != std::string::npos);
    c.store("k2", "v2"); // no duplicate warning
    CHECK(c.warnings().size() == 1);
}
