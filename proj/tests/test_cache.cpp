#include "krw/cache.hpp"
#include "krw/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace krw;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("krw-cache-test-" + std::to_string(::getpid()));
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("cache roundtrip is byte identical and survives reopen")
{
    TempDir tmp;
    BraidWord b = parse_braid("b=2; w= s1 s1 s1");
    std::string key = canonical_key(b);
    long computed = 0;
    auto compute = [&] {
        ++computed;
        return to_json(homfly(b)).dump();
    };
    std::string first, second, third;
    {
        ResultCache cache(tmp.path.string());
        first = cache.cached("homfly", key, "", compute);
        second = cache.cached("homfly", key, "", compute);
    }
    {
        ResultCache cache(tmp.path.string()); // fresh process view
        third = cache.cached("homfly", key, "", compute);
    }
    CHECK(computed == 1);
    CHECK(first == second);
    CHECK(first == third);
}

TEST_CASE("conjugated words hit the same cache line")
{
    TempDir tmp;
    ResultCache cache(tmp.path.string());
    BraidWord a = parse_braid("b=3; w= s1 s2");
    BraidWord rotated = parse_braid("b=3; w= s2 s1");
    long computed = 0;
    auto compute = [&] {
        ++computed;
        return std::string("payload");
    };
    cache.cached("homfly", canonical_key(a), "", compute);
    cache.cached("homfly", canonical_key(rotated), "", compute);
    CHECK(computed == 1);
}

TEST_CASE("parameter digests separate entries")
{
    TempDir tmp;
    ResultCache cache(tmp.path.string());
    long computed = 0;
    auto mk = [&](const char* v) {
        return [&computed, v] {
            ++computed;
            return std::string(v);
        };
    };
    CHECK(cache.cached("moy", "k", "n=2", mk("two")) == "two");
    CHECK(cache.cached("moy", "k", "n=3", mk("three")) == "three");
    CHECK(cache.cached("moy", "k", "n=2", mk("stale")) == "two");
    CHECK(computed == 2);
}

TEST_CASE("version stamp invalidates foreign entries and corrupt lines are skipped")
{
    TempDir tmp;
    {
        std::ofstream out(tmp.path / "homfly.jsonl");
        out << R"({"k":"b:2|s1","op":"homfly","p":")" << fnv1a_hex("")
            << R"(","v":"krw-0","r":"old"})" << "\n";
        out << "{garbage\n";
        out << R"({"k":"other","op":"homfly"})" << "\n";
    }
    ResultCache cache(tmp.path.string());
    long computed = 0;
    std::string got = cache.cached("homfly", "b:2|s1", "", [&] {
        ++computed;
        return std::string("fresh");
    });
    CHECK(computed == 1);
    CHECK(got == "fresh");
}

TEST_CASE("unwritable cache directory computes through with a warning")
{
    long computed = 0;
    auto compute = [&] {
        ++computed;
        return std::string("value");
    };
    {
        ResultCache cache("/proc/krw-definitely-not-writable");
        CHECK(cache.cached("homfly", "k", "", compute) == "value");
    }
    {
        ResultCache cache("/proc/krw-definitely-not-writable");
        CHECK(cache.cached("homfly", "k", "", compute) == "value");
    }
    CHECK(computed == 2); // nothing was persisted
}

TEST_CASE("disabled cache is a pure pass-through")
{
    ResultCache cache;
    CHECK(!cache.enabled());
    long computed = 0;
    cache.cached("x", "k", "", [&] {
        ++computed;
        return std::string("v");
    });
    CHECK(computed == 1);
}
