#include "iasi/error.hpp"
#include "iasi/labeling.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace iasi;

TEST_CASE("edge_label examples")
{
    Labeling f(std::vector<IntSet>{IntSet{1, 3, 5}, IntSet{2, 4, 6}});
    CHECK(edge_label(f, 0, 1) == IntSet{3, 5, 7, 9, 11});
    CHECK(edge_label(f, 1, 0) == edge_label(f, 0, 1));

    Labeling g(std::vector<IntSet>{IntSet{0}, IntSet{0, 5}});
    CHECK(edge_label(g, 0, 1) == IntSet{0, 5});

    Labeling h(std::vector<IntSet>{IntSet{0, 1, 2}, IntSet{0, 3, 6}});
    CHECK(edge_label(h, 0, 1) == ap_set(0, 1, 9));

    CHECK_THROWS_AS(edge_label(f, 0, 0), Error);
    try {
        edge_label(f, 0, 7);
        FAIL("expected missing label");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::missing_label);
    }
}

TEST_CASE("set_indexing_number")
{
    CHECK(set_indexing_number(IntSet{3, 5, 7, 9, 11}) == 5);
    CHECK(set_indexing_number(IntSet{7}) == 1);
    Labeling f(std::vector<IntSet>{ap_set(0, 2, 3), ap_set(5, 2, 4)});
    CHECK(set_indexing_number(edge_label(f, 0, 1)) == 6);
}

TEST_CASE("deterministic_index")
{
    Labeling f(std::vector<IntSet>{IntSet{2, 5, 8, 11}, IntSet{0, 1, 4}, IntSet{1, 3, 5}, IntSet{9}});
    CHECK(deterministic_index(f, 0) == 3);
    CHECK(deterministic_index(f, 2) == 2);
    auto code = [&] (Vertex v) {
        try {
            deterministic_index(f, v);
        }
        catch (const Error & e) {
            return e.code();
        }
        return ErrorCode::invalid_argument;
    };
    CHECK(code(1) == ErrorCode::not_arithmetic);
    CHECK(code(3) == ErrorCode::undefined_index);
}

TEST_CASE("deterministic_ratio is exact")
{
    CHECK(deterministic_ratio(2, 6) == DeterministicRatio{3, 1, SmallerEnd::u});
    CHECK(deterministic_ratio(4, 4) == DeterministicRatio{1, 1, SmallerEnd::both});
    auto r = deterministic_ratio(6, 4);
    CHECK(r == DeterministicRatio{3, 2, SmallerEnd::v});
    CHECK_FALSE(r.is_integer());

    Labeling f(std::vector<IntSet>{ap_set(0, 2, 3), ap_set(1, 6, 3)});
    CHECK(deterministic_ratio(f, 0, 1) == DeterministicRatio{3, 1, SmallerEnd::u});
}

TEST_CASE("edge labels obey cardinality bounds and keep a shared difference")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = oracle::uniform(rng, 1, 9);
        auto du = trial % 2 ? d : oracle::uniform(rng, 1, 9);
        Labeling f(std::vector<IntSet>{ap_set(oracle::uniform(rng, 0, 30), du, oracle::uniform(rng, 3, 8)),
                ap_set(oracle::uniform(rng, 0, 30), d, oracle::uniform(rng, 3, 8))});
        auto e = edge_label(f, 0, 1);
        const auto m = f.label(0).size(), n = f.label(1).size();
        REQUIRE(e.size() >= std::max(m, n));
        REQUIRE(e.size() <= m * n);
        REQUIRE(e.size() == oracle::sumset_size(f.label(0), f.label(1)));
        if (du == d)
            REQUIRE(detect_ap(e)->diff == d);
    }
}
