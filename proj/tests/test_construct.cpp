#include "iasi/construct.hpp"
#include "iasi/error.hpp"
#include "iasi/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace iasi;

namespace {

auto error_code(auto && fn) -> std::optional<ErrorCode>
{
    try {
        fn();
    }
    catch (const Error & e) {
        return e.code();
    }
    return std::nullopt;
}

auto sz(std::initializer_list<std::size_t> s) -> std::vector<std::size_t> { return s; }

/// Every edge label size by direct enumeration.
auto edge_sizes(const Graph & g, const Labeling & f) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (const auto & [u, v] : g.edges())
        out.push_back(oracle::sumset_size(f.label(u), f.label(v)));
    return out;
}

}

TEST_CASE("first-term pool is deterministic and increasing")
{
    FirstTermPool a(9, 10), b(9, 10);
    for (std::size_t i = 0; i < 50; ++i) {
        CHECK(a.at(i) == b.at(i));
        if (i > 0)
            CHECK(a.at(i) >= a.at(i - 1) + 10);
    }
    FirstTermPool flat(0, 4, 1.0, false);
    CHECK(flat.at(3) == 12);
    CHECK(error_code([] { FirstTermPool(0, 1, 0.5); }) == ErrorCode::invalid_argument);
}

TEST_CASE("construct_isoarithmetic examples")
{
    auto k4 = generate::complete(4);
    auto f = construct_isoarithmetic(k4, 2, sz({3}));
    CHECK(verify(k4, f).isoarithmetic);
    for (auto s : edge_sizes(k4, f))
        CHECK(s == 5);

    auto c5 = generate::cycle(5);
    auto sizes = sz({3, 3, 4, 4, 5});
    auto g = construct_isoarithmetic(c5, 3, sizes);
    CHECK(verify(c5, g).isoarithmetic);
    auto edges = c5.edges();
    auto es = edge_sizes(c5, g);
    for (std::size_t e = 0; e < edges.size(); ++e)
        CHECK(es[e] == sizes[edges[e].u] + sizes[edges[e].v] - 1);

    auto p2 = generate::path(2);
    auto h = construct_isoarithmetic(p2, 1, sz({3, 3}));
    CHECK(oracle::sumset_size(h.label(0), h.label(1)) == 5);
    CHECK(detect_ap(h.label(0))->diff == 1);

    CHECK(error_code([&] { construct_isoarithmetic(p2, 0, sz({3})); }) == ErrorCode::invalid_argument);
    CHECK(error_code([&] { construct_isoarithmetic(p2, 1, sz({2})); }) == ErrorCode::invalid_argument);
    CHECK(error_code([&] { construct_isoarithmetic(p2, 1, sz({3, 3, 3})); }) == ErrorCode::spec_error);
}

TEST_CASE("injectivity repair")
{
    auto c4 = generate::cycle(4);
    std::vector<LabelShape> shapes(4, LabelShape{1, 3});
    ConstructOptions flat{.seed = 0, .retry_cap = 0, .pool_growth = 1.0, .pool_jitter = false};
    CHECK(error_code([&] { assign_first_terms(c4, shapes, flat); }) == ErrorCode::construction_failed);
    flat.retry_cap = 1000;
    auto f = assign_first_terms(c4, shapes, flat);
    CHECK(verify_iasi(c4, f).ok);
    CHECK(f.label(3).min() > 9);
}

TEST_CASE("construct_bipartite_uniform_isoarithmetic examples")
{
    auto k23 = generate::complete_bipartite(2, 3);
    auto f = construct_bipartite_uniform_isoarithmetic(k23, 3, 4, 2);
    CHECK(verify_uniform(k23, f).edge_k == std::size_t{6});
    CHECK(f.label(0).size() == 3);
    CHECK(f.label(4).size() == 4);

    auto c6 = generate::cycle(6);
    auto g = construct_bipartite_uniform_isoarithmetic(c6, 3, 5, 1);
    for (auto s : edge_sizes(c6, g))
        CHECK(s == 7);

    CHECK(error_code([] { construct_bipartite_uniform_isoarithmetic(generate::cycle(5), 3, 3, 1); })
            == ErrorCode::not_bipartite);
}

TEST_CASE("construct_identical_biarithmetic examples")
{
    auto p4 = generate::path(4);
    auto f = construct_identical_biarithmetic(p4, 2, 1, sz({3}));
    for (const auto & e : p4.edges())
        CHECK(deterministic_ratio(f, e.u, e.v) == DeterministicRatio{2, 1, e.u % 2 == 0 ? SmallerEnd::u : SmallerEnd::v});
    CHECK(verify(p4, f).identical_biarithmetic == Element{2});

    auto c4 = generate::cycle(4);
    auto g = construct_identical_biarithmetic(c4, 3, 1, sz({3}));
    CHECK(verify(c4, g).identical_biarithmetic == Element{3});

    CHECK(error_code([] { construct_identical_biarithmetic(generate::cycle(7), 2, 1, sz({3})); })
            == ErrorCode::not_bipartite);
    CHECK(error_code([&] { construct_identical_biarithmetic(c4, 4, 1, sz({3})); }) == ErrorCode::ratio_bound);
    CHECK(error_code([&] { construct_identical_biarithmetic(c4, 1, 1, sz({3})); }) == ErrorCode::invalid_argument);
}

TEST_CASE("construct_strong_biarithmetic examples")
{
    auto p2 = generate::path(2);
    auto f = construct_strong_biarithmetic(p2, 1, sz({3}));
    CHECK(oracle::sumset_size(f.label(0), f.label(1)) == 9);

    auto k22 = generate::complete_bipartite(2, 2);
    auto g = construct_strong_biarithmetic(k22, 1, sz({3, 4}));
    for (auto s : edge_sizes(k22, g))
        CHECK(s == 12);
    CHECK(verify_strong(k22, g).ok);
    CHECK(verify_identical_biarithmetic(k22, g) == Element{3});

    // negative control: Y difference 2d instead of 3d
    Labeling off(std::vector<IntSet>{ap_set(0, 1, 3), ap_set(100, 1, 3), ap_set(200, 2, 4), ap_set(300, 2, 4)});
    CHECK_FALSE(verify_strong(k22, off).ok);

    CHECK(error_code([&] { construct_strong_biarithmetic(k22, 1, sz({3, 4, 4, 4})); }) == ErrorCode::spec_error);
    CHECK(error_code([] { construct_strong_biarithmetic(generate::cycle(3), 1, sz({3})); })
            == ErrorCode::not_bipartite);
}

TEST_CASE("construct_componentwise_uniform examples")
{
    auto g = disjoint_union(generate::cycle(5), generate::complete_bipartite(2, 3));
    auto f = construct_componentwise_uniform(g, 7, 1);
    for (auto s : edge_sizes(g, f))
        CHECK(s == 7);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(f.label(v).size() == 4);
    CHECK(verify(g, f).isoarithmetic);

    CHECK(error_code([] { construct_componentwise_uniform(generate::cycle(5), 6, 1); }) == ErrorCode::infeasible);

    auto two_k3 = disjoint_union(generate::complete(3), generate::complete(3));
    auto h = construct_componentwise_uniform(two_k3, 9, 2);
    CHECK(verify_uniform(two_k3, h).vertex_l == std::size_t{5});
    CHECK(verify_uniform(two_k3, h).edge_k == std::size_t{9});
}

TEST_CASE("construct_biarithmetic labels every edge with an integral ratio above one")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(rng, oracle::uniform(rng, 2, 12), 0.4);
        auto f = construct_biarithmetic(g, oracle::uniform(rng, 1, 3), 3, {.seed = std::uint64_t(trial)});
        auto r = verify(g, f);
        REQUIRE(r.arithmetic);
        REQUIRE(r.biarithmetic);
    }
}

TEST_CASE("construct dispatch and kind names")
{
    CHECK(parse_construct_kind("strong-biarithmetic") == ConstructKind::strong_biarithmetic);
    CHECK(to_string(ConstructKind::componentwise_uniform) == "componentwise_uniform");
    CHECK(error_code([] { parse_construct_kind("magic"); }) == ErrorCode::invalid_argument);

    auto c4 = generate::cycle(4);
    ConstructSpec spec{.kind = ConstructKind::uniform_isoarithmetic, .diff = 2, .sizes = {4}};
    CHECK(verify_uniform(c4, construct(c4, spec)).edge_k == std::size_t{7});
    spec.sizes = {3, 4};
    CHECK(error_code([&] { construct(c4, spec); }) == ErrorCode::spec_error);
}

TEST_CASE("same seed, same labeling")
{
    auto g = generate::complete(5);
    ConstructSpec spec{.kind = ConstructKind::isoarithmetic, .diff = 3, .sizes = {3, 4, 5, 6, 7}, .seed = 42};
    CHECK(construct(g, spec).assignment() == construct(g, spec).assignment());
}

TEST_CASE("search_identical_biarithmetic")
{
    for (auto g : {generate::cycle(4), generate::path(2), generate::complete_bipartite(2, 3)}) {
        auto f = search_identical_biarithmetic(g);
        REQUIRE(f.has_value());
        auto r = verify(g, *f);
        CHECK(r.is_iasi);
        CHECK(r.identical_biarithmetic.has_value());
        for (const auto & [v, s] : f->assignment()) {
            CHECK(s.max() <= 30);
            CHECK(s.size() >= 3);
            CHECK(s.size() <= 4);
        }
    }
    CHECK_FALSE(search_identical_biarithmetic(generate::cycle(3)).has_value());
    CHECK(error_code([] { search_identical_biarithmetic(generate::path(9)); }) == ErrorCode::size_limit);
}

TEST_CASE("constructor outputs re-verify on random graphs")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        auto n = oracle::uniform(rng, 1, 12);
        auto g = oracle::random_graph(rng, n, 0.3);
        ConstructOptions opt{.seed = rng()};
        REQUIRE(verify(g, construct_isoarithmetic(g, 1 + trial % 3, sz({3}), opt)).isoarithmetic);
        if (auto sides = bipartition(g); sides && g.edge_count() > 0) {
            auto f = construct_strong_biarithmetic(g, 1, sz({3, 4}), opt);
            auto r = verify(g, f);
            REQUIRE(r.strong);
            REQUIRE(r.identical_biarithmetic == Element{3});
        }
    }
}
