#include "iasi/construct.hpp"
#include "iasi/error.hpp"
#include "iasi/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace iasi;

namespace {

auto parse_error_message(auto && fn) -> std::string
{
    try {
        fn();
    }
    catch (const Error & e) {
        if (e.code() == ErrorCode::parse_error)
            return e.what();
        return "wrong code: " + std::string(e.what());
    }
    return "no error";
}

auto count(const std::string & text, const std::string & needle) -> std::size_t
{
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
        ++n;
    return n;
}

}

TEST_CASE("edge list format")
{
    CHECK(write_edge_list(generate::cycle(5)) == "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto g = parse_edge_list("# comment\n3 2\n\n0 1\n2 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges()[1] == Edge{2, 1});

    CHECK(parse_error_message([] { parse_edge_list("3 2\n0 1\n"); }).find("edge") != std::string::npos);
    CHECK(parse_error_message([] { parse_edge_list("3 1\n0 x\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error_message([] { parse_edge_list("3 2\n0 1\n1 0\n"); }).find("line 3") != std::string::npos);
    CHECK(parse_error_message([] { parse_edge_list("3 1\n0 3\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error_message([] { parse_edge_list("3 1\n1 1\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error_message([] { parse_edge_list(""); }) != "no error");
}

TEST_CASE("labeling format")
{
    Labeling f(std::vector<IntSet>{IntSet{1, 3, 5}});
    CHECK(serialize_labeling(f) == "0: 1 3 5\n");
    CHECK(parse_labeling("0: 1 3 5\n") == f);
    CHECK(parse_labeling("# header\n0: 1 3 5\n") == f);
    CHECK(parse_error_message([] { parse_labeling("0: 5 3\n"); }).find("line 1") != std::string::npos);
    CHECK(parse_error_message([] { parse_labeling("0: 3 3\n"); }) != "no error");
    CHECK(parse_error_message([] { parse_labeling("0: 1\n0: 2\n"); }).find("line 2") != std::string::npos);
    CHECK(parse_error_message([] { parse_labeling("0:\n"); }) != "no error");
    CHECK(parse_error_message([] { parse_labeling("zero: 1\n"); }) != "no error");
}

TEST_CASE("int set parsing")
{
    CHECK(parse_int_set("1,3,5") == IntSet{1, 3, 5});
    CHECK(parse_int_set("5") == IntSet{5});
    CHECK_THROWS_AS(parse_int_set("1,,2"), Error);
    CHECK_THROWS_AS(parse_int_set("-1"), Error);
}

TEST_CASE("graph and labeling round-trips")
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(rng, oracle::uniform(rng, 1, 12), 0.3);
        REQUIRE(parse_edge_list(write_edge_list(g)) == g);

        std::map<Vertex, IntSet> m;
        for (auto v = oracle::uniform(rng, 1, 15); v > 0; --v) {
            std::vector<Element> e;
            for (auto i = oracle::uniform(rng, 1, 9); i > 0; --i)
                e.push_back(oracle::uniform(rng, 0, 1000000));
            m.insert_or_assign(oracle::uniform(rng, 0, 40), IntSet(e));
        }
        Labeling f(m);
        auto text = serialize_labeling(f);
        REQUIRE(parse_labeling(text) == f);
        REQUIRE(serialize_labeling(parse_labeling(text)) == text);
    }
}

TEST_CASE("DOT export")
{
    Labeling f(std::vector<IntSet>{ap_set(0, 1, 3), ap_set(0, 3, 3)});
    auto dot = export_dot(generate::path(2), &f);
    CHECK(dot.find("|f+|=9") != std::string::npos);

    auto plain = export_dot(generate::cycle(4));
    CHECK(count(plain, " -- ") == 4);
    CHECK(plain.find("label") == std::string::npos);
    for (int v = 0; v < 4; ++v)
        CHECK(plain.find("  " + std::to_string(v) + ";\n") != std::string::npos);

    auto k23 = generate::complete_bipartite(2, 3);
    auto g = construct_bipartite_uniform_isoarithmetic(k23, 3, 4, 1);
    CHECK(count(export_dot(k23, &g), "|f+|=6") == 6);
}

TEST_CASE("report formats")
{
    auto p2 = generate::path(2);
    Labeling f(std::vector<IntSet>{ap_set(0, 1, 3), ap_set(10, 2, 3)});
    auto report = verify(p2, f);
    auto s = format_report(report, OutputFormat::structured);
    CHECK(s.find("\nbiarithmetic=true\n") != std::string::npos);
    CHECK(s.find("identical_biarithmetic=2\n") != std::string::npos);
    auto t = format_report(report, OutputFormat::text);
    CHECK(! t.empty());

    auto prof = format_profile(compat_partition(ap_set(0, 1, 3), ap_set(0, 2, 3)), OutputFormat::structured);
    CHECK(count(prof, "class=") == 7);

    auto audit_text = format_audit(audit(AuditTarget::ncc, make_grid({3, 5}, {3, 5}, {1, 1})), OutputFormat::text);
    CHECK(audit_text.find("(all match)") != std::string::npos);
}
