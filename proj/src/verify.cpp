#include "iasi/verify.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace iasi {

namespace {
    auto vertex_ref(Vertex v) -> ElementRef { return {ElementRef::Kind::vertex, v}; }
    auto edge_ref(std::size_t e) -> ElementRef { return {ElementRef::Kind::edge, e}; }

    auto edge_name(const Edge & e) -> std::string
    {
        return std::to_string(e.u) + "-" + std::to_string(e.v);
    }

    auto fail(CheckResult & r, ElementRef where, std::string rule, std::string detail) -> void
    {
        r.ok = false;
        r.violations.push_back({where, std::move(rule), std::move(detail)});
    }

    /// Size of the endpoint with the smaller deterministic index; on a tie
    /// either endpoint qualifies, so take the larger bound.
    auto smaller_index_size(const DeterministicRatio & ratio, std::size_t size_u, std::size_t size_v) -> std::size_t
    {
        switch (ratio.smaller) {
            case SmallerEnd::u: return size_u;
            case SmallerEnd::v: return size_v;
            case SmallerEnd::both: break;
        }
        return std::max(size_u, size_v);
    }

    auto index_of(const Labeling & labeling, Vertex v) -> std::optional<Element>
    {
        auto ap = detect_ap(labeling.label(v));
        if (! ap)
            throw Error(ErrorCode::not_arithmetic, "label of vertex " + std::to_string(v) + " "
                    + labeling.label(v).to_string() + " is not an AP-set");
        if (ap->diff == 0)
            return std::nullopt;
        return ap->diff;
    }

    /// Integer edge ratio, or nullopt if an endpoint has no index.
    struct EdgeRatio {
        DeterministicRatio ratio;
        std::size_t bound;
    };

    auto edge_ratio(const Labeling & labeling, const Edge & e) -> std::optional<EdgeRatio>
    {
        auto du = index_of(labeling, e.u), dv = index_of(labeling, e.v);
        if (! du || ! dv)
            return std::nullopt;
        auto ratio = deterministic_ratio(*du, *dv);
        return EdgeRatio{ratio, smaller_index_size(ratio, labeling.label(e.u).size(), labeling.label(e.v).size())};
    }
}

auto ElementRef::to_string() const -> std::string
{
    return (kind == Kind::vertex ? "vertex " : "edge ") + std::to_string(id);
}

auto verify_iasi(const Graph & g, const Labeling & labeling) -> CheckResult
{
    labeling.require_covers(g);
    CheckResult r;

    std::map<IntSet, Vertex> seen_vertex;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto [it, fresh] = seen_vertex.emplace(labeling.label(v), v);
        if (! fresh)
            fail(r, vertex_ref(v), "vertex-injective",
                    "label " + it->first.to_string() + " also used by vertex " + std::to_string(it->second));
    }

    std::map<IntSet, std::size_t> seen_edge;
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [it, fresh] = seen_edge.emplace(edge_label(labeling, edges[e].u, edges[e].v), e);
        if (! fresh)
            fail(r, edge_ref(e), "edge-injective",
                    "edge " + edge_name(edges[e]) + " has the same label as edge " + edge_name(edges[it->second]));
    }
    return r;
}

auto verify_arithmetic(const Graph & g, const Labeling & labeling) -> CheckResult
{
    labeling.require_covers(g);
    CheckResult r;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        index_of(labeling, v);
        if (labeling.label(v).size() < 3)
            fail(r, vertex_ref(v), "label-size",
                    "arithmetic labels need at least 3 elements, got " + std::to_string(labeling.label(v).size()));
    }

    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto er = edge_ratio(labeling, edges[e]);
        if (! er)
            continue;
        const auto & [ratio, bound] = *er;
        if (! ratio.is_integer())
            fail(r, edge_ref(e), "ratio-integral", "deterministic ratio " + std::to_string(ratio.numerator) + "/"
                    + std::to_string(ratio.denominator) + " on edge " + edge_name(edges[e]) + " is not an integer");
        else if (ratio.numerator > bound)
            fail(r, edge_ref(e), "ratio-bound", "deterministic ratio " + std::to_string(ratio.numerator) + " on edge "
                    + edge_name(edges[e]) + " exceeds the smaller-index label size " + std::to_string(bound));
    }
    return r;
}

auto verify_isoarithmetic(const Graph & g, const Labeling & labeling) -> CheckResult
{
    labeling.require_covers(g);
    CheckResult r;
    if (g.vertex_count() == 0)
        return r;
    const auto reference = deterministic_index(labeling, 0);
    for (Vertex v = 1; v < g.vertex_count(); ++v) {
        auto d = deterministic_index(labeling, v);
        if (d != reference)
            fail(r, vertex_ref(v), "common-index", "deterministic index " + std::to_string(d)
                    + " differs from vertex 0's index " + std::to_string(reference));
    }
    return r;
}

auto verify_biarithmetic(const Graph & g, const Labeling & labeling) -> CheckResult
{
    labeling.require_covers(g);
    CheckResult r;
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        deterministic_index(labeling, edges[e].u);
        deterministic_index(labeling, edges[e].v);
        const auto [ratio, bound] = *edge_ratio(labeling, edges[e]);
        if (! ratio.is_integer() || ratio.numerator <= 1 || ratio.numerator > bound)
            fail(r, edge_ref(e), "biarithmetic-ratio", "deterministic ratio " + std::to_string(ratio.numerator)
                    + (ratio.is_integer() ? "" : "/" + std::to_string(ratio.denominator))
                    + " on edge " + edge_name(edges[e]) + " is not in (1, " + std::to_string(bound) + "]");
    }
    return r;
}

auto verify_identical_biarithmetic(const Graph & g, const Labeling & labeling) -> std::optional<Element>
{
    if (g.edge_count() == 0 || ! verify_biarithmetic(g, labeling))
        return std::nullopt;
    std::optional<Element> common;
    for (const auto & e : g.edges()) {
        auto k = deterministic_ratio(labeling, e.u, e.v).numerator;
        if (common && *common != k)
            return std::nullopt;
        common = k;
    }
    return common;
}

auto verify_strong(const Graph & g, const Labeling & labeling) -> CheckResult
{
    labeling.require_covers(g);
    CheckResult r;
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto & [u, v] = edges[e];
        auto expect = labeling.label(u).size() * labeling.label(v).size();
        auto got = edge_label(labeling, u, v).size();
        if (got != expect)
            fail(r, edge_ref(e), "strong", "edge " + edge_name(edges[e]) + " has |f+| = " + std::to_string(got)
                    + ", product of endpoint sizes is " + std::to_string(expect));
    }
    return r;
}

auto verify_uniform(const Graph & g, const Labeling & labeling) -> UniformResult
{
    labeling.require_covers(g);
    UniformResult r;

    std::set<std::size_t> vertex_sizes, edge_sizes;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        vertex_sizes.insert(labeling.label(v).size());
    for (const auto & [u, v] : g.edges())
        edge_sizes.insert(edge_label(labeling, u, v).size());

    if (vertex_sizes.size() == 1)
        r.vertex_l = *vertex_sizes.begin();
    if (edge_sizes.size() == 1)
        r.edge_k = *edge_sizes.begin();
    return r;
}

auto verify(const Graph & g, const Labeling & labeling) -> VerificationReport
{
    labeling.require_covers(g);
    VerificationReport report;
    auto absorb = [&] (CheckResult && r) {
        for (auto & v : r.violations)
            report.violations.push_back(std::move(v));
        return r.ok;
    };

    for (auto v : g.isolated_vertices())
        report.warnings.push_back("vertex " + std::to_string(v) + " is isolated");

    report.is_iasi = absorb(verify_iasi(g, labeling));

    report.vertex_arithmetic = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto & s = labeling.label(v);
        if (! detect_ap(s)) {
            report.vertex_arithmetic = false;
            report.violations.push_back({vertex_ref(v), "vertex-ap", "label " + s.to_string() + " is not an AP-set"});
        }
        else if (s.size() < 3) {
            report.vertex_arithmetic = false;
            report.violations.push_back({vertex_ref(v), "label-size",
                    "arithmetic labels need at least 3 elements, got " + std::to_string(s.size())});
        }
    }

    report.edge_arithmetic = true;
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto s = edge_label(labeling, edges[e].u, edges[e].v);
        if (! detect_ap(s)) {
            report.edge_arithmetic = false;
            report.violations.push_back({edge_ref(e), "edge-ap", "edge " + edge_name(edges[e]) + " label "
                    + s.to_string() + " is not an AP-set"});
        }
    }

    if (report.vertex_arithmetic) {
        bool ratios_ok = absorb(verify_arithmetic(g, labeling));
        report.arithmetic = report.is_iasi && report.edge_arithmetic && ratios_ok;
    }

    if (report.arithmetic) {
        report.isoarithmetic = verify_isoarithmetic(g, labeling).ok;
        report.biarithmetic = verify_biarithmetic(g, labeling).ok;
        if (report.biarithmetic)
            report.identical_biarithmetic = verify_identical_biarithmetic(g, labeling);
    }

    if (report.is_iasi) {
        report.strong = verify_strong(g, labeling).ok;
        auto uniform = verify_uniform(g, labeling);
        report.edge_uniform = uniform.edge_k;
        report.vertex_uniform = uniform.vertex_l;
    }

    std::ranges::stable_sort(report.violations, {}, &Violation::element);
    return report;
}

}
