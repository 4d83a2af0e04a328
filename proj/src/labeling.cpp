#include "iasi/labeling.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace iasi {

Labeling::Labeling(const std::vector<IntSet> & labels)
{
    for (Vertex v = 0; v < labels.size(); ++v)
        _assignment.emplace(v, labels[v]);
}

auto Labeling::label(Vertex v) const -> const IntSet &
{
    auto it = _assignment.find(v);
    if (it == _assignment.end())
        throw Error(ErrorCode::missing_label, "vertex " + std::to_string(v) + " has no label");
    return it->second;
}

auto Labeling::require_covers(const Graph & g) const -> void
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        label(v);
}

auto Labeling::restricted(const Subgraph & sub) const -> Labeling
{
    std::map<Vertex, IntSet> out;
    for (Vertex i = 0; i < sub.original.size(); ++i)
        out.emplace(i, label(sub.original[i]));
    return Labeling(std::move(out));
}

auto edge_label(const Labeling & labeling, Vertex u, Vertex v) -> IntSet
{
    if (u == v)
        throw Error(ErrorCode::invalid_argument, "edge endpoints must differ");
    return sumset(labeling.label(u), labeling.label(v));
}

auto deterministic_index(const Labeling & labeling, Vertex v) -> Element
{
    const auto & s = labeling.label(v);
    auto ap = detect_ap(s);
    if (! ap)
        throw Error(ErrorCode::not_arithmetic, "label of vertex " + std::to_string(v) + " " + s.to_string()
                + " is not an AP-set");
    if (ap->diff == 0)
        throw Error(ErrorCode::undefined_index, "label of vertex " + std::to_string(v) + " is a singleton");
    return ap->diff;
}

auto deterministic_ratio(Element du, Element dv) -> DeterministicRatio
{
    if (du == 0 || dv == 0)
        throw Error(ErrorCode::undefined_index, "deterministic indices must be positive");
    auto hi = std::max(du, dv), lo = std::min(du, dv);
    auto g = std::gcd(hi, lo);
    auto smaller = du == dv ? SmallerEnd::both : du < dv ? SmallerEnd::u : SmallerEnd::v;
    return DeterministicRatio{hi / g, lo / g, smaller};
}

auto deterministic_ratio(const Labeling & labeling, Vertex u, Vertex v) -> DeterministicRatio
{
    return deterministic_ratio(deterministic_index(labeling, u), deterministic_index(labeling, v));
}

}
