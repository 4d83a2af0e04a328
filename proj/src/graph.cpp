#include "iasi/graph.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace iasi {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) :
    _vertex_count(vertex_count),
    _edges(std::move(edges)),
    _adjacency(vertex_count)
{
    for (const auto & [u, v] : _edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw Error(ErrorCode::invalid_argument, "edge " + std::to_string(u) + " " + std::to_string(v)
                    + " names a vertex outside [0, " + std::to_string(vertex_count) + ")");
        if (u == v)
            throw Error(ErrorCode::invalid_argument, "self-loop at vertex " + std::to_string(u));
        if (std::ranges::find(_adjacency[u], v) != _adjacency[u].end())
            throw Error(ErrorCode::invalid_argument, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
        _adjacency[u].push_back(v);
        _adjacency[v].push_back(u);
    }
    for (auto & adj : _adjacency)
        std::ranges::sort(adj);
}

auto Graph::neighbours(Vertex v) const -> std::span<const Vertex>
{
    if (v >= _vertex_count)
        throw Error(ErrorCode::invalid_argument, "no vertex " + std::to_string(v));
    return _adjacency[v];
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    return std::ranges::binary_search(neighbours(u), v);
}

auto Graph::isolated_vertices() const -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < _vertex_count; ++v)
        if (_adjacency[v].empty())
            out.push_back(v);
    return out;
}

auto Bipartition::side_of(std::size_t vertex_count) const -> std::vector<bool>
{
    std::vector<bool> out(vertex_count, false);
    for (auto v : side_y)
        out.at(v) = true;
    return out;
}

auto bipartition(const Graph & g) -> std::optional<Bipartition>
{
    const auto n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (Vertex start = 0; start < n; ++start) {
        if (colour[start] != -1)
            continue;
        colour[start] = 0;
        std::deque<Vertex> queue{start};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(u)) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                }
                else if (colour[w] == colour[u])
                    return std::nullopt;
            }
        }
    }

    Bipartition result;
    for (Vertex v = 0; v < n; ++v)
        (colour[v] == 0 ? result.side_x : result.side_y).push_back(v);
    return result;
}

auto components(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    const auto n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        auto & comp = out.emplace_back();
        seen[start] = true;
        std::deque<Vertex> queue{start};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (auto w : g.neighbours(u))
                if (! seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
        std::ranges::sort(comp);
    }
    return out;
}

auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Subgraph
{
    constexpr auto absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(g.vertex_count(), absent);
    Subgraph out;
    for (auto v : keep) {
        if (v >= g.vertex_count())
            throw Error(ErrorCode::invalid_argument, "no vertex " + std::to_string(v));
        if (index[v] != absent)
            throw Error(ErrorCode::invalid_argument, "vertex " + std::to_string(v) + " listed twice");
        index[v] = out.original.size();
        out.original.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto & [u, v] : g.edges())
        if (index[u] != absent && index[v] != absent)
            edges.push_back({index[u], index[v]});
    out.graph = Graph(out.original.size(), std::move(edges));
    return out;
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    std::vector<Edge> edges(a.edges().begin(), a.edges().end());
    const auto offset = a.vertex_count();
    for (const auto & [u, v] : b.edges())
        edges.push_back({u + offset, v + offset});
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

auto parse_graph_kind(std::string_view name) -> GraphKind
{
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "complete") return GraphKind::complete;
    if (name == "complete_bipartite" || name == "complete-bipartite") return GraphKind::complete_bipartite;
    if (name == "star") return GraphKind::star;
    throw Error(ErrorCode::invalid_argument, "unknown graph kind '" + std::string(name) + "'");
}

namespace {
    auto require_positive(std::size_t n, const char * what) -> void
    {
        if (n < 1)
            throw Error(ErrorCode::invalid_argument, std::string(what) + " must be at least 1");
    }
}

namespace generate {
    auto path(std::size_t n) -> Graph
    {
        require_positive(n, "path length");
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.push_back({v, v + 1});
        return Graph(n, std::move(edges));
    }

    auto cycle(std::size_t n) -> Graph
    {
        if (n < 3)
            throw Error(ErrorCode::invalid_argument, "cycle length must be at least 3");
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            edges.push_back({v, (v + 1) % n});
        return Graph(n, std::move(edges));
    }

    auto complete(std::size_t n) -> Graph
    {
        require_positive(n, "complete graph order");
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    auto complete_bipartite(std::size_t a, std::size_t b) -> Graph
    {
        require_positive(a, "first side");
        require_positive(b, "second side");
        std::vector<Edge> edges;
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = 0; v < b; ++v)
                edges.push_back({u, a + v});
        return Graph(a + b, std::move(edges));
    }

    auto star(std::size_t leaves) -> Graph
    {
        require_positive(leaves, "leaf count");
        return complete_bipartite(1, leaves);
    }
}

auto generate_graph(GraphKind kind, std::size_t n, std::size_t m) -> Graph
{
    switch (kind) {
        case GraphKind::path: return generate::path(n);
        case GraphKind::cycle: return generate::cycle(n);
        case GraphKind::complete: return generate::complete(n);
        case GraphKind::complete_bipartite: return generate::complete_bipartite(n, m);
        case GraphKind::star: return generate::star(n);
    }
    throw Error(ErrorCode::invalid_argument, "unknown graph kind");
}

}
