#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace iasi {

using Vertex = std::size_t;

/// An undirected edge as written; u and v are never equal.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator==(const Edge &, const Edge &) -> bool = default;
};

/// Finite simple undirected graph. Edges keep their insertion order and
/// orientation so that edge ids (positions) and edge-list text are stable.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {});

    auto vertex_count() const noexcept -> std::size_t { return _vertex_count; }
    auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
    auto edges() const noexcept -> std::span<const Edge> { return _edges; }
    auto neighbours(Vertex v) const -> std::span<const Vertex>;
    auto degree(Vertex v) const -> std::size_t { return neighbours(v).size(); }
    auto has_edge(Vertex u, Vertex v) const -> bool;

    /// Isolated vertices are representable, but the labeling theory assumes
    /// none; verifiers turn this into a warning.
    auto isolated_vertices() const -> std::vector<Vertex>;
    auto has_isolated_vertices() const -> bool { return ! isolated_vertices().empty(); }

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._vertex_count == b._vertex_count && a._edges == b._edges;
    }

private:
    std::size_t _vertex_count = 0;
    std::vector<Edge> _edges;
    std::vector<std::vector<Vertex>> _adjacency;
};

struct Bipartition {
    std::vector<Vertex> side_x;
    std::vector<Vertex> side_y;

    /// true for vertices of side_y.
    auto side_of(std::size_t vertex_count) const -> std::vector<bool>;

    friend auto operator==(const Bipartition &, const Bipartition &) -> bool = default;
};

/// Two-colouring by breadth-first search from each uncoloured vertex in
/// ascending order; the start of every component goes to side_x. Absent iff
/// the graph has an odd cycle.
auto bipartition(const Graph & g) -> std::optional<Bipartition>;

/// Connected components, each sorted, ordered by smallest vertex.
auto components(const Graph & g) -> std::vector<std::vector<Vertex>>;

struct Subgraph {
    Graph graph;
    /// original[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> original;
};

auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Subgraph;

/// Vertices of b are renumbered after those of a.
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

enum class GraphKind { path, cycle, complete, complete_bipartite, star };

auto parse_graph_kind(std::string_view name) -> GraphKind;

namespace generate {
    auto path(std::size_t n) -> Graph;
    /// Throws invalid_argument when n < 3.
    auto cycle(std::size_t n) -> Graph;
    auto complete(std::size_t n) -> Graph;
    /// Sides are {0..a-1} and {a..a+b-1}.
    auto complete_bipartite(std::size_t a, std::size_t b) -> Graph;
    /// K_{1,leaves}, centre 0.
    auto star(std::size_t leaves) -> Graph;
}

/// Dispatch for the CLI. `m` is only used by complete_bipartite.
auto generate_graph(GraphKind kind, std::size_t n, std::size_t m = 0) -> Graph;

}
