#pragma once

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace iasi {

/// Vertex to set-label assignment. Edge labels are never stored; they are
/// always recomputed from the two endpoint labels.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::map<Vertex, IntSet> assignment) : _assignment(std::move(assignment)) {}
    /// Vertex i gets labels[i].
    explicit Labeling(const std::vector<IntSet> & labels);

    auto has_label(Vertex v) const -> bool { return _assignment.contains(v); }
    /// Throws missing_label.
    auto label(Vertex v) const -> const IntSet &;
    auto size() const noexcept -> std::size_t { return _assignment.size(); }
    auto assignment() const noexcept -> const std::map<Vertex, IntSet> & { return _assignment; }

    /// Throws missing_label naming the first vertex of g without a label.
    auto require_covers(const Graph & g) const -> void;

    /// Labels of a subgraph, renumbered the same way.
    auto restricted(const Subgraph & sub) const -> Labeling;

    friend auto operator==(const Labeling &, const Labeling &) -> bool = default;

private:
    std::map<Vertex, IntSet> _assignment;
};

/// f+(uv) = f(u) + f(v).
auto edge_label(const Labeling & labeling, Vertex u, Vertex v) -> IntSet;

inline auto set_indexing_number(const IntSet & s) -> std::size_t { return s.size(); }

/// Common difference of f(v). Throws not_arithmetic for non-AP labels and
/// undefined_index for singletons.
auto deterministic_index(const Labeling & labeling, Vertex v) -> Element;

enum class SmallerEnd { u, v, both };

/// max(d_u, d_v) / min(d_u, d_v) in lowest terms.
struct DeterministicRatio {
    Element numerator = 1;
    Element denominator = 1;
    SmallerEnd smaller = SmallerEnd::both;

    auto is_integer() const noexcept -> bool { return denominator == 1; }

    friend auto operator==(const DeterministicRatio &, const DeterministicRatio &) -> bool = default;
};

auto deterministic_ratio(Element du, Element dv) -> DeterministicRatio;
auto deterministic_ratio(const Labeling & labeling, Vertex u, Vertex v) -> DeterministicRatio;

}
