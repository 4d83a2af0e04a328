#pragma once

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/labeling.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace iasi {

/// Deterministic supply of first terms. Gaps start at `base_gap`, grow by
/// `growth` per step (the growth exponent saturates after a few dozen steps)
/// and, with `jitter`, carry a seed-driven offset below `base_gap`.
class FirstTermPool {
public:
    FirstTermPool(std::uint64_t seed, Element base_gap, double growth = 1.5, bool jitter = true);

    /// The i-th pool value; extends the pool as needed. Throws
    /// construction_failed once values would leave the element range.
    auto at(std::size_t i) -> Element;

private:
    auto gap(std::size_t i) -> Element;

    Element _base_gap;
    double _growth;
    bool _jitter;
    std::mt19937_64 _rng;
    std::vector<Element> _values;
};

struct ConstructOptions {
    std::uint64_t seed = 0;
    std::size_t retry_cap = 1000;
    double pool_growth = 1.5;
    bool pool_jitter = true;
};

/// The shape of one vertex label: an AP with this difference and length.
/// Its first term comes from the pool.
struct LabelShape {
    Element diff = 1;
    std::size_t len = 3;
};

/// Draws first terms for the given shapes, then repairs injectivity of f and
/// f+: while verify_iasi reports a collision, the highest-numbered vertex
/// involved moves to the next unused pool value. Gives up with
/// construction_failed after `retry_cap` moves.
auto assign_first_terms(const Graph & g, std::span<const LabelShape> shapes, const ConstructOptions & options = {})
    -> Labeling;

/// Expands a size list into one size per vertex: a single value applies to
/// every vertex, two values apply to the X and Y sides of `sides`, and n
/// values are taken per vertex.
auto expand_sizes(const Graph & g, std::span<const std::size_t> sizes, const Bipartition * sides = nullptr)
    -> std::vector<std::size_t>;

/// All labels share difference `diff`. Sizes expand per expand_sizes and must
/// be at least 3.
auto construct_isoarithmetic(const Graph & g, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options = {}) -> Labeling;

/// Side X gets m-element labels, side Y n-element labels, all difference d.
/// Throws not_bipartite.
auto construct_bipartite_uniform_isoarithmetic(const Graph & g, std::size_t m, std::size_t n, Element diff,
        const ConstructOptions & options = {}) -> Labeling;

/// Every edge gets an integral ratio above 1. Vertices are greedily coloured
/// and colour c gets difference diff * 2^c; each label is made large enough
/// to bound the ratios of its edges. `min_size` (>= 3) is the floor.
auto construct_biarithmetic(const Graph & g, Element diff, std::size_t min_size,
        const ConstructOptions & options = {}) -> Labeling;

/// X labels have difference d, Y labels k d. Requires k >= 2 and every X size
/// at least k (ratio_bound otherwise). Throws not_bipartite.
auto construct_identical_biarithmetic(const Graph & g, Element k, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options = {}) -> Labeling;

/// X labels all have the same size k >= 3 and difference d; Y labels have
/// difference k d, so every edge label has |f(u)| |f(v)| elements.
auto construct_strong_biarithmetic(const Graph & g, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options = {}) -> Labeling;

/// Every edge label gets exactly r elements. Non-bipartite components use
/// (r + 1) / 2 elements everywhere (r must be odd); bipartite ones split
/// r + 1 = m + n with m = ceil(r / 2). Throws infeasible.
auto construct_componentwise_uniform(const Graph & g, std::size_t r, Element diff,
        const ConstructOptions & options = {}) -> Labeling;

struct SearchBound {
    Element max_element = 30;
    std::size_t min_size = 3;
    std::size_t max_size = 4;
    std::vector<Element> ratios{2, 3};
};

inline constexpr std::size_t search_vertex_limit = 8;

/// Exhaustive search for an identical biarithmetic labeling inside the
/// bound. Ratios ascending, then difference assignments, then sizes and
/// first terms ascending per vertex. Throws size_limit above
/// search_vertex_limit vertices.
auto search_identical_biarithmetic(const Graph & g, const SearchBound & bound = {}) -> std::optional<Labeling>;

enum class ConstructKind {
    isoarithmetic,
    uniform_isoarithmetic,
    bipartite_uniform_isoarithmetic,
    biarithmetic,
    identical_biarithmetic,
    strong_biarithmetic,
    componentwise_uniform,
};

auto parse_construct_kind(std::string_view name) -> ConstructKind;
auto to_string(ConstructKind kind) -> std::string_view;

struct ConstructSpec {
    ConstructKind kind = ConstructKind::isoarithmetic;
    Element diff = 1;
    /// Per expand_sizes; bipartite_uniform_isoarithmetic reads the two side
    /// sizes, biarithmetic reads the first entry as its minimum size.
    std::vector<std::size_t> sizes{3};
    Element ratio = 2;
    /// r for componentwise_uniform.
    std::size_t edge_size = 0;
    std::uint64_t seed = 0;
};

auto construct(const Graph & g, const ConstructSpec & spec) -> Labeling;

}
