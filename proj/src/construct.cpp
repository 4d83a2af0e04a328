#include "iasi/construct.hpp"

#include "iasi/error.hpp"
#include "iasi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace iasi {

namespace {
    /// Pool values stay below this so that label spans and pairwise sums fit.
    constexpr Element pool_limit = max_element / 4;

    auto require(bool condition, ErrorCode code, const std::string & message) -> void
    {
        if (! condition)
            throw Error(code, message);
    }

    auto require_bipartite(const Graph & g) -> Bipartition
    {
        auto sides = bipartition(g);
        if (! sides)
            throw Error(ErrorCode::not_bipartite, "graph contains an odd cycle");
        return *sides;
    }

    auto require_min_sizes(std::span<const std::size_t> sizes) -> void
    {
        for (auto s : sizes)
            require(s >= 3, ErrorCode::invalid_argument, "label sizes must be at least 3, got " + std::to_string(s));
    }

    auto require_diff(Element diff) -> void
    {
        require(diff >= 1, ErrorCode::invalid_argument, "common difference must be at least 1");
    }

    auto checked_mul(Element a, Element b) -> Element
    {
        if (a != 0 && b > max_element / a)
            throw Error(ErrorCode::overflow, "difference " + std::to_string(a) + " x " + std::to_string(b)
                    + " leaves the supported range");
        return a * b;
    }

    /// Endpoints of a colliding pair reported by verify_iasi; the caller moves
    /// the largest of them.
    auto collision_culprit(const Graph & g, const Labeling & labeling, const Violation & v) -> Vertex
    {
        if (v.element.kind == ElementRef::Kind::vertex)
            return v.element.id;
        auto edges = g.edges();
        const auto & late = edges[v.element.id];
        auto target = edge_label(labeling, late.u, late.v);
        Vertex culprit = std::max(late.u, late.v);
        for (std::size_t e = 0; e < v.element.id; ++e)
            if (edge_label(labeling, edges[e].u, edges[e].v) == target) {
                culprit = std::max({culprit, edges[e].u, edges[e].v});
                break;
            }
        return culprit;
    }
}

FirstTermPool::FirstTermPool(std::uint64_t seed, Element base_gap, double growth, bool jitter) :
    _base_gap(std::max<Element>(base_gap, 1)),
    _growth(growth),
    _jitter(jitter),
    _rng(seed)
{
    require(growth >= 1.0, ErrorCode::invalid_argument, "pool growth must be at least 1");
}

auto FirstTermPool::gap(std::size_t i) -> Element
{
    constexpr std::size_t exponent_cap = 40;
    const long double scale = std::ceil(std::pow(static_cast<long double>(_growth),
                static_cast<long double>(std::min(i, exponent_cap))));
    const long double gap = scale * static_cast<long double>(_base_gap);
    if (gap > static_cast<long double>(pool_limit))
        throw Error(ErrorCode::construction_failed, "first-term pool exhausted the element range");
    return static_cast<Element>(gap) + (_jitter ? _rng() % _base_gap : 0);
}

auto FirstTermPool::at(std::size_t i) -> Element
{
    while (_values.size() <= i) {
        Element next = _values.empty() ? (_jitter ? _rng() % _base_gap : 0) : _values.back() + gap(_values.size() - 1);
        if (next > pool_limit)
            throw Error(ErrorCode::construction_failed, "first-term pool exhausted the element range");
        _values.push_back(next);
    }
    return _values[i];
}

auto assign_first_terms(const Graph & g, std::span<const LabelShape> shapes, const ConstructOptions & options)
    -> Labeling
{
    const auto n = g.vertex_count();
    require(shapes.size() == n, ErrorCode::invalid_argument, "need one label shape per vertex");

    Element widest = 0;
    for (const auto & shape : shapes) {
        require_diff(shape.diff);
        require(shape.len >= 1, ErrorCode::invalid_argument, "label length must be at least 1");
        require(shape.len - 1 <= pool_limit / shape.diff, ErrorCode::overflow, "label span leaves the supported range");
        widest = std::max(widest, shape.diff * (shape.len - 1));
    }

    FirstTermPool pool(options.seed, widest + 1, options.pool_growth, options.pool_jitter);
    std::vector<std::size_t> slot(n);
    std::map<Vertex, IntSet> labels;
    auto place = [&] (Vertex v) {
        labels.insert_or_assign(v, ap_set(pool.at(slot[v]), shapes[v].diff, shapes[v].len));
    };
    for (Vertex v = 0; v < n; ++v) {
        slot[v] = v;
        place(v);
    }

    std::size_t next_slot = n;
    for (std::size_t moves = 0; ; ++moves) {
        Labeling labeling(labels);
        auto check = verify_iasi(g, labeling);
        if (check.ok)
            return labeling;
        if (moves == options.retry_cap)
            throw Error(ErrorCode::construction_failed, "injectivity repair gave up after "
                    + std::to_string(moves) + " moves; last collision at " + check.violations.front().element.to_string()
                    + ": " + check.violations.front().detail);
        auto v = collision_culprit(g, labeling, check.violations.front());
        slot[v] = next_slot++;
        place(v);
    }
}

auto expand_sizes(const Graph & g, std::span<const std::size_t> sizes, const Bipartition * sides)
    -> std::vector<std::size_t>
{
    const auto n = g.vertex_count();
    if (sizes.size() == 1)
        return std::vector<std::size_t>(n, sizes[0]);
    if (sizes.size() == n)
        return {sizes.begin(), sizes.end()};
    if (sizes.size() == 2 && sides) {
        std::vector<std::size_t> out(n);
        for (auto v : sides->side_x)
            out[v] = sizes[0];
        for (auto v : sides->side_y)
            out[v] = sizes[1];
        return out;
    }
    throw Error(ErrorCode::spec_error, "expected 1, " + std::string(sides ? "2 (X,Y), " : "") + "or "
            + std::to_string(n) + " sizes, got " + std::to_string(sizes.size()));
}

auto construct_isoarithmetic(const Graph & g, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options) -> Labeling
{
    require_diff(diff);
    auto per_vertex = expand_sizes(g, sizes);
    require_min_sizes(per_vertex);
    std::vector<LabelShape> shapes;
    for (auto s : per_vertex)
        shapes.push_back({diff, s});
    return assign_first_terms(g, shapes, options);
}

auto construct_bipartite_uniform_isoarithmetic(const Graph & g, std::size_t m, std::size_t n, Element diff,
        const ConstructOptions & options) -> Labeling
{
    auto sides = require_bipartite(g);
    std::vector<std::size_t> side_sizes{m, n};
    require_min_sizes(side_sizes);
    require_diff(diff);
    auto on_y = sides.side_of(g.vertex_count());
    std::vector<LabelShape> shapes;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        shapes.push_back({diff, on_y[v] ? n : m});
    return assign_first_terms(g, shapes, options);
}

auto construct_biarithmetic(const Graph & g, Element diff, std::size_t min_size, const ConstructOptions & options)
    -> Labeling
{
    require_diff(diff);
    require(min_size >= 3, ErrorCode::invalid_argument, "label sizes must be at least 3");
    const auto n = g.vertex_count();

    std::vector<std::size_t> colour(n);
    for (Vertex v = 0; v < n; ++v) {
        std::set<std::size_t> taken;
        for (auto w : g.neighbours(v))
            if (w < v)
                taken.insert(colour[w]);
        std::size_t c = 0;
        while (taken.contains(c))
            ++c;
        colour[v] = c;
    }
    require(n == 0 || *std::ranges::max_element(colour) < 40, ErrorCode::overflow, "too many colours for power-of-two differences");

    std::vector<LabelShape> shapes;
    for (Vertex v = 0; v < n; ++v) {
        std::size_t size = min_size;
        for (auto w : g.neighbours(v))
            if (colour[w] > colour[v])
                size = std::max<std::size_t>(size, std::size_t{1} << (colour[w] - colour[v]));
        shapes.push_back({checked_mul(diff, Element{1} << colour[v]), size});
    }
    return assign_first_terms(g, shapes, options);
}

auto construct_identical_biarithmetic(const Graph & g, Element k, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options) -> Labeling
{
    auto sides = require_bipartite(g);
    require(k >= 2, ErrorCode::invalid_argument, "identical biarithmetic ratio must be at least 2");
    require_diff(diff);
    auto per_vertex = expand_sizes(g, sizes, &sides);
    require_min_sizes(per_vertex);
    for (auto v : sides.side_x)
        require(per_vertex[v] >= k, ErrorCode::ratio_bound, "ratio " + std::to_string(k) + " exceeds the size "
                + std::to_string(per_vertex[v]) + " of X-side vertex " + std::to_string(v));

    auto on_y = sides.side_of(g.vertex_count());
    const auto y_diff = checked_mul(k, diff);
    std::vector<LabelShape> shapes;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        shapes.push_back({on_y[v] ? y_diff : diff, per_vertex[v]});
    return assign_first_terms(g, shapes, options);
}

auto construct_strong_biarithmetic(const Graph & g, Element diff, std::span<const std::size_t> sizes,
        const ConstructOptions & options) -> Labeling
{
    auto sides = require_bipartite(g);
    auto per_vertex = expand_sizes(g, sizes, &sides);
    require_min_sizes(per_vertex);
    if (sides.side_x.empty())
        return construct_isoarithmetic(g, diff, per_vertex, options);

    const auto k = per_vertex[sides.side_x.front()];
    for (auto v : sides.side_x)
        require(per_vertex[v] == k, ErrorCode::spec_error, "X-side sizes must all be equal for a strong labeling");
    return construct_identical_biarithmetic(g, k, diff, per_vertex, options);
}

auto construct_componentwise_uniform(const Graph & g, std::size_t r, Element diff, const ConstructOptions & options)
    -> Labeling
{
    require_diff(diff);
    require(r >= 5, ErrorCode::infeasible, "edge size " + std::to_string(r)
            + " is below 5, the smallest sumset of two labels with at least 3 elements");

    std::vector<LabelShape> shapes(g.vertex_count());
    for (const auto & comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto sides = bipartition(sub.graph);
        if (! sides) {
            require(r % 2 == 1, ErrorCode::infeasible, "component containing vertex " + std::to_string(comp.front())
                    + " is not bipartite and needs odd r, got " + std::to_string(r));
            for (auto v : comp)
                shapes[v] = {diff, (r + 1) / 2};
            continue;
        }
        const auto m = (r + 1) / 2, n = r + 1 - m;
        auto on_y = sides->side_of(sub.graph.vertex_count());
        for (Vertex i = 0; i < comp.size(); ++i)
            shapes[sub.original[i]] = {diff, on_y[i] ? n : m};
    }
    return assign_first_terms(g, shapes, options);
}

namespace {
    struct Shape {
        Element first;
        Element diff;
        std::size_t len;

        friend auto operator<=>(const Shape &, const Shape &) = default;
    };

    /// Two-phase backtracking: differences first (which alone decide the
    /// ratio pattern), then sizes and first terms for one difference
    /// assignment at a time.
    class IdenticalSearch {
    public:
        IdenticalSearch(const Graph & g, const SearchBound & bound, Element k) :
            _g(g), _bound(bound), _k(k), _diff(g.vertex_count(), 0), _label(g.vertex_count())
        {
            _max_diff = bound.max_element / (bound.min_size - 1);
        }

        auto run() -> std::optional<Labeling>
        {
            if (assign_diff(0))
                return Labeling(_sets);
            return std::nullopt;
        }

    private:
        auto ratio_ok(Element a, Element b) const -> bool
        {
            auto lo = std::min(a, b), hi = std::max(a, b);
            return hi % lo == 0 && hi / lo == _k;
        }

        auto assign_diff(Vertex v) -> bool
        {
            if (v == _g.vertex_count())
                return assign_label(0);
            for (Element d = 1; d <= _max_diff; ++d) {
                bool ok = true;
                for (auto w : _g.neighbours(v))
                    if (w < v && ! ratio_ok(d, _diff[w])) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                _diff[v] = d;
                if (assign_diff(v + 1))
                    return true;
            }
            _diff[v] = 0;
            return false;
        }

        auto assign_label(Vertex v) -> bool
        {
            if (v == _g.vertex_count()) {
                _sets.clear();
                for (const auto & s : _label)
                    _sets.push_back(ap_set(s.first, s.diff, s.len));
                return true;
            }
            const auto d = _diff[v];
            for (std::size_t len = _bound.min_size; len <= _bound.max_size; ++len) {
                if (d * (len - 1) > _bound.max_element)
                    break;
                for (Element first = 0; first + d * (len - 1) <= _bound.max_element; ++first) {
                    Shape shape{first, d, len};
                    if (_used_labels.contains(shape))
                        continue;
                    _label[v] = shape;
                    std::vector<IntSet> added;
                    if (place_edges(v, added)) {
                        _used_labels.insert(shape);
                        if (assign_label(v + 1))
                            return true;
                        _used_labels.erase(shape);
                    }
                    for (const auto & s : added)
                        _used_edges.erase(s);
                }
            }
            return false;
        }

        /// Checks the ratio bound and edge-label injectivity for edges from
        /// v back to earlier vertices, recording the new edge labels.
        auto place_edges(Vertex v, std::vector<IntSet> & added) -> bool
        {
            const auto & mine = _label[v];
            for (auto w : _g.neighbours(v)) {
                if (w >= v)
                    continue;
                const auto & theirs = _label[w];
                const auto smaller_len = mine.diff < theirs.diff ? mine.len : theirs.len;
                if (_k > smaller_len)
                    return false;
                auto label = sumset(ap_set(mine.first, mine.diff, mine.len), ap_set(theirs.first, theirs.diff, theirs.len));
                if (! _used_edges.insert(label).second)
                    return false;
                added.push_back(std::move(label));
            }
            return true;
        }

        const Graph & _g;
        const SearchBound & _bound;
        Element _k;
        Element _max_diff = 0;
        std::vector<Element> _diff;
        std::vector<Shape> _label;
        std::set<Shape> _used_labels;
        std::set<IntSet> _used_edges;
        std::vector<IntSet> _sets;
    };
}

auto search_identical_biarithmetic(const Graph & g, const SearchBound & bound) -> std::optional<Labeling>
{
    require(g.vertex_count() <= search_vertex_limit, ErrorCode::size_limit, "exhaustive search supports at most "
            + std::to_string(search_vertex_limit) + " vertices, graph has " + std::to_string(g.vertex_count()));
    require(bound.min_size >= 2 && bound.min_size <= bound.max_size, ErrorCode::invalid_argument,
            "search sizes must satisfy 2 <= min <= max");
    require(bound.max_element <= pool_limit, ErrorCode::overflow, "search bound leaves the supported range");
    if (g.edge_count() == 0)
        return std::nullopt;

    auto ratios = bound.ratios;
    std::ranges::sort(ratios);
    for (auto k : ratios) {
        if (k < 2)
            continue;
        IdenticalSearch search(g, bound, k);
        if (auto found = search.run())
            return found;
    }
    return std::nullopt;
}

auto parse_construct_kind(std::string_view name) -> ConstructKind
{
    std::string key(name);
    std::ranges::replace(key, '-', '_');
    for (auto kind : {ConstructKind::isoarithmetic, ConstructKind::uniform_isoarithmetic,
                ConstructKind::bipartite_uniform_isoarithmetic, ConstructKind::biarithmetic,
                ConstructKind::identical_biarithmetic, ConstructKind::strong_biarithmetic,
                ConstructKind::componentwise_uniform})
        if (to_string(kind) == key)
            return kind;
    throw Error(ErrorCode::invalid_argument, "unknown construction kind '" + std::string(name) + "'");
}

auto to_string(ConstructKind kind) -> std::string_view
{
    switch (kind) {
        case ConstructKind::isoarithmetic: return "isoarithmetic";
        case ConstructKind::uniform_isoarithmetic: return "uniform_isoarithmetic";
        case ConstructKind::bipartite_uniform_isoarithmetic: return "bipartite_uniform_isoarithmetic";
        case ConstructKind::biarithmetic: return "biarithmetic";
        case ConstructKind::identical_biarithmetic: return "identical_biarithmetic";
        case ConstructKind::strong_biarithmetic: return "strong_biarithmetic";
        case ConstructKind::componentwise_uniform: return "componentwise_uniform";
    }
    return "unknown";
}

auto construct(const Graph & g, const ConstructSpec & spec) -> Labeling
{
    ConstructOptions options;
    options.seed = spec.seed;
    switch (spec.kind) {
        case ConstructKind::isoarithmetic:
            return construct_isoarithmetic(g, spec.diff, spec.sizes, options);
        case ConstructKind::uniform_isoarithmetic:
            require(spec.sizes.size() == 1, ErrorCode::spec_error, "uniform construction takes exactly one size");
            return construct_isoarithmetic(g, spec.diff, spec.sizes, options);
        case ConstructKind::bipartite_uniform_isoarithmetic:
            require(spec.sizes.size() == 2, ErrorCode::spec_error, "bipartite construction takes two sizes m,n");
            return construct_bipartite_uniform_isoarithmetic(g, spec.sizes[0], spec.sizes[1], spec.diff, options);
        case ConstructKind::biarithmetic:
            require(! spec.sizes.empty(), ErrorCode::spec_error, "biarithmetic construction needs a minimum size");
            return construct_biarithmetic(g, spec.diff, spec.sizes[0], options);
        case ConstructKind::identical_biarithmetic:
            return construct_identical_biarithmetic(g, spec.ratio, spec.diff, spec.sizes, options);
        case ConstructKind::strong_biarithmetic:
            return construct_strong_biarithmetic(g, spec.diff, spec.sizes, options);
        case ConstructKind::componentwise_uniform:
            return construct_componentwise_uniform(g, spec.edge_size, spec.diff, options);
    }
    throw Error(ErrorCode::spec_error, "unknown construction kind");
}

}
