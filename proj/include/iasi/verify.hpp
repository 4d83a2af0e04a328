#pragma once

#include "iasi/graph.hpp"
#include "iasi/int_set.hpp"
#include "iasi/labeling.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace iasi {

/// Names a vertex or an edge (by its position in Graph::edges()).
struct ElementRef {
    enum class Kind { vertex, edge };
    Kind kind = Kind::vertex;
    std::size_t id = 0;

    auto to_string() const -> std::string;

    friend auto operator==(const ElementRef &, const ElementRef &) -> bool = default;
    friend auto operator<=>(const ElementRef &, const ElementRef &) = default;
};

struct Violation {
    ElementRef element;
    std::string rule;
    std::string detail;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

struct CheckResult {
    bool ok = true;
    std::vector<Violation> violations;

    explicit operator bool() const noexcept { return ok; }
};

/// f and f+ both injective. Throws missing_label if a vertex is unlabeled.
auto verify_iasi(const Graph & g, const Labeling & labeling) -> CheckResult;

/// Integral edge ratio d_j = k d_i with 1 <= k <= |f(v_i)|, v_i the endpoint
/// with the smaller deterministic index. Labels with fewer than three
/// elements are reported as violations; non-AP labels throw not_arithmetic.
auto verify_arithmetic(const Graph & g, const Labeling & labeling) -> CheckResult;

/// Every vertex shares one deterministic index.
auto verify_isoarithmetic(const Graph & g, const Labeling & labeling) -> CheckResult;

/// Every edge ratio is an integer k with 1 < k <= |f(v_i)|.
auto verify_biarithmetic(const Graph & g, const Labeling & labeling) -> CheckResult;

/// The common edge ratio of a biarithmetic labeling, when there is one.
auto verify_identical_biarithmetic(const Graph & g, const Labeling & labeling) -> std::optional<Element>;

/// |f+(uv)| = |f(u)| |f(v)| on every edge.
auto verify_strong(const Graph & g, const Labeling & labeling) -> CheckResult;

struct UniformResult {
    std::optional<std::size_t> edge_k;
    std::optional<std::size_t> vertex_l;
};

auto verify_uniform(const Graph & g, const Labeling & labeling) -> UniformResult;

struct VerificationReport {
    bool is_iasi = false;
    bool vertex_arithmetic = false;
    bool edge_arithmetic = false;
    bool arithmetic = false;
    bool isoarithmetic = false;
    bool biarithmetic = false;
    std::optional<Element> identical_biarithmetic;
    bool strong = false;
    std::optional<std::size_t> edge_uniform;
    std::optional<std::size_t> vertex_uniform;
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
};

/// Full classification. Only a missing label throws; everything else
/// becomes a false flag plus violations, sorted by element.
auto verify(const Graph & g, const Labeling & labeling) -> VerificationReport;

}
