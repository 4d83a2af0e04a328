#pragma once

#include "iasi/int_set.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasi {

using Histogram = std::map<std::size_t, std::size_t>;

auto to_string(const Histogram & h) -> std::string;

/// Compatibility classes of A x B: ordered pairs grouped by their sum.
struct ClassProfile {
    std::map<Element, std::vector<std::pair<Element, Element>>> classes;
    std::map<Element, std::size_t> sizes;
    std::size_t saturated_size = 0;
    std::size_t saturated_count = 0;
    std::size_t max_size = 0;
    std::size_t max_count = 0;
    /// class size -> number of classes of that size
    Histogram size_histogram;

    auto class_count() const noexcept -> std::size_t { return classes.size(); }
};

/// Exhaustive enumeration of all |A| |B| pairs. This is the ground truth the
/// closed-form predictions are audited against.
auto compat_partition(const IntSet & a, const IntSet & b) -> ClassProfile;

enum class TheoremId { ncc, nsc_ii, nmcc_ii_q0, nmcc_ii_qpos, edge_sin_iso, edge_sin_bi };

auto to_string(TheoremId id) -> std::string_view;

struct PredictionParams {
    std::size_t m = 0;
    std::size_t n = 0;
    Element k = 1;
    std::optional<std::size_t> p;
    std::optional<std::size_t> q;
    std::optional<std::size_t> r;
};

/// A closed-form claim about one edge. Only the fields the theorem speaks
/// about are set.
struct Prediction {
    TheoremId theorem = TheoremId::ncc;
    PredictionParams params;
    std::optional<std::size_t> saturated_size;
    std::optional<std::size_t> saturated_count;
    std::optional<std::size_t> max_size;
    std::optional<std::size_t> max_count;
    std::optional<std::size_t> edge_size;
    std::optional<Histogram> histogram;
};

/// Same common difference on both labels, sizes m and n in either order:
/// m - n + 1 saturated classes of size n and two classes of every size below n.
auto predict_iso(std::size_t m, std::size_t n) -> Prediction;

/// m is the size of the label with the smaller deterministic index, n the
/// other, k the ratio (2 <= k <= m). Saturated classes exist iff
/// m > (n - 1) k and then number m - (n - 1) k; each size 1..n-1 is claimed
/// to occur 2k times.
auto predict_bi_saturated(std::size_t m, std::size_t n, Element k) -> Prediction;

/// With m = p k + q (0 <= q < k, p <= n - 1): for q = 0, (n - p + 1) k
/// maximal classes of size p; for q > 0, (n - p - 1) k + q classes of size
/// p + 1. Emitted as claimed; the audit decides whether it holds.
auto predict_bi_maximal(std::size_t m, std::size_t n, Element k) -> Prediction;

/// |f+(uv)| = m + k (n - 1) for 1 <= k <= m, m the smaller-index size.
auto predict_edge_sin(std::size_t m, std::size_t n, Element k) -> std::size_t;

/// The same as a Prediction, tagged iso when k = 1.
auto predict_edge_sin_claim(std::size_t m, std::size_t n, Element k) -> Prediction;

struct ProfileSummary {
    std::size_t m = 0;
    std::size_t n = 0;
    Element k = 1;
    std::size_t class_count = 0;
    std::size_t saturated_size = 0;
    std::size_t saturated_count = 0;
    std::size_t max_size = 0;
    std::size_t max_count = 0;
    Histogram histogram;
};

struct FieldComparison {
    std::string field;
    std::string predicted;
    std::string observed;
    bool equal = false;
};

enum class Verdict { match, mismatch };

struct AuditRecord {
    Prediction prediction;
    ProfileSummary observed;
    Verdict verdict = Verdict::match;
    std::vector<FieldComparison> detail;
};

/// Which claim an audit sweeps. nmcc_ii covers both of its slices.
enum class AuditTarget { ncc, nsc_ii, nmcc_ii, nmcc_ii_q0, nmcc_ii_qpos, edge_sin };

auto parse_audit_target(std::string_view name) -> AuditTarget;
auto to_string(AuditTarget target) -> std::string_view;

struct GridPoint {
    std::size_t m = 0;
    std::size_t n = 0;
    Element k = 1;

    friend auto operator==(const GridPoint &, const GridPoint &) -> bool = default;
    friend auto operator<=>(const GridPoint &, const GridPoint &) = default;
};

/// Cartesian product of three inclusive ranges, lexicographic by (m, n, k).
auto make_grid(std::pair<std::size_t, std::size_t> m, std::pair<std::size_t, std::size_t> n,
        std::pair<Element, Element> k) -> std::vector<GridPoint>;

struct AuditReport {
    AuditTarget target = AuditTarget::ncc;
    std::vector<AuditRecord> records;
    /// One note per grid point that fell outside the claim's hypotheses.
    std::vector<std::string> skipped;

    auto match_count() const -> std::size_t;
    auto mismatch_count() const -> std::size_t;
};

/// Compares predictions with compat_partition on the canonical witnesses
/// A = {0, 1, ..., m-1}, B = {0, k, ..., (n-1) k}. For ncc the grid's k is
/// ignored (witnesses share difference 1). Records come out in grid order.
auto audit(AuditTarget target, const std::vector<GridPoint> & grid) -> AuditReport;

}
