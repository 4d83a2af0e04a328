#include "iasi/compat.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace iasi {

auto to_string(const Histogram & h) -> std::string
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto & [size, count] : h) {
        out << (first ? "" : ", ") << size << ':' << count;
        first = false;
    }
    out << '}';
    return out.str();
}

auto compat_partition(const IntSet & a, const IntSet & b) -> ClassProfile
{
    if (a.max() > max_element - b.max())
        throw Error(ErrorCode::overflow, "pair sums would leave the supported range");

    ClassProfile profile;
    for (auto x : a)
        for (auto y : b)
            profile.classes[x + y].emplace_back(x, y);

    profile.saturated_size = std::min(a.size(), b.size());
    for (const auto & [sum, members] : profile.classes) {
        const auto size = members.size();
        profile.sizes[sum] = size;
        ++profile.size_histogram[size];
        if (size == profile.saturated_size)
            ++profile.saturated_count;
    }
    profile.max_size = profile.size_histogram.rbegin()->first;
    profile.max_count = profile.size_histogram.rbegin()->second;
    return profile;
}

auto to_string(TheoremId id) -> std::string_view
{
    switch (id) {
        case TheoremId::ncc: return "T-NCC";
        case TheoremId::nsc_ii: return "T-NSC-II";
        case TheoremId::nmcc_ii_q0: return "T-NMCC-II-q0";
        case TheoremId::nmcc_ii_qpos: return "T-NMCC-II-qpos";
        case TheoremId::edge_sin_iso: return "EDGE-SIN-ISO";
        case TheoremId::edge_sin_bi: return "EDGE-SIN-BI";
    }
    return "unknown";
}

namespace {
    auto out_of_domain(const std::string & message) -> Error
    {
        return Error(ErrorCode::out_of_domain, message);
    }

    auto triple(std::size_t m, std::size_t n, Element k) -> std::string
    {
        return "(m,n,k)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
    }

    auto require_bi_domain(std::size_t m, std::size_t n, Element k) -> void
    {
        if (m < 3 || n < 3)
            throw out_of_domain("label sizes must be at least 3 at " + triple(m, n, k));
        if (k < 2 || k > m)
            throw out_of_domain("biarithmetic ratio needs 2 <= k <= m at " + triple(m, n, k));
    }
}

auto predict_iso(std::size_t m, std::size_t n) -> Prediction
{
    if (m < n)
        std::swap(m, n);
    if (n < 3)
        throw out_of_domain("isoarithmetic labels need at least 3 elements, got sizes "
                + std::to_string(m) + " and " + std::to_string(n));

    Prediction pred;
    pred.theorem = TheoremId::ncc;
    pred.params = {m, n, 1, {}, {}, {}};
    pred.saturated_size = n;
    pred.saturated_count = m - n + 1;
    Histogram h;
    for (std::size_t p = 1; p < n; ++p)
        h[p] = 2;
    h[n] = m - n + 1;
    pred.histogram = h;
    return pred;
}

auto predict_bi_saturated(std::size_t m, std::size_t n, Element k) -> Prediction
{
    require_bi_domain(m, n, k);

    Prediction pred;
    pred.theorem = TheoremId::nsc_ii;
    pred.params = {m, n, k, {}, {}, {}};
    const auto covered = (n - 1) * k;
    const std::size_t saturated = m > covered ? m - covered : 0;
    if (saturated > 0)
        pred.params.r = saturated;
    pred.saturated_size = std::min(m, n);
    pred.saturated_count = saturated;
    Histogram h;
    for (std::size_t p = 1; p < n; ++p)
        h[p] = 2 * k;
    if (saturated > 0)
        h[n] = saturated;
    pred.histogram = h;
    return pred;
}

auto predict_bi_maximal(std::size_t m, std::size_t n, Element k) -> Prediction
{
    require_bi_domain(m, n, k);
    const std::size_t p = m / k, q = m % k;
    if (p > n - 1)
        throw out_of_domain("m = p k + q needs p <= n - 1 at " + triple(m, n, k));

    Prediction pred;
    pred.params = {m, n, k, p, q, {}};
    if (q == 0) {
        pred.theorem = TheoremId::nmcc_ii_q0;
        pred.max_size = p;
        pred.max_count = (n - p + 1) * k;
    }
    else {
        pred.theorem = TheoremId::nmcc_ii_qpos;
        pred.max_size = p + 1;
        pred.max_count = (n - p - 1) * k + q;
    }
    return pred;
}

auto predict_edge_sin(std::size_t m, std::size_t n, Element k) -> std::size_t
{
    if (m < 1 || n < 1)
        throw out_of_domain("label sizes must be positive at " + triple(m, n, k));
    if (k < 1 || k > m)
        throw out_of_domain("ratio needs 1 <= k <= m at " + triple(m, n, k));
    return m + k * (n - 1);
}

auto predict_edge_sin_claim(std::size_t m, std::size_t n, Element k) -> Prediction
{
    Prediction pred;
    pred.edge_size = predict_edge_sin(m, n, k);
    pred.theorem = k == 1 ? TheoremId::edge_sin_iso : TheoremId::edge_sin_bi;
    pred.params = {m, n, k, {}, {}, {}};
    return pred;
}

auto parse_audit_target(std::string_view name) -> AuditTarget
{
    std::string key(name);
    std::ranges::transform(key, key.begin(), [] (unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
    if (key.starts_with("t-"))
        key.erase(0, 2);
    if (key == "ncc") return AuditTarget::ncc;
    if (key == "nsc-ii") return AuditTarget::nsc_ii;
    if (key == "nmcc-ii") return AuditTarget::nmcc_ii;
    if (key == "nmcc-ii-q0") return AuditTarget::nmcc_ii_q0;
    if (key == "nmcc-ii-qpos") return AuditTarget::nmcc_ii_qpos;
    if (key == "edge-sin" || key == "aiasi1a") return AuditTarget::edge_sin;
    throw Error(ErrorCode::invalid_argument, "unknown theorem '" + std::string(name) + "'");
}

auto to_string(AuditTarget target) -> std::string_view
{
    switch (target) {
        case AuditTarget::ncc: return "T-NCC";
        case AuditTarget::nsc_ii: return "T-NSC-II";
        case AuditTarget::nmcc_ii: return "T-NMCC-II";
        case AuditTarget::nmcc_ii_q0: return "T-NMCC-II-q0";
        case AuditTarget::nmcc_ii_qpos: return "T-NMCC-II-qpos";
        case AuditTarget::edge_sin: return "EDGE-SIN";
    }
    return "unknown";
}

auto make_grid(std::pair<std::size_t, std::size_t> m, std::pair<std::size_t, std::size_t> n,
        std::pair<Element, Element> k) -> std::vector<GridPoint>
{
    std::vector<GridPoint> grid;
    for (auto mi = m.first; mi <= m.second; ++mi)
        for (auto ni = n.first; ni <= n.second; ++ni)
            for (auto ki = k.first; ki <= k.second; ++ki)
                grid.push_back({mi, ni, ki});
    return grid;
}

auto AuditReport::match_count() const -> std::size_t
{
    return std::ranges::count(records, Verdict::match, &AuditRecord::verdict);
}

auto AuditReport::mismatch_count() const -> std::size_t
{
    return std::ranges::count(records, Verdict::mismatch, &AuditRecord::verdict);
}

namespace {
    auto summarize(const ClassProfile & profile, const GridPoint & point) -> ProfileSummary
    {
        return ProfileSummary{point.m, point.n, point.k, profile.class_count(), profile.saturated_size,
            profile.saturated_count, profile.max_size, profile.max_count, profile.size_histogram};
    }

    auto compare(std::vector<FieldComparison> & out, const char * field, const std::optional<std::size_t> & predicted,
            std::size_t observed) -> void
    {
        if (predicted)
            out.push_back({field, std::to_string(*predicted), std::to_string(observed), *predicted == observed});
    }

    auto predict_for(AuditTarget target, const GridPoint & point) -> Prediction
    {
        switch (target) {
            case AuditTarget::ncc: return predict_iso(point.m, point.n);
            case AuditTarget::nsc_ii: return predict_bi_saturated(point.m, point.n, point.k);
            case AuditTarget::nmcc_ii: return predict_bi_maximal(point.m, point.n, point.k);
            case AuditTarget::nmcc_ii_q0:
            case AuditTarget::nmcc_ii_qpos: {
                auto pred = predict_bi_maximal(point.m, point.n, point.k);
                const bool want_q0 = target == AuditTarget::nmcc_ii_q0;
                if ((pred.theorem == TheoremId::nmcc_ii_q0) != want_q0)
                    throw out_of_domain(std::string("point is outside the ") + (want_q0 ? "q = 0" : "q > 0") + " slice");
                return pred;
            }
            case AuditTarget::edge_sin: return predict_edge_sin_claim(point.m, point.n, point.k);
        }
        throw out_of_domain("unknown audit target");
    }
}

auto audit(AuditTarget target, const std::vector<GridPoint> & grid) -> AuditReport
{
    AuditReport report;
    report.target = target;
    for (auto point : grid) {
        if (target == AuditTarget::ncc)
            point.k = 1;

        Prediction pred;
        try {
            pred = predict_for(target, point);
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::out_of_domain)
                throw;
            report.skipped.push_back(triple(point.m, point.n, point.k) + ": " + e.what());
            continue;
        }

        auto profile = compat_partition(ap_set(0, 1, point.m), ap_set(0, point.k, point.n));
        AuditRecord record;
        record.prediction = pred;
        record.observed = summarize(profile, point);
        auto & d = record.detail;
        compare(d, "saturated_size", pred.saturated_size, profile.saturated_size);
        compare(d, "saturated_count", pred.saturated_count, profile.saturated_count);
        compare(d, "max_size", pred.max_size, profile.max_size);
        compare(d, "max_count", pred.max_count, profile.max_count);
        compare(d, "edge_size", pred.edge_size, profile.class_count());
        if (pred.histogram)
            d.push_back({"histogram", to_string(*pred.histogram), to_string(profile.size_histogram),
                    *pred.histogram == profile.size_histogram});
        record.verdict = std::ranges::all_of(d, &FieldComparison::equal) ? Verdict::match : Verdict::mismatch;
        report.records.push_back(std::move(record));
    }
    return report;
}

}
