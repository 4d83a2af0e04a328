#include "iasi/io.hpp"

#include "iasi/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace iasi {

namespace {
    auto parse_error(std::size_t line, const std::string & message) -> Error
    {
        return Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message);
    }

    auto split_lines(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> lines;
        while (! text.empty()) {
            auto nl = text.find('\n');
            auto line = text.substr(0, nl);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines.push_back(line);
            if (nl == std::string_view::npos)
                break;
            text.remove_prefix(nl + 1);
        }
        return lines;
    }

    auto tokens(std::string_view line) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            auto start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                ++i;
            if (i > start)
                out.push_back(line.substr(start, i - start));
        }
        return out;
    }

    auto is_skippable(std::string_view line) -> bool
    {
        auto t = tokens(line);
        return t.empty() || t.front().starts_with('#');
    }

    auto parse_number(std::string_view token, std::size_t line) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw parse_error(line, "expected a non-negative integer, got '" + std::string(token) + "'");
        return value;
    }

    auto yes_no(bool b) -> const char * { return b ? "true" : "false"; }

    template <typename T>
    auto or_none(const std::optional<T> & v) -> std::string
    {
        return v ? std::to_string(*v) : "none";
    }

    auto compact(const Histogram & h) -> std::string
    {
        auto s = to_string(h);
        std::erase(s, ' ');
        return s;
    }
}

auto write_edge_list(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto parse_edge_list(std::string_view text) -> Graph
{
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && is_skippable(lines[i]))
        ++i;
    if (i == lines.size())
        throw parse_error(1, "missing 'n m' header");

    auto header = tokens(lines[i]);
    if (header.size() != 2)
        throw parse_error(i + 1, "header must be 'n m'");
    const auto n = parse_number(header[0], i + 1), m = parse_number(header[1], i + 1);

    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (++i; i < lines.size(); ++i) {
        if (is_skippable(lines[i]))
            continue;
        auto t = tokens(lines[i]);
        if (t.size() != 2)
            throw parse_error(i + 1, "edge line must be 'u v'");
        const Vertex u = parse_number(t[0], i + 1), v = parse_number(t[1], i + 1);
        if (u >= n || v >= n)
            throw parse_error(i + 1, "vertex out of range [0, " + std::to_string(n) + ")");
        if (u == v)
            throw parse_error(i + 1, "self-loop at vertex " + std::to_string(u));
        if (! seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw parse_error(i + 1, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back({u, v});
    }
    if (edges.size() != m)
        throw parse_error(lines.size(), "header announces " + std::to_string(m) + " edges, found "
                + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

auto serialize_labeling(const Labeling & labeling) -> std::string
{
    std::ostringstream out;
    for (const auto & [v, set] : labeling.assignment()) {
        out << v << ':';
        for (auto x : set)
            out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

auto parse_labeling(std::string_view text) -> Labeling
{
    std::map<Vertex, IntSet> assignment;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line_no = i + 1;
        if (is_skippable(lines[i]))
            continue;
        auto colon = lines[i].find(':');
        if (colon == std::string_view::npos)
            throw parse_error(line_no, "expected 'v: e1 e2 ...'");
        auto head = tokens(lines[i].substr(0, colon));
        if (head.size() != 1)
            throw parse_error(line_no, "expected a single vertex id before ':'");
        const auto v = parse_number(head[0], line_no);

        std::vector<Element> elems;
        for (auto t : tokens(lines[i].substr(colon + 1)))
            elems.push_back(parse_number(t, line_no));
        if (elems.empty())
            throw parse_error(line_no, "vertex " + std::to_string(v) + " has an empty label");
        try {
            if (! assignment.emplace(v, IntSet::from_sorted(std::move(elems))).second)
                throw parse_error(line_no, "duplicate line for vertex " + std::to_string(v));
        }
        catch (const Error & e) {
            if (e.code() == ErrorCode::parse_error)
                throw;
            throw parse_error(line_no, e.what());
        }
    }
    return Labeling(std::move(assignment));
}

auto parse_int_set(std::string_view text) -> IntSet
{
    std::vector<Element> elems;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        auto piece = tokens(rest.substr(0, comma));
        if (piece.size() != 1)
            throw Error(ErrorCode::parse_error, "malformed integer list '" + std::string(text) + "'");
        elems.push_back(parse_number(piece[0], 1));
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return IntSet(std::move(elems));
}

auto export_dot(const Graph & g, const Labeling * labeling) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (labeling)
            out << " [label=\"" << v << ": " << labeling->label(v).to_string() << "\"]";
        out << ";\n";
    }
    for (const auto & [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (labeling) {
            auto s = edge_label(*labeling, u, v);
            out << " [label=\"" << s.to_string() << "\\n|f+|=" << s.size() << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

auto parse_output_format(std::string_view name) -> OutputFormat
{
    if (name == "text") return OutputFormat::text;
    if (name == "structured") return OutputFormat::structured;
    if (name == "dot") return OutputFormat::dot;
    throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "'");
}

auto format_report(const VerificationReport & r, OutputFormat format) -> std::string
{
    std::ostringstream out;
    if (format == OutputFormat::structured) {
        out << "is_iasi=" << yes_no(r.is_iasi) << '\n'
            << "vertex_arithmetic=" << yes_no(r.vertex_arithmetic) << '\n'
            << "edge_arithmetic=" << yes_no(r.edge_arithmetic) << '\n'
            << "arithmetic=" << yes_no(r.arithmetic) << '\n'
            << "isoarithmetic=" << yes_no(r.isoarithmetic) << '\n'
            << "biarithmetic=" << yes_no(r.biarithmetic) << '\n'
            << "identical_biarithmetic=" << or_none(r.identical_biarithmetic) << '\n'
            << "strong=" << yes_no(r.strong) << '\n'
            << "edge_uniform=" << or_none(r.edge_uniform) << '\n'
            << "vertex_uniform=" << or_none(r.vertex_uniform) << '\n';
        for (const auto & v : r.violations)
            out << "violation=" << v.element.to_string() << ' ' << v.rule << ' ' << v.detail << '\n';
        for (const auto & w : r.warnings)
            out << "warning=" << w << '\n';
        return out.str();
    }

    auto yn = [] (bool b) { return b ? "yes" : "no"; };
    out << "IASI:                   " << yn(r.is_iasi) << '\n'
        << "vertex-arithmetic:      " << yn(r.vertex_arithmetic) << '\n'
        << "edge-arithmetic:        " << yn(r.edge_arithmetic) << '\n'
        << "arithmetic:             " << yn(r.arithmetic) << '\n'
        << "isoarithmetic:          " << yn(r.isoarithmetic) << '\n'
        << "biarithmetic:           " << yn(r.biarithmetic) << '\n'
        << "identical biarithmetic: "
        << (r.identical_biarithmetic ? "yes, k = " + std::to_string(*r.identical_biarithmetic) : "no") << '\n'
        << "strong:                 " << yn(r.strong) << '\n'
        << "edge-uniform:           " << (r.edge_uniform ? "k = " + std::to_string(*r.edge_uniform) : "no") << '\n'
        << "vertex-uniform:         " << (r.vertex_uniform ? "l = " + std::to_string(*r.vertex_uniform) : "no") << '\n';
    if (! r.violations.empty()) {
        out << "violations:\n";
        for (const auto & v : r.violations)
            out << "  " << v.element.to_string() << " [" << v.rule << "] " << v.detail << '\n';
    }
    for (const auto & w : r.warnings)
        out << "warning: " << w << '\n';
    return out.str();
}

auto format_profile(const ClassProfile & p, OutputFormat format) -> std::string
{
    std::ostringstream out;
    const bool structured = format == OutputFormat::structured;
    const char * sep = structured ? "=" : ": ";
    out << "classes" << sep << p.class_count() << '\n'
        << "saturated_size" << sep << p.saturated_size << '\n'
        << "saturated_count" << sep << p.saturated_count << '\n'
        << "max_size" << sep << p.max_size << '\n'
        << "max_count" << sep << p.max_count << '\n'
        << "histogram" << sep << (structured ? compact(p.size_histogram) : to_string(p.size_histogram)) << '\n';
    for (const auto & [sum, members] : p.classes) {
        out << (structured ? "class=" : "C_") << sum << (structured ? " " : " (") << members.size()
            << (structured ? "" : "):");
        for (const auto & [a, b] : members)
            out << " (" << a << ',' << b << ')';
        out << '\n';
    }
    return out.str();
}

auto format_audit(const AuditReport & report, OutputFormat format) -> std::string
{
    std::ostringstream out;
    const bool structured = format == OutputFormat::structured;
    for (const auto & rec : report.records) {
        const auto & pr = rec.prediction.params;
        const auto & ob = rec.observed;
        const bool match = rec.verdict == Verdict::match;
        if (structured) {
            out << "record theorem=" << to_string(rec.prediction.theorem) << " m=" << pr.m << " n=" << pr.n
                << " k=" << pr.k << " p=" << or_none(pr.p) << " q=" << or_none(pr.q) << " r=" << or_none(pr.r)
                << " verdict=" << (match ? "match" : "mismatch") << " classes=" << ob.class_count
                << " saturated_count=" << ob.saturated_count << " max_size=" << ob.max_size
                << " max_count=" << ob.max_count << " observed_histogram=" << compact(ob.histogram);
            for (const auto & f : rec.detail)
                if (! f.equal)
                    out << " predicted_" << f.field << '=' << (f.field == "histogram" ? [&] {
                        auto s = f.predicted; std::erase(s, ' '); return s; }() : f.predicted);
            out << '\n';
            continue;
        }

        out << to_string(rec.prediction.theorem) << " (m,n,k)=(" << pr.m << ',' << pr.n << ',' << pr.k << ')';
        if (pr.p)
            out << " p=" << *pr.p << " q=" << *pr.q;
        if (match)
            out << ": match\n";
        else {
            out << ": mismatch:";
            bool first = true;
            for (const auto & f : rec.detail)
                if (! f.equal) {
                    out << (first ? " " : "; ") << f.field << " predicted " << f.predicted << " observed " << f.observed;
                    first = false;
                }
            out << "; observed histogram " << to_string(ob.histogram) << '\n';
        }
    }
    for (const auto & note : report.skipped)
        out << (structured ? "skipped=" : "skipped ") << note << '\n';

    const auto total = report.records.size();
    const auto matches = report.match_count();
    if (structured)
        out << "summary theorem=" << to_string(report.target) << " points=" << total << " match=" << matches
            << " mismatch=" << report.mismatch_count() << " skipped=" << report.skipped.size() << '\n';
    else
        out << "summary " << to_string(report.target) << ": " << total << " points, " << matches << " match, "
            << report.mismatch_count() << " mismatch, " << report.skipped.size() << " skipped"
            << (total > 0 && matches == total ? " (all match)" : "") << '\n';
    return out.str();
}

}
