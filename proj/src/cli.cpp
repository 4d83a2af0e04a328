#include "iasi/cli.hpp"

#include "iasi/compat.hpp"
#include "iasi/construct.hpp"
#include "iasi/error.hpp"
#include "iasi/graph.hpp"
#include "iasi/io.hpp"
#include "iasi/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace iasi::cli {

namespace {
    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Error(ErrorCode::invalid_argument, "cannot read '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    auto parse_u64(std::string_view s, const char * what) -> std::uint64_t
    {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw Error(ErrorCode::invalid_argument, std::string("bad ") + what + " '" + std::string(s) + "'");
        return v;
    }

    /// "lo..hi" inclusive, or a single value.
    auto parse_range(const std::string & s, const char * what) -> std::pair<std::uint64_t, std::uint64_t>
    {
        auto dots = s.find("..");
        if (dots == std::string::npos) {
            auto v = parse_u64(s, what);
            return {v, v};
        }
        auto lo = parse_u64(std::string_view(s).substr(0, dots), what);
        auto hi = parse_u64(std::string_view(s).substr(dots + 2), what);
        if (lo > hi)
            throw Error(ErrorCode::invalid_argument, std::string("empty ") + what + " range '" + s + "'");
        return {lo, hi};
    }

    auto parse_csv(const std::string & s, const char * what) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        std::string_view rest = s;
        while (true) {
            auto comma = rest.find(',');
            out.push_back(parse_u64(rest.substr(0, comma), what));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        return out;
    }

    auto exit_code_for(ErrorCode code) -> int
    {
        switch (code) {
            case ErrorCode::not_bipartite:
            case ErrorCode::ratio_bound:
            case ErrorCode::infeasible:
            case ErrorCode::construction_failed:
                return exit_infeasible;
            case ErrorCode::missing_label:
            case ErrorCode::not_arithmetic:
            case ErrorCode::undefined_index:
                return exit_verification_failed;
            default:
                return exit_usage;
        }
    }

    struct Options {
        std::string graph, labeling, out;
        std::string kind, theorem, format = "text";
        std::string sizes = "3", m_range, n_range, k_range = "1";
        std::string set_a, set_b, edge, ratios = "2,3", expect = "iasi";
        std::size_t n = 0, m = 0, r = 0, min_size = 3, max_size = 4;
        std::uint64_t d = 1, k = 2, max_elem = 30;
        std::optional<std::uint64_t> seed;
    };

    auto resolve_seed(const Options & o) -> std::uint64_t
    {
        if (o.seed)
            return *o.seed;
        if (const char * env = std::getenv("IASI_SEED"); env && *env)
            return parse_u64(env, "IASI_SEED");
        return 0;
    }

    auto cmd_gen(const Options & o, std::ostream & out) -> int
    {
        auto kind = parse_graph_kind(o.kind);
        auto g = generate_graph(kind, o.n, o.m);
        out << (parse_output_format(o.format) == OutputFormat::dot ? export_dot(g) : write_edge_list(g));
        return exit_success;
    }

    auto cmd_label(const Options & o, std::ostream & out) -> int
    {
        auto g = parse_edge_list(read_file(o.graph));
        ConstructSpec spec;
        spec.kind = parse_construct_kind(o.kind);
        spec.diff = o.d;
        spec.ratio = o.k;
        spec.edge_size = o.r;
        spec.seed = resolve_seed(o);
        spec.sizes.clear();
        for (auto s : parse_csv(o.sizes, "size"))
            spec.sizes.push_back(s);
        if (spec.kind == ConstructKind::bipartite_uniform_isoarithmetic && o.m && o.n)
            spec.sizes = {o.m, o.n};
        auto labeling = construct(g, spec);
        out << (parse_output_format(o.format) == OutputFormat::dot ? export_dot(g, &labeling)
                : serialize_labeling(labeling));
        return exit_success;
    }

    auto meets(const VerificationReport & r, const std::string & expect) -> bool
    {
        if (expect == "iasi") return r.is_iasi;
        if (expect == "arithmetic") return r.arithmetic;
        if (expect == "isoarithmetic") return r.isoarithmetic;
        if (expect == "biarithmetic") return r.biarithmetic;
        if (expect == "identical-biarithmetic" || expect == "identical_biarithmetic")
            return r.identical_biarithmetic.has_value();
        if (expect == "strong") return r.strong;
        if (expect == "uniform" || expect == "edge-uniform") return r.edge_uniform.has_value();
        throw Error(ErrorCode::invalid_argument, "unknown class '" + expect + "'");
    }

    auto cmd_verify(const Options & o, std::ostream & out) -> int
    {
        auto g = parse_edge_list(read_file(o.graph));
        auto labeling = parse_labeling(read_file(o.labeling));
        auto format = parse_output_format(o.format);
        auto report = verify(g, labeling);
        out << (format == OutputFormat::dot ? export_dot(g, &labeling) : format_report(report, format));
        return meets(report, o.expect) ? exit_success : exit_verification_failed;
    }

    auto cmd_classes(const Options & o, std::ostream & out) -> int
    {
        auto format = parse_output_format(o.format);
        if (! o.labeling.empty()) {
            if (o.edge.empty())
                throw Error(ErrorCode::invalid_argument, "--labeling needs --edge U,V");
            auto ends = parse_csv(o.edge, "edge");
            if (ends.size() != 2)
                throw Error(ErrorCode::invalid_argument, "--edge takes exactly two vertices");
            auto labeling = parse_labeling(read_file(o.labeling));
            if (! o.graph.empty() && ! parse_edge_list(read_file(o.graph)).has_edge(ends[0], ends[1]))
                throw Error(ErrorCode::invalid_argument, "graph has no edge " + o.edge);
            out << format_profile(compat_partition(labeling.label(ends[0]), labeling.label(ends[1])), format);
            return exit_success;
        }
        if (o.set_a.empty() || o.set_b.empty())
            throw Error(ErrorCode::invalid_argument, "give --a and --b, or --labeling with --edge");
        out << format_profile(compat_partition(parse_int_set(o.set_a), parse_int_set(o.set_b)), format);
        return exit_success;
    }

    auto cmd_audit(const Options & o, std::ostream & out) -> int
    {
        auto target = parse_audit_target(o.theorem);
        if (o.m_range.empty() || o.n_range.empty())
            throw Error(ErrorCode::invalid_argument, "audit needs --m and --n ranges");
        auto grid = make_grid(parse_range(o.m_range, "m"), parse_range(o.n_range, "n"), parse_range(o.k_range, "k"));
        out << format_audit(audit(target, grid), parse_output_format(o.format));
        return exit_success;
    }

    auto cmd_search(const Options & o, std::ostream & out) -> int
    {
        auto g = parse_edge_list(read_file(o.graph));
        SearchBound bound;
        bound.max_element = o.max_elem;
        bound.min_size = o.min_size;
        bound.max_size = o.max_size;
        bound.ratios = parse_csv(o.ratios, "ratio");
        auto found = search_identical_biarithmetic(g, bound);
        if (! found) {
            out << "no identical biarithmetic IASI found ("
                << (bipartition(g) ? "within the search bound" : "graph not bipartite") << ")\n";
            return exit_verification_failed;
        }
        if (parse_output_format(o.format) == OutputFormat::dot) {
            out << export_dot(g, &*found);
            return exit_success;
        }
        out << "# identical biarithmetic IASI, k = " << verify_identical_biarithmetic(g, *found).value_or(0) << '\n'
            << serialize_labeling(*found);
        return exit_success;
    }
}

auto run(std::span<const std::string> args, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Construct, verify and audit arithmetic integer additive set-indexers"};
    app.require_subcommand(1);

    auto add_format = [&] (CLI::App * sub, const std::string & choices) {
        sub->add_option("--format", o.format, "Output format: " + choices);
        sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
    };

    auto * gen = app.add_subcommand("gen", "Emit a standard graph as an edge list");
    gen->add_option("--kind", o.kind, "path | cycle | complete | complete_bipartite | star")->required();
    gen->add_option("--n", o.n, "Order (leaf count for star, first side for complete_bipartite)")->required();
    gen->add_option("--m", o.m, "Second side of complete_bipartite");
    add_format(gen, "text | dot");

    auto * label = app.add_subcommand("label", "Construct a labeling for a graph");
    label->add_option("--graph", o.graph, "Edge-list file")->required();
    label->add_option("--kind", o.kind, "Construction kind")->required();
    label->add_option("--d", o.d, "Common difference");
    label->add_option("--sizes", o.sizes, "Label sizes: one value, X,Y side sizes, or one per vertex");
    label->add_option("--k", o.k, "Deterministic ratio for identical_biarithmetic");
    label->add_option("--r", o.r, "Edge set-indexing number for componentwise_uniform");
    label->add_option("--m", o.m, "X-side size for bipartite_uniform_isoarithmetic");
    label->add_option("--n", o.n, "Y-side size for bipartite_uniform_isoarithmetic");
    label->add_option("--seed", o.seed, "Seed for the first-term pool (falls back to IASI_SEED)");
    add_format(label, "text | dot");

    auto * ver = app.add_subcommand("verify", "Classify a labeling of a graph");
    ver->add_option("--graph", o.graph, "Edge-list file")->required();
    ver->add_option("--labeling", o.labeling, "Labeling file")->required();
    ver->add_option("--expect", o.expect,
            "Class that must hold for exit status 0: iasi | arithmetic | isoarithmetic | biarithmetic | "
            "identical-biarithmetic | strong | uniform");
    add_format(ver, "text | structured | dot");

    auto * classes = app.add_subcommand("classes", "Compatibility classes of A x B");
    classes->add_option("--a", o.set_a, "First set, comma separated");
    classes->add_option("--b", o.set_b, "Second set, comma separated");
    classes->add_option("--labeling", o.labeling, "Labeling file (with --edge)");
    classes->add_option("--edge", o.edge, "Edge U,V of the labeling");
    classes->add_option("--graph", o.graph, "Optional edge-list file to check the edge exists");
    add_format(classes, "text | structured");

    auto * aud = app.add_subcommand("audit", "Compare class-count formulas with exhaustive enumeration");
    aud->add_option("--theorem", o.theorem, "t-ncc | t-nsc-ii | t-nmcc-ii[-q0|-qpos] | edge-sin")->required();
    aud->add_option("--m", o.m_range, "Range lo..hi of m")->required();
    aud->add_option("--n", o.n_range, "Range lo..hi of n")->required();
    aud->add_option("--k", o.k_range, "Range lo..hi of k");
    add_format(aud, "text | structured");

    auto * search = app.add_subcommand("search", "Exhaustive search for an identical biarithmetic labeling");
    search->add_option("--graph", o.graph, "Edge-list file")->required();
    search->add_option("--max-elem", o.max_elem, "Largest label element");
    search->add_option("--min-size", o.min_size, "Smallest label size");
    search->add_option("--max-size", o.max_size, "Largest label size");
    search->add_option("--ratios", o.ratios, "Candidate ratios, comma separated");
    add_format(search, "text | dot");

    std::vector<const char *> argv;
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError & e) {
        auto status = app.exit(e, out, err);
        return status == 0 ? exit_success : exit_usage;
    }

    std::ostringstream buffer;
    int status = exit_success;
    try {
        if (gen->parsed()) status = cmd_gen(o, buffer);
        else if (label->parsed()) status = cmd_label(o, buffer);
        else if (ver->parsed()) status = cmd_verify(o, buffer);
        else if (classes->parsed()) status = cmd_classes(o, buffer);
        else if (aud->parsed()) status = cmd_audit(o, buffer);
        else if (search->parsed()) status = cmd_search(o, buffer);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    if (o.out.empty())
        out << buffer.str();
    else {
        std::ofstream file(o.out, std::ios::binary);
        if (! (file << buffer.str())) {
            err << "error: cannot write '" << o.out << "'\n";
            return exit_usage;
        }
    }
    return status;
}

}
