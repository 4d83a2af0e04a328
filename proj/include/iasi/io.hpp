#pragma once

#include "iasi/compat.hpp"
#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/verify.hpp"

#include <string>
#include <string_view>

namespace iasi {

/// "n m" on the first line, then one "u v" line per edge in edge order.
auto write_edge_list(const Graph & g) -> std::string;

/// Inverse of write_edge_list. Blank lines and lines starting with '#' are
/// ignored. Errors carry parse_error and the offending line number.
auto parse_edge_list(std::string_view text) -> Graph;

/// One "v: e1 e2 ..." line per vertex, ascending.
auto serialize_labeling(const Labeling & labeling) -> std::string;

/// Rejects duplicate vertex lines and unsorted or repeated elements.
auto parse_labeling(std::string_view text) -> Labeling;

/// Comma-separated non-negative integers, e.g. "1,3,5".
auto parse_int_set(std::string_view text) -> IntSet;

/// Graphviz text. With a labeling, vertices show their set and edges their
/// sumset plus "|f+|=N".
auto export_dot(const Graph & g, const Labeling * labeling = nullptr) -> std::string;

enum class OutputFormat { text, structured, dot };

auto parse_output_format(std::string_view name) -> OutputFormat;

/// Structured output is line-oriented "key=value"; repeated keys (violation,
/// warning, class, record) list items in order.
auto format_report(const VerificationReport & report, OutputFormat format) -> std::string;
auto format_profile(const ClassProfile & profile, OutputFormat format) -> std::string;
auto format_audit(const AuditReport & report, OutputFormat format) -> std::string;

}
