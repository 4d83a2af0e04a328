#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iasi {

enum class ErrorCode {
    invalid_argument,
    overflow,
    missing_label,
    not_arithmetic,
    undefined_index,
    not_bipartite,
    ratio_bound,
    spec_error,
    infeasible,
    construction_failed,
    out_of_domain,
    size_limit,
    parse_error,
};

auto to_string(ErrorCode code) -> std::string_view;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

}
