#include "iasi/error.hpp"

namespace iasi {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::overflow: return "overflow";
        case ErrorCode::missing_label: return "missing-label";
        case ErrorCode::not_arithmetic: return "not-arithmetic";
        case ErrorCode::undefined_index: return "undefined-index";
        case ErrorCode::not_bipartite: return "not-bipartite";
        case ErrorCode::ratio_bound: return "ratio-bound";
        case ErrorCode::spec_error: return "spec-error";
        case ErrorCode::infeasible: return "infeasible";
        case ErrorCode::construction_failed: return "construction-failed";
        case ErrorCode::out_of_domain: return "out-of-domain";
        case ErrorCode::size_limit: return "size-limit";
        case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

}
