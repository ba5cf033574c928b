#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bes {

enum class ErrorCode {
    NonUniformEdge,
    VertexOutOfRange,
    DuplicateEdge,
    IndexOutOfRange,
    BadT,
    BadArgs,
    ParseError,
    BudgetExhausted,
    NotKFree,
    NotSupporting,
    HypothesisViolated,
    PreconditionViolated,
    CaseAnalysisExhausted,
    NoTwoConfiguration,
    ComponentTooLarge,
    InvariantViolated,
};

std::string_view to_string(ErrorCode code);

/// All failures raised by the library carry a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bes
