#pragma once

#include <stdexcept>
#include <string>

namespace medsg {

enum class ErrorCode {
    EmptyGenerators,
    ZeroGenerator,
    GeneratorTooLarge,
    NonCoprime,
    NotInSemigroup,
    ZeroElement,
    NotMed,
    SingleGenerator,
    NotRepresentable,
    KTooSmall,
    NotInClosure,
    RTooLarge,
    TypeZero,
    SearchSpaceTooLarge,
    ParseError,
    InternalDisagreement,
};

const char* error_code_name(ErrorCode code);

/// Domain error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace medsg
