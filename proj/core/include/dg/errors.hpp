#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dg {

enum class ErrorCode {
    // corpus
    MalformedLine,
    DuplicateId,
    EmptyText,
    StratumTooSmall,
    // decipher
    TextTooShort,
    TranslatorUnavailable,
    UnsupportedPair,
    // attack
    PlaceholderMissing,
    // classify
    EmptyResponse,
    EmptyPrompt,
    NotTrained,
    Unreachable,
    Timeout,
    MalformedResponse,
    // lowrank
    ShapeMismatch,
    Diverged,
    AdapterBaseMismatch,
    // eval
    EmptyInput,
    // gateway / io
    BindFailure,
    ConfigInvalid,
    IoFailure,
    BadFileFormat,
};

const char* to_string(ErrorCode code);

/// Single exception type for all library errors. `code` identifies the
/// failure class, `detail` carries the offending id / line / stratum when
/// one exists.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string detail = {},
          std::int64_t detail_num = -1)
        : std::runtime_error(std::move(message)),
          code_(code),
          detail_(std::move(detail)),
          detail_num_(detail_num) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    std::int64_t detail_num() const noexcept { return detail_num_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::int64_t detail_num_;
};

}  // namespace dg
