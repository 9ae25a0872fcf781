#include "dg/errors.hpp"

namespace dg {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedLine: return "malformed_line";
        case ErrorCode::DuplicateId: return "duplicate_id";
        case ErrorCode::EmptyText: return "empty_text";
        case ErrorCode::StratumTooSmall: return "stratum_too_small";
        case ErrorCode::TextTooShort: return "text_too_short";
        case ErrorCode::TranslatorUnavailable: return "translator_unavailable";
        case ErrorCode::UnsupportedPair: return "unsupported_pair";
        case ErrorCode::PlaceholderMissing: return "placeholder_missing";
        case ErrorCode::EmptyResponse: return "empty_response";
        case ErrorCode::EmptyPrompt: return "empty_prompt";
        case ErrorCode::NotTrained: return "not_trained";
        case ErrorCode::Unreachable: return "unreachable";
        case ErrorCode::Timeout: return "timeout";
        case ErrorCode::MalformedResponse: return "malformed_response";
        case ErrorCode::ShapeMismatch: return "shape_mismatch";
        case ErrorCode::Diverged: return "diverged";
        case ErrorCode::AdapterBaseMismatch: return "adapter_base_mismatch";
        case ErrorCode::EmptyInput: return "empty_input";
        case ErrorCode::BindFailure: return "bind_failure";
        case ErrorCode::ConfigInvalid: return "config_invalid";
        case ErrorCode::IoFailure: return "io_failure";
        case ErrorCode::BadFileFormat: return "bad_file_format";
    }
    return "unknown";
}

}  // namespace dg
