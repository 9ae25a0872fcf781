#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

enum class Label { Safe, Unsafe };

/// The studied attack transforms. `None` marks an un-attacked record.
enum class Attack {
    None,
    AIM,
    DAN,
    Combination,
    SelfCipher,
    DeepInception,
    CaesarCipher,
    Zulu,
    Base64,
    DualUse,
    CodeChameleon,
};

inline constexpr Attack kAllAttacks[] = {
    Attack::AIM,        Attack::DAN,          Attack::Combination,
    Attack::SelfCipher, Attack::DeepInception, Attack::CaesarCipher,
    Attack::Zulu,       Attack::Base64,        Attack::DualUse,
    Attack::CodeChameleon,
};

std::string_view to_string(Label label);
std::string_view to_string(Attack attack);
std::optional<Label> label_from_string(std::string_view s);
std::optional<Attack> attack_from_string(std::string_view s);

/// One prompt with its label, attack tag and source provenance. The unit of
/// every corpus.
///
/// Invariants: `text` is non-empty after trimming, `attack == None` whenever
/// `label == Safe`, and `id` is unique within one corpus file.
struct PromptRecord {
    std::string id;
    std::string text;
    Label label = Label::Safe;
    Attack attack = Attack::None;
    std::string source;
};

/// Ordered list of records; iteration order equals file order.
struct Corpus {
    std::vector<PromptRecord> records;
    std::string provenance;

    std::size_t size() const noexcept { return records.size(); }
    bool empty() const noexcept { return records.empty(); }
    auto begin() const noexcept { return records.begin(); }
    auto end() const noexcept { return records.end(); }
};

/// Which record field a split stratifies over.
enum class StratifyBy { Attack, Label, Source };

struct SplitSpec {
    double train_fraction = 0.05;
    double validation_fraction = 0.10;
    double test_fraction = 0.85;
    std::uint64_t seed = 0;
    StratifyBy stratify_by = StratifyBy::Attack;

    /// Fractions must sum to 1 within 1e-9 and each lie in [0, 1].
    bool valid() const noexcept;
};

struct SplitResult {
    Corpus train;
    Corpus validation;
    Corpus test;
};

/// Loads a JSONL corpus: one record per line, schema
/// {"id", "text", "label": "safe"|"unsafe", "attack", "source"} with
/// "attack" defaulting to "none" when absent.
///
/// Throws Error{MalformedLine} with the line number and byte offset of the
/// offending line, Error{DuplicateId}, or Error{EmptyText}.
Corpus load_corpus(const std::filesystem::path& path);

/// Parses JSONL from an in-memory buffer; `provenance` names the origin.
Corpus parse_corpus(std::string_view jsonl, std::string provenance);

/// Writes the corpus in the same JSONL schema. load_corpus(write_corpus(c))
/// reproduces every record field-for-field.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

std::string record_to_json_line(const PromptRecord& record);

/// Deterministic stratified split. Membership is a pure function of the
/// record ids and the spec: records are ordered per stratum by
/// fnv1a64(id, seed) and cut by largest-remainder apportionment, so every
/// stratum contributes to each split proportionally within +/-1 record.
///
/// Throws Error{StratumTooSmall} when a stratum has fewer records than the
/// number of non-zero fractions.
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

}  // namespace dg
