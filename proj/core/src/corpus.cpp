#include "dg/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "dg/errors.hpp"
#include "dg/hash.hpp"
#include "dg/textnorm.hpp"

namespace dg {

using nlohmann::json;

std::string_view to_string(Label label) {
    return label == Label::Safe ? "safe" : "unsafe";
}

std::string_view to_string(Attack attack) {
    switch (attack) {
        case Attack::None: return "none";
        case Attack::AIM: return "aim";
        case Attack::DAN: return "dan";
        case Attack::Combination: return "combination";
        case Attack::SelfCipher: return "self_cipher";
        case Attack::DeepInception: return "deep_inception";
        case Attack::CaesarCipher: return "caesar_cipher";
        case Attack::Zulu: return "zulu";
        case Attack::Base64: return "base64";
        case Attack::DualUse: return "dual_use";
        case Attack::CodeChameleon: return "code_chameleon";
    }
    return "none";
}

std::optional<Label> label_from_string(std::string_view s) {
    if (s == "safe") return Label::Safe;
    if (s == "unsafe") return Label::Unsafe;
    return std::nullopt;
}

std::optional<Attack> attack_from_string(std::string_view s) {
    if (s == "none") return Attack::None;
    for (Attack a : kAllAttacks) {
        if (to_string(a) == s) return a;
    }
    return std::nullopt;
}

bool SplitSpec::valid() const noexcept {
    auto in_unit = [](double f) { return f >= 0.0 && f <= 1.0; };
    if (!in_unit(train_fraction) || !in_unit(validation_fraction) || !in_unit(test_fraction))
        return false;
    return std::abs(train_fraction + validation_fraction + test_fraction - 1.0) <= 1e-9;
}

namespace {

PromptRecord record_from_json(const json& j, std::size_t line_no, std::size_t byte_offset) {
    auto malformed = [&](const std::string& why) {
        return Error(ErrorCode::MalformedLine,
                     "line " + std::to_string(line_no) + " (byte offset " +
                         std::to_string(byte_offset) + "): " + why,
                     /*detail=*/why, static_cast<std::int64_t>(line_no));
    };

    if (!j.is_object()) throw malformed("record is not a JSON object");
    for (const char* field : {"id", "text", "label", "source"}) {
        if (!j.contains(field) || !j.at(field).is_string())
            throw malformed(std::string("missing or non-string field \"") + field + "\"");
    }

    PromptRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.text = j.at("text").get<std::string>();
    rec.source = j.at("source").get<std::string>();

    auto label = label_from_string(j.at("label").get<std::string>());
    if (!label) throw malformed("label must be \"safe\" or \"unsafe\"");
    rec.label = *label;

    rec.attack = Attack::None;
    if (j.contains("attack")) {
        if (!j.at("attack").is_string()) throw malformed("attack must be a string");
        auto attack = attack_from_string(j.at("attack").get<std::string>());
        if (!attack) throw malformed("unknown attack \"" + j.at("attack").get<std::string>() + "\"");
        rec.attack = *attack;
    }

    if (rec.label == Label::Safe && rec.attack != Attack::None)
        throw malformed("safe records must carry attack \"none\"");
    return rec;
}

}  // namespace

Corpus parse_corpus(std::string_view jsonl, std::string provenance) {
    Corpus corpus;
    corpus.provenance = std::move(provenance);
    std::unordered_set<std::string_view> seen_ids;

    std::size_t line_no = 0;
    std::size_t offset = 0;
    while (offset <= jsonl.size()) {
        std::size_t eol = jsonl.find('\n', offset);
        std::string_view line = jsonl.substr(
            offset, eol == std::string_view::npos ? std::string_view::npos : eol - offset);
        ++line_no;
        std::size_t line_offset = offset;
        offset = (eol == std::string_view::npos) ? jsonl.size() + 1 : eol + 1;

        if (trim(line).empty()) {
            if (eol == std::string_view::npos) break;
            continue;
        }

        json j = json::parse(line, /*cb=*/nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded())
            throw Error(ErrorCode::MalformedLine,
                        "line " + std::to_string(line_no) + " (byte offset " +
                            std::to_string(line_offset) + "): invalid JSON",
                        "invalid JSON", static_cast<std::int64_t>(line_no));

        PromptRecord rec = record_from_json(j, line_no, line_offset);
        if (trim(rec.text).empty())
            throw Error(ErrorCode::EmptyText, "record \"" + rec.id + "\" has empty text", rec.id);

        corpus.records.push_back(std::move(rec));
        if (!seen_ids.insert(corpus.records.back().id).second)
            throw Error(ErrorCode::DuplicateId,
                        "duplicate record id \"" + corpus.records.back().id + "\"",
                        corpus.records.back().id, static_cast<std::int64_t>(line_no));

        if (eol == std::string_view::npos) break;
    }
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open corpus file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str(), path.string());
}

std::string record_to_json_line(const PromptRecord& record) {
    json j;
    j["id"] = record.id;
    j["text"] = record.text;
    j["label"] = std::string(to_string(record.label));
    j["attack"] = std::string(to_string(record.attack));
    j["source"] = record.source;
    return j.dump();
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write corpus file " + path.string());
    for (const auto& rec : corpus.records) out << record_to_json_line(rec) << '\n';
    if (!out) throw Error(ErrorCode::IoFailure, "write failed for " + path.string());
}

namespace {

std::string stratum_key(const PromptRecord& rec, StratifyBy by) {
    switch (by) {
        case StratifyBy::Attack: return std::string(to_string(rec.attack));
        case StratifyBy::Label: return std::string(to_string(rec.label));
        case StratifyBy::Source: return rec.source;
    }
    return {};
}

/// Largest-remainder apportionment of `n` records over the three fractions.
/// Ties on the fractional part go to the earlier split, so 18,790 records at
/// (0.05, 0.10, 0.85) place 940 in train.
std::array<std::size_t, 3> apportion(std::size_t n, const SplitSpec& spec) {
    const double fracs[3] = {spec.train_fraction, spec.validation_fraction, spec.test_fraction};
    std::array<std::size_t, 3> counts{};
    double remainders[3];
    std::size_t assigned = 0;
    for (int i = 0; i < 3; ++i) {
        double quota = fracs[i] * static_cast<double>(n);
        counts[i] = static_cast<std::size_t>(std::floor(quota + 1e-12));
        remainders[i] = quota - static_cast<double>(counts[i]);
        assigned += counts[i];
    }
    while (assigned < n) {
        int best = 0;
        for (int i = 1; i < 3; ++i) {
            if (remainders[i] > remainders[best] + 1e-12) best = i;
        }
        ++counts[best];
        remainders[best] = -1.0;
        ++assigned;
    }
    return counts;
}

}  // namespace

SplitResult split(const Corpus& corpus, const SplitSpec& spec) {
    if (corpus.empty()) throw Error(ErrorCode::EmptyInput, "cannot split an empty corpus");
    if (!spec.valid()) throw Error(ErrorCode::ConfigInvalid, "split fractions must sum to 1");

    int nonzero_splits = (spec.train_fraction > 0) + (spec.validation_fraction > 0) +
                         (spec.test_fraction > 0);

    // std::map keeps stratum iteration order independent of input order.
    std::map<std::string, std::vector<std::size_t>> strata;
    for (std::size_t i = 0; i < corpus.records.size(); ++i)
        strata[stratum_key(corpus.records[i], spec.stratify_by)].push_back(i);

    SplitResult result;
    result.train.provenance = corpus.provenance + " [train]";
    result.validation.provenance = corpus.provenance + " [validation]";
    result.test.provenance = corpus.provenance + " [test]";

    std::vector<int> assignment(corpus.records.size(), 2);
    for (auto& [key, indices] : strata) {
        if (indices.size() < static_cast<std::size_t>(nonzero_splits))
            throw Error(ErrorCode::StratumTooSmall,
                        "stratum \"" + key + "\" has " + std::to_string(indices.size()) +
                            " records but " + std::to_string(nonzero_splits) +
                            " non-empty splits were requested",
                        key, static_cast<std::int64_t>(indices.size()));

        // Priority depends only on (seed, id): reordering or appending other
        // records never changes where an id lands.
        std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
            std::uint64_t ha = fnv1a64(corpus.records[a].id, fnv1a64_u64(spec.seed));
            std::uint64_t hb = fnv1a64(corpus.records[b].id, fnv1a64_u64(spec.seed));
            if (ha != hb) return ha < hb;
            return corpus.records[a].id < corpus.records[b].id;
        });

        auto counts = apportion(indices.size(), spec);
        std::size_t pos = 0;
        for (int s = 0; s < 3; ++s) {
            for (std::size_t k = 0; k < counts[s]; ++k) assignment[indices[pos++]] = s;
        }
    }

    // Emit in original corpus order so split corpora stay stable lists.
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        switch (assignment[i]) {
            case 0: result.train.records.push_back(corpus.records[i]); break;
            case 1: result.validation.records.push_back(corpus.records[i]); break;
            default: result.test.records.push_back(corpus.records[i]); break;
        }
    }
    return result;
}

}  // namespace dg
