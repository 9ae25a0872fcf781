#include "dg/language.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dg/errors.hpp"
#include "dg/textnorm.hpp"

namespace dg {

LanguageProfile::LanguageProfile(std::string language, std::vector<double> frequencies)
    : language_(std::move(language)), frequencies_(std::move(frequencies)) {
    if (frequencies_.size() != static_cast<std::size_t>(kLangTrigramSpace))
        throw Error(ErrorCode::BadFileFormat, "profile has wrong trigram space size");
    double sum = 0.0, sq = 0.0;
    for (double f : frequencies_) {
        sum += f;
        sq += f * f;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw Error(ErrorCode::BadFileFormat,
                    "profile \"" + language_ + "\" frequencies sum to " + std::to_string(sum));
    norm_ = std::sqrt(sq);
}

std::vector<std::pair<int, double>> trigram_counts(std::string_view text, double* norm_out) {
    std::string norm = normalize_for_language(text);
    if (norm.size() < 3)
        throw Error(ErrorCode::TextTooShort,
                    "need at least 3 normalized characters for trigram statistics");

    // Sort-and-merge keeps this allocation-light; texts are short.
    std::vector<int> indices;
    indices.reserve(norm.size() - 2);
    for (std::size_t i = 0; i + 3 <= norm.size(); ++i)
        indices.push_back(lang_trigram_index(norm[i], norm[i + 1], norm[i + 2]));
    std::sort(indices.begin(), indices.end());

    std::vector<std::pair<int, double>> counts;
    counts.reserve(indices.size());
    for (std::size_t i = 0; i < indices.size();) {
        std::size_t j = i;
        while (j < indices.size() && indices[j] == indices[i]) ++j;
        counts.emplace_back(indices[i], static_cast<double>(j - i));
        i = j;
    }
    double sq = 0.0;
    for (const auto& [idx, c] : counts) sq += c * c;
    if (norm_out) *norm_out = std::sqrt(sq);
    return counts;
}

LanguageProfile LanguageProfile::from_text(std::string language, std::string_view corpus_text) {
    double norm = 0.0;
    auto counts = trigram_counts(corpus_text, &norm);
    std::vector<double> freqs(kLangTrigramSpace, 0.0);
    double total = 0.0;
    for (const auto& [idx, c] : counts) total += c;
    for (const auto& [idx, c] : counts) freqs[idx] = c / total;
    return LanguageProfile(std::move(language), std::move(freqs));
}

double LanguageProfile::cosine(const std::vector<std::pair<int, double>>& counts,
                               double counts_norm) const noexcept {
    if (counts_norm <= 0.0 || norm_ <= 0.0) return 0.0;
    double dot = 0.0;
    for (const auto& [idx, c] : counts) dot += c * frequencies_[idx];
    return dot / (counts_norm * norm_);
}

double language_score(std::string_view text, const LanguageProfile& profile) {
    double norm = 0.0;
    auto counts = trigram_counts(text, &norm);
    return profile.cosine(counts, norm);
}

LanguageGuess detect_language(std::string_view text,
                              const std::vector<LanguageProfile>& profiles) {
    if (!find_profile(profiles, "en"))
        throw Error(ErrorCode::ConfigInvalid, "profile set must include \"en\"");

    double norm = 0.0;
    auto counts = trigram_counts(text, &norm);

    LanguageGuess best;
    bool first = true;
    for (const auto& profile : profiles) {
        double score = profile.cosine(counts, norm);
        bool wins = first || score > best.score ||
                    (score == best.score && profile.language() < best.language);
        if (wins) {
            best.language = profile.language();
            best.score = score;
            first = false;
        }
    }
    return best;
}

LanguageProfile LanguageProfile::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot open profile " + path.string());

    std::vector<double> freqs(kLangTrigramSpace, 0.0);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        // Layout is fixed: 3 trigram chars, a tab, then the frequency.
        if (line.size() < 5 || line[3] != '\t')
            throw Error(ErrorCode::BadFileFormat,
                        path.string() + ":" + std::to_string(line_no) + ": expected trigram<TAB>frequency");
        for (int i = 0; i < 3; ++i) {
            char c = line[i];
            if (!(c == ' ' || (c >= 'a' && c <= 'z')))
                throw Error(ErrorCode::BadFileFormat,
                            path.string() + ":" + std::to_string(line_no) +
                                ": trigram chars must be a-z or space");
        }
        double freq = 0.0;
        try {
            freq = std::stod(line.substr(4));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadFileFormat,
                        path.string() + ":" + std::to_string(line_no) + ": bad frequency");
        }
        freqs[lang_trigram_index(line[0], line[1], line[2])] = freq;
    }
    return LanguageProfile(path.stem().string(), std::move(freqs));
}

void LanguageProfile::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoFailure, "cannot write profile " + path.string());
    out.precision(17);
    for (int i = 0; i < kLangTrigramSpace; ++i) {
        if (frequencies_[i] <= 0.0) continue;
        char a = lang_index_char(i / (kLangAlphabet * kLangAlphabet));
        char b = lang_index_char((i / kLangAlphabet) % kLangAlphabet);
        char c = lang_index_char(i % kLangAlphabet);
        out << a << b << c << '\t' << frequencies_[i] << '\n';
    }
}

std::vector<LanguageProfile> load_profiles(const std::filesystem::path& dir) {
    std::vector<LanguageProfile> profiles;
    if (!std::filesystem::is_directory(dir))
        throw Error(ErrorCode::IoFailure, "profile directory not found: " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".trigrams")
            profiles.push_back(LanguageProfile::load(entry.path()));
    }
    std::sort(profiles.begin(), profiles.end(),
              [](const LanguageProfile& a, const LanguageProfile& b) {
                  return a.language() < b.language();
              });
    return profiles;
}

const LanguageProfile* find_profile(const std::vector<LanguageProfile>& profiles,
                                    std::string_view language) noexcept {
    for (const auto& p : profiles) {
        if (p.language() == language) return &p;
    }
    return nullptr;
}

}  // namespace dg
