#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dg {

/// Character-trigram frequency profile of one language, over the normalized
/// 27-character alphabet (a-z plus space). Frequencies sum to 1.
class LanguageProfile {
public:
    LanguageProfile() = default;
    LanguageProfile(std::string language, std::vector<double> frequencies);

    /// Counts trigrams of the normalized corpus text. Throws
    /// Error{TextTooShort} when fewer than 3 characters remain.
    static LanguageProfile from_text(std::string language, std::string_view corpus_text);

    /// Reads a `<lang>.trigrams` file: UTF-8 lines of `trigram<TAB>frequency`
    /// where the trigram is exactly three normalized characters. Validates
    /// that frequencies sum to 1 within 1e-6.
    static LanguageProfile load(const std::filesystem::path& path);

    void save(const std::filesystem::path& path) const;

    const std::string& language() const noexcept { return language_; }
    const std::vector<double>& frequencies() const noexcept { return frequencies_; }
    double norm() const noexcept { return norm_; }

    /// Cosine similarity between this profile and a raw (unnormalized)
    /// trigram count vector given as (index, count) pairs.
    double cosine(const std::vector<std::pair<int, double>>& counts,
                  double counts_norm) const noexcept;

private:
    std::string language_;
    std::vector<double> frequencies_;  // size 27^3, sums to 1
    double norm_ = 0.0;
};

struct LanguageGuess {
    std::string language;
    double score = 0.0;  // cosine similarity in [0, 1], monotone in profile likeness
};

/// Sparse trigram counts of normalized text, plus the L2 norm of the count
/// vector. Throws Error{TextTooShort} when fewer than 3 normalized chars.
std::vector<std::pair<int, double>> trigram_counts(std::string_view text, double* norm_out);

/// Scores `text` against every profile and returns the best match; ties on
/// score break toward the lexicographically smaller language identifier.
/// Requires a profile named "en" to be present.
LanguageGuess detect_language(std::string_view text, const std::vector<LanguageProfile>& profiles);

/// Cosine similarity of `text` against one profile.
double language_score(std::string_view text, const LanguageProfile& profile);

/// Loads every `*.trigrams` file in a directory, sorted by language id.
std::vector<LanguageProfile> load_profiles(const std::filesystem::path& dir);

const LanguageProfile* find_profile(const std::vector<LanguageProfile>& profiles,
                                    std::string_view language) noexcept;

}  // namespace dg
