#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace natrob::annotation {

class RangeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CardinalityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class RaggedMatrix : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One rater's answers. Likert values: 1 Disagree, 2 Weakly Disagree,
/// 3 Weakly Agree, 4 Agree.
struct LikertResponse {
    std::string rater_id;
    std::string transformation_id;
    /// "Does the transformation reduce readability?"
    int readability = 1;
    /// "Does it break coding conventions?"
    int convention = 1;
    double completion_seconds = 0.0;
};

enum class Verdict { Natural, Unnatural };

struct RaterVerdict {
    std::string rater_id;
    std::string transformation_id;
    Verdict verdict = Verdict::Natural;
};

/// Unnatural as soon as either answer agrees (3 or 4). Throws RangeError for
/// values outside 1..4.
RaterVerdict rater_verdict(const LikertResponse& response);

/// Ordered from most to least natural.
enum class Label { Natural, LikelyNatural, LikelyUnnatural, Unnatural };

std::string_view to_string(Label label);
std::optional<Label> label_from_string(std::string_view name);

struct NaturalnessLabel {
    std::string transformation_id;
    Label label = Label::Natural;
    int n_natural = 0;
    int n_unnatural = 0;
};

/// Exactly five verdicts from distinct raters on one transformation:
/// 4 or 5 agreeing give Natural/Unnatural, a 3-2 split the Likely* label.
/// Throws CardinalityError otherwise.
NaturalnessLabel aggregate_label(const std::vector<RaterVerdict>& verdicts);

/// Items x categories matrix of rater counts. Every row must sum to the same
/// number (>= 2) of raters, else RaggedMatrix. Returns 1 when every item is
/// unanimous in the same category (chance agreement is then 1 as well).
double fleiss_kappa(const std::vector<std::vector<int>>& counts);

/// Two-rater kappa over paired categorical labels. Throws
/// metrics::LengthMismatch for unequal lengths, std::invalid_argument when
/// empty. 1 when both raters always use one identical category.
double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct TrimResult {
    std::vector<LikertResponse> kept;
    std::size_t dropped = 0;
    /// 99th percentile of completion times, linear interpolation.
    double cutoff = 0.0;
};

/// Drops responses whose completion time is strictly above the 99th
/// percentile. Throws std::invalid_argument on empty input.
TrimResult trim_outlier_times(const std::vector<LikertResponse>& responses);

struct RowError {
    std::size_t line = 0;
    std::string message;
};

struct CsvResult {
    std::vector<LikertResponse> responses;
    /// Rows that failed to parse or were out of range; the rest still load.
    std::vector<RowError> errors;
};

/// Header: rater_id,transformation_id,readability,convention,completion_seconds
/// (any column order). Throws std::invalid_argument when a column is missing.
CsvResult read_responses_csv(std::istream& in);

struct ItemError {
    std::string transformation_id;
    std::string message;
};

struct LabelingResult {
    /// In order of first appearance of each transformation.
    std::vector<NaturalnessLabel> labels;
    std::vector<ItemError> errors;
};

/// Verdicts and labels for every transformation. Items that do not have
/// exactly five distinct raters, or have an out-of-range answer, are reported
/// in `errors` and left unlabeled.
LabelingResult label_all(const std::vector<LikertResponse>& responses);

struct AgreementSummary {
    std::size_t items = 0;
    /// 5 of 5, 4 of 5, 3 of 5.
    std::size_t full = 0;
    std::size_t high = 0;
    std::size_t disagreement = 0;
    std::size_t natural = 0;
    std::size_t likely_natural = 0;
    std::size_t likely_unnatural = 0;
    std::size_t unnatural = 0;
    /// Over the labeled items' natural/unnatural verdict counts; nullopt when
    /// there are no labels.
    std::optional<double> fleiss;
    /// Mean Cohen kappa over rater pairs that share at least two items.
    std::optional<double> mean_pairwise_cohen;
};

AgreementSummary summarize(const std::vector<NaturalnessLabel>& labels, const std::vector<LikertResponse>& responses);

}  // namespace natrob::annotation
