#pragma once

#include "natrob/lm/ngram_model.hpp"
#include "natrob/transform/engine.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace natrob::metrics {

/// Bridge failure: the external LM could not be reached or answered badly.
class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyTokens : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LmBackend {
    enum class Kind { Ngram, External };
    Kind kind = Kind::Ngram;
    /// Model path for Ngram; "tcp://host:port" or a shell command for External.
    std::string location;

    static LmBackend ngram(std::string model_path) { return {Kind::Ngram, std::move(model_path)}; }
    static LmBackend external(std::string endpoint) { return {Kind::External, std::move(endpoint)}; }
};

/// Loads the n-gram model or connects to the bridge. Throws BackendError when
/// the bridge cannot be started; model loading errors propagate as-is.
std::unique_ptr<lm::TokenScorer> open_backend(const LmBackend& backend);

struct NaturalnessScore {
    std::string transformation_id;
    double ce_original = 0.0;
    double ce_transformed = 0.0;
    double rnc = 0.0;
    double anc = 0.0;
    std::optional<double> p_unnatural;
};

/// CE of the whole original and transformed methods, relative and absolute
/// change. Throws std::invalid_argument for a non-Valid record, EmptyTokens
/// when either side has no code tokens, BackendError when the original scores
/// a non-positive CE (nothing to divide by).
NaturalnessScore score(const lm::TokenScorer& scorer, const transform::TransformationRecord& record,
                       lm::LogBase base = lm::LogBase::Two);

/// Scores every Valid record, preserving input order; other records are
/// skipped. Uses up to `jobs` threads; the first error is rethrown.
std::vector<NaturalnessScore> score_all(const lm::TokenScorer& scorer,
                                        const std::vector<transform::TransformationRecord>& records,
                                        unsigned jobs = 1, lm::LogBase base = lm::LogBase::Two);

enum class NormalizeField { Rnc, CeTransformed };

struct Range {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizeReport {
    Range range;
    /// max == min: every p_unnatural is 0.5.
    bool degenerate = false;
};

/// Min-max maps `field` into p_unnatural. The range comes from the scores
/// themselves unless `fixed` is given, in which case results are clamped to
/// [0, 1].
NormalizeReport normalize(std::vector<NaturalnessScore>& scores, NormalizeField field,
                          const std::optional<Range>& fixed = std::nullopt);

}  // namespace natrob::metrics
