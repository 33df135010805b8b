#pragma once

#include "natrob/annotation/annotation.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace natrob::robustness {

class MissingLabels : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroOrigin : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class PatchQuality { Wrong = 0, Plausible = 1, Correct = 2 };

std::string_view to_string(PatchQuality q);
/// Accepts the names or "0", "1", "2".
std::optional<PatchQuality> quality_from_string(std::string_view s);

enum class Change { Positive, Negative, NoChange };

std::string_view to_string(Change c);

Change classify_change(PatchQuality original, PatchQuality transformed);

struct Variant {
    std::string transformation_id;
    PatchQuality quality = PatchQuality::Wrong;
    std::optional<annotation::Label> label;
};

struct BugEvaluation {
    std::string tool;
    std::string bug_id;
    PatchQuality original_quality = PatchQuality::Wrong;
    std::vector<Variant> variants;
};

enum class Filter { AllTransforms, NaturalOnly };

std::string_view to_string(Filter f);

struct ChangeSets {
    std::set<std::string> positive;
    std::set<std::string> negative;

    /// |positive ∪ negative|
    std::size_t changed() const;
};

/// Variants that survive `filter`. NaturalOnly keeps Natural-labeled variants
/// and throws MissingLabels when any variant is unlabeled.
std::vector<Variant> kept_variants(const BugEvaluation& bug, Filter filter);

/// Throws std::invalid_argument on duplicate transformation ids within a bug.
ChangeSets per_bug_change_sets(const std::vector<BugEvaluation>& evals, Filter filter);

struct Rates {
    double plausible_origin = 0.0;
    double correct_origin = 0.0;
    /// nullopt when no bug has a kept variant.
    std::optional<double> plausible_transformed;
    std::optional<double> correct_transformed;
    /// All bugs; the origin denominator.
    std::size_t bugs = 0;
    /// Bugs with at least one kept variant; the transformed denominator.
    std::size_t transformed_denominator = 0;
    /// Bugs excluded from the transformed rates for having no kept variant.
    std::vector<std::string> no_variants;
};

/// Plausible counts Plausible or Correct. Each bug contributes the fraction of
/// its kept variants meeting the bar to the transformed rate. Throws
/// std::invalid_argument when `evals` is empty.
Rates rates(const std::vector<BugEvaluation>& evals, Filter filter);

/// (transformed - origin) / origin. Throws ZeroOrigin when origin <= 0.
double performance_change(double origin_rate, double transformed_rate);

struct RobustnessReport {
    std::string tool;
    Filter filter = Filter::AllTransforms;
    std::size_t bugs_positive = 0;
    std::size_t bugs_negative = 0;
    std::size_t bugs_changed = 0;
    Rates rates;
    std::optional<double> plausible_change;
    std::optional<double> correct_change;
};

/// One report per tool, tools in sorted order.
std::vector<RobustnessReport> reports(const std::vector<BugEvaluation>& evals, Filter filter);

/// Rounded to one decimal with a % sign, e.g. "-2.7%".
std::string percent(double fraction);

/// Fixed-width table: counts with their share of bugs, then rates and
/// changes.
std::string format_table(const std::vector<RobustnessReport>& reports);

}  // namespace natrob::robustness
