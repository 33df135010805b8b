#pragma once

#include "natrob/source/source_method.hpp"
#include "natrob/transform/operator.hpp"
#include "natrob/transform/substitution.hpp"

#include <set>
#include <string>
#include <vector>

namespace natrob::transform {

/// Where an operator instance edits the method: an inclusive span of token
/// indices plus an operator-specific discriminator.
struct Site {
    std::size_t first_token = 0;
    std::size_t last_token = 0;
    int start_line = 0;
    int end_line = 0;
    /// Renames: the variable name; otherwise empty.
    std::string detail;
    /// RenameVariable2: the replacement name.
    std::string candidate;

    friend bool operator==(const Site&, const Site&) = default;
};

struct TransformationRecord {
    std::string id;
    std::string bug_id;
    OperatorId op = OperatorId::RenameVariable1;
    Site site;
    std::string original_source;
    std::string transformed_source;
    Status status = Status::DiscardedInapplicable;
    /// Human-readable reason for a discard.
    std::string note;

    Level level() const { return level_of(op); }
};

enum class Unary2AddStyle { Expanded, Compound };

struct EngineOptions {
    Unary2AddStyle unary2add_style = Unary2AddStyle::Expanded;
    std::set<OperatorId> enabled{all_operators().begin(), all_operators().end()};
};

/// Sites where `op` is structurally applicable and touches the buggy region.
/// RenameVariable2 yields one site per provider candidate and nothing without
/// a provider.
std::vector<Site> applicable_sites(OperatorId op, const source::SourceMethod& method,
                                   const SubstitutionProvider* provider = nullptr,
                                   const EngineOptions& options = {});

/// Applies `op` at `site`. Syntactic checks (identifier conflicts, re-parse)
/// decide the record status. Throws std::invalid_argument for a site that
/// applicable_sites would not produce.
TransformationRecord apply(OperatorId op, const source::SourceMethod& method, const Site& site,
                           const SubstitutionProvider* provider = nullptr, const EngineOptions& options = {});

/// Every enabled operator at every site, in operator order then site order.
/// Discarded records are kept.
std::vector<TransformationRecord> apply_all(const source::SourceMethod& method,
                                            const SubstitutionProvider* provider = nullptr,
                                            const EngineOptions& options = {});

}  // namespace natrob::transform
