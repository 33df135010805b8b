#pragma once

#include "natrob/source/source_method.hpp"
#include "natrob/transform/engine.hpp"

#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace natrob::transform::detail {

using source::Node;
using source::NodeKind;
using source::SourceMethod;

/// A local variable, parameter, or member of a local/anonymous class,
/// resolved by lexical scope.
struct Variable {
    std::string name;
    const Node* decl = nullptr;
    /// Declared type including dims; empty when inferred (lambda params, `var`).
    std::string type;
    bool is_member = false;
    /// Token indices of the declaration name and every resolved use.
    std::vector<std::size_t> occurrences;
};

class Analysis {
public:
    explicit Analysis(const SourceMethod& method);

    const SourceMethod& method() const { return method_; }
    const std::vector<Variable>& variables() const { return variables_; }
    /// Variable bound at an identifier token, or nullptr.
    const Variable* variable_at(std::size_t token) const;
    const Variable* variable_of(const Node& name_expr) const;
    bool identifier_used(std::string_view name) const { return identifiers_.count(std::string(name)) > 0; }
    /// "temp", then "temp1", "temp2"... skipping names already in the method.
    std::string fresh_name(const std::string& base) const;

    /// Indentation step used by the method (falls back to four spaces).
    const std::string& indent_unit() const { return indent_unit_; }

private:
    const SourceMethod& method_;
    std::vector<Variable> variables_;
    std::unordered_map<std::size_t, std::size_t> token_to_var_;
    std::set<std::string> identifiers_;
    std::string indent_unit_;
};

struct Candidate {
    Site site;
    const Node* node = nullptr;
    const Node* other = nullptr;
    const Variable* var = nullptr;
};

struct Outcome {
    Status status = Status::Valid;
    std::string text;
    std::string note;

    static Outcome inapplicable(std::string why) { return {Status::DiscardedInapplicable, {}, std::move(why)}; }
    static Outcome conflict(std::string why) { return {Status::DiscardedConflict, {}, std::move(why)}; }
};

struct Context {
    const SubstitutionProvider* provider = nullptr;
    const EngineOptions* options = nullptr;
};

// ---- tree queries ------------------------------------------------------

Site site_of(const SourceMethod& m, std::size_t first, std::size_t last);
Site site_of(const SourceMethod& m, const Node& node);

/// True when any node of `kind` occurs under `root` (root included).
bool contains_kind(const Node& root, NodeKind kind);
bool contains_kind(const Node& root, std::initializer_list<NodeKind> kinds);

/// Side-effect-free operand: identifiers, literals, field reads and
/// parenthesized/operator compositions of those. No calls, assignments,
/// increments or array reads.
bool is_pure(const Node& expr);

/// Unlabeled `break` that would bind to the enclosing switch/loop of `root`.
bool contains_unnested_break(const Node& root);

/// Parent is a statement list (block, switch group, or method body).
bool in_statement_list(const SourceMethod& m, const Node& stmt);

/// Statement siblings of `stmt` inside its list, or empty.
const std::vector<Node>* sibling_list(const SourceMethod& m, const Node& stmt);

int precedence_of(const Node& expr);

/// Text of `expr`, parenthesized when its precedence is below `min_prec`.
std::string operand_text(const SourceMethod& m, const Node& expr, int min_prec);

/// Single statement inside a branch: the statement itself, or the only
/// statement of a one-statement block.
const Node* single_statement(const Node& branch);

// ---- text helpers ------------------------------------------------------

/// Inserts `extra` after every newline.
std::string shift(std::string_view text, const std::string& extra);

/// Removes up to `unit` of leading whitespace from every line but the first.
std::string dedent(std::string_view text, const std::string& unit);

/// Replacement text for `stmt` when it becomes several statements: joined on
/// separate lines in a statement list, wrapped in braces elsewhere.
std::string statement_sequence(const Analysis& a, const Node& stmt, const std::vector<std::string>& parts);

/// `branch` as a braced block, re-indented for `indent`.
std::string as_block(const Analysis& a, const Node& branch, const std::string& indent);

}  // namespace natrob::transform::detail
