#pragma once

#include "natrob/source/ast.hpp"
#include "natrob/source/token.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace natrob::source {

/// Inclusive line range of the faulty code inside a method.
struct BuggyRegion {
    int start_line = 1;
    int end_line = 1;

    bool contains(int line) const { return line >= start_line && line <= end_line; }
    bool intersects(int first, int last) const { return first <= end_line && last >= start_line; }
    friend bool operator==(const BuggyRegion&, const BuggyRegion&) = default;
};

class RegionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parsed Java method declaration. Immutable and cheap to copy; node
/// addresses stay valid for the lifetime of any copy.
class SourceMethod {
public:
    SourceMethod(std::string id, std::string source, std::vector<Token> tokens, Node tree, BuggyRegion region);

    const std::string& id() const { return state_->id; }
    const std::string& source() const { return state_->source; }
    const std::vector<Token>& tokens() const { return state_->tokens; }
    const Node& tree() const { return state_->tree; }
    const BuggyRegion& buggy_region() const { return state_->region; }

    int first_line() const;
    int last_line() const;

    /// Source text covered by an inclusive token span, original whitespace kept.
    std::string_view text(std::size_t first, std::size_t last) const;
    std::string_view text(const Node& node) const { return text(node.first, node.last); }

    int start_line(const Node& node) const { return tokens()[node.first].line; }
    int end_line(const Node& node) const;
    bool in_region(const Node& node) const;

    /// Enclosing node, or nullptr for the root.
    const Node* parent(const Node& node) const;

    /// Leading whitespace of the line holding `token`.
    std::string indent_at(std::size_t token) const;

    /// Non-comment token texts.
    std::vector<std::string> code_tokens() const;

private:
    struct State {
        std::string id;
        std::string source;
        std::vector<Token> tokens;
        Node tree;
        BuggyRegion region;
        std::unordered_map<const Node*, const Node*> parents;
    };
    std::shared_ptr<const State> state_;
};

struct ParseOptions {
    std::string id;
    /// Line number of the first line of `source` within its file.
    int first_line = 1;
};

/// Parses a single method or constructor declaration. Throws ParseError on
/// invalid syntax and RegionError when `region` falls outside the method.
SourceMethod parse_method(std::string_view source, BuggyRegion region, const ParseOptions& options = {});

/// Parses without attaching a region; used for validity checks.
Node parse_method_tree(const std::vector<Token>& tokens);

/// A method found inside a compilation unit. `text` keeps the method's
/// original columns (any code sharing its first line is blanked out).
struct ExtractedMethod {
    std::string name;
    std::string text;
    int first_line = 1;
    int last_line = 1;
};

/// Splits a Java compilation unit into its method and constructor
/// declarations, including those of nested member types.
std::vector<ExtractedMethod> extract_methods(std::string_view file_source);

/// Text rendering of a method with optional span replacements applied.
class Rewriter {
public:
    explicit Rewriter(const SourceMethod& method) : method_(method) {}

    /// Replaces the text of tokens [first, last] with `text`.
    void replace(std::size_t first, std::size_t last, std::string text);
    void replace(const Node& node, std::string text) { replace(node.first, node.last, std::move(text)); }
    void insert_before(std::size_t token, std::string text);
    void insert_after(std::size_t token, std::string text);

    std::string render() const;

private:
    struct Edit {
        std::size_t begin;
        std::size_t end;
        std::string text;
    };
    void add(Edit edit);

    const SourceMethod& method_;
    std::vector<Edit> edits_;
};

/// Renders the method back to text; re-lexes to the same token stream.
std::string render(const SourceMethod& method);

}  // namespace natrob::source
