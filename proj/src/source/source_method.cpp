#include "natrob/source/source_method.hpp"

#include <algorithm>
#include <stdexcept>

namespace natrob::source {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::None: return "None";
    case NodeKind::Method: return "Method";
    case NodeKind::ParamList: return "ParamList";
    case NodeKind::Parameter: return "Parameter";
    case NodeKind::TypeRef: return "TypeRef";
    case NodeKind::ClassBody: return "ClassBody";
    case NodeKind::ClassDecl: return "ClassDecl";
    case NodeKind::FieldDecl: return "FieldDecl";
    case NodeKind::Initializer: return "Initializer";
    case NodeKind::Block: return "Block";
    case NodeKind::LocalVarDecl: return "LocalVarDecl";
    case NodeKind::Declarator: return "Declarator";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::If: return "If";
    case NodeKind::For: return "For";
    case NodeKind::ForInit: return "ForInit";
    case NodeKind::ForUpdate: return "ForUpdate";
    case NodeKind::ForEach: return "ForEach";
    case NodeKind::While: return "While";
    case NodeKind::Do: return "Do";
    case NodeKind::Switch: return "Switch";
    case NodeKind::SwitchGroup: return "SwitchGroup";
    case NodeKind::CaseLabels: return "CaseLabels";
    case NodeKind::Return: return "Return";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::Throw: return "Throw";
    case NodeKind::Try: return "Try";
    case NodeKind::Resources: return "Resources";
    case NodeKind::Catch: return "Catch";
    case NodeKind::Synchronized: return "Synchronized";
    case NodeKind::Labeled: return "Labeled";
    case NodeKind::Empty: return "Empty";
    case NodeKind::Assert: return "Assert";
    case NodeKind::Yield: return "Yield";
    case NodeKind::LocalClass: return "LocalClass";
    case NodeKind::Name: return "Name";
    case NodeKind::Literal: return "Literal";
    case NodeKind::FieldAccess: return "FieldAccess";
    case NodeKind::MethodCall: return "MethodCall";
    case NodeKind::Arguments: return "Arguments";
    case NodeKind::ArrayAccess: return "ArrayAccess";
    case NodeKind::New: return "New";
    case NodeKind::NewArray: return "NewArray";
    case NodeKind::ArrayInit: return "ArrayInit";
    case NodeKind::Paren: return "Paren";
    case NodeKind::This: return "This";
    case NodeKind::Super: return "Super";
    case NodeKind::ClassLit: return "ClassLit";
    case NodeKind::Cast: return "Cast";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Postfix: return "Postfix";
    case NodeKind::Binary: return "Binary";
    case NodeKind::InstanceOf: return "InstanceOf";
    case NodeKind::Conditional: return "Conditional";
    case NodeKind::Assign: return "Assign";
    case NodeKind::Lambda: return "Lambda";
    case NodeKind::MethodRef: return "MethodRef";
    case NodeKind::SwitchExpr: return "SwitchExpr";
    }
    return "?";
}

bool is_statement(NodeKind kind) {
    switch (kind) {
    case NodeKind::Block:
    case NodeKind::LocalVarDecl:
    case NodeKind::ExprStmt:
    case NodeKind::If:
    case NodeKind::For:
    case NodeKind::ForEach:
    case NodeKind::While:
    case NodeKind::Do:
    case NodeKind::Switch:
    case NodeKind::Return:
    case NodeKind::Break:
    case NodeKind::Continue:
    case NodeKind::Throw:
    case NodeKind::Try:
    case NodeKind::Synchronized:
    case NodeKind::Labeled:
    case NodeKind::Empty:
    case NodeKind::Assert:
    case NodeKind::Yield:
    case NodeKind::LocalClass:
        return true;
    default:
        return false;
    }
}

bool is_expression(NodeKind kind) {
    switch (kind) {
    case NodeKind::Name:
    case NodeKind::Literal:
    case NodeKind::FieldAccess:
    case NodeKind::MethodCall:
    case NodeKind::ArrayAccess:
    case NodeKind::New:
    case NodeKind::NewArray:
    case NodeKind::ArrayInit:
    case NodeKind::Paren:
    case NodeKind::This:
    case NodeKind::Super:
    case NodeKind::ClassLit:
    case NodeKind::Cast:
    case NodeKind::Unary:
    case NodeKind::Postfix:
    case NodeKind::Binary:
    case NodeKind::InstanceOf:
    case NodeKind::Conditional:
    case NodeKind::Assign:
    case NodeKind::Lambda:
    case NodeKind::MethodRef:
    case NodeKind::SwitchExpr:
        return true;
    default:
        return false;
    }
}

void walk(const Node& root, const std::function<bool(const Node&)>& visit) {
    if (!visit(root))
        return;
    for (const auto& c : root.children)
        walk(c, visit);
}

namespace {

void index_parents(const Node& node, std::unordered_map<const Node*, const Node*>& parents) {
    for (const auto& c : node.children) {
        parents.emplace(&c, &node);
        index_parents(c, parents);
    }
}

}  // namespace

SourceMethod::SourceMethod(std::string id, std::string source, std::vector<Token> tokens, Node tree,
                           BuggyRegion region) {
    auto state = std::make_shared<State>();
    state->id = std::move(id);
    state->source = std::move(source);
    state->tokens = std::move(tokens);
    state->tree = std::move(tree);
    state->region = region;
    index_parents(state->tree, state->parents);
    state_ = std::move(state);
}

int SourceMethod::first_line() const { return tokens()[tree().first].line; }

int SourceMethod::last_line() const { return end_line(tree()); }

std::string_view SourceMethod::text(std::size_t first, std::size_t last) const {
    if (first == Node::npos || last == Node::npos)
        return {};
    const auto& toks = tokens();
    const std::size_t begin = toks[first].offset;
    return std::string_view(source()).substr(begin, toks[last].end_offset() - begin);
}

int SourceMethod::end_line(const Node& node) const {
    const Token& t = tokens()[node.last];
    return t.line + static_cast<int>(std::count(t.text.begin(), t.text.end(), '\n'));
}

bool SourceMethod::in_region(const Node& node) const {
    if (node.first == Node::npos)
        return false;
    return buggy_region().intersects(start_line(node), end_line(node));
}

const Node* SourceMethod::parent(const Node& node) const {
    auto it = state_->parents.find(&node);
    return it == state_->parents.end() ? nullptr : it->second;
}

std::string SourceMethod::indent_at(std::size_t token) const {
    const auto& src = source();
    const std::size_t off = tokens()[token].offset;
    std::size_t begin = src.rfind('\n', off == 0 ? 0 : off - 1);
    begin = (begin == std::string::npos || off == 0) ? 0 : begin + 1;
    std::size_t end = begin;
    while (end < src.size() && (src[end] == ' ' || src[end] == '\t'))
        ++end;
    return src.substr(begin, end - begin);
}

std::vector<std::string> SourceMethod::code_tokens() const {
    std::vector<std::string> out;
    for (const auto& t : tokens())
        if (t.is_code())
            out.push_back(t.text);
    return out;
}

void Rewriter::add(Edit edit) {
    for (const auto& e : edits_) {
        const bool disjoint = edit.end <= e.begin || edit.begin >= e.end;
        const bool same_point_insert = edit.begin == edit.end && e.begin == e.end && edit.begin == e.begin;
        if (!disjoint && !same_point_insert)
            throw std::logic_error("overlapping rewrite edits");
    }
    edits_.push_back(std::move(edit));
}

void Rewriter::replace(std::size_t first, std::size_t last, std::string text) {
    const auto& toks = method_.tokens();
    add(Edit{toks[first].offset, toks[last].end_offset(), std::move(text)});
}

void Rewriter::insert_before(std::size_t token, std::string text) {
    const std::size_t at = method_.tokens()[token].offset;
    add(Edit{at, at, std::move(text)});
}

void Rewriter::insert_after(std::size_t token, std::string text) {
    const std::size_t at = method_.tokens()[token].end_offset();
    add(Edit{at, at, std::move(text)});
}

std::string Rewriter::render() const {
    std::vector<const Edit*> order;
    for (const auto& e : edits_)
        order.push_back(&e);
    std::stable_sort(order.begin(), order.end(), [](const Edit* a, const Edit* b) { return a->begin < b->begin; });
    const std::string& src = method_.source();
    std::string out;
    out.reserve(src.size());
    std::size_t pos = 0;
    for (const Edit* e : order) {
        out.append(src, pos, e->begin - pos);
        out += e->text;
        pos = e->end;
    }
    out.append(src, pos, std::string::npos);
    return out;
}

std::string render(const SourceMethod& method) { return Rewriter(method).render(); }

}  // namespace natrob::source
