#include "operators.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace natrob::transform::detail {

namespace {

bool is_relational(const std::string& op) { return op == "<" || op == ">" || op == "<=" || op == ">="; }

std::string mirror(const std::string& op) {
    if (op == "<") return ">";
    if (op == ">") return "<";
    if (op == "<=") return ">=";
    if (op == ">=") return "<=";
    return op;
}

Candidate node_candidate(const SourceMethod& m, const Node& n) {
    Candidate c;
    c.site = site_of(m, n);
    c.node = &n;
    return c;
}

std::vector<Candidate> find_binary(const Analysis& a, const std::function<bool(const std::string&)>& accept) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::Binary}))
        if (accept(n->op) && is_pure(n->child(0)) && is_pure(n->child(1)))
            out.push_back(node_candidate(a.method(), *n));
    return out;
}

Outcome swap_operands(const Analysis& a, const Node& n, const std::string& new_op) {
    const SourceMethod& m = a.method();
    const int prec = precedence_of(n);
    // Left-associative: the new left operand may sit at the same level, the
    // new right operand must bind tighter.
    std::string text = operand_text(m, n.child(1), prec) + " " + new_op + " " + operand_text(m, n.child(0), prec + 1);
    return {Status::Valid, replace_and_render(m, n.first, n.last, std::move(text)), {}};
}

/// Assignable target whose repeated evaluation is harmless.
bool is_simple_lvalue(const Node& e) {
    switch (e.kind) {
    case NodeKind::Name:
        return true;
    case NodeKind::FieldAccess:
        return e.child(0).kind == NodeKind::Super || is_pure(e.child(0));
    case NodeKind::ArrayAccess:
        return is_pure(e.child(0)) && is_pure(e.child(1));
    case NodeKind::Paren:
        return is_simple_lvalue(e.child(0));
    default:
        return false;
    }
}

bool narrow_type(const Analysis& a, const Node& lhs) {
    const Variable* v = a.variable_of(lhs);
    if (v == nullptr)
        return false;
    static const char* narrow[] = {"byte", "short", "char", "Byte", "Short", "Character"};
    return std::find(std::begin(narrow), std::end(narrow), v->type) != std::end(narrow);
}

std::vector<Candidate> find_expr_statements(const Analysis& a, const std::function<bool(const Node&)>& accept) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::ExprStmt}))
        if (accept(n->child(0)))
            out.push_back(node_candidate(a.method(), *n));
    return out;
}

// ---- InfixDividing helpers ---------------------------------------------

bool is_arithmetic(const std::string& op) { return op == "+" || op == "-" || op == "*" || op == "/" || op == "%"; }

bool is_comparison(const std::string& op) {
    return op == "==" || op == "!=" || op == "<" || op == ">" || op == "<=" || op == ">=";
}

bool is_extractable_op(const std::string& op) { return is_arithmetic(op) || is_comparison(op) || op == "&&" || op == "||"; }

bool is_numeric(const std::string& type) {
    return type == "int" || type == "long" || type == "float" || type == "double";
}

bool is_leaf(const Node& e) { return e.kind == NodeKind::Name || e.kind == NodeKind::Literal; }

/// Primitive type of a numeric literal, or empty.
std::string literal_type(const std::string& lit) {
    if (lit == "true" || lit == "false")
        return "boolean";
    if (lit.empty() || !(std::isdigit(static_cast<unsigned char>(lit[0])) || lit[0] == '.'))
        return {};
    const char last = static_cast<char>(std::tolower(static_cast<unsigned char>(lit.back())));
    const bool hex = lit.size() > 1 && lit[0] == '0' && (lit[1] == 'x' || lit[1] == 'X');
    if (last == 'l')
        return "long";
    if (last == 'f' && !hex)
        return "float";
    if (last == 'd' && !hex)
        return "double";
    if (hex)
        return lit.find_first_of("pP") != std::string::npos ? "double" : "int";
    if (lit.find_first_of(".eE") != std::string::npos)
        return "double";
    return "int";
}

std::string leaf_type(const Analysis& a, const Node& e) {
    if (e.kind == NodeKind::Literal)
        return literal_type(e.op);
    const Variable* v = a.variable_of(e);
    if (v == nullptr)
        return {};
    if (is_numeric(v->type) || v->type == "boolean")
        return v->type;
    return {};
}

/// Arithmetic sub-expressions with two leaf operands that are evaluated
/// unconditionally whenever the statement runs.
void collect_extractable(const Node& e, std::vector<const Node*>& out) {
    switch (e.kind) {
    case NodeKind::Binary:
        if (is_extractable_op(e.op) && is_leaf(e.child(0)) && is_leaf(e.child(1)))
            out.push_back(&e);
        collect_extractable(e.child(0), out);
        if (e.op != "&&" && e.op != "||")
            collect_extractable(e.child(1), out);
        return;
    case NodeKind::Conditional:
        collect_extractable(e.child(0), out);
        return;
    case NodeKind::Unary:
    case NodeKind::Cast:
    case NodeKind::Paren:
    case NodeKind::ArrayAccess:
    case NodeKind::InstanceOf:
    case NodeKind::Arguments:
    case NodeKind::MethodCall:
    case NodeKind::FieldAccess:
        for (const auto& c : e.children)
            collect_extractable(c, out);
        return;
    default:
        return;
    }
}

/// The right-hand side of an assignment statement or single-declarator
/// local declaration.
const Node* statement_rhs(const Node& stmt) {
    if (stmt.kind == NodeKind::ExprStmt) {
        const Node& e = stmt.child(0);
        if (e.kind == NodeKind::Assign)
            return &e.child(1);
        return nullptr;
    }
    if (stmt.kind == NodeKind::LocalVarDecl && stmt.children.size() == 2 && !stmt.child(1).children.empty())
        return &stmt.child(1).child(0);
    return nullptr;
}

const Node* pick_extraction(const Node& rhs) {
    std::vector<const Node*> found;
    collect_extractable(rhs, found);
    std::erase(found, &rhs);
    const Node* best = nullptr;
    for (const Node* n : found)
        if (best == nullptr || precedence_of(*n) > precedence_of(*best) ||
            (precedence_of(*n) == precedence_of(*best) && n->first < best->first))
            best = n;
    return best;
}

}  // namespace

std::vector<Candidate> find_switch_relation(const Analysis& a, const Context&) {
    return find_binary(a, is_relational);
}

Outcome apply_switch_relation(const Analysis& a, const Candidate& c, const Context&) {
    return swap_operands(a, *c.node, mirror(c.node->op));
}

std::vector<Candidate> find_switch_equal(const Analysis& a, const Context&) {
    return find_binary(a, [](const std::string& op) { return op == "==" || op == "!="; });
}

Outcome apply_switch_equal(const Analysis& a, const Candidate& c, const Context&) {
    return swap_operands(a, *c.node, c.node->op);
}

std::vector<Candidate> find_switch_string_equal(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::MethodCall})) {
        if (n->op != "equals" || n->child(0).kind != NodeKind::Name)
            continue;
        const Node& args = n->child(1);
        if (args.children.size() != 1 || args.child(0).kind != NodeKind::Name)
            continue;
        if (args.child(0).op == n->child(0).op)
            continue;
        out.push_back(node_candidate(a.method(), *n));
    }
    return out;
}

Outcome apply_switch_string_equal(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& call = *c.node;
    std::string text = std::string(m.text(call.child(1).child(0))) + ".equals(" + std::string(m.text(call.child(0))) + ")";
    return {Status::Valid, replace_and_render(m, call.first, call.last, std::move(text)), {}};
}

std::vector<Candidate> find_unary2add(const Analysis& a, const Context&) {
    return find_expr_statements(a, [](const Node& e) {
        return (e.kind == NodeKind::Postfix || e.kind == NodeKind::Unary) && (e.op == "++" || e.op == "--") &&
               is_simple_lvalue(e.child(0));
    });
}

Outcome apply_unary2add(const Analysis& a, const Candidate& c, const Context& ctx) {
    const SourceMethod& m = a.method();
    const Node& e = c.node->child(0);
    const Node& target = e.child(0);
    const bool compound = ctx.options != nullptr && ctx.options->unary2add_style == Unary2AddStyle::Compound;
    const std::string sign = e.op == "++" ? "+" : "-";
    const std::string lv(m.text(target));
    if (!compound && narrow_type(a, target))
        return Outcome::inapplicable("expanded form needs a cast for a narrow integral type");
    std::string text = compound ? lv + " " + sign + "= 1;" : lv + " = " + lv + " " + sign + " 1;";
    return {Status::Valid, replace_and_render(m, c.node->first, c.node->last, std::move(text)), {}};
}

std::vector<Candidate> find_add2equal(const Analysis& a, const Context&) {
    return find_expr_statements(a, [](const Node& e) {
        return e.kind == NodeKind::Assign && (e.op == "+=" || e.op == "-=") && is_simple_lvalue(e.child(0));
    });
}

Outcome apply_add2equal(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& e = c.node->child(0);
    if (narrow_type(a, e.child(0)))
        return Outcome::inapplicable("compound assignment hides a narrowing cast");
    const std::string lv(m.text(e.child(0)));
    const std::string op = e.op.substr(0, 1);
    // Parenthesize anything that is not tighter than additive, including a
    // same-level rhs: `s += 1 + 2` is not `s = s + 1 + 2` for strings.
    std::string text = lv + " = " + lv + " " + op + " " + operand_text(m, e.child(1), 11) + ";";
    return {Status::Valid, replace_and_render(m, c.node->first, c.node->last, std::move(text)), {}};
}

std::vector<Candidate> find_merge_var_decl(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const Node* n : nodes_in_region(a, {NodeKind::LocalVarDecl})) {
        const auto* list = sibling_list(m, *n);
        if (list == nullptr)
            continue;
        const auto it = std::find_if(list->begin(), list->end(), [&](const Node& s) { return &s == n; });
        if (it == list->end() || std::next(it) == list->end())
            continue;
        const Node& next = *std::next(it);
        if (next.kind != NodeKind::LocalVarDecl || next.op != n->op)
            continue;
        if (n->child(0).op != next.child(0).op || n->child(0).op == "var")
            continue;
        Candidate c;
        c.site = site_of(m, n->first, next.last);
        c.node = n;
        c.other = &next;
        out.push_back(c);
    }
    // A pair whose second declaration alone touches the region.
    for (const Node* n : nodes_in_region(a, {NodeKind::LocalVarDecl})) {
        const auto* list = sibling_list(m, *n);
        if (list == nullptr)
            continue;
        const auto it = std::find_if(list->begin(), list->end(), [&](const Node& s) { return &s == n; });
        if (it == list->begin() || it == list->end())
            continue;
        const Node& prev = *std::prev(it);
        if (m.in_region(prev) || prev.kind != NodeKind::LocalVarDecl || prev.op != n->op)
            continue;
        if (n->child(0).op != prev.child(0).op || n->child(0).op == "var")
            continue;
        Candidate c;
        c.site = site_of(m, prev.first, n->last);
        c.node = &prev;
        c.other = n;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Candidate& x, const Candidate& y) {
        return x.site.first_token < y.site.first_token;
    });
    return out;
}

Outcome apply_merge_var_decl(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& first = *c.node;
    const Node& second = *c.other;
    // Keep everything up to the end of the first declaration's last
    // declarator, then append the second's declarators.
    std::string text(m.text(first.first, first.children.back().last));
    for (std::size_t i = 1; i < second.children.size(); ++i)
        text += ", " + std::string(m.text(second.child(i)));
    text += ";";
    return {Status::Valid, replace_and_render(m, first.first, second.last, std::move(text)), {}};
}

std::vector<Candidate> find_infix_dividing(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::ExprStmt, NodeKind::LocalVarDecl})) {
        const Node* rhs = statement_rhs(*n);
        if (rhs == nullptr || pick_extraction(*rhs) == nullptr)
            continue;
        if (n->kind == NodeKind::LocalVarDecl && !in_statement_list(a.method(), *n))
            continue;
        Candidate c = node_candidate(a.method(), *n);
        c.other = pick_extraction(*rhs);
        out.push_back(c);
    }
    return out;
}

Outcome apply_infix_dividing(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& stmt = *c.node;
    const Node& sub = *c.other;
    const Node& rhs = *statement_rhs(stmt);
    const std::string lt = leaf_type(a, sub.child(0));
    const std::string rt = leaf_type(a, sub.child(1));
    if (lt.empty() || lt != rt)
        return Outcome::inapplicable("operand types are not syntactically identical primitives");
    std::string result_type;
    if (is_arithmetic(sub.op) && is_numeric(lt))
        result_type = lt;
    else if (is_comparison(sub.op) && (is_numeric(lt) || sub.op == "==" || sub.op == "!="))
        result_type = "boolean";
    else if ((sub.op == "&&" || sub.op == "||") && lt == "boolean")
        result_type = "boolean";
    else
        return Outcome::inapplicable("operator does not apply to " + lt + " operands");
    bool mutates = false;
    source::walk(rhs, [&](const Node& n) {
        if (n.kind == NodeKind::Assign || ((n.kind == NodeKind::Unary || n.kind == NodeKind::Postfix) &&
                                           (n.op == "++" || n.op == "--")))
            mutates = true;
        return !mutates;
    });
    if (mutates)
        return Outcome::inapplicable("right-hand side modifies variables");
    if ((sub.op == "/" || sub.op == "%") && (lt == "int" || lt == "long") &&
        contains_kind(rhs, {NodeKind::MethodCall, NodeKind::New}))
        return Outcome::inapplicable("hoisting an integer division past a call could reorder an exception");

    const std::string name = a.fresh_name("temp");
    std::string decl = result_type + " " + name + " = " + std::string(m.text(sub)) + ";";
    const auto& toks = m.tokens();
    const std::string& src = m.source();
    const std::size_t begin = toks[stmt.first].offset;
    const std::size_t cut = toks[sub.first].offset;
    const std::size_t resume = toks[sub.last].end_offset();
    std::string rewritten = src.substr(begin, cut - begin) + name +
                            src.substr(resume, toks[stmt.last].end_offset() - resume);
    std::string text = statement_sequence(a, stmt, {decl, rewritten});
    return {Status::Valid, replace_and_render(m, stmt.first, stmt.last, std::move(text)), {}};
}

}  // namespace natrob::transform::detail
