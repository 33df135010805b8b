#include "operators.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace natrob::transform::detail {

namespace {

Candidate node_candidate(const SourceMethod& m, const Node& n) {
    Candidate c;
    c.site = site_of(m, n);
    c.node = &n;
    return c;
}

bool is_jump(const Node& s) {
    return s.kind == NodeKind::Return || s.kind == NodeKind::Throw || s.kind == NodeKind::Break ||
           s.kind == NodeKind::Continue;
}

const Node& last_statement(const Node& body) {
    if (body.kind == NodeKind::Block && !body.children.empty())
        return last_statement(body.children.back());
    return body;
}

/// `continue` that could resume the loop owning `body`: unlabeled ones
/// outside nested loops, and any labeled one.
bool continues_loop(const Node& body) {
    bool found = false;
    std::function<void(const Node&, bool)> visit = [&](const Node& n, bool nested) {
        if (found)
            return;
        if (n.kind == NodeKind::Continue && (!nested || !n.op.empty())) {
            found = true;
            return;
        }
        if (n.kind == NodeKind::Lambda || n.kind == NodeKind::ClassBody)
            return;
        const bool loop = n.kind == NodeKind::For || n.kind == NodeKind::ForEach || n.kind == NodeKind::While ||
                          n.kind == NodeKind::Do;
        for (const auto& c : n.children)
            visit(c, nested || loop);
    };
    visit(body, false);
    return found;
}

std::string raw(const SourceMethod& m, std::size_t begin, std::size_t end) {
    return m.source().substr(begin, end - begin);
}

std::string rtrim(std::string s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    return s;
}

/// Statements of a block, or the lone statement of a bare branch.
std::string statement_text(const SourceMethod& m, const Node& s) {
    std::string t(m.text(s));
    if (m.tokens()[s.last].text != ";" && s.kind == NodeKind::LocalVarDecl)
        t += ";";
    return t;
}

std::string braced(const Analysis& a, const std::string& indent, const std::vector<std::string>& parts) {
    std::string out = "{";
    for (const auto& p : parts)
        out += "\n" + indent + a.indent_unit() + shift(p, a.indent_unit());
    return out + "\n" + indent + "}";
}

bool name_used_outside(const SourceMethod& m, const std::string& name, std::size_t first, std::size_t last) {
    const auto& toks = m.tokens();
    for (std::size_t i = 0; i < toks.size(); ++i)
        if ((i < first || i > last) && toks[i].kind == source::TokenKind::Identifier && toks[i].text == name)
            return true;
    return false;
}

std::vector<std::string> declared_names(const Node& decl) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i < decl.children.size(); ++i)
        out.push_back(decl.child(i).op);
    return out;
}

bool mentions(const Node& root, const std::string& name) {
    bool found = false;
    source::walk(root, [&](const Node& n) {
        if (n.kind == NodeKind::Name && n.op == name)
            found = true;
        return !found;
    });
    return found;
}

const Node* unparen(const Node* e) {
    while (e->kind == NodeKind::Paren)
        e = &e->child(0);
    return e;
}

// ---- While2For pattern ---------------------------------------------------

/// Loop variable initialized by `prev`, or empty.
std::string init_variable(const Node& prev) {
    if (prev.kind == NodeKind::ExprStmt) {
        const Node& e = prev.child(0);
        if (e.kind == NodeKind::Assign && e.op == "=" && e.child(0).kind == NodeKind::Name)
            return e.child(0).op;
    } else if (prev.kind == NodeKind::LocalVarDecl && prev.children.size() == 2 &&
               !prev.child(1).children.empty()) {
        return prev.child(1).op;
    }
    return {};
}

bool updates_variable(const Node& stmt, const std::string& v) {
    if (stmt.kind != NodeKind::ExprStmt)
        return false;
    const Node& e = stmt.child(0);
    if ((e.kind == NodeKind::Postfix || e.kind == NodeKind::Unary) && (e.op == "++" || e.op == "--"))
        return e.child(0).kind == NodeKind::Name && e.child(0).op == v;
    return e.kind == NodeKind::Assign && e.child(0).kind == NodeKind::Name && e.child(0).op == v;
}

/// Empty when `prev; loop` matches the init/update pattern, else the reason.
std::string while_pattern_problem(const SourceMethod& m, const Node& prev, const Node& loop) {
    const std::string v = init_variable(prev);
    if (v.empty())
        return "preceding statement does not initialize a loop variable";
    const Node& body = loop.child(1);
    if (body.kind != NodeKind::Block || body.children.empty() || !updates_variable(body.children.back(), v))
        return "last body statement does not update '" + v + "'";
    if (!mentions(loop.child(0), v))
        return "loop condition does not test '" + v + "'";
    if (continues_loop(body))
        return "body contains continue";
    if (prev.kind == NodeKind::LocalVarDecl && name_used_outside(m, v, prev.first, loop.last))
        return "'" + v + "' is used after the loop";
    return {};
}

// ---- ElseIf2If -----------------------------------------------------------

std::string unchain(const Analysis& a, const Node& ifn, const std::string& indent, const std::string& extra) {
    const SourceMethod& m = a.method();
    const Node& then = ifn.child(1);
    const Node& other = ifn.child(2);
    std::string out = shift(m.text(ifn.first, then.last), extra) + " else ";
    if (other.kind == NodeKind::If) {
        const std::string deeper = extra + a.indent_unit();
        out += "{\n" + indent + deeper + unchain(a, other, indent, deeper) + "\n" + indent + extra + "}";
    } else {
        out += shift(m.text(other), extra);
    }
    return out;
}

// ---- Switch2If -----------------------------------------------------------

struct GroupPlan {
    const Node* group = nullptr;
    bool is_default = false;
    std::vector<const Node*> body;
};

// ---- SwapStatement -------------------------------------------------------

struct Effects {
    std::set<std::string> reads;
    std::set<std::string> writes;
    bool unsafe = false;
};

Effects effects_of(const Analysis& a, const Node& stmt) {
    Effects fx;
    auto write_target = [&](const Node& target) {
        const Node* t = unparen(&target);
        if (t->kind == NodeKind::Name && a.variable_of(*t) != nullptr && !a.variable_of(*t)->is_member)
            fx.writes.insert(t->op);
        else
            fx.unsafe = true;  // field or array store
    };
    if (stmt.kind == NodeKind::LocalVarDecl)
        for (const auto& n : declared_names(stmt))
            fx.writes.insert(n);
    source::walk(stmt, [&](const Node& n) {
        switch (n.kind) {
        case NodeKind::MethodCall:
        case NodeKind::New:
        case NodeKind::SwitchExpr:
            fx.unsafe = true;
            return false;
        case NodeKind::Assign:
            write_target(n.child(0));
            return true;
        case NodeKind::Unary:
        case NodeKind::Postfix:
            if (n.op == "++" || n.op == "--")
                write_target(n.child(0));
            return true;
        case NodeKind::Name:
            fx.reads.insert(n.op);
            return true;
        default:
            return true;
        }
    });
    return fx;
}

bool intersects(const std::set<std::string>& x, const std::set<std::string>& y) {
    return std::any_of(x.begin(), x.end(), [&](const std::string& s) { return y.count(s) > 0; });
}

bool independent(const Analysis& a, const Node& s1, const Node& s2) {
    const Effects e1 = effects_of(a, s1);
    const Effects e2 = effects_of(a, s2);
    if (e1.unsafe || e2.unsafe)
        return false;
    return !intersects(e1.writes, e2.reads) && !intersects(e1.writes, e2.writes) && !intersects(e2.writes, e1.reads);
}

bool swappable_kind(const Node& s) { return s.kind == NodeKind::ExprStmt || s.kind == NodeKind::LocalVarDecl; }

std::vector<const Node*> all_nodes(const Analysis& a, NodeKind kind) {
    std::vector<const Node*> out;
    source::walk(a.method().tree(), [&](const Node& n) {
        if (n.kind == kind)
            out.push_back(&n);
        return true;
    });
    return out;
}

}  // namespace

// ---- For2While ---------------------------------------------------------

std::vector<Candidate> find_for2while(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::For}))
        out.push_back(node_candidate(a.method(), *n));
    return out;
}

Outcome apply_for2while(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& loop = *c.node;
    const Node& init = loop.child(0);
    const Node& cond = loop.child(1);
    const Node& update = loop.child(2);
    const Node& body = loop.child(3);
    if (continues_loop(body))
        return Outcome::inapplicable("body contains continue");
    if (!update.children.empty() && is_jump(last_statement(body)))
        return Outcome::inapplicable("update would follow a jump");

    const Node* target = &loop;
    std::string label;
    if (const Node* p = m.parent(loop); p != nullptr && p->kind == NodeKind::Labeled) {
        target = p;
        label = p->op + ": ";
    }
    const std::string indent = m.indent_at(target->first);
    const std::string inner = indent + a.indent_unit();

    std::vector<std::string> parts;
    std::vector<std::string> declared;
    for (const auto& i : init.children) {
        if (i.kind == NodeKind::LocalVarDecl) {
            parts.push_back(statement_text(m, i));
            for (auto& name : declared_names(i))
                declared.push_back(name);
        } else {
            parts.push_back(std::string(m.text(i)) + ";");
        }
    }
    std::vector<std::string> updates;
    for (const auto& u : update.children)
        updates.push_back(std::string(m.text(u)) + ";");

    std::string new_body;
    if (body.kind == NodeKind::Block) {
        const auto& toks = m.tokens();
        new_body = "{" + rtrim(raw(m, toks[body.first].end_offset(), toks[body.last].offset));
        for (const auto& u : updates)
            new_body += "\n" + inner + u;
        new_body += "\n" + indent + "}";
    } else {
        new_body = "{\n" + inner + shift(m.text(body), a.indent_unit());
        for (const auto& u : updates)
            new_body += "\n" + inner + u;
        new_body += "\n" + indent + "}";
    }
    const std::string condition = cond.present() ? std::string(m.text(cond)) : "true";
    parts.push_back(label + "while (" + condition + ") " + new_body);

    const bool leaks = std::any_of(declared.begin(), declared.end(), [&](const std::string& name) {
        return name_used_outside(m, name, target->first, target->last);
    });
    std::string text = leaks && in_statement_list(m, *target) ? braced(a, indent, parts)
                                                               : statement_sequence(a, *target, parts);
    return {Status::Valid, replace_and_render(m, target->first, target->last, std::move(text)), {}};
}

// ---- While2For ---------------------------------------------------------

std::vector<Candidate> find_while2for(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const Node* loop : all_nodes(a, NodeKind::While)) {
        const Node* prev = nullptr;
        if (const auto* list = sibling_list(m, *loop)) {
            auto it = std::find_if(list->begin(), list->end(), [&](const Node& s) { return &s == loop; });
            if (it != list->begin() && it != list->end())
                prev = &*std::prev(it);
        }
        const bool matched = prev != nullptr && while_pattern_problem(m, *prev, *loop).empty();
        if (!m.in_region(*loop) && !(matched && m.in_region(*prev)))
            continue;
        Candidate c;
        c.node = loop;
        c.other = prev;
        c.site = matched ? site_of(m, prev->first, loop->last) : site_of(m, *loop);
        out.push_back(c);
    }
    return out;
}

Outcome apply_while2for(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& loop = *c.node;
    if (c.other == nullptr)
        return Outcome::inapplicable("no statement precedes the loop");
    const Node& prev = *c.other;
    if (std::string why = while_pattern_problem(m, prev, loop); !why.empty())
        return Outcome::inapplicable(why);

    const std::string indent = m.indent_at(prev.first);
    const Node& body = loop.child(1);
    const Node& update = body.children.back();
    std::string init = prev.kind == NodeKind::ExprStmt ? std::string(m.text(prev.child(0)))
                                                        : std::string(m.text(prev.first, prev.children.back().last));
    std::string text = "for (" + init + "; " + std::string(m.text(loop.child(0))) + "; " +
                       std::string(m.text(update.child(0))) + ") {";
    // Everything before the update, comments included, stays in the body.
    const auto& toks = m.tokens();
    text += rtrim(raw(m, toks[body.first].end_offset(), toks[update.first].offset));
    text += "\n" + indent + "}";
    return {Status::Valid, replace_and_render(m, prev.first, loop.last, std::move(text)), {}};
}

// ---- ElseIf2If -----------------------------------------------------------

std::vector<Candidate> find_elseif2if(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const Node* n : nodes_in_region(a, {NodeKind::If})) {
        if (n->child(2).kind != NodeKind::If)
            continue;
        const Node* p = m.parent(*n);
        if (p != nullptr && p->kind == NodeKind::If && &p->child(2) == n)
            continue;  // only chain heads
        out.push_back(node_candidate(m, *n));
    }
    return out;
}

Outcome apply_elseif2if(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const std::string indent = m.indent_at(c.node->first);
    return {Status::Valid, replace_and_render(m, c.node->first, c.node->last, unchain(a, *c.node, indent, "")), {}};
}

// ---- Switch2If -----------------------------------------------------------

std::vector<Candidate> find_switch2if(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::Switch}))
        out.push_back(node_candidate(a.method(), *n));
    return out;
}

Outcome apply_switch2if(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& sw = *c.node;
    if (sw.aux == 1)
        return Outcome::inapplicable("arrow-form switch");
    const Node& selector = sw.child(0);
    if (!is_pure(selector))
        return Outcome::inapplicable("selector has side effects");

    std::vector<GroupPlan> plans;
    bool string_labels = false;
    bool literal_labels = false;
    for (std::size_t g = 1; g < sw.children.size(); ++g) {
        const Node& group = sw.child(g);
        GroupPlan plan;
        plan.group = &group;
        plan.is_default = group.child(0).aux == 1;
        for (const auto& label : group.child(0).children) {
            const Node* l = unparen(&label);
            if (l->kind == NodeKind::Unary && l->op == "-")
                l = unparen(&l->child(0));
            if (l->kind == NodeKind::Literal) {
                literal_labels = true;
                if (!l->op.empty() && l->op.front() == '"')
                    string_labels = true;
            } else if (l->kind != NodeKind::FieldAccess) {
                return Outcome::inapplicable("case label is not a literal or qualified constant");
            }
        }
        for (std::size_t i = 1; i < group.children.size(); ++i)
            plan.body.push_back(&group.child(i));
        const bool last = g + 1 == sw.children.size();
        if (plan.is_default && !last)
            return Outcome::inapplicable("default is not the last group");
        if (!last && (plan.body.empty() || !is_jump(*plan.body.back())))
            return Outcome::inapplicable("case falls through");
        if (!plan.body.empty() && plan.body.back()->kind == NodeKind::Break && plan.body.back()->op.empty())
            plan.body.pop_back();
        for (const Node* s : plan.body)
            if (contains_unnested_break(*s))
                return Outcome::inapplicable("break inside a case body");
        plans.push_back(std::move(plan));
    }
    if (plans.empty() || (plans.size() == 1 && plans.front().is_default))
        return Outcome::inapplicable("no case labels");
    if (!literal_labels)
        return Outcome::inapplicable("label types cannot be inferred");

    for (std::size_t i = 0; i < plans.size(); ++i)
        for (const Node* s : plans[i].body) {
            if (s->kind != NodeKind::LocalVarDecl)
                continue;
            for (const auto& name : declared_names(*s))
                for (std::size_t j = 0; j < plans.size(); ++j)
                    if (j != i && std::any_of(plans[j].body.begin(), plans[j].body.end(),
                                              [&](const Node* t) { return mentions(*t, name); }))
                        return Outcome::inapplicable("declaration shared across cases");
        }

    const std::string indent = m.indent_at(sw.first);
    const std::string inner = indent + a.indent_unit();
    const std::string sel_eq = operand_text(m, selector, 8);
    const std::string sel_call = operand_text(m, selector, 13);
    auto block = [&](const GroupPlan& p) {
        if (p.body.empty())
            return "{\n" + indent + "}";
        std::string body(m.text(p.body.front()->first, p.body.back()->last));
        return "{\n" + inner + dedent(body, a.indent_unit()) + "\n" + indent + "}";
    };

    std::string text;
    for (const auto& p : plans) {
        if (p.is_default) {
            if (!p.body.empty())
                text += " else " + block(p);
            continue;
        }
        std::string cond;
        for (const auto& label : p.group->child(0).children) {
            if (!cond.empty())
                cond += " || ";
            cond += string_labels ? sel_call + ".equals(" + std::string(m.text(label)) + ")"
                                  : sel_eq + " == " + std::string(m.text(label));
        }
        text += (text.empty() ? "" : " else ") + std::string("if (") + cond + ") " + block(p);
    }
    return {Status::Valid, replace_and_render(m, sw.first, sw.last, std::move(text)), {}};
}

// ---- SwapStatement -------------------------------------------------------

std::vector<Candidate> find_swap_statement(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    std::set<std::pair<const Node*, const Node*>> seen;
    for (const Node* n : nodes_in_region(a, {NodeKind::ExprStmt, NodeKind::LocalVarDecl})) {
        const auto* list = sibling_list(m, *n);
        if (list == nullptr)
            continue;
        auto it = std::find_if(list->begin(), list->end(), [&](const Node& s) { return &s == n; });
        if (it == list->end())
            continue;
        std::vector<std::pair<const Node*, const Node*>> pairs;
        if (it != list->begin())
            pairs.emplace_back(&*std::prev(it), n);
        if (std::next(it) != list->end())
            pairs.emplace_back(n, &*std::next(it));
        for (const auto& [s1, s2] : pairs) {
            if (!swappable_kind(*s1) || !swappable_kind(*s2) || !seen.insert({s1, s2}).second)
                continue;
            if (!independent(a, *s1, *s2))
                continue;
            Candidate c;
            c.site = site_of(m, s1->first, s2->last);
            c.node = s1;
            c.other = s2;
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Candidate& x, const Candidate& y) { return x.site.first_token < y.site.first_token; });
    return out;
}

Outcome apply_swap_statement(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& s1 = *c.node;
    const Node& s2 = *c.other;
    const auto& toks = m.tokens();
    std::string text = std::string(m.text(s2)) + raw(m, toks[s1.last].end_offset(), toks[s2.first].offset) +
                       std::string(m.text(s1));
    return {Status::Valid, replace_and_render(m, s1.first, s2.last, std::move(text)), {}};
}

// ---- ReverseIf -----------------------------------------------------------

std::vector<Candidate> find_reverse_if(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::If}))
        if (n->child(2).present())
            out.push_back(node_candidate(a.method(), *n));
    return out;
}

Outcome apply_reverse_if(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& ifn = *c.node;
    const std::string indent = m.indent_at(ifn.first);
    std::string text = "if (!" + operand_text(m, ifn.child(0), 13) + ") " + as_block(a, ifn.child(2), indent) +
                       " else " + std::string(m.text(ifn.child(1)));
    return {Status::Valid, replace_and_render(m, ifn.first, ifn.last, std::move(text)), {}};
}

// ---- If2CondExp / CondExp2If ---------------------------------------------

std::vector<Candidate> find_if2condexp(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const Node* n : nodes_in_region(a, {NodeKind::If})) {
        if (!n->child(2).present())
            continue;
        const Node* t = single_statement(n->child(1));
        const Node* e = single_statement(n->child(2));
        if (t == nullptr || e == nullptr || t->kind != e->kind)
            continue;
        if (t->kind == NodeKind::Return) {
            if (t->children.empty() || e->children.empty())
                continue;
        } else if (t->kind == NodeKind::ExprStmt) {
            const Node& x = t->child(0);
            const Node& y = e->child(0);
            if (x.kind != NodeKind::Assign || y.kind != NodeKind::Assign || x.op != "=" || y.op != "=")
                continue;
            if (!source::token_equal(m.text(x.child(0)), m.text(y.child(0))))
                continue;
        } else {
            continue;
        }
        Candidate c = node_candidate(m, *n);
        c.other = t;
        out.push_back(c);
    }
    return out;
}

Outcome apply_if2condexp(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& ifn = *c.node;
    const Node& t = *single_statement(ifn.child(1));
    const Node& e = *single_statement(ifn.child(2));
    const std::string cond = operand_text(m, ifn.child(0), 2);
    std::string text;
    if (t.kind == NodeKind::Return) {
        text = "return " + cond + " ? " + operand_text(m, t.child(0), 1) + " : " + operand_text(m, e.child(0), 1) + ";";
    } else {
        const Node& x = t.child(0);
        const Node& y = e.child(0);
        text = std::string(m.text(x.child(0))) + " = " + cond + " ? " + operand_text(m, x.child(1), 1) + " : " +
               operand_text(m, y.child(1), 1) + ";";
    }
    return {Status::Valid, replace_and_render(m, ifn.first, ifn.last, std::move(text)), {}};
}

std::vector<Candidate> find_condexp2if(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const Node* n : nodes_in_region(a, {NodeKind::Return, NodeKind::ExprStmt, NodeKind::LocalVarDecl})) {
        const Node* cond = nullptr;
        if (n->kind == NodeKind::Return && !n->children.empty()) {
            cond = unparen(&n->child(0));
        } else if (n->kind == NodeKind::ExprStmt && n->child(0).kind == NodeKind::Assign && n->child(0).op == "=") {
            const Node& lhs = *unparen(&n->child(0).child(0));
            const bool simple = lhs.kind == NodeKind::Name || (lhs.kind != NodeKind::Paren && is_pure(lhs)) ||
                                (lhs.kind == NodeKind::ArrayAccess && is_pure(lhs.child(0)) && is_pure(lhs.child(1)));
            if (simple)
                cond = unparen(&n->child(0).child(1));
        } else if (n->kind == NodeKind::LocalVarDecl && n->children.size() == 2 && n->child(0).op != "var" &&
                   n->child(1).aux == 0 && !n->child(1).children.empty() && in_statement_list(m, *n)) {
            cond = unparen(&n->child(1).child(0));
        }
        if (cond == nullptr || cond->kind != NodeKind::Conditional)
            continue;
        Candidate c = node_candidate(m, *n);
        c.other = cond;
        out.push_back(c);
    }
    return out;
}

Outcome apply_condexp2if(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& stmt = *c.node;
    const Node& ce = *c.other;
    const std::string indent = m.indent_at(stmt.first);
    const std::string inner = indent + a.indent_unit();
    std::string prefix;
    std::string head;
    if (stmt.kind == NodeKind::Return) {
        head = "return ";
    } else if (stmt.kind == NodeKind::ExprStmt) {
        head = std::string(m.text(stmt.child(0).child(0))) + " = ";
    } else {
        const Node& d = stmt.child(1);
        prefix = std::string(m.text(stmt.first, d.anchor)) + ";\n" + indent;
        head = d.op + " = ";
    }
    std::string text = prefix + "if (" + std::string(m.text(ce.child(0))) + ") {\n" + inner + head +
                       std::string(m.text(ce.child(1))) + ";\n" + indent + "} else {\n" + inner + head +
                       std::string(m.text(ce.child(2))) + ";\n" + indent + "}";
    return {Status::Valid, replace_and_render(m, stmt.first, stmt.last, std::move(text)), {}};
}

// ---- DividingComposedIf --------------------------------------------------

std::vector<Candidate> find_dividing_composed_if(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    for (const Node* n : nodes_in_region(a, {NodeKind::If})) {
        const Node& cond = n->child(0);
        if (cond.kind == NodeKind::Binary && (cond.op == "&&" || cond.op == "||"))
            out.push_back(node_candidate(a.method(), *n));
    }
    return out;
}

Outcome apply_dividing_composed_if(const Analysis& a, const Candidate& c, const Context&) {
    const SourceMethod& m = a.method();
    const Node& ifn = *c.node;
    const Node& cond = ifn.child(0);
    if (cond.op == "||")
        return Outcome::inapplicable("disjunction would duplicate the body");
    if (ifn.child(2).present())
        return Outcome::inapplicable("else branch would need duplicating");
    const std::string indent = m.indent_at(ifn.first);
    std::string text = "if (" + std::string(m.text(cond.child(0))) + ") {\n" + indent + a.indent_unit() + "if (" +
                       std::string(m.text(cond.child(1))) + ") " + shift(m.text(ifn.child(1)), a.indent_unit()) +
                       "\n" + indent + "}";
    return {Status::Valid, replace_and_render(m, ifn.first, ifn.last, std::move(text)), {}};
}

}  // namespace natrob::transform::detail
