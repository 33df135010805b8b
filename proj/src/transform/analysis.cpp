#include "analysis.hpp"

#include <algorithm>
#include <map>

namespace natrob::transform::detail {

namespace {

class Resolver {
public:
    Resolver(std::vector<Variable>& vars, std::unordered_map<std::size_t, std::size_t>& index)
        : vars_(vars), index_(index) {}

    void run(const Node& method) { visit_method(method); }

private:
    void push() { scopes_.emplace_back(); }
    void pop() { scopes_.pop_back(); }

    void declare(const Node& decl, std::string type, bool member = false) {
        if (decl.anchor == Node::npos || decl.op == "this")
            return;
        Variable v;
        v.name = decl.op;
        v.decl = &decl;
        v.type = std::move(type);
        v.is_member = member;
        v.occurrences.push_back(decl.anchor);
        vars_.push_back(std::move(v));
        const std::size_t id = vars_.size() - 1;
        scopes_.back()[decl.op] = id;
        index_[decl.anchor] = id;
    }

    void use(const Node& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name.op);
            if (found != it->end()) {
                vars_[found->second].occurrences.push_back(name.anchor);
                index_[name.anchor] = found->second;
                return;
            }
        }
    }

    static std::string declared_type(const Node& type_ref, int extra_dims) {
        if (!type_ref.present() || type_ref.op == "var")
            return {};
        std::string t = type_ref.op;
        for (int i = 0; i < extra_dims; ++i)
            t += "[]";
        return t;
    }

    void visit_parameter(const Node& p) { declare(p, declared_type(p.child(0), p.aux)); }

    void visit_method(const Node& method) {
        push();
        for (const auto& p : method.child(1).children)
            visit_parameter(p);
        if (method.child(2).present())
            visit(method.child(2));
        pop();
    }

    void visit_decl(const Node& decl, bool member) {
        const Node& type = decl.child(0);
        for (std::size_t i = 1; i < decl.children.size(); ++i) {
            const Node& d = decl.child(i);
            if (!member)
                declare(d, declared_type(type, d.aux));
            for (const auto& init : d.children)
                visit(init);
        }
    }

    void visit_class_body(const Node& body) {
        push();
        for (const auto& member : body.children)
            if (member.kind == NodeKind::FieldDecl)
                for (std::size_t i = 1; i < member.children.size(); ++i)
                    declare(member.child(i), declared_type(member.child(0), member.child(i).aux), true);
        for (const auto& member : body.children) {
            switch (member.kind) {
            case NodeKind::FieldDecl: visit_decl(member, true); break;
            case NodeKind::Method: visit_method(member); break;
            case NodeKind::Initializer: visit(member.child(0)); break;
            case NodeKind::ClassDecl: visit_class_body(member.child(0)); break;
            case NodeKind::ClassBody: visit_class_body(member); break;
            default: break;
            }
        }
        pop();
    }

    void visit(const Node& n) {
        switch (n.kind) {
        case NodeKind::None:
        case NodeKind::TypeRef:
            return;
        case NodeKind::Name:
            use(n);
            return;
        case NodeKind::Block:
        case NodeKind::Switch:
        case NodeKind::SwitchExpr:
            if (n.kind != NodeKind::Block)
                visit(n.child(0));
            push();
            for (std::size_t i = n.kind == NodeKind::Block ? 0 : 1; i < n.children.size(); ++i)
                visit(n.child(i));
            pop();
            return;
        case NodeKind::LocalVarDecl:
            visit_decl(n, false);
            return;
        case NodeKind::For:
            push();
            for (const auto& c : n.children)
                visit(c);
            pop();
            return;
        case NodeKind::ForEach:
            push();
            visit(n.child(1));
            visit_parameter(n.child(0));
            visit(n.child(2));
            pop();
            return;
        case NodeKind::Catch:
            push();
            visit_parameter(n.child(0));
            visit(n.child(1));
            pop();
            return;
        case NodeKind::Try:
            push();
            visit(n.child(0));
            visit(n.child(1));
            pop();
            for (std::size_t i = 2; i < n.children.size(); ++i)
                visit(n.child(i));
            return;
        case NodeKind::Lambda:
            push();
            for (const auto& p : n.child(0).children)
                visit_parameter(p);
            visit(n.child(1));
            pop();
            return;
        case NodeKind::ClassBody:
            visit_class_body(n);
            return;
        case NodeKind::ClassDecl:
            visit_class_body(n.child(0));
            return;
        case NodeKind::Method:
            visit_method(n);
            return;
        default:
            for (const auto& c : n.children)
                visit(c);
        }
    }

    std::vector<Variable>& vars_;
    std::unordered_map<std::size_t, std::size_t>& index_;
    std::vector<std::map<std::string, std::size_t>> scopes_;
};

std::string detect_indent_unit(const SourceMethod& m) {
    const Node& body = m.tree().child(2);
    if (!body.present() || body.children.empty())
        return "    ";
    const std::string outer = m.indent_at(m.tree().first);
    const std::string inner = m.indent_at(body.child(0).first);
    if (inner.size() > outer.size() && inner.compare(0, outer.size(), outer) == 0)
        return inner.substr(outer.size());
    return "    ";
}

}  // namespace

Analysis::Analysis(const SourceMethod& method) : method_(method) {
    Resolver(variables_, token_to_var_).run(method.tree());
    for (auto& v : variables_)
        std::sort(v.occurrences.begin(), v.occurrences.end());
    for (const auto& t : method.tokens())
        if (t.kind == source::TokenKind::Identifier)
            identifiers_.insert(t.text);
    indent_unit_ = detect_indent_unit(method);
}

const Variable* Analysis::variable_at(std::size_t token) const {
    auto it = token_to_var_.find(token);
    return it == token_to_var_.end() ? nullptr : &variables_[it->second];
}

const Variable* Analysis::variable_of(const Node& name_expr) const {
    if (name_expr.kind != NodeKind::Name)
        return nullptr;
    return variable_at(name_expr.anchor);
}

std::string Analysis::fresh_name(const std::string& base) const {
    if (!identifier_used(base))
        return base;
    for (int i = 1;; ++i) {
        std::string candidate = base + std::to_string(i);
        if (!identifier_used(candidate))
            return candidate;
    }
}

Site site_of(const SourceMethod& m, std::size_t first, std::size_t last) {
    Site s;
    s.first_token = first;
    s.last_token = last;
    s.start_line = m.tokens()[first].line;
    const auto& t = m.tokens()[last];
    s.end_line = t.line + static_cast<int>(std::count(t.text.begin(), t.text.end(), '\n'));
    return s;
}

Site site_of(const SourceMethod& m, const Node& node) { return site_of(m, node.first, node.last); }

bool contains_kind(const Node& root, NodeKind kind) { return contains_kind(root, {kind}); }

bool contains_kind(const Node& root, std::initializer_list<NodeKind> kinds) {
    bool found = false;
    source::walk(root, [&](const Node& n) {
        if (found)
            return false;
        if (std::find(kinds.begin(), kinds.end(), n.kind) != kinds.end())
            found = true;
        return !found;
    });
    return found;
}

bool is_pure(const Node& e) {
    switch (e.kind) {
    case NodeKind::Name:
    case NodeKind::Literal:
    case NodeKind::This:
    case NodeKind::ClassLit:
        return true;
    case NodeKind::FieldAccess:
        return e.child(0).kind == NodeKind::Super || is_pure(e.child(0));
    case NodeKind::Paren:
        return is_pure(e.child(0));
    case NodeKind::Unary:
        return e.op != "++" && e.op != "--" && is_pure(e.child(0));
    case NodeKind::Binary:
    case NodeKind::Conditional:
        return std::all_of(e.children.begin(), e.children.end(), [](const Node& c) { return is_pure(c); });
    case NodeKind::Cast:
    case NodeKind::InstanceOf:
        return e.child(0).kind == NodeKind::TypeRef ? is_pure(e.child(1)) : is_pure(e.child(0));
    default:
        return false;
    }
}

bool contains_unnested_break(const Node& root) {
    bool found = false;
    std::function<void(const Node&)> visit = [&](const Node& n) {
        if (found)
            return;
        switch (n.kind) {
        case NodeKind::Break:
            if (n.op.empty())
                found = true;
            return;
        case NodeKind::For:
        case NodeKind::ForEach:
        case NodeKind::While:
        case NodeKind::Do:
        case NodeKind::Switch:
        case NodeKind::SwitchExpr:
        case NodeKind::Lambda:
        case NodeKind::ClassBody:
            return;
        default:
            for (const auto& c : n.children)
                visit(c);
        }
    };
    visit(root);
    return found;
}

bool in_statement_list(const SourceMethod& m, const Node& stmt) { return sibling_list(m, stmt) != nullptr; }

const std::vector<Node>* sibling_list(const SourceMethod& m, const Node& stmt) {
    const Node* p = m.parent(stmt);
    if (p == nullptr)
        return nullptr;
    if (p->kind == NodeKind::Block)
        return &p->children;
    if (p->kind == NodeKind::SwitchGroup) {
        const Node* sw = m.parent(*p);
        if (sw != nullptr && sw->aux == 1)
            return nullptr;  // arrow-form bodies are single statements
        return &p->children;
    }
    return nullptr;
}

int precedence_of(const Node& e) {
    switch (e.kind) {
    case NodeKind::Lambda:
    case NodeKind::Assign:
        return 0;
    case NodeKind::Conditional:
        return 1;
    case NodeKind::Binary: {
        const std::string& op = e.op;
        if (op == "||") return 2;
        if (op == "&&") return 3;
        if (op == "|") return 4;
        if (op == "^") return 5;
        if (op == "&") return 6;
        if (op == "==" || op == "!=") return 7;
        if (op == "<" || op == ">" || op == "<=" || op == ">=") return 8;
        if (op == "<<" || op == ">>" || op == ">>>") return 9;
        if (op == "+" || op == "-") return 10;
        return 11;
    }
    case NodeKind::InstanceOf:
        return 8;
    case NodeKind::Unary:
    case NodeKind::Cast:
        return 12;
    default:
        return 13;
    }
}

std::string operand_text(const SourceMethod& m, const Node& expr, int min_prec) {
    std::string t(m.text(expr));
    if (precedence_of(expr) < min_prec)
        return "(" + t + ")";
    return t;
}

const Node* single_statement(const Node& branch) {
    if (branch.kind == NodeKind::Block)
        return branch.children.size() == 1 ? &branch.child(0) : nullptr;
    return &branch;
}

std::string shift(std::string_view text, const std::string& extra) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        out += c;
        if (c == '\n')
            out += extra;
    }
    return out;
}

std::string dedent(std::string_view text, const std::string& unit) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        out += c;
        ++i;
        if (c == '\n') {
            std::size_t k = 0;
            while (k < unit.size() && i < text.size() && (text[i] == ' ' || text[i] == '\t') && text[i] != '\n') {
                ++i;
                ++k;
            }
        }
    }
    return out;
}

std::string statement_sequence(const Analysis& a, const Node& stmt, const std::vector<std::string>& parts) {
    const SourceMethod& m = a.method();
    const std::string indent = m.indent_at(stmt.first);
    if (parts.size() == 1)
        return parts.front();
    std::string out;
    if (in_statement_list(m, stmt)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0)
                out += "\n" + indent;
            out += parts[i];
        }
        return out;
    }
    out = "{";
    for (const auto& p : parts)
        out += "\n" + indent + a.indent_unit() + shift(p, a.indent_unit());
    out += "\n" + indent + "}";
    return out;
}

std::string as_block(const Analysis& a, const Node& branch, const std::string& indent) {
    const SourceMethod& m = a.method();
    if (branch.kind == NodeKind::Block)
        return std::string(m.text(branch));
    return "{\n" + indent + a.indent_unit() + shift(m.text(branch), a.indent_unit()) + "\n" + indent + "}";
}

}  // namespace natrob::transform::detail
