#include "natrob/source/source_method.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace natrob::source {

namespace {

constexpr std::array<std::string_view, 8> kPrimitives = {"boolean", "byte", "char", "short",
                                                         "int",     "long", "float", "double"};

constexpr std::array<std::string_view, 12> kModifiers = {
    "public", "protected", "private", "static",    "final",    "abstract",
    "native", "synchronized", "transient", "volatile", "strictfp", "default"};

constexpr std::array<std::string_view, 12> kAssignOps = {"=",  "+=", "-=", "*=",  "/=",   "%=",
                                                         "&=", "|=", "^=", "<<=", ">>=", ">>>="};

bool is_primitive(std::string_view s) {
    return std::find(kPrimitives.begin(), kPrimitives.end(), s) != kPrimitives.end();
}

bool is_modifier(std::string_view s) {
    return std::find(kModifiers.begin(), kModifiers.end(), s) != kModifiers.end();
}

int binary_precedence(std::string_view op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "instanceof") return 7;
    if (op == "<<" || op == ">>" || op == ">>>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
        for (std::size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i].is_code())
                code_.push_back(i);
        eof_.text = "";
        eof_.kind = TokenKind::Separator;
        eof_.line = tokens.empty() ? 1 : tokens.back().line;
    }

    Node method_declaration() {
        if (code_.empty())
            throw ParseError(1, "empty input: expected a method declaration");
        Node method = method_decl();
        if (!at_end())
            fail("unexpected '" + cur().text + "' after method body");
        return method;
    }

    std::vector<Node> compilation_unit() {
        std::vector<Node> types;
        while (!at_end()) {
            if (at("package") || at("import")) {
                while (!at_end() && !at(";"))
                    advance();
                expect(";");
            } else if (at(";")) {
                advance();
            } else {
                types.push_back(type_declaration());
            }
        }
        return types;
    }

private:
    // ---- token access -------------------------------------------------

    const Token& tok(std::size_t k = 0) const {
        return pos_ + k < code_.size() ? tokens_[code_[pos_ + k]] : eof_;
    }
    const Token& cur() const { return tok(0); }
    bool at_end() const { return pos_ >= code_.size(); }
    bool at(std::string_view s) const { return gt_used_ == 0 && !at_end() && cur().text == s; }
    bool at_kind(TokenKind k) const { return gt_used_ == 0 && !at_end() && cur().kind == k; }
    bool at_ident() const { return at_kind(TokenKind::Identifier); }
    bool peek_is(std::size_t k, std::string_view s) const {
        return pos_ + k < code_.size() && tok(k).text == s;
    }
    std::size_t index() const { return pos_ < code_.size() ? code_[pos_] : code_.back(); }
    std::size_t prev_index() const { return code_[pos_ - 1]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(at_end() ? eof_.line : cur().line, msg);
    }

    void advance() {
        if (at_end())
            fail("unexpected end of input");
        ++pos_;
        gt_used_ = 0;
    }

    bool accept(std::string_view s) {
        if (!at(s))
            return false;
        advance();
        return true;
    }

    void expect(std::string_view s) {
        if (!at(s))
            fail("expected '" + std::string(s) + "' but found '" + (at_end() ? "<eof>" : cur().text) + "'");
        advance();
    }

    std::size_t expect_ident() {
        if (!at_ident())
            fail("expected identifier but found '" + (at_end() ? "<eof>" : cur().text) + "'");
        const std::size_t i = index();
        advance();
        return i;
    }

    // Closing '>' of type arguments; splits '>>' and '>>>' tokens.
    bool at_close_angle() const {
        if (at_end())
            return false;
        const auto& t = cur().text;
        return !t.empty() && t.find_first_not_of('>') == std::string::npos && gt_used_ < t.size();
    }
    void expect_close_angle() {
        if (!at_close_angle())
            fail("expected '>'");
        ++gt_used_;
        if (gt_used_ == cur().text.size()) {
            ++pos_;
            gt_used_ = 0;
        }
    }

    struct Mark {
        std::size_t pos;
        std::size_t gt;
    };
    Mark mark() const { return {pos_, gt_used_}; }
    void reset(Mark m) {
        pos_ = m.pos;
        gt_used_ = m.gt;
    }

    template <typename F>
    bool speculate(F&& f) {
        const Mark m = mark();
        bool ok = false;
        try {
            ok = f();
        } catch (const ParseError&) {
            ok = false;
        }
        reset(m);
        return ok;
    }

    Node make(NodeKind kind, std::size_t first) const {
        Node n;
        n.kind = kind;
        n.first = first;
        n.last = prev_index();
        return n;
    }
    static Node none() { return Node{}; }

    // ---- annotations, modifiers, types ------------------------------------

    void skip_balanced(std::string_view open, std::string_view close) {
        expect(open);
        int depth = 1;
        while (depth > 0) {
            if (at_end())
                fail("unbalanced '" + std::string(open) + "'");
            if (at(open))
                ++depth;
            else if (at(close))
                --depth;
            advance();
        }
    }

    void annotation() {
        expect("@");
        expect_ident();
        while (at(".") && tok(1).kind == TokenKind::Identifier) {
            advance();
            advance();
        }
        if (at("("))
            skip_balanced("(", ")");
    }

    bool at_annotation() const { return at("@") && !peek_is(1, "interface"); }

    std::string modifiers() {
        std::string mods;
        while (true) {
            if (at_annotation()) {
                annotation();
            } else if (!at_end() && gt_used_ == 0 && is_modifier(cur().text) &&
                       !(cur().text == "default" && (peek_is(1, ":") || peek_is(1, "->")))) {
                if (!mods.empty())
                    mods += ' ';
                mods += cur().text;
                advance();
            } else {
                return mods;
            }
        }
    }

    void type_arguments(std::string& text) {
        expect("<");
        text += '<';
        if (at_close_angle()) {
            expect_close_angle();
            text += '>';
            return;
        }
        while (true) {
            while (at_annotation())
                annotation();
            if (accept("?")) {
                text += '?';
                if (at("extends") || at("super")) {
                    text += ' ' + cur().text + ' ';
                    advance();
                    text += type_text();
                }
            } else {
                text += type_text();
            }
            if (accept(",")) {
                text += ',';
                continue;
            }
            expect_close_angle();
            text += '>';
            return;
        }
    }

    std::string dims() {
        std::string out;
        while (true) {
            while (at_annotation() && peek_is(2, "["))
                annotation();
            if (at("[") && peek_is(1, "]")) {
                advance();
                advance();
                out += "[]";
            } else {
                return out;
            }
        }
    }

    // Class or primitive type without trailing dims.
    std::string base_type_text() {
        while (at_annotation())
            annotation();
        if (!at_end() && gt_used_ == 0 && (is_primitive(cur().text) || cur().text == "void")) {
            std::string t = cur().text;
            advance();
            return t;
        }
        std::string text = cur().text;
        expect_ident();
        if (at("<"))
            type_arguments(text);
        while (at(".") && (tok(1).kind == TokenKind::Identifier || tok(1).is("@"))) {
            advance();
            while (at_annotation())
                annotation();
            text += '.' + cur().text;
            expect_ident();
            if (at("<"))
                type_arguments(text);
        }
        return text;
    }

    std::string type_text() {
        std::string t = base_type_text();
        return t + dims();
    }

    Node type_ref() {
        const std::size_t first = index();
        std::string text = type_text();
        Node n = make(NodeKind::TypeRef, first);
        n.op = std::move(text);
        return n;
    }

    void type_parameters() {
        expect("<");
        int depth = 1;
        while (depth > 0) {
            if (at_end())
                fail("unbalanced type parameters");
            if (at("<")) {
                ++depth;
                advance();
            } else if (at_close_angle()) {
                --depth;
                expect_close_angle();
            } else {
                advance();
            }
        }
    }

    // ---- declarations ---------------------------------------------------

    Node method_decl() {
        const std::size_t first = index();
        modifiers();
        if (at("<"))
            type_parameters();
        Node method;
        method.kind = NodeKind::Method;
        Node ret = none();
        if (!(at_ident() && peek_is(1, "(")))
            ret = type_ref();
        method.anchor = expect_ident();
        method.op = tokens_[method.anchor].text;
        Node params = parameter_list();
        dims();
        if (accept("throws")) {
            type_text();
            while (accept(","))
                type_text();
        }
        Node body = none();
        if (accept("default")) {
            while (!at(";"))
                advance();
        }
        if (at("{"))
            body = block();
        else
            expect(";");
        method.children.push_back(std::move(ret));
        method.children.push_back(std::move(params));
        method.children.push_back(std::move(body));
        method.first = first;
        method.last = prev_index();
        return method;
    }

    Node parameter_list() {
        const std::size_t first = index();
        expect("(");
        Node list;
        list.kind = NodeKind::ParamList;
        if (!at(")")) {
            do {
                list.children.push_back(formal_parameter());
            } while (accept(","));
        }
        expect(")");
        list.first = first;
        list.last = prev_index();
        return list;
    }

    Node formal_parameter() {
        const std::size_t first = index();
        modifiers();
        Node type = type_ref();
        if (accept("...")) {
            type.op += "...";
            type.last = prev_index();
        }
        Node p;
        p.kind = NodeKind::Parameter;
        if (at("this")) {
            p.anchor = index();
            advance();
        } else {
            p.anchor = expect_ident();
        }
        p.op = tokens_[p.anchor].text;
        p.aux = static_cast<int>(dims().size() / 2);
        p.children.push_back(std::move(type));
        p.first = first;
        p.last = prev_index();
        return p;
    }

    bool at_type_decl_keyword() const {
        return at("class") || at("interface") || at("enum") || (at("@") && peek_is(1, "interface")) ||
               (at_ident() && cur().text == "record" && tok(1).kind == TokenKind::Identifier && peek_is(2, "("));
    }

    Node type_declaration() {
        const std::size_t first = index();
        modifiers();
        if (!at_type_decl_keyword())
            fail("expected a type declaration");
        const bool is_enum = at("enum");
        const bool is_annotation = at("@");
        if (is_annotation)
            advance();
        advance();
        Node decl;
        decl.kind = NodeKind::ClassDecl;
        decl.anchor = expect_ident();
        decl.op = tokens_[decl.anchor].text;
        while (!at("{")) {
            if (at_end())
                fail("expected class body");
            if (at("("))
                skip_balanced("(", ")");
            else
                advance();
        }
        decl.children.push_back(class_body(is_enum));
        decl.first = first;
        decl.last = prev_index();
        return decl;
    }

    Node class_body(bool is_enum = false) {
        const std::size_t first = index();
        expect("{");
        Node body;
        body.kind = NodeKind::ClassBody;
        if (is_enum) {
            while (!at(";") && !at("}")) {
                while (at_annotation())
                    annotation();
                expect_ident();
                if (at("("))
                    skip_balanced("(", ")");
                if (at("{"))
                    body.children.push_back(class_body());
                if (!accept(","))
                    break;
            }
            accept(";");
        }
        while (!at("}")) {
            if (at_end())
                fail("unterminated class body");
            body.children.push_back(member());
        }
        expect("}");
        body.first = first;
        body.last = prev_index();
        return body;
    }

    Node member() {
        const std::size_t first = index();
        if (at(";")) {
            advance();
            return make(NodeKind::Empty, first);
        }
        const Mark start = mark();
        modifiers();
        if (at("{")) {
            Node init;
            init.kind = NodeKind::Initializer;
            init.children.push_back(block());
            init.first = first;
            init.last = prev_index();
            return init;
        }
        if (at_type_decl_keyword()) {
            reset(start);
            return type_declaration();
        }
        if (at("<"))
            type_parameters();
        const bool is_method =
            (at_ident() && peek_is(1, "(")) || speculate([&] {
                type_text();
                return at_ident() && peek_is(1, "(");
            });
        reset(start);
        if (is_method)
            return method_decl();
        modifiers();
        Node field;
        field.kind = NodeKind::FieldDecl;
        field.children.push_back(type_ref());
        do {
            field.children.push_back(declarator());
        } while (accept(","));
        expect(";");
        field.first = first;
        field.last = prev_index();
        return field;
    }

    // ---- statements -----------------------------------------------------

    Node block() {
        const std::size_t first = index();
        expect("{");
        Node b;
        b.kind = NodeKind::Block;
        while (!at("}")) {
            if (at_end())
                fail("unterminated block");
            b.children.push_back(statement());
        }
        expect("}");
        b.first = first;
        b.last = prev_index();
        return b;
    }

    Node paren_expression() {
        expect("(");
        Node e = expression();
        expect(")");
        return e;
    }

    bool looks_like_local_decl() {
        if (at("final") || at_annotation())
            return true;
        if (!at_ident() && !(at_kind(TokenKind::Keyword) && is_primitive(cur().text)))
            return false;
        return speculate([&] {
            type_text();
            if (!at_ident())
                return false;
            advance();
            return at("=") || at(";") || at(",") || at("[") || at(":");
        });
    }

    Node declarator() {
        const std::size_t first = index();
        Node d;
        d.kind = NodeKind::Declarator;
        d.anchor = expect_ident();
        d.op = tokens_[d.anchor].text;
        d.aux = static_cast<int>(dims().size() / 2);
        if (accept("="))
            d.children.push_back(at("{") ? array_init() : expression());
        d.first = first;
        d.last = prev_index();
        return d;
    }

    Node local_var_decl_body(std::size_t first) {
        Node decl;
        decl.kind = NodeKind::LocalVarDecl;
        decl.op = modifiers();
        decl.children.push_back(type_ref());
        do {
            decl.children.push_back(declarator());
        } while (accept(","));
        decl.first = first;
        decl.last = prev_index();
        return decl;
    }

    Node statement() {
        const std::size_t first = index();
        if (at("{"))
            return block();
        if (accept(";"))
            return make(NodeKind::Empty, first);
        if (accept("if")) {
            Node n;
            n.kind = NodeKind::If;
            n.children.push_back(paren_expression());
            n.children.push_back(statement());
            n.children.push_back(accept("else") ? statement() : none());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("for"))
            return for_statement();
        if (accept("while")) {
            Node n;
            n.kind = NodeKind::While;
            n.children.push_back(paren_expression());
            n.children.push_back(statement());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (accept("do")) {
            Node n;
            n.kind = NodeKind::Do;
            n.children.push_back(statement());
            expect("while");
            n.children.push_back(paren_expression());
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("switch"))
            return switch_construct(NodeKind::Switch);
        if (accept("return")) {
            Node n;
            n.kind = NodeKind::Return;
            if (!at(";"))
                n.children.push_back(expression());
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("break") || at("continue")) {
            const bool is_break = at("break");
            advance();
            Node n;
            n.kind = is_break ? NodeKind::Break : NodeKind::Continue;
            if (at_ident()) {
                n.op = cur().text;
                advance();
            }
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (accept("throw")) {
            Node n;
            n.kind = NodeKind::Throw;
            n.children.push_back(expression());
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("try"))
            return try_statement();
        if (at("synchronized") && peek_is(1, "(")) {
            advance();
            Node n;
            n.kind = NodeKind::Synchronized;
            n.children.push_back(paren_expression());
            n.children.push_back(block());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (accept("assert")) {
            Node n;
            n.kind = NodeKind::Assert;
            n.children.push_back(expression());
            n.children.push_back(accept(":") ? expression() : none());
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at_ident() && cur().text == "yield" && !peek_is(1, "=") && !peek_is(1, "(") && !peek_is(1, ".") &&
            !peek_is(1, "[") && !peek_is(1, "++") && !peek_is(1, "--") && !peek_is(1, ";")) {
            advance();
            Node n;
            n.kind = NodeKind::Yield;
            n.children.push_back(expression());
            expect(";");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at_ident() && peek_is(1, ":")) {
            Node n;
            n.kind = NodeKind::Labeled;
            n.op = cur().text;
            advance();
            advance();
            n.children.push_back(statement());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        {
            const Mark m = mark();
            modifiers();
            const bool type_decl = at_type_decl_keyword();
            reset(m);
            if (type_decl) {
                Node n;
                n.kind = NodeKind::LocalClass;
                n.children.push_back(type_declaration());
                n.first = first;
                n.last = prev_index();
                return n;
            }
        }
        if (looks_like_local_decl()) {
            Node decl = local_var_decl_body(first);
            expect(";");
            decl.last = prev_index();
            return decl;
        }
        Node n;
        n.kind = NodeKind::ExprStmt;
        n.children.push_back(expression());
        expect(";");
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node for_statement() {
        const std::size_t first = index();
        expect("for");
        expect("(");
        const bool foreach = speculate([&] {
            modifiers();
            type_text();
            expect_ident();
            return at(":");
        });
        if (foreach) {
            Node n;
            n.kind = NodeKind::ForEach;
            const std::size_t pfirst = index();
            modifiers();
            Node p;
            p.kind = NodeKind::Parameter;
            p.children.push_back(type_ref());
            p.anchor = expect_ident();
            p.op = tokens_[p.anchor].text;
            p.first = pfirst;
            p.last = prev_index();
            n.children.push_back(std::move(p));
            expect(":");
            n.children.push_back(expression());
            expect(")");
            n.children.push_back(statement());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        Node n;
        n.kind = NodeKind::For;
        Node init;
        init.kind = NodeKind::ForInit;
        init.first = index();
        if (!at(";")) {
            if (looks_like_local_decl()) {
                init.children.push_back(local_var_decl_body(index()));
            } else {
                do {
                    init.children.push_back(expression());
                } while (accept(","));
            }
        }
        init.last = init.children.empty() ? Node::npos : prev_index();
        if (init.children.empty())
            init.first = Node::npos;
        expect(";");
        n.children.push_back(std::move(init));
        n.children.push_back(at(";") ? none() : expression());
        expect(";");
        Node update;
        update.kind = NodeKind::ForUpdate;
        if (!at(")")) {
            update.first = index();
            do {
                update.children.push_back(expression());
            } while (accept(","));
            update.last = prev_index();
        }
        expect(")");
        n.children.push_back(std::move(update));
        n.children.push_back(statement());
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node try_statement() {
        const std::size_t first = index();
        expect("try");
        Node n;
        n.kind = NodeKind::Try;
        if (at("(")) {
            const std::size_t rfirst = index();
            advance();
            Node res;
            res.kind = NodeKind::Resources;
            while (!at(")")) {
                if (looks_like_local_decl())
                    res.children.push_back(local_var_decl_body(index()));
                else
                    res.children.push_back(expression());
                if (!accept(";"))
                    break;
            }
            expect(")");
            res.first = rfirst;
            res.last = prev_index();
            n.children.push_back(std::move(res));
        } else {
            n.children.push_back(none());
        }
        n.children.push_back(block());
        while (at("catch")) {
            const std::size_t cfirst = index();
            advance();
            expect("(");
            const std::size_t pfirst = index();
            modifiers();
            Node type;
            type.kind = NodeKind::TypeRef;
            type.first = index();
            type.op = type_text();
            while (accept("|"))
                type.op += '|' + type_text();
            type.last = prev_index();
            Node p;
            p.kind = NodeKind::Parameter;
            p.children.push_back(std::move(type));
            p.anchor = expect_ident();
            p.op = tokens_[p.anchor].text;
            p.first = pfirst;
            p.last = prev_index();
            expect(")");
            Node c;
            c.kind = NodeKind::Catch;
            c.children.push_back(std::move(p));
            c.children.push_back(block());
            c.first = cfirst;
            c.last = prev_index();
            n.children.push_back(std::move(c));
        }
        if (accept("finally"))
            n.children.push_back(block());
        else
            n.children.push_back(none());
        if (n.children.size() == 3 && !n.children[0].present() && !n.children[2].present())
            fail("try without catch or finally");
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node switch_construct(NodeKind kind) {
        const std::size_t first = index();
        expect("switch");
        Node n;
        n.kind = kind;
        n.children.push_back(paren_expression());
        expect("{");
        while (!at("}")) {
            if (at_end())
                fail("unterminated switch");
            const std::size_t gfirst = index();
            Node group;
            group.kind = NodeKind::SwitchGroup;
            Node labels;
            labels.kind = NodeKind::CaseLabels;
            labels.first = index();
            bool arrow = false;
            // Colon-form groups may stack several `case X:` labels.
            do {
                if (accept("default")) {
                    labels.aux = 1;
                } else {
                    expect("case");
                    const bool saved = no_lambda_;
                    no_lambda_ = true;
                    do {
                        labels.children.push_back(conditional());
                    } while (accept(","));
                    no_lambda_ = saved;
                }
                if (accept("->")) {
                    arrow = true;
                    break;
                }
                expect(":");
            } while (at("case") || at("default"));
            labels.last = prev_index();
            group.children.push_back(std::move(labels));
            if (arrow) {
                n.aux = 1;
                if (at("{")) {
                    group.children.push_back(block());
                } else if (at("throw")) {
                    group.children.push_back(statement());
                } else {
                    const std::size_t sfirst = index();
                    Node s;
                    s.kind = NodeKind::ExprStmt;
                    s.children.push_back(expression());
                    expect(";");
                    s.first = sfirst;
                    s.last = prev_index();
                    group.children.push_back(std::move(s));
                }
            } else {
                while (!at("case") && !at("default") && !at("}")) {
                    if (at_end())
                        fail("unterminated switch");
                    group.children.push_back(statement());
                }
            }
            group.first = gfirst;
            group.last = prev_index();
            n.children.push_back(std::move(group));
        }
        expect("}");
        n.first = first;
        n.last = prev_index();
        return n;
    }

    // ---- expressions ----------------------------------------------------

    Node array_init() {
        const std::size_t first = index();
        expect("{");
        Node n;
        n.kind = NodeKind::ArrayInit;
        while (!at("}")) {
            n.children.push_back(at("{") ? array_init() : expression());
            if (!accept(","))
                break;
        }
        expect("}");
        n.first = first;
        n.last = prev_index();
        return n;
    }

    bool at_lambda_start() const {
        if (no_lambda_ || gt_used_ != 0)
            return false;
        if (at_ident() && peek_is(1, "->"))
            return true;
        if (!at("("))
            return false;
        int depth = 0;
        for (std::size_t k = 0; pos_ + k < code_.size(); ++k) {
            const auto& t = tok(k).text;
            if (t == "(")
                ++depth;
            else if (t == ")" && --depth == 0)
                return peek_is(k + 1, "->");
        }
        return false;
    }

    Node lambda() {
        const std::size_t first = index();
        Node params;
        params.kind = NodeKind::ParamList;
        params.first = index();
        if (at_ident()) {
            Node p;
            p.kind = NodeKind::Parameter;
            p.children.push_back(none());
            p.anchor = expect_ident();
            p.op = tokens_[p.anchor].text;
            p.first = p.last = p.anchor;
            params.children.push_back(std::move(p));
        } else {
            expect("(");
            while (!at(")")) {
                if (at_ident() && (peek_is(1, ",") || peek_is(1, ")"))) {
                    Node p;
                    p.kind = NodeKind::Parameter;
                    p.children.push_back(none());
                    p.anchor = expect_ident();
                    p.op = tokens_[p.anchor].text;
                    p.first = p.last = p.anchor;
                    params.children.push_back(std::move(p));
                } else {
                    params.children.push_back(formal_parameter());
                }
                if (!accept(","))
                    break;
            }
            expect(")");
        }
        params.last = prev_index();
        expect("->");
        Node n;
        n.kind = NodeKind::Lambda;
        n.children.push_back(std::move(params));
        const bool saved = no_lambda_;
        no_lambda_ = false;
        n.children.push_back(at("{") ? block() : expression());
        no_lambda_ = saved;
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node expression() {
        if (at_lambda_start())
            return lambda();
        const std::size_t first = index();
        Node lhs = conditional();
        if (!at_end() && gt_used_ == 0 &&
            std::find(kAssignOps.begin(), kAssignOps.end(), cur().text) != kAssignOps.end()) {
            Node n;
            n.kind = NodeKind::Assign;
            n.op = cur().text;
            advance();
            n.children.push_back(std::move(lhs));
            n.children.push_back(expression());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        return lhs;
    }

    Node conditional() {
        const std::size_t first = index();
        Node c = binary(1);
        if (!at("?"))
            return c;
        advance();
        Node n;
        n.kind = NodeKind::Conditional;
        n.children.push_back(std::move(c));
        const bool saved = no_lambda_;
        no_lambda_ = false;
        n.children.push_back(expression());
        no_lambda_ = saved;
        expect(":");
        n.children.push_back(at_lambda_start() ? lambda() : conditional());
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node binary(int min_prec) {
        const std::size_t first = index();
        Node lhs = unary();
        while (!at_end() && gt_used_ == 0) {
            const std::string op = cur().text;
            const int prec = cur().kind == TokenKind::Comment ? 0 : binary_precedence(op);
            if (prec == 0 || prec < min_prec)
                break;
            if (cur().kind != TokenKind::Operator && op != "instanceof")
                break;
            advance();
            Node n;
            n.op = op;
            n.children.push_back(std::move(lhs));
            if (op == "instanceof") {
                n.kind = NodeKind::InstanceOf;
                accept("final");
                n.children.push_back(type_ref());
                if (at_ident() && !peek_is(1, "("))
                    advance();  // pattern binding
            } else {
                n.kind = NodeKind::Binary;
                n.children.push_back(binary(prec + 1));
            }
            n.first = first;
            n.last = prev_index();
            lhs = std::move(n);
        }
        return lhs;
    }

    bool cast_follows() const {
        if (at_end() || gt_used_ != 0)
            return false;
        const Token& t = cur();
        if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Literal)
            return true;
        if (t.text == "(" || t.text == "!" || t.text == "~")
            return true;
        return t.text == "this" || t.text == "super" || t.text == "new" || t.text == "switch" ||
               is_primitive(t.text);
    }

    Node unary() {
        const std::size_t first = index();
        if (!at_end() && gt_used_ == 0 && cur().kind == TokenKind::Operator &&
            (at("+") || at("-") || at("!") || at("~") || at("++") || at("--"))) {
            Node n;
            n.kind = NodeKind::Unary;
            n.op = cur().text;
            advance();
            n.children.push_back(unary());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("(")) {
            std::optional<bool> primitive_cast;
            const bool is_cast = speculate([&] {
                advance();
                const bool prim = is_primitive(cur().text);
                type_text();
                while (accept("&"))
                    type_text();
                expect(")");
                if (prim) {
                    primitive_cast = true;
                    return true;
                }
                return cast_follows() || at_lambda_start();
            });
            if (is_cast) {
                advance();
                Node n;
                n.kind = NodeKind::Cast;
                Node type = type_ref();
                while (accept("&")) {
                    type.op += '&' + type_text();
                    type.last = prev_index();
                }
                n.children.push_back(std::move(type));
                expect(")");
                n.children.push_back(at_lambda_start() ? lambda() : unary());
                n.first = first;
                n.last = prev_index();
                return n;
            }
        }
        return postfix(primary());
    }

    Node arguments() {
        const std::size_t first = index();
        expect("(");
        Node args;
        args.kind = NodeKind::Arguments;
        const bool saved = no_lambda_;
        no_lambda_ = false;
        if (!at(")")) {
            do {
                args.children.push_back(expression());
            } while (accept(","));
        }
        no_lambda_ = saved;
        expect(")");
        args.first = first;
        args.last = prev_index();
        return args;
    }

    Node creator(std::size_t first) {
        expect("new");
        if (at("<"))
            type_parameters();
        const std::size_t tfirst = index();
        Node type;
        type.kind = NodeKind::TypeRef;
        type.op = base_type_text();
        type.first = tfirst;
        type.last = prev_index();
        if (at("[")) {
            Node n;
            n.kind = NodeKind::NewArray;
            n.children.push_back(std::move(type));
            while (at("[")) {
                advance();
                if (accept("]")) {
                    n.aux += 1;
                    continue;
                }
                n.children.push_back(expression());
                expect("]");
            }
            n.children.push_back(at("{") ? array_init() : none());
            n.first = first;
            n.last = prev_index();
            return n;
        }
        Node n;
        n.kind = NodeKind::New;
        n.children.push_back(std::move(type));
        n.children.push_back(arguments());
        n.children.push_back(at("{") ? class_body() : none());
        n.first = first;
        n.last = prev_index();
        return n;
    }

    Node primary() {
        const std::size_t first = index();
        if (at_end())
            fail("unexpected end of input in expression");
        if (gt_used_ != 0)
            fail("unexpected '>'");
        const Token& t = cur();
        if (at_lambda_start())
            return lambda();
        if (t.kind == TokenKind::Literal) {
            Node n;
            n.kind = NodeKind::Literal;
            n.op = t.text;
            n.anchor = index();
            advance();
            n.first = n.last = n.anchor;
            return n;
        }
        if (at("(")) {
            advance();
            Node n;
            n.kind = NodeKind::Paren;
            const bool saved = no_lambda_;
            no_lambda_ = false;
            n.children.push_back(expression());
            no_lambda_ = saved;
            expect(")");
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (at("this") || at("super")) {
            const bool is_this = at("this");
            advance();
            if (at("(")) {
                Node n;
                n.kind = NodeKind::MethodCall;
                n.op = is_this ? "this" : "super";
                n.anchor = first;
                n.children.push_back(none());
                n.children.push_back(arguments());
                n.first = first;
                n.last = prev_index();
                return n;
            }
            return make(is_this ? NodeKind::This : NodeKind::Super, first);
        }
        if (at("new"))
            return creator(first);
        if (at("switch"))
            return switch_construct(NodeKind::SwitchExpr);
        if (t.kind == TokenKind::Keyword && (is_primitive(t.text) || t.text == "void")) {
            Node type = type_ref();
            if (accept("::")) {
                Node n;
                n.kind = NodeKind::MethodRef;
                n.children.push_back(std::move(type));
                n.op = cur().text;
                advance();
                n.first = first;
                n.last = prev_index();
                return n;
            }
            expect(".");
            expect("class");
            Node n;
            n.kind = NodeKind::ClassLit;
            n.children.push_back(std::move(type));
            n.first = first;
            n.last = prev_index();
            return n;
        }
        if (t.kind == TokenKind::Identifier) {
            Node n;
            n.anchor = index();
            n.op = t.text;
            advance();
            if (at("(")) {
                n.kind = NodeKind::MethodCall;
                n.children.push_back(none());
                n.children.push_back(arguments());
            } else {
                n.kind = NodeKind::Name;
            }
            n.first = first;
            n.last = prev_index();
            return n;
        }
        fail("unexpected '" + t.text + "' in expression");
    }

    Node postfix(Node base) {
        const std::size_t first = base.first;
        while (!at_end() && gt_used_ == 0) {
            if (at(".")) {
                advance();
                if (at("new")) {
                    Node created = creator(index());
                    created.first = first;
                    created.children.push_back(std::move(base));
                    base = std::move(created);
                    continue;
                }
                if (at("<"))
                    type_parameters();
                if (at("class")) {
                    advance();
                    Node n;
                    n.kind = NodeKind::ClassLit;
                    Node type;
                    type.kind = NodeKind::TypeRef;
                    type.first = base.first;
                    type.last = base.last;
                    n.children.push_back(std::move(type));
                    n.first = first;
                    n.last = prev_index();
                    base = std::move(n);
                    continue;
                }
                Node n;
                n.anchor = index();
                if (at("this") || at("super")) {
                    n.op = cur().text;
                    advance();
                } else {
                    n.op = cur().text;
                    expect_ident();
                }
                if (at("(")) {
                    n.kind = NodeKind::MethodCall;
                    n.children.push_back(std::move(base));
                    n.children.push_back(arguments());
                } else {
                    n.kind = NodeKind::FieldAccess;
                    n.children.push_back(std::move(base));
                }
                n.first = first;
                n.last = prev_index();
                base = std::move(n);
            } else if (at("[")) {
                if (peek_is(1, "]")) {
                    // array type in a class literal or method reference
                    dims();
                    Node type;
                    type.kind = NodeKind::TypeRef;
                    type.first = base.first;
                    type.last = prev_index();
                    Node n;
                    if (accept("::")) {
                        n.kind = NodeKind::MethodRef;
                        n.op = cur().text;
                        advance();
                    } else {
                        expect(".");
                        expect("class");
                        n.kind = NodeKind::ClassLit;
                    }
                    n.children.push_back(std::move(type));
                    n.first = first;
                    n.last = prev_index();
                    base = std::move(n);
                    continue;
                }
                advance();
                Node n;
                n.kind = NodeKind::ArrayAccess;
                n.children.push_back(std::move(base));
                const bool saved = no_lambda_;
                no_lambda_ = false;
                n.children.push_back(expression());
                no_lambda_ = saved;
                expect("]");
                n.first = first;
                n.last = prev_index();
                base = std::move(n);
            } else if ((at("++") || at("--")) && cur().kind == TokenKind::Operator) {
                Node n;
                n.kind = NodeKind::Postfix;
                n.op = cur().text;
                advance();
                n.children.push_back(std::move(base));
                n.first = first;
                n.last = prev_index();
                base = std::move(n);
            } else if (at("::")) {
                advance();
                Node n;
                n.kind = NodeKind::MethodRef;
                n.op = cur().text;
                advance();
                n.children.push_back(std::move(base));
                n.first = first;
                n.last = prev_index();
                base = std::move(n);
            } else if (at("<") && base.kind == NodeKind::Name && generic_method_ref_follows()) {
                type_parameters();
                dims();
                expect("::");
                Node n;
                n.kind = NodeKind::MethodRef;
                n.op = cur().text;
                advance();
                n.children.push_back(std::move(base));
                n.first = first;
                n.last = prev_index();
                base = std::move(n);
            } else {
                break;
            }
        }
        return base;
    }

    bool generic_method_ref_follows() {
        return speculate([&] {
            type_parameters();
            dims();
            return at("::");
        });
    }

    const std::vector<Token>& tokens_;
    std::vector<std::size_t> code_;
    std::size_t pos_ = 0;
    std::size_t gt_used_ = 0;
    bool no_lambda_ = false;
    Token eof_;
};

void collect_methods(const Node& node, std::vector<const Node*>& out) {
    if (node.kind == NodeKind::Method) {
        out.push_back(&node);
        return;
    }
    if (node.kind == NodeKind::ClassDecl || node.kind == NodeKind::ClassBody)
        for (const auto& c : node.children)
            collect_methods(c, out);
}

}  // namespace

Node parse_method_tree(const std::vector<Token>& tokens) {
    return Parser(tokens).method_declaration();
}

SourceMethod parse_method(std::string_view source, BuggyRegion region, const ParseOptions& options) {
    auto tokens = lex(source, LexOptions{options.first_line});
    Node tree = parse_method_tree(tokens);
    SourceMethod method(options.id, std::string(source), std::move(tokens), std::move(tree), region);
    if (region.start_line > region.end_line)
        throw RegionError("buggy region start " + std::to_string(region.start_line) + " is after end " +
                          std::to_string(region.end_line));
    if (region.start_line < method.first_line() || region.end_line > method.last_line())
        throw RegionError("buggy region " + std::to_string(region.start_line) + ":" +
                          std::to_string(region.end_line) + " lies outside method lines " +
                          std::to_string(method.first_line()) + ":" + std::to_string(method.last_line()));
    return method;
}

std::vector<ExtractedMethod> extract_methods(std::string_view file_source) {
    const auto tokens = lex(file_source);
    const auto types = Parser(tokens).compilation_unit();
    std::vector<const Node*> methods;
    for (const auto& t : types)
        collect_methods(t, methods);

    std::vector<ExtractedMethod> out;
    for (const Node* m : methods) {
        if (!m->children[2].present())
            continue;  // abstract or interface method
        const Token& first = tokens[m->first];
        const Token& last = tokens[m->last];
        const std::size_t line_start = file_source.rfind('\n', first.offset == 0 ? 0 : first.offset - 1);
        const std::size_t begin = (line_start == std::string_view::npos || first.offset == 0) ? 0 : line_start + 1;
        std::string text(file_source.substr(begin, last.end_offset() - begin));
        for (std::size_t i = 0; i < first.offset - begin; ++i)
            if (text[i] != '\t')
                text[i] = ' ';
        int last_line = last.line + static_cast<int>(std::count(last.text.begin(), last.text.end(), '\n'));
        out.push_back(ExtractedMethod{m->op, std::move(text), first.line, last_line});
    }
    return out;
}

}  // namespace natrob::source
