#include "natrob/source/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace natrob::source {

namespace {

constexpr std::array<std::string_view, 51> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",       "case",
    "catch",    "char",       "class",     "const",     "continue",   "default",
    "do",       "double",     "else",      "enum",      "extends",    "final",
    "finally",  "float",      "for",       "goto",      "if",         "implements",
    "import",   "instanceof", "int",       "interface", "long",       "native",
    "new",      "package",    "private",   "protected", "public",     "return",
    "short",    "static",     "strictfp",  "super",     "switch",     "synchronized",
    "this",     "throw",      "throws",    "transient", "try",        "void",
    "volatile", "while",      "_"};

// Longest first so greedy matching works.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "&&",
    "||",   "==",  "!=",  "<=",  ">=",  "+=", "-=", "*=", "/=", "&=",
    "|=",   "^=",  "%=",  "<<",  ">>",  "=",  ">",  "<",  "!",  "~",
    "?",    ":",   "+",   "-",   "*",   "/",  "&",  "|"};

constexpr std::string_view kSingleOps = "^%";
constexpr std::string_view kSeparators = "(){}[];,.@";

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || std::isdigit(c); }

class Lexer {
public:
    Lexer(std::string_view src, int first_line) : src_(src), line_(first_line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < src_.size()) {
            const unsigned char c = static_cast<unsigned char>(src_[pos_]);
            if (c == '\n') {
                advance();
                continue;
            }
            if (std::isspace(c) || (c == 0xEF && starts_with("\xEF\xBB\xBF"))) {
                if (c == 0xEF)
                    pos_ += 3;
                else
                    advance();
                continue;
            }
            start_ = pos_;
            start_line_ = line_;
            start_col_ = col_;
            if (starts_with("//")) {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
                emit(out, TokenKind::Comment);
            } else if (starts_with("/*")) {
                advance(2);
                while (pos_ < src_.size() && !starts_with("*/"))
                    advance();
                if (pos_ >= src_.size())
                    throw ParseError(start_line_, "unterminated block comment");
                advance(2);
                emit(out, TokenKind::Comment);
            } else if (starts_with("\"\"\"")) {
                text_block();
                emit(out, TokenKind::Literal);
            } else if (c == '"' || c == '\'') {
                quoted(static_cast<char>(c));
                emit(out, TokenKind::Literal);
            } else if (std::isdigit(c) || (c == '.' && pos_ + 1 < src_.size() &&
                                           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                number();
                emit(out, TokenKind::Literal);
            } else if (is_ident_start(c)) {
                while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_])))
                    advance();
                const auto word = src_.substr(start_, pos_ - start_);
                TokenKind kind = TokenKind::Identifier;
                if (word == "true" || word == "false" || word == "null")
                    kind = TokenKind::Literal;
                else if (is_java_keyword(word))
                    kind = TokenKind::Keyword;
                emit(out, kind);
            } else {
                punctuation(c);
                const auto text = src_.substr(start_, pos_ - start_);
                const bool sep = text == "..." || text == "::" ||
                                 (text.size() == 1 && kSeparators.find(text[0]) != std::string_view::npos);
                emit(out, sep ? TokenKind::Separator : TokenKind::Operator);
            }
        }
        return out;
    }

private:
    bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void emit(std::vector<Token>& out, TokenKind kind) {
        out.push_back(Token{std::string(src_.substr(start_, pos_ - start_)), kind, start_line_, start_col_, start_});
    }

    void quoted(char quote) {
        advance();
        while (true) {
            if (pos_ >= src_.size() || src_[pos_] == '\n')
                throw ParseError(start_line_, quote == '"' ? "unterminated string literal"
                                                           : "unterminated character literal");
            const char ch = src_[pos_];
            if (ch == '\\') {
                advance(2);
                continue;
            }
            advance();
            if (ch == quote)
                break;
        }
        if (quote == '\'' && pos_ - start_ == 2)
            throw ParseError(start_line_, "empty character literal");
    }

    void text_block() {
        advance(3);
        while (pos_ < src_.size() && !starts_with("\"\"\"")) {
            if (src_[pos_] == '\\')
                advance();
            advance();
        }
        if (pos_ >= src_.size())
            throw ParseError(start_line_, "unterminated text block");
        advance(3);
    }

    void digits(bool hex) {
        while (pos_ < src_.size()) {
            const unsigned char ch = static_cast<unsigned char>(src_[pos_]);
            if (ch == '_' || std::isdigit(ch) || (hex && std::isxdigit(ch)))
                advance();
            else
                break;
        }
    }

    void number() {
        const bool hex = starts_with("0x") || starts_with("0X");
        const bool bin = starts_with("0b") || starts_with("0B");
        if (hex || bin)
            advance(2);
        digits(hex);
        if (!bin && pos_ < src_.size() && src_[pos_] == '.' &&
            !(pos_ + 1 < src_.size() && src_[pos_ + 1] == '.')) {
            advance();
            digits(hex);
        }
        if (pos_ < src_.size()) {
            const char e = static_cast<char>(std::tolower(static_cast<unsigned char>(src_[pos_])));
            if ((!hex && e == 'e') || (hex && e == 'p')) {
                advance();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-'))
                    advance();
                digits(false);
            }
        }
        if (pos_ < src_.size() && std::string_view("lLfFdD").find(src_[pos_]) != std::string_view::npos)
            advance();
        if (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(start_line_, "malformed numeric literal");
    }

    void punctuation(unsigned char c) {
        for (auto op : kOperators) {
            if (starts_with(op)) {
                advance(op.size());
                return;
            }
        }
        if (kSingleOps.find(static_cast<char>(c)) != std::string_view::npos) {
            advance(starts_with("^=") || starts_with("%=") ? 2 : 1);
            return;
        }
        if (kSeparators.find(static_cast<char>(c)) != std::string_view::npos) {
            advance();
            return;
        }
        throw ParseError(line_, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_;
    int col_ = 1;
    std::size_t start_ = 0;
    int start_line_ = 1;
    int start_col_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Literal: return "Literal";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Separator: return "Separator";
    case TokenKind::Comment: return "Comment";
    }
    return "?";
}

bool is_java_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_valid_identifier(std::string_view word) {
    if (word.empty() || !is_ident_start(static_cast<unsigned char>(word[0])))
        return false;
    if (!std::all_of(word.begin(), word.end(), [](char c) { return is_ident_part(static_cast<unsigned char>(c)); }))
        return false;
    return !is_java_keyword(word) && word != "true" && word != "false" && word != "null";
}

std::vector<Token> lex(std::string_view source, const LexOptions& options) {
    return Lexer(source, options.first_line).run();
}

std::vector<std::string> code_token_texts(std::string_view source) {
    std::vector<std::string> out;
    for (auto& t : lex(source))
        if (t.is_code())
            out.push_back(std::move(t.text));
    return out;
}

bool token_equal(std::string_view a, std::string_view b) {
    return code_token_texts(a) == code_token_texts(b);
}

}  // namespace natrob::source
