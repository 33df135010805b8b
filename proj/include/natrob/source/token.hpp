#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace natrob::source {

enum class TokenKind { Identifier, Keyword, Literal, Operator, Separator, Comment };

std::string_view to_string(TokenKind kind);

/// One lexical token. `line` and `column` are 1-based; `offset` is the byte
/// offset of the first character in the lexed buffer.
struct Token {
    std::string text;
    TokenKind kind = TokenKind::Identifier;
    int line = 1;
    int column = 1;
    std::size_t offset = 0;

    std::size_t end_offset() const { return offset + text.size(); }
    bool is(std::string_view s) const { return text == s && kind != TokenKind::Comment; }
    bool is_code() const { return kind != TokenKind::Comment; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct LexOptions {
    /// Line number assigned to the first line of the buffer.
    int first_line = 1;
};

/// Lexes Java source into tokens. Whitespace is dropped, comments are kept.
/// Throws ParseError on unterminated literals/comments or stray characters.
std::vector<Token> lex(std::string_view source, const LexOptions& options = {});

/// Non-comment token texts, the stream used for language-model scoring.
std::vector<std::string> code_token_texts(std::string_view source);

/// True iff both inputs lex to the same non-comment token sequence.
bool token_equal(std::string_view a, std::string_view b);

bool is_java_keyword(std::string_view word);
bool is_valid_identifier(std::string_view word);

}  // namespace natrob::source
