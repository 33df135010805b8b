#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace natrob::lm {

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kUnk = "<unk>";

using TokenId = std::uint32_t;

/// Dense token ids. 0, 1, 2 are always <s>, </s>, <unk>; other tokens follow
/// in byte order, so building from the same counts gives the same ids.
class Vocabulary {
public:
    static constexpr TokenId kBosId = 0;
    static constexpr TokenId kEosId = 1;
    static constexpr TokenId kUnkId = 2;

    Vocabulary();

    /// Keeps tokens seen at least `min_count` times.
    static Vocabulary build(const std::map<std::string, std::uint64_t>& frequencies, std::uint64_t min_count);
    /// Rebuilds from an id-ordered list that starts with the reserved symbols.
    static Vocabulary from_tokens(std::vector<std::string> tokens);

    std::optional<TokenId> find(std::string_view token) const;
    /// Id of `token`, or <unk>.
    TokenId lookup(std::string_view token) const;
    const std::string& token(TokenId id) const { return tokens_.at(id); }
    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

private:
    void add(std::string token);

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> ids_;
};

}  // namespace natrob::lm
