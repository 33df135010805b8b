#include "natrob/lm/vocabulary.hpp"

#include <stdexcept>

namespace natrob::lm {

Vocabulary::Vocabulary() {
    add(std::string(kBos));
    add(std::string(kEos));
    add(std::string(kUnk));
}

void Vocabulary::add(std::string token) {
    if (ids_.count(token))
        throw std::invalid_argument("duplicate vocabulary entry '" + token + "'");
    ids_.emplace(token, static_cast<TokenId>(tokens_.size()));
    tokens_.push_back(std::move(token));
}

Vocabulary Vocabulary::build(const std::map<std::string, std::uint64_t>& frequencies, std::uint64_t min_count) {
    Vocabulary v;
    for (const auto& [token, count] : frequencies) {
        if (token == kBos || token == kEos || token == kUnk)
            continue;
        if (count >= min_count)
            v.add(token);
    }
    return v;
}

Vocabulary Vocabulary::from_tokens(std::vector<std::string> tokens) {
    if (tokens.size() < 3 || tokens[0] != kBos || tokens[1] != kEos || tokens[2] != kUnk)
        throw std::invalid_argument("vocabulary must start with <s>, </s>, <unk>");
    Vocabulary v;
    for (std::size_t i = 3; i < tokens.size(); ++i)
        v.add(std::move(tokens[i]));
    return v;
}

std::optional<TokenId> Vocabulary::find(std::string_view token) const {
    auto it = ids_.find(std::string(token));
    if (it == ids_.end())
        return std::nullopt;
    return it->second;
}

TokenId Vocabulary::lookup(std::string_view token) const { return find(token).value_or(kUnkId); }

}  // namespace natrob::lm
