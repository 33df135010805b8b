#pragma once

#include "natrob/lm/vocabulary.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace natrob::lm {

class EmptyCorpus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bad magic, unsupported version, truncation or inconsistent contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Anything that can assign natural-log probabilities to a token sequence.
class TokenScorer {
public:
    virtual ~TokenScorer() = default;
    /// ln p(t_i | t_1..t_{i-1}) for each token followed by the end marker
    /// (models that have one) or for each token only (external LMs).
    virtual std::vector<double> log_probs(const std::vector<std::string>& tokens) const = 0;
};

enum class LogBase { Two, E };

struct CrossEntropy {
    double value = 0.0;
    std::size_t token_count = 0;
};

/// Mean negative log probability per scored position. Throws EmptyInput for
/// an empty token list.
CrossEntropy cross_entropy(const TokenScorer& scorer, const std::vector<std::string>& tokens,
                           LogBase base = LogBase::Two);

struct TrainOptions {
    int order = 4;
    /// Tokens seen fewer times become <unk>, in training counts and queries.
    std::uint64_t min_count = 1;
};

/// D1, D2, D3+ for one order.
using Discounts = std::array<double, 3>;

/// Interpolated modified Kneser-Ney n-gram model. The highest order uses raw
/// counts, lower orders use continuation counts, and the unigram level is
/// interpolated with a uniform distribution over every token except <s>.
/// Immutable after construction; safe to query from many threads.
class NgramModel final : public TokenScorer {
public:
    NgramModel(NgramModel&&) noexcept;
    NgramModel& operator=(NgramModel&&) noexcept;
    ~NgramModel() override;

    /// Each sequence is one sentence (a method). Throws EmptyCorpus when the
    /// corpus or any sequence is empty.
    static NgramModel train(const std::vector<std::vector<std::string>>& corpus, const TrainOptions& options = {});

    /// p(token | context). Only the last order-1 context tokens matter; shorter
    /// contexts are left-padded with <s>. Unknown tokens map to <unk>.
    /// p(<s> | .) is 0.
    double prob(const std::string& token, const std::vector<std::string>& context) const;
    double prob(TokenId token, const std::vector<TokenId>& context) const;

    std::vector<double> log_probs(const std::vector<std::string>& tokens) const override;

    int order() const;
    std::uint64_t min_count() const;
    const Vocabulary& vocabulary() const;
    /// Discounts of order k (1-based).
    const Discounts& discounts(int k) const;

    void save(const std::string& path) const;
    static NgramModel load(const std::string& path);
    void write(std::ostream& out) const;
    static NgramModel read(std::istream& in);

    struct Impl;

private:
    explicit NgramModel(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

}  // namespace natrob::lm
