#include "model_impl.hpp"

#include <algorithm>
#include <cmath>

namespace natrob::lm {

namespace {

constexpr Discounts kFallback{0.5, 1.0, 1.5};

}  // namespace

Discounts estimate_discounts(const std::array<std::uint64_t, 4>& n) {
    Discounts d = kFallback;
    const double n1 = static_cast<double>(n[0]);
    const double n2 = static_cast<double>(n[1]);
    const double n3 = static_cast<double>(n[2]);
    const double n4 = static_cast<double>(n[3]);
    if (n1 + 2 * n2 <= 0)
        return d;
    const double y = n1 / (n1 + 2 * n2);
    const double est[3] = {
        n1 > 0 ? 1 - 2 * y * n2 / n1 : NAN,
        n2 > 0 ? 2 - 3 * y * n3 / n2 : NAN,
        n3 > 0 ? 3 - 4 * y * n4 / n3 : NAN,
    };
    for (int j = 0; j < 3; ++j)
        if (std::isfinite(est[j]) && est[j] > 0 && est[j] < j + 1)
            d[j] = est[j];
    return d;
}

void NgramModel::Impl::finalize_stats() {
    for (auto& level : levels)
        for (auto& [ctx, stats] : level.contexts) {
            stats.total = 0;
            stats.bands = {};
            for (const auto& [w, c] : stats.counts) {
                stats.total += c;
                ++stats.bands[std::min<std::uint32_t>(c, 3) - 1];
            }
        }
}

NgramModel::NgramModel(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
NgramModel::NgramModel(NgramModel&&) noexcept = default;
NgramModel& NgramModel::operator=(NgramModel&&) noexcept = default;
NgramModel::~NgramModel() = default;

NgramModel NgramModel::train(const std::vector<std::vector<std::string>>& corpus, const TrainOptions& options) {
    if (options.order < 1)
        throw std::invalid_argument("n-gram order must be at least 1");
    if (corpus.empty())
        throw EmptyCorpus("training corpus is empty");
    std::map<std::string, std::uint64_t> freq;
    for (const auto& seq : corpus) {
        if (seq.empty())
            throw EmptyCorpus("training corpus contains an empty sequence");
        for (const auto& t : seq)
            ++freq[t];
    }

    auto impl = std::make_unique<Impl>();
    impl->order = options.order;
    impl->min_count = std::max<std::uint64_t>(options.min_count, 1);
    impl->vocab = Vocabulary::build(freq, impl->min_count);
    impl->levels.resize(static_cast<std::size_t>(options.order));

    const std::size_t n = static_cast<std::size_t>(options.order);
    Level& top = impl->levels.back();
    Key padded;
    for (const auto& seq : corpus) {
        padded.assign(n - 1, Vocabulary::kBosId);
        for (const auto& t : seq)
            padded.push_back(impl->vocab.lookup(t));
        padded.push_back(Vocabulary::kEosId);
        for (std::size_t i = n - 1; i < padded.size(); ++i) {
            Key ctx(padded.begin() + static_cast<long>(i - (n - 1)), padded.begin() + static_cast<long>(i));
            ++top.contexts[ctx].counts[padded[i]];
        }
    }

    // Continuation counts: distinct left extensions among the next order's
    // n-grams.
    for (std::size_t k = n - 1; k >= 1; --k) {
        const Level& upper = impl->levels[k];
        Level& lower = impl->levels[k - 1];
        for (const auto& [ctx, stats] : upper.contexts)
            for (const auto& [w, c] : stats.counts) {
                (void)c;
                Key suffix(ctx.begin() + 1, ctx.end());
                ++lower.contexts[suffix].counts[w];
            }
    }

    for (auto& level : impl->levels) {
        std::array<std::uint64_t, 4> coc{};
        for (const auto& [ctx, stats] : level.contexts)
            for (const auto& [w, c] : stats.counts)
                if (c <= 4)
                    ++coc[c - 1];
        level.discounts = estimate_discounts(coc);
    }
    impl->finalize_stats();
    return NgramModel(std::move(impl));
}

double NgramModel::prob(TokenId w, const std::vector<TokenId>& context) const {
    const Impl& m = *impl_;
    if (w == Vocabulary::kBosId)
        return 0.0;
    if (w >= m.vocab.size())
        w = Vocabulary::kUnkId;
    const std::size_t n = static_cast<std::size_t>(m.order);
    // Left-pad to n - 1 and keep the tail.
    Key ctx(n - 1, Vocabulary::kBosId);
    const std::size_t take = std::min(context.size(), n - 1);
    std::copy(context.end() - static_cast<long>(take), context.end(), ctx.end() - static_cast<long>(take));

    double p = 1.0 / static_cast<double>(m.vocab.size() - 1);
    Key key;
    for (std::size_t k = 1; k <= n; ++k) {
        key.assign(ctx.end() - static_cast<long>(k - 1), ctx.end());
        const Level& level = m.levels[k - 1];
        auto it = level.contexts.find(key);
        if (it == level.contexts.end() || it->second.total == 0)
            continue;  // unseen context: full backoff
        const ContextStats& s = it->second;
        auto cit = s.counts.find(w);
        const double c = cit == s.counts.end() ? 0.0 : cit->second;
        const Discounts& d = level.discounts;
        const double dc = c == 0 ? 0.0 : d[static_cast<std::size_t>(std::min(c, 3.0)) - 1];
        const double total = static_cast<double>(s.total);
        const double gamma = (d[0] * static_cast<double>(s.bands[0]) + d[1] * static_cast<double>(s.bands[1]) +
                              d[2] * static_cast<double>(s.bands[2])) /
                             total;
        p = std::max(c - dc, 0.0) / total + gamma * p;
    }
    return p;
}

double NgramModel::prob(const std::string& token, const std::vector<std::string>& context) const {
    std::vector<TokenId> ids;
    ids.reserve(context.size());
    for (const auto& t : context)
        ids.push_back(impl_->vocab.lookup(t));
    return prob(impl_->vocab.lookup(token), ids);
}

std::vector<double> NgramModel::log_probs(const std::vector<std::string>& tokens) const {
    std::vector<TokenId> ids;
    ids.reserve(tokens.size() + 1);
    for (const auto& t : tokens)
        ids.push_back(impl_->vocab.lookup(t));
    ids.push_back(Vocabulary::kEosId);
    std::vector<double> out;
    out.reserve(ids.size());
    std::vector<TokenId> ctx;
    const std::size_t keep = static_cast<std::size_t>(impl_->order - 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::size_t from = i > keep ? i - keep : 0;
        ctx.assign(ids.begin() + static_cast<long>(from), ids.begin() + static_cast<long>(i));
        out.push_back(std::log(prob(ids[i], ctx)));
    }
    return out;
}

int NgramModel::order() const { return impl_->order; }
std::uint64_t NgramModel::min_count() const { return impl_->min_count; }
const Vocabulary& NgramModel::vocabulary() const { return impl_->vocab; }
const Discounts& NgramModel::discounts(int k) const { return impl_->levels.at(static_cast<std::size_t>(k - 1)).discounts; }

CrossEntropy cross_entropy(const TokenScorer& scorer, const std::vector<std::string>& tokens, LogBase base) {
    if (tokens.empty())
        throw EmptyInput("cannot compute cross-entropy of an empty token sequence");
    const auto lps = scorer.log_probs(tokens);
    if (lps.empty())
        throw EmptyInput("scorer returned no probabilities");
    double sum = 0.0;
    for (double lp : lps)
        sum += lp;
    double h = -sum / static_cast<double>(lps.size());
    if (base == LogBase::Two)
        h /= std::log(2.0);
    return {h, lps.size()};
}

}  // namespace natrob::lm
