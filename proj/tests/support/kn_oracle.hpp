#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace natrob::testing {

using Sentence = std::vector<std::string>;
using Corpus = std::vector<Sentence>;

// Deliberately naive modified Kneser-Ney written over string tuples, sharing
// nothing with the library beyond the padding and smoothing conventions.
class OracleKN {
public:
    OracleKN(const Corpus& corpus, int n) : n_(n) {
        std::set<std::string> seen;
        for (const auto& s : corpus)
            for (const auto& t : s)
                seen.insert(t);
        vocab_size_ = seen.size() + 3;
        for (const auto& t : seen)
            if (t == "<s>" || t == "</s>" || t == "<unk>")
                --vocab_size_;

        tables_.resize(static_cast<std::size_t>(n) + 1);
        for (const auto& s : corpus) {
            Sentence p(static_cast<std::size_t>(n - 1), "<s>");
            p.insert(p.end(), s.begin(), s.end());
            p.push_back("</s>");
            for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= p.size(); ++i)
                tables_[static_cast<std::size_t>(n)][Sentence(p.begin() + static_cast<long>(i),
                                                              p.begin() + static_cast<long>(i) + n)] += 1;
        }
        for (int k = n - 1; k >= 1; --k) {
            std::map<Sentence, std::set<std::string>> left;
            for (const auto& [gram, c] : tables_[static_cast<std::size_t>(k + 1)])
                left[Sentence(gram.begin() + 1, gram.end())].insert(gram.front());
            for (const auto& [gram, lefts] : left)
                tables_[static_cast<std::size_t>(k)][gram] = static_cast<double>(lefts.size());
        }
        discounts_.resize(static_cast<std::size_t>(n) + 1);
        for (int k = 1; k <= n; ++k) {
            double c[5] = {0, 0, 0, 0, 0};
            for (const auto& [gram, cnt] : tables_[static_cast<std::size_t>(k)])
                if (cnt <= 4)
                    c[static_cast<int>(cnt)] += 1;
            std::vector<double> d = {0.5, 1.0, 1.5};
            if (c[1] + 2 * c[2] > 0) {
                const double y = c[1] / (c[1] + 2 * c[2]);
                for (int j = 1; j <= 3; ++j) {
                    if (c[j] == 0)
                        continue;
                    const double v = j - (j + 1) * y * c[j + 1] / c[j];
                    if (v > 0 && v < j)
                        d[static_cast<std::size_t>(j - 1)] = v;
                }
            }
            discounts_[static_cast<std::size_t>(k)] = d;
        }
    }

    double prob(const std::string& w, Sentence ctx) const {
        while (ctx.size() < static_cast<std::size_t>(n_ - 1))
            ctx.insert(ctx.begin(), "<s>");
        ctx.erase(ctx.begin(), ctx.end() - (n_ - 1));
        return level(n_, w, ctx);
    }

private:
    double level(int k, const std::string& w, const Sentence& ctx) const {
        if (w == "<s>")
            return 0.0;
        if (k == 0)
            return 1.0 / static_cast<double>(vocab_size_ - 1);
        const Sentence h(ctx.end() - (k - 1), ctx.end());
        const double lower = level(k - 1, w, ctx);
        double total = 0, gamma = 0, cw = 0;
        const auto& d = discounts_[static_cast<std::size_t>(k)];
        for (const auto& [gram, c] : tables_[static_cast<std::size_t>(k)]) {
            if (!std::equal(h.begin(), h.end(), gram.begin()))
                continue;
            total += c;
            gamma += d[static_cast<std::size_t>(std::min(c, 3.0)) - 1];
            if (gram.back() == w)
                cw = c;
        }
        if (total == 0)
            return lower;
        const double dw = cw == 0 ? 0 : d[static_cast<std::size_t>(std::min(cw, 3.0)) - 1];
        return (std::max(cw - dw, 0.0) + gamma * lower) / total;
    }

    int n_;
    std::size_t vocab_size_;
    std::vector<std::map<Sentence, double>> tables_;
    std::vector<std::vector<double>> discounts_;
};

}  // namespace natrob::testing
