#include "natrob/metrics/naturalness.hpp"
#include "natrob/metrics/bridge.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace natrob::metrics {

namespace {

class OwnedModel final : public lm::TokenScorer {
public:
    explicit OwnedModel(lm::NgramModel m) : model_(std::move(m)) {}
    std::vector<double> log_probs(const std::vector<std::string>& tokens) const override {
        return model_.log_probs(tokens);
    }

private:
    lm::NgramModel model_;
};

double side_ce(const lm::TokenScorer& scorer, const std::string& text, const char* which, lm::LogBase base) {
    const auto tokens = source::code_token_texts(text);
    if (tokens.empty())
        throw EmptyTokens(std::string(which) + " method has no code tokens");
    return lm::cross_entropy(scorer, tokens, base).value;
}

}  // namespace

std::unique_ptr<lm::TokenScorer> open_backend(const LmBackend& backend) {
    if (backend.kind == LmBackend::Kind::Ngram)
        return std::make_unique<OwnedModel>(lm::NgramModel::load(backend.location));
    return std::make_unique<BridgeScorer>(backend.location);
}

NaturalnessScore score(const lm::TokenScorer& scorer, const transform::TransformationRecord& record,
                       lm::LogBase base) {
    if (record.status != transform::Status::Valid)
        throw std::invalid_argument("record " + record.id + " is not Valid");
    NaturalnessScore s;
    s.transformation_id = record.id;
    s.ce_original = side_ce(scorer, record.original_source, "original", base);
    s.ce_transformed = record.transformed_source == record.original_source
                           ? s.ce_original
                           : side_ce(scorer, record.transformed_source, "transformed", base);
    if (!(s.ce_original > 0))
        throw BackendError("original CE is not positive for " + record.id);
    s.anc = s.ce_transformed - s.ce_original;
    s.rnc = s.anc / s.ce_original;
    return s;
}

std::vector<NaturalnessScore> score_all(const lm::TokenScorer& scorer,
                                        const std::vector<transform::TransformationRecord>& records, unsigned jobs,
                                        lm::LogBase base) {
    std::vector<const transform::TransformationRecord*> valid;
    for (const auto& r : records)
        if (r.status == transform::Status::Valid)
            valid.push_back(&r);
    std::vector<NaturalnessScore> out(valid.size());

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i; !failed && (i = next++) < valid.size();) {
            try {
                out[i] = score(scorer, *valid[i], base);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(valid.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

NormalizeReport normalize(std::vector<NaturalnessScore>& scores, NormalizeField field, const std::optional<Range>& fixed) {
    auto value = [field](const NaturalnessScore& s) { return field == NormalizeField::Rnc ? s.rnc : s.ce_transformed; };
    NormalizeReport report;
    if (fixed) {
        report.range = *fixed;
    } else if (!scores.empty()) {
        const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end(),
                                                  [&](const auto& a, const auto& b) { return value(a) < value(b); });
        report.range = {value(*lo), value(*hi)};
    }
    report.degenerate = !(report.range.max > report.range.min);
    for (auto& s : scores) {
        if (report.degenerate) {
            s.p_unnatural = 0.5;
            continue;
        }
        const double p = (value(s) - report.range.min) / (report.range.max - report.range.min);
        s.p_unnatural = std::clamp(p, 0.0, 1.0);
    }
    return report;
}

}  // namespace natrob::metrics
