#pragma once

#include "natrob/lm/ngram_model.hpp"
#include "natrob/util/process.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

namespace natrob::metrics {

/// Scores token sequences with an external LM over the line protocol
///   -> {"id":N,"tokens":[...]}
///   <- {"id":N,"logprobs":[...]}   (natural log, one per token)
/// Requests are serialized, so one bridge can be shared between threads.
/// There is no end marker: CE averages over the submitted tokens only.
class BridgeScorer final : public lm::TokenScorer {
public:
    /// Throws BackendError when the endpoint cannot be opened.
    explicit BridgeScorer(const std::string& endpoint);
    explicit BridgeScorer(std::unique_ptr<util::LineChannel> channel);

    /// Throws BackendError on a closed channel, malformed or mismatched reply.
    std::vector<double> log_probs(const std::vector<std::string>& tokens) const override;

private:
    mutable std::mutex mutex_;
    mutable std::unique_ptr<util::LineChannel> channel_;
    mutable std::uint64_t next_id_ = 1;
};

}  // namespace natrob::metrics
