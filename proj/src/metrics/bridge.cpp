#include "natrob/metrics/bridge.hpp"
#include "natrob/metrics/naturalness.hpp"

#include <json.hpp>

#include <cmath>

namespace natrob::metrics {

BridgeScorer::BridgeScorer(const std::string& endpoint) {
    try {
        channel_ = util::open_channel(endpoint);
    } catch (const std::exception& e) {
        throw BackendError("cannot open LM bridge '" + endpoint + "': " + e.what());
    }
}

BridgeScorer::BridgeScorer(std::unique_ptr<util::LineChannel> channel) : channel_(std::move(channel)) {
    if (!channel_)
        throw BackendError("LM bridge channel is null");
}

std::vector<double> BridgeScorer::log_probs(const std::vector<std::string>& tokens) const {
    std::lock_guard lock(mutex_);
    const std::uint64_t id = next_id_++;
    nlohmann::json request{{"id", id}, {"tokens", tokens}};

    std::optional<std::string> line;
    try {
        channel_->write_line(request.dump());
        line = channel_->read_line();
    } catch (const util::ProcessError& e) {
        throw BackendError(std::string("LM bridge I/O failed: ") + e.what());
    }
    if (!line)
        throw BackendError("LM bridge closed the connection");

    nlohmann::json reply;
    try {
        reply = nlohmann::json::parse(*line);
    } catch (const nlohmann::json::exception&) {
        throw BackendError("LM bridge sent malformed JSON: " + line->substr(0, 200));
    }
    if (!reply.is_object() || !reply.contains("id") || !reply["id"].is_number_unsigned() ||
        reply["id"].get<std::uint64_t>() != id)
        throw BackendError("LM bridge reply does not match request id " + std::to_string(id));
    if (reply.contains("error"))
        throw BackendError("LM bridge error: " + reply["error"].dump());
    if (!reply.contains("logprobs") || !reply["logprobs"].is_array())
        throw BackendError("LM bridge reply has no logprobs");

    std::vector<double> out;
    out.reserve(tokens.size());
    for (const auto& v : reply["logprobs"]) {
        if (!v.is_number())
            throw BackendError("LM bridge sent a non-numeric logprob");
        const double lp = v.get<double>();
        if (!std::isfinite(lp) || lp > 0)
            throw BackendError("LM bridge sent logprob outside (-inf, 0]");
        out.push_back(lp);
    }
    if (out.size() != tokens.size())
        throw BackendError("LM bridge returned " + std::to_string(out.size()) + " logprobs for " +
                           std::to_string(tokens.size()) + " tokens");
    return out;
}

}  // namespace natrob::metrics
