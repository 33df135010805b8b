#pragma once

#include "natrob/source/source_method.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace natrob::util {
class LineChannel;
}

namespace natrob::transform {

enum class ProviderKind { FirstChar, Dictionary, External };

/// Source of replacement names for RenameVariable2. Implementations must be
/// safe to call from several threads at once.
class SubstitutionProvider {
public:
    virtual ~SubstitutionProvider() = default;
    virtual ProviderKind kind() const = 0;
    /// Ranked candidates for renaming `name` inside `method`. Candidates that
    /// are not valid Java identifiers are dropped by the engine.
    virtual std::vector<std::string> candidates(const std::string& name,
                                                const source::SourceMethod& method) const = 0;
};

class FirstCharProvider final : public SubstitutionProvider {
public:
    ProviderKind kind() const override { return ProviderKind::FirstChar; }
    std::vector<std::string> candidates(const std::string& name, const source::SourceMethod&) const override;
};

/// Curated synonym table, e.g. list -> arr. Keeps the first `top_k` entries.
class DictionaryProvider final : public SubstitutionProvider {
public:
    explicit DictionaryProvider(std::map<std::string, std::vector<std::string>> table, std::size_t top_k = 1);

    /// Reads a JSON object mapping identifiers to candidate arrays.
    static DictionaryProvider load(const std::string& path, std::size_t top_k = 1);
    /// Small built-in table of common identifier synonyms.
    static DictionaryProvider builtin(std::size_t top_k = 1);

    ProviderKind kind() const override { return ProviderKind::Dictionary; }
    std::vector<std::string> candidates(const std::string& name, const source::SourceMethod&) const override;
    std::size_t top_k() const { return top_k_; }

private:
    std::map<std::string, std::vector<std::string>> table_;
    std::size_t top_k_;
};

/// Delegates to an external masked-LM service over the line protocol:
/// request  {"id":N,"mask":"name","tokens":[...]}
/// response {"id":N,"candidates":[...]}
class ExternalProvider final : public SubstitutionProvider {
public:
    ExternalProvider(std::string endpoint, std::size_t top_k = 1);
    ~ExternalProvider() override;

    ProviderKind kind() const override { return ProviderKind::External; }
    std::vector<std::string> candidates(const std::string& name, const source::SourceMethod& method) const override;

private:
    std::string endpoint_;
    std::size_t top_k_;
    mutable std::mutex mutex_;
    mutable std::unique_ptr<util::LineChannel> channel_;
    mutable long next_id_ = 0;
};

}  // namespace natrob::transform
