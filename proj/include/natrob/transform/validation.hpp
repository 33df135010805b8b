#pragma once

#include "natrob/transform/engine.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace natrob::transform {

enum class ValidationResult { Pass, Fail, Skipped };

std::string_view to_string(ValidationResult r);

class HookError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Where the transformed method goes before the hook runs. Without a file
/// context the method alone is written to a temporary .java file; with one,
/// lines [first_line, last_line] of `file_path`'s content are replaced by the
/// transformed method and the result is written to a temporary copy.
struct FileContext {
    std::string file_path;
    int first_line = 1;
    int last_line = 1;
};

/// Runs `hook` through /bin/sh after substituting `{file}` with the path of
/// the written source. Exit 0 is Pass, anything else Fail; no hook or a
/// non-Valid record gives Skipped. Throws HookError when the shell cannot be
/// started or the file cannot be written.
ValidationResult validate_external(const TransformationRecord& record, const std::optional<std::string>& hook,
                                   const std::optional<FileContext>& context = std::nullopt);

}  // namespace natrob::transform
