#pragma once

#include "natrob/annotation/annotation.hpp"
#include "natrob/metrics/naturalness.hpp"
#include "natrob/robustness/robustness.hpp"
#include "natrob/transform/engine.hpp"
#include "natrob/transform/validation.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace natrob::cli {

using nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One bug of the transform input: a method with its buggy lines, given
/// inline or as a file (path relative to the bugs file) plus buggy lines.
struct BugInput {
    std::string bug_id;
    std::string source;
    source::BuggyRegion region;
    int first_line = 1;
    /// Set when the method came from a file; used for validation context.
    std::optional<std::string> file;
};

/// Throws std::invalid_argument for missing or ill-typed fields, IoError
/// when a referenced file cannot be read or holds no method covering the
/// buggy lines.
BugInput bug_from_json(const json& j, const std::string& base_dir);

json record_to_json(const transform::TransformationRecord& r,
                    std::optional<transform::ValidationResult> validation = std::nullopt);
transform::TransformationRecord record_from_json(const json& j);

json score_to_json(const metrics::NaturalnessScore& s);
metrics::NaturalnessScore score_from_json(const json& j);

json label_to_json(const annotation::NaturalnessLabel& l);
annotation::NaturalnessLabel label_from_json(const json& j);

robustness::BugEvaluation evaluation_from_json(const json& j);
json report_to_json(const robustness::RobustnessReport& r);

struct JsonlError {
    std::size_t line = 0;
    std::string message;
};

/// Calls `fn` for each non-blank line's JSON value. Lines that fail to parse
/// or make `fn` throw std::exception are collected instead of aborting.
/// Throws IoError when the file cannot be opened.
std::vector<JsonlError> for_each_jsonl(const std::string& path, const std::function<void(const json&)>& fn);

/// Opens `path` for writing. Throws IoError.
class OutputFile {
public:
    /// "-" writes to `dash`.
    OutputFile(const std::string& path, std::ostream& dash);
    ~OutputFile();
    std::ostream& stream();
    /// Writes one compact JSON value and a newline.
    void line(const json& j);
    /// Flushes and checks for write errors; throws IoError.
    void close();

private:
    std::string path_;
    std::unique_ptr<std::ostream> owned_;
    std::ostream* out_;
};

std::string read_file(const std::string& path);

}  // namespace natrob::cli
