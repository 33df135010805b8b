#include "natrob/cli/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace natrob::cli {

namespace fs = std::filesystem;

namespace {

template <typename T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string("field '") + name + "' has the wrong type");
    }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* name) {
    if (!j.contains(name) || j.at(name).is_null())
        return std::nullopt;
    return field<T>(j, name);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

BugInput bug_from_json(const json& j, const std::string& base_dir) {
    BugInput b;
    b.bug_id = field<std::string>(j, "bug_id");
    const auto lines = field<std::vector<int>>(j, "buggy_lines");
    if (lines.size() != 2 || lines[0] > lines[1] || lines[0] < 1)
        throw std::invalid_argument("buggy_lines must be [start, end] with 1 <= start <= end");
    b.region = {lines[0], lines[1]};
    if (auto src = optional_field<std::string>(j, "source")) {
        b.source = *src;
        b.first_line = optional_field<int>(j, "first_line").value_or(1);
        return b;
    }
    const auto file = optional_field<std::string>(j, "file");
    if (!file)
        throw std::invalid_argument("bug needs 'source' or 'file'");
    const fs::path path = fs::path(*file).is_absolute() ? fs::path(*file) : fs::path(base_dir) / *file;
    const std::string text = read_file(path.string());
    for (auto& m : source::extract_methods(text))
        if (m.first_line <= b.region.start_line && b.region.end_line <= m.last_line) {
            b.source = std::move(m.text);
            b.first_line = m.first_line;
            b.file = path.string();
            return b;
        }
    throw IoError("no method in " + path.string() + " covers lines " + std::to_string(lines[0]) + "-" +
                  std::to_string(lines[1]));
}

json record_to_json(const transform::TransformationRecord& r, std::optional<transform::ValidationResult> validation) {
    json j{
        {"id", r.id},
        {"bug_id", r.bug_id},
        {"operator", std::string(transform::to_string(r.op))},
        {"level", std::string(transform::to_string(r.level()))},
        {"status", std::string(transform::to_string(r.status))},
        {"site",
         {{"first_token", r.site.first_token},
          {"last_token", r.site.last_token},
          {"start_line", r.site.start_line},
          {"end_line", r.site.end_line},
          {"detail", r.site.detail},
          {"candidate", r.site.candidate}}},
        {"original_source", r.original_source},
        {"transformed_source", r.transformed_source},
        {"note", r.note},
    };
    if (validation)
        j["validation"] = std::string(transform::to_string(*validation));
    return j;
}

transform::TransformationRecord record_from_json(const json& j) {
    transform::TransformationRecord r;
    r.id = field<std::string>(j, "id");
    r.bug_id = optional_field<std::string>(j, "bug_id").value_or("");
    const auto op = transform::operator_from_string(field<std::string>(j, "operator"));
    if (!op)
        throw std::invalid_argument("unknown operator '" + field<std::string>(j, "operator") + "'");
    r.op = *op;
    const auto status = transform::status_from_string(field<std::string>(j, "status"));
    if (!status)
        throw std::invalid_argument("unknown status '" + field<std::string>(j, "status") + "'");
    r.status = *status;
    r.original_source = field<std::string>(j, "original_source");
    r.transformed_source = field<std::string>(j, "transformed_source");
    r.note = optional_field<std::string>(j, "note").value_or("");
    if (j.contains("site") && j["site"].is_object()) {
        const json& s = j["site"];
        r.site.first_token = optional_field<std::size_t>(s, "first_token").value_or(0);
        r.site.last_token = optional_field<std::size_t>(s, "last_token").value_or(0);
        r.site.start_line = optional_field<int>(s, "start_line").value_or(0);
        r.site.end_line = optional_field<int>(s, "end_line").value_or(0);
        r.site.detail = optional_field<std::string>(s, "detail").value_or("");
        r.site.candidate = optional_field<std::string>(s, "candidate").value_or("");
    }
    return r;
}

json score_to_json(const metrics::NaturalnessScore& s) {
    return {{"transformation_id", s.transformation_id}, {"ce_original", s.ce_original},
            {"ce_transformed", s.ce_transformed},       {"rnc", s.rnc},
            {"anc", s.anc},                             {"p_unnatural", optional_number(s.p_unnatural)}};
}

metrics::NaturalnessScore score_from_json(const json& j) {
    metrics::NaturalnessScore s;
    s.transformation_id = field<std::string>(j, "transformation_id");
    s.ce_original = field<double>(j, "ce_original");
    s.ce_transformed = field<double>(j, "ce_transformed");
    s.rnc = field<double>(j, "rnc");
    s.anc = optional_field<double>(j, "anc").value_or(s.ce_transformed - s.ce_original);
    s.p_unnatural = optional_field<double>(j, "p_unnatural");
    return s;
}

json label_to_json(const annotation::NaturalnessLabel& l) {
    return {{"transformation_id", l.transformation_id},
            {"label", std::string(annotation::to_string(l.label))},
            {"n_natural", l.n_natural},
            {"n_unnatural", l.n_unnatural}};
}

annotation::NaturalnessLabel label_from_json(const json& j) {
    annotation::NaturalnessLabel l;
    l.transformation_id = field<std::string>(j, "transformation_id");
    const auto name = field<std::string>(j, "label");
    const auto label = annotation::label_from_string(name);
    if (!label)
        throw std::invalid_argument("unknown label '" + name + "'");
    l.label = *label;
    l.n_natural = optional_field<int>(j, "n_natural").value_or(0);
    l.n_unnatural = optional_field<int>(j, "n_unnatural").value_or(0);
    return l;
}

namespace {

robustness::PatchQuality quality(const json& j, const char* name) {
    if (!j.contains(name))
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    const json& v = j.at(name);
    const std::string text = v.is_number_integer() ? std::to_string(v.get<long>()) : v.is_string() ? v.get<std::string>() : "";
    const auto q = robustness::quality_from_string(text);
    if (!q)
        throw std::invalid_argument(std::string("bad patch quality in '") + name + "'");
    return *q;
}

}  // namespace

robustness::BugEvaluation evaluation_from_json(const json& j) {
    robustness::BugEvaluation e;
    e.tool = field<std::string>(j, "tool");
    e.bug_id = field<std::string>(j, "bug_id");
    e.original_quality = quality(j, "original_quality");
    if (!j.contains("variants") || !j["variants"].is_array())
        throw std::invalid_argument("missing array 'variants'");
    for (const auto& v : j["variants"]) {
        robustness::Variant var;
        var.transformation_id = field<std::string>(v, "transformation_id");
        var.quality = quality(v, "quality");
        if (auto name = optional_field<std::string>(v, "label")) {
            var.label = annotation::label_from_string(*name);
            if (!var.label)
                throw std::invalid_argument("unknown label '" + *name + "'");
        }
        e.variants.push_back(std::move(var));
    }
    return e;
}

json report_to_json(const robustness::RobustnessReport& r) {
    return {
        {"tool", r.tool},
        {"filter", std::string(robustness::to_string(r.filter))},
        {"bugs_positive", r.bugs_positive},
        {"bugs_negative", r.bugs_negative},
        {"bugs_changed", r.bugs_changed},
        {"bugs", r.rates.bugs},
        {"transformed_denominator", r.rates.transformed_denominator},
        {"no_variant_bugs", r.rates.no_variants},
        {"plausible_rate_origin", r.rates.plausible_origin},
        {"plausible_rate_transformed", optional_number(r.rates.plausible_transformed)},
        {"correct_rate_origin", r.rates.correct_origin},
        {"correct_rate_transformed", optional_number(r.rates.correct_transformed)},
        {"plausible_change", optional_number(r.plausible_change)},
        {"correct_change", optional_number(r.correct_change)},
    };
}

std::vector<JsonlError> for_each_jsonl(const std::string& path, const std::function<void(const json&)>& fn) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read " + path);
    std::vector<JsonlError> errors;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            fn(json::parse(line));
        } catch (const std::exception& e) {
            errors.push_back({n, e.what()});
        }
    }
    return errors;
}

OutputFile::OutputFile(const std::string& path, std::ostream& dash) : path_(path) {
    if (path == "-") {
        out_ = &dash;
        return;
    }
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*f)
        throw IoError("cannot write " + path);
    out_ = f.get();
    owned_ = std::move(f);
}

OutputFile::~OutputFile() = default;

std::ostream& OutputFile::stream() { return *out_; }

void OutputFile::line(const json& j) { *out_ << j.dump(-1, ' ', false, json::error_handler_t::replace) << '\n'; }

void OutputFile::close() {
    out_->flush();
    if (!*out_)
        throw IoError("failed writing " + path_);
}

}  // namespace natrob::cli
