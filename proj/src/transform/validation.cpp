#include "natrob/transform/validation.hpp"

#include "natrob/util/process.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <unistd.h>

namespace natrob::transform {

namespace fs = std::filesystem;

std::string_view to_string(ValidationResult r) {
    switch (r) {
    case ValidationResult::Pass: return "Pass";
    case ValidationResult::Fail: return "Fail";
    case ValidationResult::Skipped: return "Skipped";
    }
    return "?";
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw HookError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

std::string splice(const std::string& file, const FileContext& ctx, const std::string& method) {
    const auto lines = split_lines(file);
    if (ctx.first_line < 1 || ctx.last_line < ctx.first_line || ctx.last_line > static_cast<int>(lines.size()))
        throw HookError("method lines fall outside " + ctx.file_path);
    std::string out;
    for (int i = 1; i < ctx.first_line; ++i)
        out += lines[i - 1] + "\n";
    // Extracted methods blank out code sharing their first line; restore it.
    const std::string& head = lines[ctx.first_line - 1];
    const std::size_t indent = std::min(method.find_first_not_of(" \t"), head.size());
    std::string body = head.substr(0, indent) + method.substr(std::min(indent, method.size()));
    out += body;
    if (!body.empty() && body.back() != '\n')
        out += "\n";
    for (std::size_t i = static_cast<std::size_t>(ctx.last_line); i < lines.size(); ++i)
        out += lines[i] + "\n";
    return out;
}

std::string substitute(std::string command, const std::string& path) {
    const std::string quoted = "'" + path + "'";
    for (std::size_t pos = command.find("{file}"); pos != std::string::npos; pos = command.find("{file}", pos)) {
        command.replace(pos, 6, quoted);
        pos += quoted.size();
    }
    return command;
}

}  // namespace

ValidationResult validate_external(const TransformationRecord& record, const std::optional<std::string>& hook,
                                   const std::optional<FileContext>& context) {
    if (!hook || hook->empty() || record.status != Status::Valid)
        return ValidationResult::Skipped;

    std::string content = record.transformed_source;
    std::string name = "Transformed.java";
    if (context) {
        content = splice(read_file(context->file_path), *context, record.transformed_source);
        name = fs::path(context->file_path).filename().string();
    }

    std::error_code ec;
    const fs::path dir = fs::temp_directory_path(ec) / ("natrob-hook-" + std::to_string(::getpid()) + "-" +
                                                         std::to_string(std::hash<std::string>{}(record.id)));
    fs::create_directories(dir, ec);
    if (ec)
        throw HookError("cannot create " + dir.string() + ": " + ec.message());
    const fs::path file = dir / name;
    {
        std::ofstream out(file, std::ios::binary);
        if (!out || !(out << content))
            throw HookError("cannot write " + file.string());
    }

    int status = 0;
    try {
        status = util::run_shell(substitute(*hook, file.string()));
    } catch (const util::ProcessError& e) {
        fs::remove_all(dir, ec);
        throw HookError(e.what());
    }
    fs::remove_all(dir, ec);
    return status == 0 ? ValidationResult::Pass : ValidationResult::Fail;
}

}  // namespace natrob::transform
