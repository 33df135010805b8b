#include "natrob/transform/substitution.hpp"

#include "natrob/util/process.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>

namespace natrob::transform {

using nlohmann::json;

std::vector<std::string> FirstCharProvider::candidates(const std::string& name, const source::SourceMethod&) const {
    if (name.size() <= 1)
        return {};
    return {name.substr(0, 1)};
}

DictionaryProvider::DictionaryProvider(std::map<std::string, std::vector<std::string>> table, std::size_t top_k)
    : table_(std::move(table)), top_k_(top_k) {
    for (const auto& [name, cands] : table_)
        for (const auto& c : cands)
            if (!source::is_valid_identifier(c))
                throw std::invalid_argument("dictionary candidate '" + c + "' for '" + name +
                                            "' is not a valid identifier");
}

DictionaryProvider DictionaryProvider::load(const std::string& path, std::size_t top_k) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open dictionary " + path);
    const json doc = json::parse(in);
    if (!doc.is_object())
        throw std::runtime_error("dictionary " + path + " must be a JSON object");
    std::map<std::string, std::vector<std::string>> table;
    for (const auto& [key, value] : doc.items())
        table[key] = value.get<std::vector<std::string>>();
    return DictionaryProvider(std::move(table), top_k);
}

DictionaryProvider DictionaryProvider::builtin(std::size_t top_k) {
    return DictionaryProvider(
        {
            {"list", {"arr", "items", "values"}},
            {"arr", {"array", "list"}},
            {"array", {"arr", "values"}},
            {"data", {"values", "content"}},
            {"result", {"res", "ret", "output"}},
            {"res", {"result", "ret"}},
            {"ret", {"result", "res"}},
            {"value", {"val", "v"}},
            {"val", {"value"}},
            {"index", {"idx", "pos"}},
            {"idx", {"index", "pos"}},
            {"count", {"cnt", "num"}},
            {"cnt", {"count"}},
            {"total", {"sum", "amount"}},
            {"sum", {"total"}},
            {"buffer", {"buf", "sb"}},
            {"buf", {"buffer"}},
            {"sb", {"builder", "buf"}},
            {"str", {"s", "text"}},
            {"text", {"str", "content"}},
            {"name", {"label", "key"}},
            {"key", {"name", "k"}},
            {"map", {"table", "dict"}},
            {"len", {"length", "size"}},
            {"length", {"len", "size"}},
            {"size", {"len", "length"}},
            {"tmp", {"temp"}},
            {"temp", {"tmp"}},
            {"start", {"begin", "from"}},
            {"end", {"stop", "to"}},
            {"max", {"maximum", "upper"}},
            {"min", {"minimum", "lower"}},
            {"obj", {"object", "o"}},
            {"e", {"ex", "exc"}},
            {"ex", {"e", "exc"}},
            {"i", {"j", "k"}},
            {"j", {"k", "i"}},
            {"n", {"num", "count"}},
            {"num", {"n", "number"}},
            {"c", {"ch"}},
            {"ch", {"c"}},
            {"flag", {"ok", "done"}},
            {"node", {"n", "item"}},
            {"item", {"elem", "element"}},
            {"elem", {"item", "element"}},
            {"msg", {"message"}},
            {"message", {"msg"}},
        },
        top_k);
}

std::vector<std::string> DictionaryProvider::candidates(const std::string& name, const source::SourceMethod&) const {
    auto it = table_.find(name);
    if (it == table_.end())
        return {};
    std::vector<std::string> out;
    for (const auto& c : it->second) {
        if (out.size() >= top_k_)
            break;
        if (c != name)
            out.push_back(c);
    }
    return out;
}

ExternalProvider::ExternalProvider(std::string endpoint, std::size_t top_k)
    : endpoint_(std::move(endpoint)), top_k_(top_k) {}

ExternalProvider::~ExternalProvider() = default;

std::vector<std::string> ExternalProvider::candidates(const std::string& name,
                                                      const source::SourceMethod& method) const {
    std::lock_guard lock(mutex_);
    if (!channel_)
        channel_ = util::open_channel(endpoint_);
    const long id = next_id_++;
    json request = {{"id", id}, {"mask", name}, {"tokens", method.code_tokens()}};
    channel_->write_line(request.dump());
    const auto line = channel_->read_line();
    if (!line)
        throw util::ProcessError("substitution provider closed the connection");
    const json response = json::parse(*line);
    if (response.value("id", -1L) != id)
        throw util::ProcessError("substitution provider answered id " + response.value("id", json(-1)).dump() +
                                 ", expected " + std::to_string(id));
    std::vector<std::string> out;
    for (const auto& c : response.at("candidates")) {
        if (out.size() >= top_k_)
            break;
        out.push_back(c.get<std::string>());
    }
    return out;
}

}  // namespace natrob::transform
