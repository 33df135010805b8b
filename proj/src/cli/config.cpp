#include "natrob/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>

namespace natrob::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <typename T>
T number(const std::string& key, const std::string& v) {
    T out{};
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || end != v.data() + v.size())
        throw ConfigError("bad number for " + key + ": '" + v + "'");
    return out;
}

std::string one_of(const std::string& key, const std::string& v, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (v == a)
            return v;
    std::string list;
    for (const char* a : allowed)
        list += (list.empty() ? "" : ", ") + std::string(a);
    throw ConfigError(key + " must be one of " + list + ", got '" + v + "'");
}

bool boolean(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError(key + " must be true or false, got '" + v + "'");
}

using Setter = std::function<void(Config&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"lm.backend", [](Config& c, auto& k, auto& v) { c.lm_backend = one_of(k, v, {"ngram", "external"}); }},
        {"lm.model", [](Config& c, auto&, auto& v) { c.lm_model = v; }},
        {"lm.bridge", [](Config& c, auto&, auto& v) { c.lm_bridge = v; }},
        {"lm.order",
         [](Config& c, auto& k, auto& v) {
             c.lm_order = number<int>(k, v);
             if (c.lm_order < 1)
                 throw ConfigError("lm.order must be at least 1");
         }},
        {"lm.min_count", [](Config& c, auto& k, auto& v) { c.lm_min_count = number<std::uint64_t>(k, v); }},
        {"transform.operators",
         [](Config& c, auto&, auto& v) {
             c.operators.clear();
             std::size_t at = 0;
             while (at <= v.size()) {
                 const auto comma = v.find(',', at);
                 const auto item = trim(v.substr(at, comma == std::string::npos ? std::string::npos : comma - at));
                 if (!item.empty())
                     c.operators.push_back(item);
                 if (comma == std::string::npos)
                     break;
                 at = comma + 1;
             }
         }},
        {"transform.unary2add.style",
         [](Config& c, auto& k, auto& v) { c.unary2add_style = one_of(k, v, {"expanded", "compound"}); }},
        {"transform.provider",
         [](Config& c, auto& k, auto& v) {
             c.provider = one_of(k, v, {"none", "firstchar", "dictionary", "external"});
         }},
        {"transform.dictionary", [](Config& c, auto&, auto& v) { c.dictionary = v; }},
        {"transform.provider.endpoint", [](Config& c, auto&, auto& v) { c.provider_endpoint = v; }},
        {"transform.top_k",
         [](Config& c, auto& k, auto& v) {
             c.top_k = number<std::size_t>(k, v);
             if (c.top_k == 0)
                 throw ConfigError("transform.top_k must be positive");
         }},
        {"validate.cmd",
         [](Config& c, auto&, auto& v) {
             if (v.empty())
                 c.validate_cmd.reset();
             else
                 c.validate_cmd = v;
         }},
        {"score.field", [](Config& c, auto& k, auto& v) { c.score_field = one_of(k, v, {"rnc", "ce"}); }},
        {"score.min", [](Config& c, auto& k, auto& v) { c.score_min = number<double>(k, v); }},
        {"score.max", [](Config& c, auto& k, auto& v) { c.score_max = number<double>(k, v); }},
        {"report.filter",
         [](Config& c, auto& k, auto& v) { c.report_filter = one_of(k, v, {"auto", "all", "natural", "both"}); }},
        {"report.include_likely", [](Config& c, auto& k, auto& v) { c.include_likely = boolean(k, v); }},
        {"jobs",
         [](Config& c, auto& k, auto& v) {
             c.jobs = number<unsigned>(k, v);
             if (c.jobs == 0)
                 throw ConfigError("jobs must be positive");
         }},
        {"seed", [](Config& c, auto& k, auto& v) { c.seed = number<std::uint64_t>(k, v); }},
    };
    return table;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    auto it = setters().find(key);
    if (it == setters().end())
        throw ConfigError("unknown config key '" + key + "'");
    it->second(*this, key, value);
}

void load_config_file(const std::string& path, Config& config) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(n) + ": expected key = value");
        try {
            config.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(n) + ": " + e.what());
        }
    }
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& [key, fn] : setters())
            k.push_back(key);
        return k;
    }();
    return keys;
}

}  // namespace natrob::cli
