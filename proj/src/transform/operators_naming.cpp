#include "operators.hpp"

#include <algorithm>

namespace natrob::transform::detail {

namespace {

bool touches_region(const SourceMethod& m, const Variable& v) {
    return std::any_of(v.occurrences.begin(), v.occurrences.end(),
                       [&](std::size_t t) { return m.buggy_region().contains(m.tokens()[t].line); });
}

Candidate rename_candidate(const SourceMethod& m, const Variable& v, std::string replacement) {
    Candidate c;
    c.site = site_of(m, v.occurrences.front(), v.occurrences.back());
    c.site.detail = v.name;
    c.site.candidate = std::move(replacement);
    c.var = &v;
    return c;
}

}  // namespace

std::vector<Candidate> find_rename1(const Analysis& a, const Context&) {
    std::vector<Candidate> out;
    const SourceMethod& m = a.method();
    for (const auto& v : a.variables()) {
        if (v.is_member || v.name.size() <= 1 || !touches_region(m, v))
            continue;
        out.push_back(rename_candidate(m, v, v.name.substr(0, 1)));
    }
    return out;
}

std::vector<Candidate> find_rename2(const Analysis& a, const Context& ctx) {
    std::vector<Candidate> out;
    if (ctx.provider == nullptr)
        return out;
    const SourceMethod& m = a.method();
    for (const auto& v : a.variables()) {
        if (v.is_member || !touches_region(m, v))
            continue;
        for (auto& name : ctx.provider->candidates(v.name, m)) {
            if (name == v.name || !source::is_valid_identifier(name))
                continue;
            out.push_back(rename_candidate(m, v, std::move(name)));
        }
    }
    return out;
}

Outcome apply_rename(const Analysis& a, const Candidate& c, const Context&) {
    const std::string& to = c.site.candidate;
    if (!source::is_valid_identifier(to))
        return Outcome::conflict("'" + to + "' is not a valid identifier");
    if (a.identifier_used(to))
        return Outcome::conflict("'" + to + "' already names an identifier in the method");
    source::Rewriter rw(a.method());
    for (std::size_t t : c.var->occurrences)
        rw.replace(t, t, to);
    return {Status::Valid, rw.render(), {}};
}

}  // namespace natrob::transform::detail
