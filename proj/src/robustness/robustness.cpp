#include "natrob/robustness/robustness.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace natrob::robustness {

std::string_view to_string(PatchQuality q) {
    switch (q) {
    case PatchQuality::Wrong: return "Wrong";
    case PatchQuality::Plausible: return "Plausible";
    case PatchQuality::Correct: return "Correct";
    }
    return "?";
}

std::optional<PatchQuality> quality_from_string(std::string_view s) {
    for (PatchQuality q : {PatchQuality::Wrong, PatchQuality::Plausible, PatchQuality::Correct})
        if (s == to_string(q) || (s.size() == 1 && s[0] - '0' == static_cast<int>(q)))
            return q;
    return std::nullopt;
}

std::string_view to_string(Change c) {
    switch (c) {
    case Change::Positive: return "Positive";
    case Change::Negative: return "Negative";
    case Change::NoChange: return "NoChange";
    }
    return "?";
}

std::string_view to_string(Filter f) { return f == Filter::AllTransforms ? "AllTransforms" : "NaturalOnly"; }

Change classify_change(PatchQuality original, PatchQuality transformed) {
    if (transformed > original)
        return Change::Positive;
    if (transformed < original)
        return Change::Negative;
    return Change::NoChange;
}

std::size_t ChangeSets::changed() const {
    std::size_t both = 0;
    for (const auto& b : positive)
        both += negative.count(b);
    return positive.size() + negative.size() - both;
}

std::vector<Variant> kept_variants(const BugEvaluation& bug, Filter filter) {
    std::set<std::string> ids;
    for (const auto& v : bug.variants)
        if (!ids.insert(v.transformation_id).second)
            throw std::invalid_argument("bug " + bug.bug_id + " repeats transformation " + v.transformation_id);
    if (filter == Filter::AllTransforms)
        return bug.variants;
    std::vector<Variant> kept;
    for (const auto& v : bug.variants) {
        if (!v.label)
            throw MissingLabels("variant " + v.transformation_id + " of bug " + bug.bug_id + " has no label");
        if (*v.label == annotation::Label::Natural)
            kept.push_back(v);
    }
    return kept;
}

ChangeSets per_bug_change_sets(const std::vector<BugEvaluation>& evals, Filter filter) {
    ChangeSets sets;
    for (const auto& bug : evals)
        for (const auto& v : kept_variants(bug, filter)) {
            const Change c = classify_change(bug.original_quality, v.quality);
            if (c == Change::Positive)
                sets.positive.insert(bug.bug_id);
            else if (c == Change::Negative)
                sets.negative.insert(bug.bug_id);
        }
    return sets;
}

Rates rates(const std::vector<BugEvaluation>& evals, Filter filter) {
    if (evals.empty())
        throw std::invalid_argument("no bug evaluations");
    Rates r;
    r.bugs = evals.size();
    double po = 0, co = 0, pt = 0, ct = 0;
    for (const auto& bug : evals) {
        po += bug.original_quality >= PatchQuality::Plausible;
        co += bug.original_quality == PatchQuality::Correct;
        const auto kept = kept_variants(bug, filter);
        if (kept.empty()) {
            r.no_variants.push_back(bug.bug_id);
            continue;
        }
        ++r.transformed_denominator;
        double p = 0, c = 0;
        for (const auto& v : kept) {
            p += v.quality >= PatchQuality::Plausible;
            c += v.quality == PatchQuality::Correct;
        }
        pt += p / static_cast<double>(kept.size());
        ct += c / static_cast<double>(kept.size());
    }
    r.plausible_origin = po / static_cast<double>(r.bugs);
    r.correct_origin = co / static_cast<double>(r.bugs);
    if (r.transformed_denominator > 0) {
        r.plausible_transformed = pt / static_cast<double>(r.transformed_denominator);
        r.correct_transformed = ct / static_cast<double>(r.transformed_denominator);
    }
    return r;
}

double performance_change(double origin_rate, double transformed_rate) {
    if (!(origin_rate > 0))
        throw ZeroOrigin("origin rate must be positive");
    return (transformed_rate - origin_rate) / origin_rate;
}

std::vector<RobustnessReport> reports(const std::vector<BugEvaluation>& evals, Filter filter) {
    std::map<std::string, std::vector<BugEvaluation>> by_tool;
    for (const auto& e : evals)
        by_tool[e.tool].push_back(e);
    std::vector<RobustnessReport> out;
    for (const auto& [tool, bugs] : by_tool) {
        RobustnessReport rep;
        rep.tool = tool;
        rep.filter = filter;
        const auto sets = per_bug_change_sets(bugs, filter);
        rep.bugs_positive = sets.positive.size();
        rep.bugs_negative = sets.negative.size();
        rep.bugs_changed = sets.changed();
        rep.rates = rates(bugs, filter);
        if (rep.rates.plausible_transformed && rep.rates.plausible_origin > 0)
            rep.plausible_change = performance_change(rep.rates.plausible_origin, *rep.rates.plausible_transformed);
        if (rep.rates.correct_transformed && rep.rates.correct_origin > 0)
            rep.correct_change = performance_change(rep.rates.correct_origin, *rep.rates.correct_transformed);
        out.push_back(std::move(rep));
    }
    return out;
}

std::string percent(double fraction) {
    // Round half away from zero at one decimal; nudge by a tiny epsilon so
    // values like 0.0415 that are stored as 0.04149999... round as written.
    const double scaled = fraction * 1000.0;
    double r = std::round(scaled + std::copysign(1e-9, scaled)) / 10.0;
    if (r == 0)
        r = 0;  // no "-0.0%"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", r);
    return buf;
}

std::string format_table(const std::vector<RobustnessReport>& reports) {
    auto opt = [](const std::optional<double>& v) { return v ? percent(*v) : std::string("n/a"); };
    auto share = [](std::size_t n, std::size_t of) {
        return std::to_string(n) + " (" + (of ? percent(static_cast<double>(n) / static_cast<double>(of)) : "n/a") + ")";
    };
    std::ostringstream out;
    char line[512];
    std::snprintf(line, sizeof line, "%-16s %-13s %-14s %-14s %-14s %8s %8s %8s %8s %8s %8s\n", "tool", "filter",
                  "positive", "negative", "all", "P-orig", "P-trans", "P-chg", "C-orig", "C-trans", "C-chg");
    out << line;
    for (const auto& r : reports) {
        const std::size_t n = r.rates.bugs;
        std::snprintf(line, sizeof line, "%-16s %-13s %-14s %-14s %-14s %8s %8s %8s %8s %8s %8s\n", r.tool.c_str(),
                      std::string(to_string(r.filter)).c_str(), share(r.bugs_positive, n).c_str(),
                      share(r.bugs_negative, n).c_str(), share(r.bugs_changed, n).c_str(),
                      percent(r.rates.plausible_origin).c_str(), opt(r.rates.plausible_transformed).c_str(),
                      opt(r.plausible_change).c_str(), percent(r.rates.correct_origin).c_str(),
                      opt(r.rates.correct_transformed).c_str(), opt(r.correct_change).c_str());
        out << line;
    }
    return out.str();
}

}  // namespace natrob::robustness
