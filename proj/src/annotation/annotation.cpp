#include "natrob/annotation/annotation.hpp"
#include "natrob/metrics/statistics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <unordered_map>

namespace natrob::annotation {

namespace {

void check_likert(int v, const char* what) {
    if (v < 1 || v > 4)
        throw RangeError(std::string(what) + " answer " + std::to_string(v) + " is outside 1..4");
}

// Splits one CSV record; double quotes may wrap fields and escape as "".
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (quoted)
        throw std::invalid_argument("unterminated quoted field");
    return out;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& s, const char* column) {
    T v{};
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw std::invalid_argument(std::string("bad ") + column + " '" + s + "'");
    return v;
}

}  // namespace

RaterVerdict rater_verdict(const LikertResponse& r) {
    check_likert(r.readability, "readability");
    check_likert(r.convention, "convention");
    const bool unnatural = r.readability >= 3 || r.convention >= 3;
    return {r.rater_id, r.transformation_id, unnatural ? Verdict::Unnatural : Verdict::Natural};
}

std::string_view to_string(Label label) {
    switch (label) {
    case Label::Natural: return "Natural";
    case Label::LikelyNatural: return "LikelyNatural";
    case Label::LikelyUnnatural: return "LikelyUnnatural";
    case Label::Unnatural: return "Unnatural";
    }
    return "?";
}

std::optional<Label> label_from_string(std::string_view name) {
    for (Label l : {Label::Natural, Label::LikelyNatural, Label::LikelyUnnatural, Label::Unnatural})
        if (to_string(l) == name)
            return l;
    return std::nullopt;
}

NaturalnessLabel aggregate_label(const std::vector<RaterVerdict>& verdicts) {
    if (verdicts.size() != 5)
        throw CardinalityError("expected 5 verdicts, got " + std::to_string(verdicts.size()));
    std::set<std::string> raters;
    NaturalnessLabel out;
    out.transformation_id = verdicts.front().transformation_id;
    for (const auto& v : verdicts) {
        if (v.transformation_id != out.transformation_id)
            throw CardinalityError("verdicts mix transformations " + out.transformation_id + " and " +
                                   v.transformation_id);
        if (!raters.insert(v.rater_id).second)
            throw CardinalityError("rater " + v.rater_id + " answered " + out.transformation_id + " twice");
        ++(v.verdict == Verdict::Natural ? out.n_natural : out.n_unnatural);
    }
    if (out.n_natural >= 4)
        out.label = Label::Natural;
    else if (out.n_unnatural >= 4)
        out.label = Label::Unnatural;
    else if (out.n_natural == 3)
        out.label = Label::LikelyNatural;
    else
        out.label = Label::LikelyUnnatural;
    return out;
}

double fleiss_kappa(const std::vector<std::vector<int>>& counts) {
    if (counts.empty())
        throw RaggedMatrix("no items");
    const std::size_t k = counts.front().size();
    long raters = -1;
    for (const auto& row : counts) {
        if (row.size() != k)
            throw RaggedMatrix("rows have different numbers of categories");
        long sum = 0;
        for (int c : row) {
            if (c < 0)
                throw RaggedMatrix("negative count");
            sum += c;
        }
        if (raters < 0)
            raters = sum;
        else if (sum != raters)
            throw RaggedMatrix("rows have different rater totals");
    }
    if (raters < 2)
        throw RaggedMatrix("need at least two raters per item");

    const double n = static_cast<double>(raters);
    const double items = static_cast<double>(counts.size());
    std::vector<double> p(k, 0.0);
    double p_bar = 0;
    for (const auto& row : counts) {
        double agree = 0;
        for (std::size_t j = 0; j < k; ++j) {
            p[j] += row[j];
            agree += static_cast<double>(row[j]) * (row[j] - 1);
        }
        p_bar += agree / (n * (n - 1));
    }
    p_bar /= items;
    double p_e = 0;
    for (double pj : p)
        p_e += (pj / (items * n)) * (pj / (items * n));
    if (p_e >= 1.0)
        return 1.0;
    return (p_bar - p_e) / (1 - p_e);
}

double cohen_kappa(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size())
        throw metrics::LengthMismatch("cohen kappa inputs differ in length");
    if (a.empty())
        throw std::invalid_argument("cohen kappa of empty label lists");
    std::map<std::string, double> ma, mb;
    double agree = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma[a[i]] += 1;
        mb[b[i]] += 1;
        agree += a[i] == b[i];
    }
    const double n = static_cast<double>(a.size());
    const double p_o = agree / n;
    double p_e = 0;
    for (const auto& [label, c] : ma) {
        auto it = mb.find(label);
        if (it != mb.end())
            p_e += (c / n) * (it->second / n);
    }
    if (p_e >= 1.0)
        return 1.0;
    return (p_o - p_e) / (1 - p_e);
}

TrimResult trim_outlier_times(const std::vector<LikertResponse>& responses) {
    if (responses.empty())
        throw std::invalid_argument("no responses to trim");
    std::vector<double> times;
    times.reserve(responses.size());
    for (const auto& r : responses)
        times.push_back(r.completion_seconds);
    TrimResult out;
    out.cutoff = metrics::percentile(times, 99.0);
    for (const auto& r : responses) {
        if (r.completion_seconds > out.cutoff)
            ++out.dropped;
        else
            out.kept.push_back(r);
    }
    return out;
}

CsvResult read_responses_csv(std::istream& in) {
    static const char* const kColumns[] = {"rater_id", "transformation_id", "readability", "convention",
                                           "completion_seconds"};
    CsvResult out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t index[5];
    bool have_header = false;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        if (!have_header) {
            auto cols = split_csv(line);
            for (auto& c : cols)
                c = trim(c);
            if (!cols.empty() && cols[0].rfind("\xEF\xBB\xBF", 0) == 0)
                cols[0].erase(0, 3);
            for (int i = 0; i < 5; ++i) {
                auto it = std::find(cols.begin(), cols.end(), kColumns[i]);
                if (it == cols.end())
                    throw std::invalid_argument(std::string("CSV header lacks column ") + kColumns[i]);
                index[i] = static_cast<std::size_t>(it - cols.begin());
            }
            width = cols.size();
            have_header = true;
            continue;
        }
        try {
            const auto f = split_csv(line);
            if (f.size() != width)
                throw std::invalid_argument("expected " + std::to_string(width) + " fields, got " +
                                            std::to_string(f.size()));
            LikertResponse r;
            r.rater_id = trim(f[index[0]]);
            r.transformation_id = trim(f[index[1]]);
            if (r.rater_id.empty() || r.transformation_id.empty())
                throw std::invalid_argument("empty rater or transformation id");
            r.readability = parse_number<int>(trim(f[index[2]]), "readability");
            r.convention = parse_number<int>(trim(f[index[3]]), "convention");
            r.completion_seconds = parse_number<double>(trim(f[index[4]]), "completion_seconds");
            check_likert(r.readability, "readability");
            check_likert(r.convention, "convention");
            if (!(r.completion_seconds > 0) || !std::isfinite(r.completion_seconds))
                throw RangeError("completion_seconds must be positive");
            out.responses.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
            out.errors.push_back({line_no, e.what()});
        }
    }
    if (!have_header)
        throw std::invalid_argument("CSV has no header");
    return out;
}

LabelingResult label_all(const std::vector<LikertResponse>& responses) {
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<const LikertResponse*>> by_item;
    for (const auto& r : responses) {
        auto [it, fresh] = by_item.try_emplace(r.transformation_id);
        if (fresh)
            order.push_back(r.transformation_id);
        it->second.push_back(&r);
    }
    LabelingResult out;
    for (const auto& id : order) {
        try {
            std::vector<RaterVerdict> verdicts;
            for (const auto* r : by_item[id])
                verdicts.push_back(rater_verdict(*r));
            out.labels.push_back(aggregate_label(verdicts));
        } catch (const std::invalid_argument& e) {
            out.errors.push_back({id, e.what()});
        }
    }
    return out;
}

AgreementSummary summarize(const std::vector<NaturalnessLabel>& labels, const std::vector<LikertResponse>& responses) {
    AgreementSummary s;
    s.items = labels.size();
    std::vector<std::vector<int>> matrix;
    std::set<std::string> labeled;
    for (const auto& l : labels) {
        const int majority = std::max(l.n_natural, l.n_unnatural);
        ++(majority == 5 ? s.full : majority == 4 ? s.high : s.disagreement);
        switch (l.label) {
        case Label::Natural: ++s.natural; break;
        case Label::LikelyNatural: ++s.likely_natural; break;
        case Label::LikelyUnnatural: ++s.likely_unnatural; break;
        case Label::Unnatural: ++s.unnatural; break;
        }
        matrix.push_back({l.n_natural, l.n_unnatural});
        labeled.insert(l.transformation_id);
    }
    if (!matrix.empty())
        s.fleiss = fleiss_kappa(matrix);

    // rater -> item -> verdict, restricted to labeled items.
    std::map<std::string, std::map<std::string, std::string>> by_rater;
    for (const auto& r : responses)
        if (labeled.count(r.transformation_id))
            by_rater[r.rater_id][r.transformation_id] =
                rater_verdict(r).verdict == Verdict::Natural ? "natural" : "unnatural";
    double sum = 0;
    std::size_t pairs = 0;
    for (auto a = by_rater.begin(); a != by_rater.end(); ++a)
        for (auto b = std::next(a); b != by_rater.end(); ++b) {
            std::vector<std::string> va, vb;
            for (const auto& [item, v] : a->second) {
                auto it = b->second.find(item);
                if (it != b->second.end()) {
                    va.push_back(v);
                    vb.push_back(it->second);
                }
            }
            if (va.size() < 2)
                continue;
            sum += cohen_kappa(va, vb);
            ++pairs;
        }
    if (pairs > 0)
        s.mean_pairwise_cohen = sum / static_cast<double>(pairs);
    return s;
}

}  // namespace natrob::annotation
