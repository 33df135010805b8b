#include "natrob/annotation/annotation.hpp"
#include "natrob/metrics/statistics.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace natrob::annotation;

namespace {

LikertResponse resp(std::string rater, std::string item, int readability, int convention, double secs = 30) {
    return {std::move(rater), std::move(item), readability, convention, secs};
}

std::vector<RaterVerdict> verdicts(int natural, int unnatural, const std::string& item = "t") {
    std::vector<RaterVerdict> v;
    for (int i = 0; i < natural; ++i)
        v.push_back({"n" + std::to_string(i), item, Verdict::Natural});
    for (int i = 0; i < unnatural; ++i)
        v.push_back({"u" + std::to_string(i), item, Verdict::Unnatural});
    return v;
}

}  // namespace

TEST_CASE("rater verdict") {
    CHECK(rater_verdict(resp("r", "t", 1, 1)).verdict == Verdict::Natural);
    CHECK(rater_verdict(resp("r", "t", 2, 2)).verdict == Verdict::Natural);
    CHECK(rater_verdict(resp("r", "t", 4, 1)).verdict == Verdict::Unnatural);
    CHECK(rater_verdict(resp("r", "t", 2, 3)).verdict == Verdict::Unnatural);
    CHECK_THROWS_AS(rater_verdict(resp("r", "t", 0, 1)), RangeError);
    CHECK_THROWS_AS(rater_verdict(resp("r", "t", 1, 5)), RangeError);
}

TEST_CASE("aggregate label boundaries") {
    CHECK(aggregate_label(verdicts(5, 0)).label == Label::Natural);
    CHECK(aggregate_label(verdicts(4, 1)).label == Label::Natural);
    CHECK(aggregate_label(verdicts(3, 2)).label == Label::LikelyNatural);
    CHECK(aggregate_label(verdicts(2, 3)).label == Label::LikelyUnnatural);
    CHECK(aggregate_label(verdicts(1, 4)).label == Label::Unnatural);
    CHECK(aggregate_label(verdicts(0, 5)).label == Label::Unnatural);
    const auto l = aggregate_label(verdicts(1, 4));
    CHECK(l.n_natural == 1);
    CHECK(l.n_unnatural == 4);

    CHECK_THROWS_AS(aggregate_label(verdicts(2, 2)), CardinalityError);
    CHECK_THROWS_AS(aggregate_label(verdicts(3, 3)), CardinalityError);
    auto dup = verdicts(5, 0);
    dup[1].rater_id = dup[0].rater_id;
    CHECK_THROWS_AS(aggregate_label(dup), CardinalityError);
    auto mixed = verdicts(5, 0);
    mixed[2].transformation_id = "other";
    CHECK_THROWS_AS(aggregate_label(mixed), CardinalityError);
}

TEST_CASE("label names") {
    for (Label l : {Label::Natural, Label::LikelyNatural, Label::LikelyUnnatural, Label::Unnatural})
        CHECK(label_from_string(to_string(l)) == l);
    CHECK_FALSE(label_from_string("natural").has_value());
}

TEST_CASE("fleiss kappa") {
    CHECK(fleiss_kappa({{5, 0}, {0, 5}, {5, 0}}) == doctest::Approx(1.0));
    CHECK(fleiss_kappa({{5, 0}, {5, 0}}) == 1.0);
    CHECK(fleiss_kappa({{2, 0}, {0, 2}, {1, 1}, {1, 1}}) == doctest::Approx(0.0).epsilon(1e-12));

    // Ten items, five raters, two categories, worked longhand:
    //   column totals 27 / 23 of 50 -> P_e = 0.54^2 + 0.46^2 = 0.5032
    //   per-item agreement sum(n(n-1))/20: 5-0 -> 1, 4-1 -> 0.6, 3-2 -> 0.4
    //   rows: 1, .6, .4, 1, .6, .4, 1, .6, 1, .4 -> P_bar = 0.7
    const double hand = (0.7 - 0.5032) / (1 - 0.5032);
    const std::vector<std::vector<int>> m = {{5, 0}, {4, 1}, {3, 2}, {0, 5}, {1, 4},
                                             {2, 3}, {5, 0}, {4, 1}, {0, 5}, {3, 2}};
    CHECK(std::abs(fleiss_kappa(m) - hand) < 1e-6);
    CHECK(std::abs(fleiss_kappa(m) - 0.3961352657004829) < 1e-9);

    // The widely reproduced 10-subject, 14-rater, 5-category example.
    const std::vector<std::vector<int>> classic = {{0, 0, 0, 0, 14}, {0, 2, 6, 4, 2}, {0, 0, 3, 5, 6}, {0, 3, 9, 2, 0},
                                                   {2, 2, 8, 1, 1},  {7, 7, 0, 0, 0}, {3, 2, 6, 3, 0}, {2, 5, 3, 2, 2},
                                                   {6, 5, 2, 1, 0},  {0, 2, 2, 3, 7}};
    CHECK(std::abs(fleiss_kappa(classic) - 0.20993070442195522) < 1e-9);

    CHECK_THROWS_AS(fleiss_kappa({{5, 0}, {3, 1}}), RaggedMatrix);
    CHECK_THROWS_AS(fleiss_kappa({{5, 0}, {5}}), RaggedMatrix);
    CHECK_THROWS_AS(fleiss_kappa({}), RaggedMatrix);
    CHECK_THROWS_AS(fleiss_kappa({{1, 0}}), RaggedMatrix);
}

TEST_CASE("cohen kappa") {
    const std::vector<std::string> a = {"x", "y", "x", "z"};
    CHECK(cohen_kappa(a, a) == doctest::Approx(1.0));

    // 2x2 table with counts 20, 5 / 10, 15: p_o = 35/50, p_e = .5*.6 + .5*.4.
    std::vector<std::string> r1, r2;
    auto add = [&](const char* x, const char* y, int n) {
        for (int i = 0; i < n; ++i) {
            r1.push_back(x);
            r2.push_back(y);
        }
    };
    add("a", "a", 20);
    add("a", "b", 5);
    add("b", "a", 10);
    add("b", "b", 15);
    CHECK(std::abs(cohen_kappa(r1, r2) - (0.7 - 0.5) / (1 - 0.5)) < 1e-6);
    CHECK(std::abs(cohen_kappa(r1, r2) - 0.4) < 1e-12);

    // Independent marginals: every cell 10, p_o = p_e = 0.5.
    r1.clear();
    r2.clear();
    add("a", "a", 10);
    add("a", "b", 10);
    add("b", "a", 10);
    add("b", "b", 10);
    CHECK(std::abs(cohen_kappa(r1, r2)) < 1e-9);

    CHECK(cohen_kappa({"a", "a"}, {"a", "a"}) == 1.0);
    CHECK_THROWS_AS(cohen_kappa({"a"}, {}), natrob::metrics::LengthMismatch);
    CHECK_THROWS_AS(cohen_kappa({}, {}), std::invalid_argument);
}

TEST_CASE("kappa bounds on random input") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> cat(0, 2), split(0, 5);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::string> a, b;
        std::vector<std::vector<int>> m;
        for (int i = 0; i < 12; ++i) {
            a.push_back(std::to_string(cat(rng)));
            b.push_back(std::to_string(cat(rng)));
            const int k = split(rng);
            m.push_back({k, 5 - k});
        }
        const double c = cohen_kappa(a, b), f = fleiss_kappa(m);
        REQUIRE(c >= -1.0);
        REQUIRE(c <= 1.0);
        REQUIRE(f >= -1.0);
        REQUIRE(f <= 1.0);
    }
}

TEST_CASE("trim outlier times") {
    std::vector<LikertResponse> same(100, resp("r", "t", 1, 1, 42));
    auto t = trim_outlier_times(same);
    CHECK(t.dropped == 0);
    CHECK(t.kept.size() == 100);

    std::vector<LikertResponse> ramp;
    for (int i = 1; i <= 100; ++i)
        ramp.push_back(resp("r" + std::to_string(i), "t", 1, 1, i));
    t = trim_outlier_times(ramp);
    // 99th percentile by interpolation: 99 + 0.01 * (100 - 99).
    CHECK(t.cutoff == doctest::Approx(99.01));
    CHECK(t.dropped == 1);
    CHECK(t.kept.back().completion_seconds == 99);

    t = trim_outlier_times({resp("r", "t", 1, 1, 1e6)});
    CHECK(t.dropped == 0);
    CHECK_THROWS_AS(trim_outlier_times({}), std::invalid_argument);
}

TEST_CASE("csv reading") {
    std::istringstream in(
        "transformation_id,rater_id,readability,convention,completion_seconds\n"
        "t1,r1,1,2,30.5\n"
        "\"t,2\",r1,4,4,12\n"
        "t3,r1,5,1,10\n"
        "t4,r1,x,1,10\n"
        "t5,r1,1,1\n"
        "\n"
        "t6,r1,1,1,-3\n");
    const auto res = read_responses_csv(in);
    REQUIRE(res.responses.size() == 2);
    CHECK(res.responses[0].transformation_id == "t1");
    CHECK(res.responses[0].completion_seconds == 30.5);
    CHECK(res.responses[1].transformation_id == "t,2");
    REQUIRE(res.errors.size() == 4);
    CHECK(res.errors[0].line == 4);
    CHECK(res.errors[3].line == 8);

    std::istringstream bad("rater_id,transformation_id,readability\n");
    CHECK_THROWS_AS(read_responses_csv(bad), std::invalid_argument);
}

TEST_CASE("label_all and summary") {
    std::vector<LikertResponse> rs;
    auto item = [&](const std::string& id, std::vector<std::pair<int, int>> answers) {
        for (std::size_t i = 0; i < answers.size(); ++i)
            rs.push_back(resp("r" + std::to_string(i), id, answers[i].first, answers[i].second));
    };
    item("a", {{1, 1}, {1, 2}, {2, 1}, {1, 1}, {2, 2}});
    item("b", {{4, 1}, {3, 3}, {1, 4}, {4, 4}, {1, 1}});
    item("c", {{1, 1}, {1, 1}, {1, 1}, {3, 1}, {1, 3}});
    item("d", {{1, 1}, {1, 1}});
    item("e", {{1, 1}, {1, 1}, {1, 9}, {1, 1}, {1, 1}});
    const auto res = label_all(rs);
    REQUIRE(res.labels.size() == 3);
    CHECK(res.labels[0].label == Label::Natural);
    CHECK(res.labels[1].label == Label::Unnatural);
    CHECK(res.labels[2].label == Label::LikelyNatural);
    REQUIRE(res.errors.size() == 2);
    CHECK(res.errors[0].transformation_id == "d");
    CHECK(res.errors[1].transformation_id == "e");

    const auto s = summarize(res.labels, rs);
    CHECK(s.items == 3);
    CHECK(s.full == 1);
    CHECK(s.high == 1);
    CHECK(s.disagreement == 1);
    CHECK(s.natural + s.likely_natural + s.likely_unnatural + s.unnatural == s.items);
    REQUIRE(s.fleiss.has_value());
    CHECK(*s.fleiss == doctest::Approx(fleiss_kappa({{5, 0}, {1, 4}, {3, 2}})));
    REQUIRE(s.mean_pairwise_cohen.has_value());
}

TEST_CASE("unanimous responses give fleiss 1") {
    std::vector<LikertResponse> rs;
    for (int i = 0; i < 4; ++i)
        for (int r = 0; r < 5; ++r)
            rs.push_back(resp("r" + std::to_string(r), "t" + std::to_string(i), 1, 2));
    const auto res = label_all(rs);
    const auto s = summarize(res.labels, rs);
    CHECK(s.natural == 4);
    CHECK(*s.fleiss == 1.0);
}

TEST_CASE("raising answers never moves toward natural") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> likert(1, 4), who(0, 4), which(0, 1);
    for (int round = 0; round < 1000; ++round) {
        std::vector<LikertResponse> rs;
        for (int r = 0; r < 5; ++r)
            rs.push_back(resp("r" + std::to_string(r), "t", likert(rng), likert(rng)));
        auto label_of = [](const std::vector<LikertResponse>& v) { return label_all(v).labels.at(0).label; };
        const Label before = label_of(rs);
        auto& target = rs[static_cast<std::size_t>(who(rng))];
        int& answer = which(rng) ? target.readability : target.convention;
        answer = std::min(4, answer + 1 + which(rng));
        REQUIRE(label_of(rs) >= before);
    }
}
