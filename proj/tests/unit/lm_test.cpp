#include "natrob/lm/ngram_model.hpp"
#include "support/kn_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

using natrob::lm::NgramModel;
using natrob::lm::TrainOptions;
using natrob::testing::Corpus;
using natrob::testing::OracleKN;
using natrob::testing::Sentence;

namespace {

Corpus small_corpus() {
    return {
        {"int", "x", "=", "0", ";"},
        {"int", "y", "=", "x", "+", "1", ";"},
        {"return", "x", ";"},
        {"x", "=", "x", "+", "1", ";"},
        {"if", "(", "x", ">", "0", ")", "return", "x", ";"},
        {"int", "x", "=", "y", ";"},
        {"return", "y", "+", "x", ";"},
        {"y", "=", "0", ";"},
        {"x", "++", ";"},
        {"return", "0", ";"},
    };
}

Corpus random_corpus(std::mt19937& rng, std::size_t sentences) {
    const Sentence alphabet = {"a", "b", "c", "d", "e", "f", "g", "h"};
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(1, 12);
    // Skewed mixture so every count band gets populated.
    Corpus corpus;
    for (std::size_t i = 0; i < sentences; ++i) {
        Sentence s;
        const std::size_t l = len(rng);
        for (std::size_t j = 0; j < l; ++j)
            s.push_back(alphabet[std::min(pick(rng), pick(rng))]);
        corpus.push_back(s);
    }
    return corpus;
}

double vocab_sum(const NgramModel& m, const Sentence& ctx) {
    double sum = 0;
    for (const auto& t : m.vocabulary().tokens())
        sum += m.prob(t, ctx);
    return sum;
}

std::string serialized(const NgramModel& m) {
    std::ostringstream out;
    m.write(out);
    return out.str();
}

struct HalfScorer : natrob::lm::TokenScorer {
    std::vector<double> log_probs(const std::vector<std::string>& tokens) const override {
        return std::vector<double>(tokens.size() + 1, std::log(0.5));
    }
};

}  // namespace

TEST_CASE("kn matches oracle on a small corpus") {
    const Corpus corpus = small_corpus();
    for (int n : {1, 2, 3, 4}) {
        const auto model = NgramModel::train(corpus, {n, 1});
        const OracleKN oracle(corpus, n);
        std::set<std::string> vocab(model.vocabulary().tokens().begin(), model.vocabulary().tokens().end());
        for (const auto& s : corpus) {
            Sentence ctx;
            for (std::size_t i = 0; i <= s.size(); ++i) {
                for (const auto& w : vocab)
                    CHECK(model.prob(w, ctx) == doctest::Approx(oracle.prob(w, ctx)).epsilon(1e-12));
                if (i < s.size())
                    ctx.push_back(s[i]);
            }
        }
    }
}

TEST_CASE("kn matches oracle on random corpora") {
    std::mt19937 rng(7);
    for (int round = 0; round < 5; ++round) {
        const Corpus corpus = random_corpus(rng, 10);
        const auto model = NgramModel::train(corpus);
        const OracleKN oracle(corpus, 4);
        for (const auto& s : corpus)
            for (std::size_t i = 0; i <= s.size(); ++i) {
                const Sentence ctx(s.begin(), s.begin() + static_cast<long>(i));
                for (const auto& w : model.vocabulary().tokens())
                    REQUIRE(std::abs(model.prob(w, ctx) - oracle.prob(w, ctx)) < 1e-9);
            }
    }
}

TEST_CASE("two-sentence corpus") {
    const Corpus corpus = {{"a", "b"}, {"a", "c"}};
    const auto model = NgramModel::train(corpus);
    const OracleKN oracle(corpus, 4);
    const double p = model.prob("b", {"a"});
    CHECK(std::abs(p - oracle.prob("b", {"a"})) < 1e-9);
    CHECK(p > 0.0);
    CHECK(model.prob("b", {"a"}) == doctest::Approx(model.prob("c", {"a"})));
    CHECK(vocab_sum(model, {"a"}) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("single token corpus normalizes") {
    const auto model = NgramModel::train({{"a"}});
    const Sentence ctx = {"<s>", "<s>", "<s>"};
    const double pa = model.prob("a", ctx);
    CHECK(pa > 0.0);
    CHECK(pa <= 1.0);
    const double sum = pa + model.prob("</s>", ctx) + model.prob("<unk>", ctx);
    CHECK(std::abs(sum - 1.0) < 1e-6);
    CHECK(model.prob("<s>", ctx) == 0.0);
}

TEST_CASE("normalization on sampled contexts") {
    std::mt19937 rng(11);
    const Corpus corpus = random_corpus(rng, 60);
    const auto model = NgramModel::train(corpus);
    const auto& tokens = model.vocabulary().tokens();
    std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1), len(0, 4);
    for (int i = 0; i < 100; ++i) {
        Sentence ctx;
        const std::size_t l = len(rng);
        for (std::size_t j = 0; j < l; ++j)
            ctx.push_back(tokens[pick(rng)]);
        REQUIRE(std::abs(vocab_sum(model, ctx) - 1.0) < 1e-6);
    }
}

TEST_CASE("unseen tokens score as <unk>") {
    const auto model = NgramModel::train(small_corpus());
    CHECK(model.prob("b5saeqw1", {"int"}) == model.prob("<unk>", {"int"}));
    CHECK(model.prob("x", {"zzz", "="}) == model.prob("x", {"<unk>", "="}));
    CHECK(model.prob("b5saeqw1", {"int"}) > 0.0);
}

TEST_CASE("min_count folds rare tokens") {
    const Corpus corpus = {{"a", "a", "b"}, {"a", "c"}};
    const auto model = NgramModel::train(corpus, {4, 2});
    CHECK(model.vocabulary().size() == 4);
    CHECK(model.vocabulary().find("b") == std::nullopt);
    CHECK(model.prob("b", {"a"}) == model.prob("c", {"a"}));
    CHECK(vocab_sum(model, {"a"}) == doctest::Approx(1.0));
}

TEST_CASE("discounts stay in band") {
    std::mt19937 rng(3);
    const auto model = NgramModel::train(random_corpus(rng, 200));
    for (int k = 1; k <= 4; ++k) {
        const auto& d = model.discounts(k);
        for (int j = 0; j < 3; ++j) {
            CHECK(d[static_cast<std::size_t>(j)] > 0.0);
            CHECK(d[static_cast<std::size_t>(j)] <= j + 1.0);
        }
    }
}

TEST_CASE("training is deterministic") {
    std::mt19937 rng(5);
    const Corpus corpus = random_corpus(rng, 50);
    CHECK(serialized(NgramModel::train(corpus)) == serialized(NgramModel::train(corpus)));
}

TEST_CASE("save and load round trip") {
    std::mt19937 rng(9);
    const Corpus corpus = random_corpus(rng, 80);
    const auto model = NgramModel::train(corpus, {4, 2});
    const std::string bytes = serialized(model);
    CHECK(bytes.rfind("NKNLM1", 0) == 0);

    std::istringstream in(bytes);
    const auto loaded = NgramModel::read(in);
    CHECK(loaded.order() == 4);
    CHECK(loaded.min_count() == 2);
    CHECK(serialized(loaded) == bytes);

    const auto& tokens = model.vocabulary().tokens();
    std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1), len(0, 5);
    for (int i = 0; i < 1000; ++i) {
        Sentence ctx;
        const std::size_t l = len(rng);
        for (std::size_t j = 0; j < l; ++j)
            ctx.push_back(tokens[pick(rng)]);
        const std::string& w = tokens[pick(rng)];
        REQUIRE(model.prob(w, ctx) == loaded.prob(w, ctx));
    }
}

TEST_CASE("file layout is little-endian") {
    const auto model = NgramModel::train({{"a"}}, {3, 1});
    const std::string bytes = serialized(model);
    REQUIRE(bytes.size() > 14);
    // version 1, then order 3
    CHECK(bytes.substr(6, 4) == std::string("\x01\x00\x00\x00", 4));
    CHECK(bytes.substr(10, 4) == std::string("\x03\x00\x00\x00", 4));
}

TEST_CASE("corrupt model files are rejected") {
    const std::string bytes = serialized(NgramModel::train(small_corpus()));
    for (std::size_t cut : {std::size_t{0}, std::size_t{3}, std::size_t{8}, bytes.size() / 2, bytes.size() - 1}) {
        std::istringstream in(bytes.substr(0, cut));
        CHECK_THROWS_AS(NgramModel::read(in), natrob::lm::FormatError);
    }
    std::string bad = bytes;
    bad[0] = 'X';
    std::istringstream magic(bad);
    CHECK_THROWS_AS(NgramModel::read(magic), natrob::lm::FormatError);
    bad = bytes;
    bad[6] = 2;
    std::istringstream version(bad);
    CHECK_THROWS_AS(NgramModel::read(version), natrob::lm::FormatError);
    std::istringstream trailing(bytes + "x");
    CHECK_THROWS_AS(NgramModel::read(trailing), natrob::lm::FormatError);
    CHECK_THROWS(NgramModel::load("/nonexistent/model.bin"));
}

TEST_CASE("cross entropy") {
    CHECK(natrob::lm::cross_entropy(HalfScorer{}, {"a", "b", "c"}).value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(natrob::lm::cross_entropy(HalfScorer{}, {"a"}, natrob::lm::LogBase::E).value ==
          doctest::Approx(std::log(2.0)));

    const Sentence text = {"public", "int", "size", "(", ")", "{", "return", "count", ";", "}"};
    const auto model = NgramModel::train({text});
    const auto ce = natrob::lm::cross_entropy(model, text);
    CHECK(ce.token_count == text.size() + 1);
    CHECK(std::isfinite(ce.value));
    CHECK(ce.value == natrob::lm::cross_entropy(model, text).value);

    std::mt19937 rng(1);
    double shuffled = 0;
    for (int i = 0; i < 20; ++i) {
        Sentence s = text;
        std::shuffle(s.begin(), s.end(), rng);
        shuffled += natrob::lm::cross_entropy(model, s).value;
    }
    CHECK(ce.value < shuffled / 20);

    const double bits = natrob::lm::cross_entropy(model, text).value;
    const double nats = natrob::lm::cross_entropy(model, text, natrob::lm::LogBase::E).value;
    CHECK(bits * std::log(2.0) == doctest::Approx(nats).epsilon(1e-12));
}

TEST_CASE("empty inputs") {
    CHECK_THROWS_AS(NgramModel::train({}), natrob::lm::EmptyCorpus);
    CHECK_THROWS_AS(NgramModel::train({{"a"}, {}}), natrob::lm::EmptyCorpus);
    const auto model = NgramModel::train({{"a"}});
    CHECK_THROWS_AS(natrob::lm::cross_entropy(model, {}), natrob::lm::EmptyInput);
}
