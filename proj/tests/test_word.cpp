#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "critcurve/word.hpp"

#include <cmath>
#include <random>

using namespace critcurve;

namespace {

Word random_word(std::mt19937_64& rng, int n) {
    std::vector<Letter> ls(static_cast<std::size_t>(n));
    for (auto& l : ls) l = (rng() & 1) ? Letter::A : Letter::B;
    return Word(std::move(ls));
}

std::vector<Letter> rotation_coding(double theta, double rho, double x0, std::size_t len) {
    std::vector<Letter> out(len);
    double x = x0;
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = (x < rho) ? Letter::A : Letter::B;
        x += theta;
        x -= std::floor(x);
    }
    return out;
}

} // namespace

TEST_CASE("parse_word expands atoms, carets and groups") {
    CHECK(to_string(parse_word("a^3")) == "a^3");
    CHECK(parse_word("a^3").n() == 3);

    Word w = parse_word("(a^3b^4)^3a^2");
    CHECK(w.n() == 23);
    CHECK(to_string(w) == "a^3b^4a^3b^4a^3b^4a^2");

    Word w2 = parse_word("(a^2b^5)^3a^2");
    CHECK(w2.n() == 23);
    CHECK(word_stats(w2).rank == 7);

    CHECK(parse_word(" a ^ 2  b") == parse_word("a^2b"));
}

TEST_CASE("parse_word rejects bad input with positions") {
    CHECK_THROWS_AS(parse_word("a^0"), WordParseError);
    CHECK_THROWS_AS(parse_word(""), WordParseError);
    CHECK_THROWS_AS(parse_word("()a"), WordParseError);
    CHECK_THROWS_AS(parse_word("a^"), WordParseError);
    CHECK_THROWS_AS(parse_word("(ab"), WordParseError);
    CHECK_THROWS_AS(parse_word("abc"), WordParseError);
    try {
        parse_word("ab c^2x");
    } catch (const WordParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("word_stats rank, sign and letter counts") {
    WordStats s = word_stats(parse_word("a^3"));
    CHECK(s.rank == 1);
    CHECK(s.sign == '+');
    CHECK(s.count_a == 3);
    CHECK(s.count_b == 0);

    CHECK(word_stats(parse_word("(a^3b^4)^3a^2")).rank == 7);
    CHECK(word_stats(parse_word("(a^3b^4)^3a^2")).sign == '+');

    WordStats sb = word_stats(parse_word("b^5"));
    CHECK(sb.rank == 1);
    CHECK(sb.sign == '-');
}

TEST_CASE("block_sequence run-length encodes the reduced word") {
    BlockSeq bs = block_sequence(parse_word("(a^3b^4)^3a^2"));
    CHECK(bs.exponents == std::vector<int>{2, 4, 3, 4, 3, 4, 2});
    CHECK(bs.palindromic);
    CHECK(bs.leadingLetter == Letter::A);

    BlockSeq b1 = block_sequence(parse_word("a^3"));
    CHECK(b1.exponents == std::vector<int>{2});
    CHECK(b1.palindromic);

    BlockSeq b2 = block_sequence(parse_word("a^2b^2"));
    CHECK(b2.exponents == std::vector<int>{1, 2});
    CHECK_FALSE(b2.palindromic);
}

TEST_CASE("boundary_equivalent compares outside free positions") {
    Word w = parse_word("(a^3b^4)^3a^2");
    Word w2 = parse_word("(a^2b^5)^3a^2");
    CHECK(boundary_equivalent(w, w2, {0, 2, 9, 16}));
    CHECK(boundary_equivalent(w, w, {0}));
    CHECK_FALSE(boundary_equivalent(parse_word("ab"), parse_word("ba"), {0}));
    CHECK_THROWS_AS(boundary_equivalent(parse_word("a"), parse_word("ab"), {0}),
                    std::invalid_argument);
}

TEST_CASE("print/parse round-trip for random words") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 200);
        Word w = random_word(rng, n);
        CHECK(parse_word(to_string(w)) == w);
    }
}

TEST_CASE("block sequence concatenation reconstructs the reduced word") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 60);
        Word w = random_word(rng, n);
        BlockSeq bs = block_sequence(w);
        std::vector<Letter> rebuilt;
        Letter cur = bs.leadingLetter;
        for (int e : bs.exponents) {
            rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(e), cur);
            cur = other(cur);
        }
        CHECK(Word(rebuilt) == w.reduced());
    }
}

TEST_CASE("rank parity matches first/last letter agreement") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 40);
        Word w = random_word(rng, n);
        WordStats s = word_stats(w);
        bool same = w.at(0) == w.at(n - 1);
        CHECK(same == (s.rank % 2 == 1));
    }
}

TEST_CASE("balance identity for palindromic reduced words") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int half = 1 + static_cast<int>(rng() % 12);
        // build a palindrome of odd or even length from a random half
        std::vector<Letter> h(static_cast<std::size_t>(half));
        for (auto& l : h) l = (rng() & 1) ? Letter::A : Letter::B;
        std::vector<Letter> pal(h);
        bool oddLen = rng() & 1;
        for (int i = half - (oddLen ? 2 : 1); i >= 0; --i) pal.push_back(h[static_cast<std::size_t>(i)]);
        std::vector<Letter> full;
        full.push_back((rng() & 1) ? Letter::A : Letter::B);
        full.insert(full.end(), pal.begin(), pal.end());
        Word w(full);

        BlockSeq bs = block_sequence(w);
        REQUIRE(bs.palindromic);
        if (bs.exponents.size() % 2 == 1) {
            std::size_t m = (bs.exponents.size() + 1) / 2;
            long long sum = bs.exponents[m - 1];
            for (std::size_t k = 0; k + 1 < m; ++k) sum += 2LL * bs.exponents[k];
            CHECK(sum == w.n() - 1);
        }
    }
}

TEST_CASE("complexity of a Sturmian stream is n+1") {
    const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
    auto stream = rotation_coding(theta, theta, 0.1234, 6000);
    ComplexityProfile prof = complexity_profile(stream, 12);
    for (int n = 1; n <= 12; ++n) CHECK(prof.K[static_cast<std::size_t>(n - 1)] == n + 1);
    REQUIRE(prof.ell.has_value());
    CHECK(*prof.ell == 1);
    CHECK_FALSE(prof.freeThroughout);
    CHECK_FALSE(prof.eventuallyPeriodic);
}

TEST_CASE("complexity of the periodic stream (ab)^inf is 2") {
    std::vector<Letter> stream;
    for (int i = 0; i < 400; ++i) {
        stream.push_back(Letter::A);
        stream.push_back(Letter::B);
    }
    ComplexityProfile prof = complexity_profile(stream, 8);
    for (int n = 1; n <= 8; ++n) CHECK(prof.K[static_cast<std::size_t>(n - 1)] == 2);
    CHECK(prof.eventuallyPeriodic);
}

TEST_CASE("complexity of a quasi-Sturmian stream with ell = 3") {
    // boundary points 0 and rho on the same orbit, 3 iterations apart
    const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
    double rho = 3.0 * theta - std::floor(3.0 * theta);
    auto stream = rotation_coding(theta, rho, 0.0321, 20000);
    ComplexityProfile prof = complexity_profile(stream, 10);
    for (int n = 1; n <= 3; ++n) CHECK(prof.K[static_cast<std::size_t>(n - 1)] == 2 * n);
    for (int n = 4; n <= 10; ++n) CHECK(prof.K[static_cast<std::size_t>(n - 1)] == n + 3);
    REQUIRE(prof.ell.has_value());
    CHECK(*prof.ell == 3);
}

TEST_CASE("complexity_profile rejects short streams") {
    std::vector<Letter> s(50, Letter::A);
    CHECK_THROWS_AS(complexity_profile(s, 10), std::invalid_argument);
}
