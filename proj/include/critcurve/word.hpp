#ifndef CRITCURVE_WORD_HPP
#define CRITCURVE_WORD_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace critcurve {

enum class Letter : std::uint8_t { A = 0, B = 1 };

inline Letter other(Letter l) { return l == Letter::A ? Letter::B : Letter::A; }
inline char letter_char(Letter l) { return l == Letter::A ? 'a' : 'b'; }

/// A finite word over {a,b}.  The reduced word drops the first letter.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    int n() const { return static_cast<int>(letters.size()); }
    Letter at(int i) const { return letters.at(static_cast<std::size_t>(i)); }

    Word reduced() const {
        if (letters.empty()) throw std::invalid_argument("word: empty word has no reduced form");
        return Word(std::vector<Letter>(letters.begin() + 1, letters.end()));
    }
    Word sub(int pos, int len) const {
        if (pos < 0 || len < 0 || pos + len > n())
            throw std::out_of_range("word: subword range");
        return Word(std::vector<Letter>(letters.begin() + pos, letters.begin() + pos + len));
    }
    Word reversed() const { return Word(std::vector<Letter>(letters.rbegin(), letters.rend())); }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
};

struct WordStats {
    int rank = 0;        // 1 + |w|_{ab} + |w|_{ba}
    char sign = '+';     // '+' iff w starts with a
    int count_a = 0;
    int count_b = 0;
};

/// Run-length structure of the reduced word.
struct BlockSeq {
    std::vector<int> exponents;
    Letter leadingLetter = Letter::A;
    bool palindromic = false;   // whether the reduced word is a palindrome
};

/// Parse error with the offending position in the input text.
struct WordParseError : std::runtime_error {
    std::size_t position;
    WordParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Grammar: atoms a|b with optional ^k (k>=1), parenthesized groups with
/// optional ^k, whitespace ignored.  E.g. "(a^3b^4)^3a^2".
Word parse_word(const std::string& text);

/// Canonical printed form: fully expanded run-length with explicit carets
/// and no parentheses, e.g. "a^3b^4a^3".
std::string to_string(const Word& w);

WordStats word_stats(const Word& w);

BlockSeq block_sequence(const Word& w);

/// True iff w and w2 agree at every index outside freePositions.
/// Throws on length mismatch.
bool boundary_equivalent(const Word& w, const Word& w2, const std::set<int>& freePositions);

/// Convenience builders used by the generation module.
Word word_pow(const Word& w, int k);
Word word_cat(const Word& u, const Word& v);
Word word_block(Letter l, int k);

/// Factor-complexity profile of a letter stream.
struct ComplexityProfile {
    std::vector<long long> K;          // K[i] = K(i+1), i = 0..n_max-1
    std::optional<int> ell;            // inferred ell when K(n) = min(2n, n+ell) throughout
    bool freeThroughout = false;       // K(n) = 2n for every tested n
    bool eventuallyPeriodic = false;   // K(n) <= n for some tested n
};

/// K(n) = number of distinct length-n factors, n = 1..n_max.
/// Requires stream length >= streamFactor*n_max and n_max <= 62.
ComplexityProfile complexity_profile(const std::vector<Letter>& stream, int n_max,
                                     int streamFactor = 10);

} // namespace critcurve

#endif
