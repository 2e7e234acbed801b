#include "critcurve/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace critcurve {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    // optional ^k suffix; returns 1 if absent
    int exponent() {
        skip_ws();
        if (pos >= s.size() || s[pos] != '^') return 1;
        ++pos;
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw WordParseError("expected integer exponent after '^'", pos);
        long k = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            k = k * 10 + (s[pos] - '0');
            if (k > 1000000) throw WordParseError("exponent too large", pos);
            ++pos;
        }
        if (k == 0) throw WordParseError("zero exponent", pos);
        return static_cast<int>(k);
    }

    // atom := ('a'|'b') exp? | '(' seq ')' exp?
    void atom(std::vector<Letter>& out) {
        char c = peek();
        if (c == 'a' || c == 'b') {
            ++pos;
            int k = exponent();
            out.insert(out.end(), static_cast<std::size_t>(k), c == 'a' ? Letter::A : Letter::B);
        } else if (c == '(') {
            std::size_t open = pos;
            ++pos;
            std::vector<Letter> inner;
            seq(inner);
            if (peek() != ')') throw WordParseError("unbalanced '('", open);
            ++pos;
            if (inner.empty()) throw WordParseError("empty group", open);
            int k = exponent();
            for (int i = 0; i < k; ++i) out.insert(out.end(), inner.begin(), inner.end());
        } else {
            throw WordParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }

    void seq(std::vector<Letter>& out) {
        while (!eof() && peek() != ')') atom(out);
    }
};

} // namespace

Word parse_word(const std::string& text) {
    Parser p(text);
    std::vector<Letter> out;
    p.seq(out);
    if (!p.eof()) throw WordParseError("trailing input", p.pos);
    if (out.empty()) throw WordParseError("empty expansion", 0);
    return Word(std::move(out));
}

std::string to_string(const Word& w) {
    std::string out;
    int i = 0;
    const int n = w.n();
    while (i < n) {
        int j = i;
        while (j < n && w.at(j) == w.at(i)) ++j;
        out += letter_char(w.at(i));
        out += '^';
        out += std::to_string(j - i);
        i = j;
    }
    return out;
}

WordStats word_stats(const Word& w) {
    if (w.n() == 0) throw std::invalid_argument("word_stats: empty word");
    WordStats st;
    st.sign = (w.at(0) == Letter::A) ? '+' : '-';
    int changes = 0;
    for (int i = 0; i < w.n(); ++i) {
        if (w.at(i) == Letter::A) ++st.count_a; else ++st.count_b;
        if (i + 1 < w.n() && w.at(i) != w.at(i + 1)) ++changes;
    }
    st.rank = 1 + changes;
    return st;
}

BlockSeq block_sequence(const Word& w) {
    Word r = w.reduced();
    BlockSeq bs;
    if (r.n() == 0) {
        bs.leadingLetter = w.at(0);
        bs.palindromic = true;
        return bs;
    }
    bs.leadingLetter = r.at(0);
    int i = 0;
    while (i < r.n()) {
        int j = i;
        while (j < r.n() && r.at(j) == r.at(i)) ++j;
        bs.exponents.push_back(j - i);
        i = j;
    }
    bs.palindromic = true;
    for (int k = 0; k < r.n() / 2; ++k)
        if (r.at(k) != r.at(r.n() - 1 - k)) { bs.palindromic = false; break; }
    return bs;
}

bool boundary_equivalent(const Word& w, const Word& w2, const std::set<int>& freePositions) {
    if (w.n() != w2.n())
        throw std::invalid_argument("boundary_equivalent: length mismatch");
    for (int i = 0; i < w.n(); ++i) {
        if (freePositions.count(i)) continue;
        if (w.at(i) != w2.at(i)) return false;
    }
    return true;
}

Word word_pow(const Word& w, int k) {
    if (k < 0) throw std::invalid_argument("word_pow: negative exponent");
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(w.n()) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.letters.begin(), w.letters.end());
    return Word(std::move(out));
}

Word word_cat(const Word& u, const Word& v) {
    std::vector<Letter> out = u.letters;
    out.insert(out.end(), v.letters.begin(), v.letters.end());
    return Word(std::move(out));
}

Word word_block(Letter l, int k) {
    if (k < 1) throw std::invalid_argument("word_block: exponent must be >= 1");
    return Word(std::vector<Letter>(static_cast<std::size_t>(k), l));
}

ComplexityProfile complexity_profile(const std::vector<Letter>& stream, int n_max,
                                     int streamFactor) {
    if (n_max < 1) throw std::invalid_argument("complexity_profile: n_max must be >= 1");
    if (n_max > 62) throw std::invalid_argument("complexity_profile: n_max > 62 unsupported");
    if (static_cast<long long>(stream.size()) < static_cast<long long>(streamFactor) * n_max)
        throw std::invalid_argument("complexity_profile: stream too short (need >= " +
                                    std::to_string(streamFactor) + "*n_max letters)");

    ComplexityProfile prof;
    prof.K.resize(static_cast<std::size_t>(n_max));
    const std::size_t len = stream.size();
    for (int n = 1; n <= n_max; ++n) {
        std::unordered_set<std::uint64_t> factors;
        // Pack the window into n bits; the leading 1 marks the length.
        std::uint64_t win = 1;
        for (int i = 0; i < n; ++i)
            win = (win << 1) | static_cast<std::uint64_t>(stream[static_cast<std::size_t>(i)]);
        factors.insert(win);
        const std::uint64_t lenBit = std::uint64_t(1) << n;
        for (std::size_t i = static_cast<std::size_t>(n); i < len; ++i) {
            win = ((win << 1) | static_cast<std::uint64_t>(stream[i])) & (2 * lenBit - 1);
            win |= lenBit;
            factors.insert(win);
        }
        prof.K[static_cast<std::size_t>(n - 1)] = static_cast<long long>(factors.size());
    }

    prof.eventuallyPeriodic = false;
    for (int n = 1; n <= n_max; ++n)
        if (prof.K[static_cast<std::size_t>(n - 1)] <= n) { prof.eventuallyPeriodic = true; break; }

    prof.freeThroughout = true;
    for (int n = 1; n <= n_max; ++n)
        if (prof.K[static_cast<std::size_t>(n - 1)] != 2LL * n) { prof.freeThroughout = false; break; }

    if (!prof.freeThroughout && !prof.eventuallyPeriodic) {
        // Rotational shape: K(n) = min(2n, n + ell).
        long long cand = prof.K[static_cast<std::size_t>(n_max - 1)] - n_max;
        bool ok = cand >= 1;
        for (int n = 1; ok && n <= n_max; ++n) {
            long long expect = std::min<long long>(2LL * n, n + cand);
            if (prof.K[static_cast<std::size_t>(n - 1)] != expect) ok = false;
        }
        if (ok) prof.ell = static_cast<int>(cand);
    }
    return prof;
}

} // namespace critcurve
