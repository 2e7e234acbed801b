#include "critcurve/continuant.hpp"

#include <stdexcept>

namespace critcurve {

ContinuantSeq q_sequence(const Word& w) {
    const int n = w.n();
    if (n < 1) throw std::invalid_argument("q_sequence: empty word");
    ContinuantSeq seq;
    seq.word = w;
    seq.k = n / 2;
    seq.Q.resize(static_cast<std::size_t>(n) + 1);
    seq.Q[0] = BivarPoly();                    // Q_0 = 0
    if (n >= 1) seq.Q[1] = BivarPoly::constant(1);
    for (int t = 1; t < n; ++t)
        seq.Q[static_cast<std::size_t>(t) + 1] =
            letter_poly(w.at(t)) * seq.Q[static_cast<std::size_t>(t)] - seq.Q[static_cast<std::size_t>(t) - 1];
    return seq;
}

BivarPoly continuant_of(const std::vector<BivarPoly>& letters) {
    BivarPoly prev;                            // Q_0 = 0
    BivarPoly cur = BivarPoly::constant(1);    // Q_1 = 1
    for (const auto& v : letters) {
        BivarPoly next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

BivarPoly brute(const std::vector<BivarPoly>& v, std::size_t i) {
    if (i >= v.size()) return BivarPoly::constant(1);
    // keep letter i, or strike the pair (i, i+1) with factor -1
    BivarPoly keep = v[i] * brute(v, i + 1);
    if (i + 1 < v.size()) keep -= brute(v, i + 2);
    return keep;
}

} // namespace

BivarPoly continuant_bruteforce(const std::vector<BivarPoly>& letters) {
    if (letters.size() > 20)
        throw std::invalid_argument("continuant_bruteforce: capped at 20 letters");
    return brute(letters, 0);
}

MatrixWord matrix_of_word(const Word& w) {
    MatrixWord acc;
    acc.m[0][0] = BivarPoly::constant(1);
    acc.m[1][1] = BivarPoly::constant(1);
    for (int t = 0; t < w.n(); ++t) {
        // acc <- M_{w_t} * acc
        BivarPoly x = letter_poly(w.at(t));
        BivarPoly r0c0 = x * acc.m[0][0] - acc.m[1][0];
        BivarPoly r0c1 = x * acc.m[0][1] - acc.m[1][1];
        acc.m[1][0] = acc.m[0][0];
        acc.m[1][1] = acc.m[0][1];
        acc.m[0][0] = r0c0;
        acc.m[0][1] = r0c1;
    }
    return acc;
}

CurvePolys curve_polys(const Word& w) {
    ContinuantSeq seq = q_sequence(w);
    const int n = w.n();
    const int k = seq.k;
    CurvePolys cp;
    cp.rankOdd = (word_stats(w).rank % 2 == 1);
    if (!cp.rankOdd) {
        cp.C = seq.Q[static_cast<std::size_t>(n)];
        cp.Ctilde = BivarPoly::constant(1);
        return cp;
    }
    if (n % 2 == 1) {
        cp.C = seq.Q[static_cast<std::size_t>(k) + 1] - seq.Q[static_cast<std::size_t>(k)];
        cp.Ctilde = seq.Q[static_cast<std::size_t>(k) + 1] + seq.Q[static_cast<std::size_t>(k)];
    } else {
        cp.C = seq.Q[static_cast<std::size_t>(k) + 1] - seq.Q[static_cast<std::size_t>(k) - 1];
        cp.Ctilde = seq.Q[static_cast<std::size_t>(k)];
    }
    return cp;
}

namespace {

void require_palindromic_reduced(const Word& w, const char* who) {
    Word r = w.reduced();
    for (int i = 0; i < r.n() / 2; ++i)
        if (r.at(i) != r.at(r.n() - 1 - i))
            throw std::invalid_argument(std::string(who) + ": reduced word is not a palindrome");
}

} // namespace

bool verify_factorization(const Word& w) {
    require_palindromic_reduced(w, "verify_factorization");
    ContinuantSeq seq = q_sequence(w);
    const int n = w.n();
    const int k = seq.k;
    BivarPoly C, Ct;
    if (n % 2 == 1) {
        C = seq.Q[static_cast<std::size_t>(k) + 1] - seq.Q[static_cast<std::size_t>(k)];
        Ct = seq.Q[static_cast<std::size_t>(k) + 1] + seq.Q[static_cast<std::size_t>(k)];
    } else {
        C = seq.Q[static_cast<std::size_t>(k) + 1] - seq.Q[static_cast<std::size_t>(k) - 1];
        Ct = seq.Q[static_cast<std::size_t>(k)];
    }
    return seq.Q[static_cast<std::size_t>(n)] == C * Ct;
}

BivarPoly symmetry_cofactor(const Word& w, int t) {
    require_palindromic_reduced(w, "symmetry_cofactor");
    const int n = w.n();
    if (t < 0 || t > n) throw std::out_of_range("symmetry_cofactor: t out of range");
    const int k = n / 2;
    if (t < k) return -symmetry_cofactor(w, n - t);

    std::vector<BivarPoly> letters;
    if (n % 2 == 1) {
        // S_t = Q_{t-k+1}(w_k -> -1, w_{k+1}, ..., w_{t-1})
        if (t == k) return BivarPoly::constant(1);
        letters.push_back(BivarPoly::constant(-1));
        for (int i = k + 1; i <= t - 1; ++i) letters.push_back(letter_poly(w.at(i)));
        return continuant_of(letters);
    }
    // S_t = -Q_{t-k}(w_{k+1}, ..., w_{t-1})
    if (t == k) return BivarPoly();   // -Q_0 = 0
    for (int i = k + 1; i <= t - 1; ++i) letters.push_back(letter_poly(w.at(i)));
    return -continuant_of(letters);
}

std::vector<double> q_values(const Word& w, double a, double b) {
    const int n = w.n();
    std::vector<double> q(static_cast<std::size_t>(n) + 1);
    q[0] = 0.0;
    q[1] = 1.0;
    for (int t = 1; t < n; ++t) {
        double wt = (w.at(t) == Letter::A) ? a : b;
        q[static_cast<std::size_t>(t) + 1] = wt * q[static_cast<std::size_t>(t)] - q[static_cast<std::size_t>(t) - 1];
    }
    return q;
}

} // namespace critcurve
