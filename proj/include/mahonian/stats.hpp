#pragma once

/**
 * Word statistics parameterized by letter order and boundary convention.
 *
 * Two total orders on signed letters are in play:
 *
 *   natural:  -n < ... < -1 < 0 < 1 < ... < n        (plain integer order)
 *   special:  -1 < -2 < ... < -n < 0 < 1 < ... < n   (negatives reversed)
 *
 * They agree on nonnegative letters.  Descents may include a boundary
 * position 0, either against a fixed sigma_0 = 0 (hyperoctahedral descents)
 * or against sigma_0 = -sigma_2 (type D descents).  Position 0 contributes
 * to des but adds nothing to maj.
 *
 * Statistics accept arbitrary SignedWords (non-contiguous alphabets occur as
 * shuffle inputs); orders compare actual letter values.
 */

#include <cmath>
#include <cstdlib>
#include <vector>

#include "mahonian/errors.hpp"
#include "mahonian/signed_word.hpp"

namespace mahonian {

enum class LetterOrder { natural, special };
enum class Boundary { none, zero_prefix, type_d };
enum class CoxeterType { A, B, D };

inline bool letter_less(int a, int b, LetterOrder order) {
    if (order == LetterOrder::natural) return a < b;
    const bool na = a < 0, nb = b < 0;
    if (na != nb) return na;            // negatives precede nonnegatives
    if (na) return -a < -b;             // among negatives: smaller absolute value first
    return a < b;
}

inline long long inv(const SignedWord& w, LetterOrder order = LetterOrder::natural) {
    long long count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (letter_less(w[j], w[i], order)) ++count;
    return count;
}

/// Descent positions, 1-based; boundary descents appear as position 0.
inline std::vector<int> descent_set(const SignedWord& w, LetterOrder order,
                                    Boundary boundary = Boundary::none) {
    std::vector<int> out;
    if (boundary == Boundary::type_d && w.size() < 2)
        throw precondition_violation("type-D boundary requires length >= 2");
    if (!w.empty() && boundary != Boundary::none) {
        const int w0 = boundary == Boundary::zero_prefix ? 0 : -w[1];
        if (letter_less(w[0], w0, order)) out.push_back(0);
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (letter_less(w[i + 1], w[i], order)) out.push_back(static_cast<int>(i) + 1);
    return out;
}

inline long long des(const SignedWord& w, LetterOrder order, Boundary boundary = Boundary::none) {
    return static_cast<long long>(descent_set(w, order, boundary).size());
}

inline long long maj(const SignedWord& w, LetterOrder order, Boundary boundary = Boundary::none) {
    long long total = 0;
    for (int i : descent_set(w, order, boundary)) total += i;
    return total;
}

/// maj under the natural order, no boundary.
inline long long maj_a(const SignedWord& w) { return maj(w, LetterOrder::natural); }
inline long long maj_a(const SignedPermutation& s) { return maj_a(s.word()); }

/// Flag major index: 2*maj (special order) + number of negative letters.
inline long long fmaj(const SignedWord& w) {
    return 2 * maj(w, LetterOrder::special) + neg_count(w);
}
inline long long fmaj(const SignedPermutation& s) { return fmaj(s.word()); }

/// Coxeter length: type A is inv, type B adds the negated letter total,
/// type D subtracts the number of negative letters from the type B value.
inline long long length(const SignedPermutation& s, CoxeterType type) {
    switch (type) {
    case CoxeterType::A:
        if (!s.word().all_positive())
            throw type_mismatch("length: type A requires an unsigned permutation");
        return inv(s.word(), LetterOrder::natural);
    case CoxeterType::B:
        return inv(s.word(), LetterOrder::natural) - neg_sum(s);
    case CoxeterType::D:
        return inv(s.word(), LetterOrder::natural) - neg_sum(s) - neg_count(s);
    }
    return 0;
}

/// D-major index: fmaj after replacing the last letter with its absolute value.
inline long long dmaj(const SignedPermutation& s) {
    if (s.empty()) return 0;
    std::vector<int> letters(s.begin(), s.end());
    letters.back() = std::abs(letters.back());
    return fmaj(SignedWord(std::move(letters)));
}

} // namespace mahonian
