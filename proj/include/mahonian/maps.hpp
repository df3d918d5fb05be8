#pragma once

/**
 * Bijections and shuffle constructions on signed words.
 *
 * reduce            order- and sign-preserving relabeling onto {1..m}
 * derangement_part  reduce applied to the subword of non-fixed positions
 * psi_bar           relabeling by subcedant / fixed point / excedant class;
 *                   carries the fiber {dp(pi) = sigma} onto a shuffle set
 * shuffles          all interleavings of two alphabet-disjoint words
 * shuffles_sb       interleavings whose last letter is the left word's last
 * fiber             exact preimage of derangement_part, by enumeration
 */

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <vector>

#include "mahonian/enumerate.hpp"
#include "mahonian/errors.hpp"
#include "mahonian/signed_word.hpp"

namespace mahonian {

/// Order-isomorphic signed permutation: letter (sgn x) a_j maps to (sgn x) j,
/// where a_1 < a_2 < ... are the absolute values occurring in w.
inline SignedPermutation reduce(const SignedWord& w) {
    std::vector<int> abs_sorted;
    abs_sorted.reserve(w.size());
    for (int x : w) abs_sorted.push_back(std::abs(x));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    std::vector<int> letters;
    letters.reserve(w.size());
    for (int x : w) {
        const int rank = static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(),
                                                           std::abs(x)) -
                                          abs_sorted.begin()) +
                         1;
        letters.push_back(x < 0 ? -rank : rank);
    }
    return SignedPermutation(std::move(letters));
}

/// Reduction of the subword of non-fixed positions; always a derangement.
inline SignedPermutation derangement_part(const SignedPermutation& s) {
    std::vector<int> non_fixed;
    for (int i = 0; i < s.size(); ++i)
        if (s[static_cast<std::size_t>(i)] != i + 1)
            non_fixed.push_back(s[static_cast<std::size_t>(i)]);
    return reduce(SignedWord(std::move(non_fixed)));
}

/**
 * Chow's relabeling map on B_k viewed inside rank n.  With s subcedants
 * (sigma_j < j), e excedants (sigma_j > j) and k-s-e fixed points:
 *   - the i-th smallest-in-absolute-value subcedant becomes (sgn) i,
 *   - the i-th smallest fixed point becomes s + i,
 *   - the i-th largest excedant becomes n - i + 1.
 */
inline SignedWord psi_bar(int n, const SignedPermutation& sigma) {
    const int k = sigma.size();
    if (k > n) throw precondition_violation("psi_bar: permutation size exceeds n");
    std::vector<std::pair<int, int>> subcedants; // (|letter|, position)
    std::vector<int> fixed;                      // positions
    std::vector<std::pair<int, int>> excedants;  // (letter, position)
    for (int i = 0; i < k; ++i) {
        const int x = sigma[static_cast<std::size_t>(i)];
        if (x == i + 1)
            fixed.push_back(i);
        else if (x > i + 1)
            excedants.emplace_back(x, i);
        else
            subcedants.emplace_back(std::abs(x), i);
    }
    std::sort(subcedants.begin(), subcedants.end());
    std::sort(excedants.begin(), excedants.end());
    const int s = static_cast<int>(subcedants.size());
    const int e = static_cast<int>(excedants.size());

    std::vector<int> letters(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < s; ++i) {
        const auto [mag, pos] = subcedants[static_cast<std::size_t>(i)];
        const bool negative = sigma[static_cast<std::size_t>(pos)] < 0;
        letters[static_cast<std::size_t>(pos)] = negative ? -(i + 1) : (i + 1);
    }
    for (std::size_t i = 0; i < fixed.size(); ++i)
        letters[static_cast<std::size_t>(fixed[i])] = s + static_cast<int>(i) + 1;
    for (int i = 0; i < e; ++i) {
        // excedants sorted ascending; i-th largest is at index e-1-i
        const auto [letter, pos] = excedants[static_cast<std::size_t>(e - 1 - i)];
        letters[static_cast<std::size_t>(pos)] = n - i;
    }
    return SignedWord(std::move(letters));
}

struct ShuffleSpec {
    SignedWord left;
    SignedWord right;

    ShuffleSpec(SignedWord l, SignedWord r) : left(std::move(l)), right(std::move(r)) {
        std::set<int> seen;
        for (int x : left) seen.insert(std::abs(x));
        for (int x : right)
            if (!seen.insert(std::abs(x)).second)
                throw disjointness_violation("ShuffleSpec: alphabets are not disjoint");
    }
};

namespace detail {

template <class F>
void emit_shuffles(const SignedWord& left, const SignedWord& right, std::vector<int>& buf,
                   std::size_t i, std::size_t j, F&& fn) {
    if (i == left.size() && j == right.size()) {
        fn(buf);
        return;
    }
    if (i < left.size()) {
        buf.push_back(left[i]);
        emit_shuffles(left, right, buf, i + 1, j, fn);
        buf.pop_back();
    }
    if (j < right.size()) {
        buf.push_back(right[j]);
        emit_shuffles(left, right, buf, i, j + 1, fn);
        buf.pop_back();
    }
}

} // namespace detail

/// All (m+n over n) interleavings preserving both subsequences.
inline std::vector<SignedWord> shuffles(const ShuffleSpec& spec) {
    std::vector<SignedWord> out;
    std::vector<int> buf;
    buf.reserve(spec.left.size() + spec.right.size());
    detail::emit_shuffles(spec.left, spec.right, buf, 0, 0,
                          [&](const std::vector<int>& w) { out.emplace_back(SignedWord(w)); });
    return out;
}

/**
 * Shuffles whose last letter is the left word's final letter.  Every use in
 * the source identities has sigma_m preceding pi_n in the special order, so
 * the minimum of the two final letters is sigma_m.
 */
inline std::vector<SignedWord> shuffles_sb(const ShuffleSpec& spec) {
    if (spec.left.empty() || spec.right.empty())
        throw precondition_violation("shuffles_sb: both words must be nonempty");
    const int last = spec.left[spec.left.size() - 1];
    std::vector<SignedWord> out;
    std::vector<int> buf;
    buf.reserve(spec.left.size() + spec.right.size());
    detail::emit_shuffles(spec.left, spec.right, buf, 0, 0, [&](const std::vector<int>& w) {
        if (w.back() == last) out.emplace_back(SignedWord(w));
    });
    return out;
}

enum class FiberFamily { b_full, delta_less };

/// Exact preimage of derangement_part over B_n (resp. Delta^<_n).
inline std::vector<SignedPermutation> fiber(FiberFamily family, int n,
                                            const SignedPermutation& sigma) {
    const int k = sigma.size();
    if (k > n) throw precondition_violation("fiber: derangement size exceeds n");
    if (!is_derangement(sigma))
        throw precondition_violation("fiber: sigma must be a derangement");
    if (family == FiberFamily::delta_less) {
        if (k < 1 || sigma[static_cast<std::size_t>(k - 1)] < 0)
            throw precondition_violation("fiber: sigma must lie in the Delta derangement set");
    }
    std::vector<SignedPermutation> out;
    const GroupFamily ambient =
        family == FiberFamily::b_full ? GroupFamily::B : GroupFamily::DeltaLess;
    for_each_element(ambient, n, [&](const SignedPermutation& pi) {
        if (derangement_part(pi) == sigma) out.push_back(pi);
    });
    return out;
}

} // namespace mahonian
