#pragma once

/**
 * Words of signed letters and one-line signed permutations.
 *
 * A SignedWord is a sequence of nonzero integers with pairwise distinct
 * absolute values; the alphabet is implicit.  A SignedPermutation is the
 * special case whose absolute values are exactly {1..n}; it is the carrier
 * for elements of the classical Weyl groups and their subsets.
 *
 * Text form is one-line notation with a minus prefix for barred letters,
 * e.g. `2 -1 3`.
 */

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mahonian/errors.hpp"

namespace mahonian {

namespace detail {
struct raw_factory;
}

inline constexpr int kMaxRank = 20; // permutations larger than this are rejected

class SignedWord {
public:
    SignedWord() = default;
    explicit SignedWord(std::vector<int> letters) : letters_(std::move(letters)) {
        std::set<int> seen;
        for (int x : letters_) {
            if (x == 0) throw precondition_violation("SignedWord: letters must be nonzero");
            if (!seen.insert(std::abs(x)).second)
                throw precondition_violation("SignedWord: repeated absolute value");
        }
    }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<int>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    bool all_positive() const {
        return std::all_of(letters_.begin(), letters_.end(), [](int x) { return x > 0; });
    }

    auto operator<=>(const SignedWord& o) const = default;

private:
    friend struct detail::raw_factory;
    std::vector<int> letters_;
};

class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(SignedWord w) : word_(std::move(w)) {
        const int n = static_cast<int>(word_.size());
        if (n > kMaxRank)
            throw precondition_violation("SignedPermutation: rank exceeds supported maximum");
        // distinctness holds already, so n letters with |x| in 1..n are exactly {1..n}
        for (int x : word_) {
            const int a = std::abs(x);
            if (a < 1 || a > n)
                throw precondition_violation("SignedPermutation: absolute values must be 1..n");
        }
    }
    explicit SignedPermutation(std::vector<int> letters)
        : SignedPermutation(SignedWord(std::move(letters))) {}

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }
    const SignedWord& word() const { return word_; }
    auto begin() const { return word_.begin(); }
    auto end() const { return word_.end(); }

    auto operator<=>(const SignedPermutation& o) const = default;

private:
    friend struct detail::raw_factory;
    SignedWord word_;
};

enum class GroupFamily { S, B, D, Delta, DeltaLess };

inline int neg_count(const SignedWord& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}
inline int neg_count(const SignedPermutation& s) { return neg_count(s.word()); }

/// Sum of the negative letters (a nonpositive total).
inline long long neg_sum(const SignedWord& w) {
    long long total = 0;
    for (int x : w)
        if (x < 0) total += x;
    return total;
}
inline long long neg_sum(const SignedPermutation& s) { return neg_sum(s.word()); }

inline bool family_member(GroupFamily f, const SignedPermutation& s) {
    switch (f) {
    case GroupFamily::S:
        return s.word().all_positive();
    case GroupFamily::B:
        return true;
    case GroupFamily::D:
        return neg_count(s) % 2 == 0;
    case GroupFamily::Delta:
        return !s.empty() && s[s.word().size() - 1] > 0;
    case GroupFamily::DeltaLess: {
        if (s.empty()) return false;
        const int last = s[s.word().size() - 1];
        return last > 0 && last < s.size();
    }
    }
    return false;
}

/// Positions i (1-based) with sigma_i = i.
inline std::vector<int> fixed_points(const SignedPermutation& s) {
    std::vector<int> fixed;
    for (int i = 0; i < s.size(); ++i)
        if (s[static_cast<std::size_t>(i)] == i + 1) fixed.push_back(i + 1);
    return fixed;
}

inline bool is_derangement(const SignedPermutation& s) {
    for (int i = 0; i < s.size(); ++i)
        if (s[static_cast<std::size_t>(i)] == i + 1) return false;
    return true;
}

inline std::string to_string(const SignedWord& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out << ' ';
        out << w[i];
    }
    return out.str();
}
inline std::string to_string(const SignedPermutation& s) { return to_string(s.word()); }

inline SignedWord parse_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::invalid_argument&) {
            throw parse_error("not a letter: '" + token + "'");
        } catch (const std::out_of_range&) {
            throw parse_error("letter out of range: '" + token + "'");
        }
        if (pos != token.size()) throw parse_error("not a letter: '" + token + "'");
        letters.push_back(value);
    }
    try {
        return SignedWord(std::move(letters));
    } catch (const precondition_violation& e) {
        throw parse_error(e.what());
    }
}

inline SignedPermutation parse_permutation(const std::string& text) {
    return SignedPermutation(parse_word(text));
}

} // namespace mahonian
