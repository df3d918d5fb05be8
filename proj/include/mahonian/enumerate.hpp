#pragma once

/**
 * Exhaustive enumeration of S_n, B_n, D_n, Delta_n, Delta^<_n and their
 * derangement subsets.
 *
 * Elements stream in lexicographic order of the one-line word under the
 * natural integer order.  Two access paths are provided:
 *
 *  - for_each / for_each_derangement: depth-first generation, cheap per
 *    element, used for full sweeps;
 *  - unrank + for_each_raw: random access into the underlying S_n or B_n
 *    index space (factorial base, resp. mixed radix 2n, 2n-2, ..., 2), which
 *    lets a sum over the group be split into independent index chunks.
 *
 * D_n, Delta_n and Delta^<_n are filtered views of the B_n stream.
 */

#include <cstdint>
#include <numeric>
#include <vector>

#include "mahonian/errors.hpp"
#include "mahonian/signed_word.hpp"

namespace mahonian {
namespace detail {

struct raw_factory {
    // Enumeration produces words that are valid by construction; skip checks.
    static SignedPermutation perm(std::vector<int> letters) {
        SignedPermutation p;
        p.word_.letters_ = std::move(letters);
        return p;
    }
};

} // namespace detail

inline unsigned long long factorial_u64(int n) {
    unsigned long long r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<unsigned long long>(k);
    return r;
}

/// Closed-form cardinality of the family.
inline unsigned long long family_order(GroupFamily f, int n) {
    if (n < 1) throw precondition_violation("family_order: n must be >= 1");
    switch (f) {
    case GroupFamily::S:
        return factorial_u64(n);
    case GroupFamily::B:
        return (1ULL << n) * factorial_u64(n);
    case GroupFamily::D:
    case GroupFamily::Delta:
        return (1ULL << (n - 1)) * factorial_u64(n);
    case GroupFamily::DeltaLess:
        return static_cast<unsigned long long>(n - 1) * (1ULL << (n - 1)) *
               factorial_u64(n - 1);
    }
    return 0;
}

class ElementRange {
public:
    ElementRange(GroupFamily family, int n) : family_(family), n_(n) {
        if (n < 1) throw precondition_violation("ElementRange: n must be >= 1");
        if (n > kMaxRank) throw precondition_violation("ElementRange: n exceeds supported maximum");
        if (signed_base() && n > 16)
            throw precondition_violation("ElementRange: signed enumeration index exceeds 64 bits");
    }

    GroupFamily family() const { return family_; }
    int rank() const { return n_; }
    bool signed_base() const { return family_ != GroupFamily::S; }

    /// Size of the underlying unfiltered stream (n! for S_n, 2^n n! otherwise).
    unsigned long long raw_size() const {
        return signed_base() ? (1ULL << n_) * factorial_u64(n_) : factorial_u64(n_);
    }

    bool member(const SignedPermutation& s) const { return family_member(family_, s); }

    /// Element at position idx of the underlying stream, in lexicographic order.
    SignedPermutation unrank(unsigned long long idx) const {
        const int n = n_;
        std::vector<int> digits(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            const unsigned long long radix =
                signed_base() ? 2ULL * static_cast<unsigned long long>(n - i)
                              : static_cast<unsigned long long>(n - i);
            digits[static_cast<std::size_t>(i)] = static_cast<int>(idx % radix);
            idx /= radix;
        }
        std::vector<int> avail(static_cast<std::size_t>(n));
        std::iota(avail.begin(), avail.end(), 1);
        std::vector<int> letters;
        letters.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const int r = n - i;
            const int d = digits[static_cast<std::size_t>(i)];
            int pick;
            if (signed_base()) {
                // candidates sorted: -a_{r-1} < ... < -a_0 < a_0 < ... < a_{r-1}
                pick = (d < r) ? r - 1 - d : d - r;
                letters.push_back(d < r ? -avail[static_cast<std::size_t>(pick)]
                                        : avail[static_cast<std::size_t>(pick)]);
            } else {
                pick = d;
                letters.push_back(avail[static_cast<std::size_t>(pick)]);
            }
            avail.erase(avail.begin() + pick);
        }
        return detail::raw_factory::perm(std::move(letters));
    }

    /// Visit family members among underlying stream positions [begin, end).
    template <class F>
    void for_each_raw(unsigned long long begin, unsigned long long end, F&& fn) const {
        for (unsigned long long idx = begin; idx < end; ++idx) {
            SignedPermutation s = unrank(idx);
            if (member(s)) fn(s);
        }
    }

    /// Visit every family member once, in lexicographic order.
    template <class F>
    void for_each(F&& fn) const {
        std::vector<int> buf;
        buf.reserve(static_cast<std::size_t>(n_));
        std::vector<int> avail(static_cast<std::size_t>(n_));
        std::iota(avail.begin(), avail.end(), 1);
        descend(buf, avail, fn);
    }

private:
    template <class F>
    void descend(std::vector<int>& buf, std::vector<int>& avail, F&& fn) const {
        if (avail.empty()) {
            SignedPermutation s = detail::raw_factory::perm(buf);
            if (member(s)) fn(s);
            return;
        }
        const std::size_t r = avail.size();
        if (signed_base()) {
            for (std::size_t j = 0; j < 2 * r; ++j) {
                const std::size_t pick = (j < r) ? r - 1 - j : j - r;
                const int letter = (j < r) ? -avail[pick] : avail[pick];
                const int saved = avail[pick];
                avail.erase(avail.begin() + static_cast<long long>(pick));
                buf.push_back(letter);
                descend(buf, avail, fn);
                buf.pop_back();
                avail.insert(avail.begin() + static_cast<long long>(pick), saved);
            }
        } else {
            for (std::size_t pick = 0; pick < r; ++pick) {
                const int saved = avail[pick];
                avail.erase(avail.begin() + static_cast<long long>(pick));
                buf.push_back(saved);
                descend(buf, avail, fn);
                buf.pop_back();
                avail.insert(avail.begin() + static_cast<long long>(pick), saved);
            }
        }
    }

    GroupFamily family_;
    int n_;
};

template <class F>
void for_each_element(GroupFamily family, int n, F&& fn) {
    ElementRange(family, n).for_each(std::forward<F>(fn));
}

template <class F>
void for_each_derangement(GroupFamily family, int n, F&& fn) {
    ElementRange(family, n).for_each([&](const SignedPermutation& s) {
        if (is_derangement(s)) fn(s);
    });
}

inline std::vector<SignedPermutation> elements(GroupFamily family, int n) {
    std::vector<SignedPermutation> out;
    for_each_element(family, n, [&](const SignedPermutation& s) { out.push_back(s); });
    return out;
}

inline std::vector<SignedPermutation> derangements(GroupFamily family, int n) {
    std::vector<SignedPermutation> out;
    for_each_derangement(family, n, [&](const SignedPermutation& s) { out.push_back(s); });
    return out;
}

} // namespace mahonian
