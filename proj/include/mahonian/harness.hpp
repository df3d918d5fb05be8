#pragma once

/**
 * Brute-force generating sums over enumerated group families: the exact sum
 * of (sign)^length * q^statistic over a family, its derangements, or its
 * even-length derangements, with an optional q -> s*q^p substitution.
 *
 * The enumeration stream splits into index chunks whose partial polynomials
 * add commutatively, so chunked (and parallel) evaluation returns the
 * identical canonical polynomial.
 */

#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mahonian/enumerate.hpp"
#include "mahonian/errors.hpp"
#include "mahonian/qpoly.hpp"
#include "mahonian/signed_word.hpp"
#include "mahonian/stats.hpp"

namespace mahonian {

enum class Restriction { all, derangements, even_derangements };
enum class SignWeight { none, len_a, len_b, len_d };
enum class StatId {
    inv_nat,
    inv_spec,
    des_stat,
    maj_nat,
    maj_spec,
    neg_stat,
    len_a,
    len_b,
    len_d,
    fmaj_stat,
    dmaj_stat,
    maj_a_stat
};

struct Substitution {
    int sign = 1;
    long long power = 1;
};

struct BruteSpec {
    GroupFamily family = GroupFamily::S;
    Restriction restriction = Restriction::all;
    StatId stat = StatId::maj_nat;
    Boundary boundary = Boundary::none;
    SignWeight sign = SignWeight::none;
    std::optional<Substitution> substitution;
};

inline long long eval_stat(StatId id, Boundary boundary, const SignedPermutation& s) {
    switch (id) {
    case StatId::inv_nat: return inv(s.word(), LetterOrder::natural);
    case StatId::inv_spec: return inv(s.word(), LetterOrder::special);
    case StatId::des_stat: return des(s.word(), LetterOrder::natural, boundary);
    case StatId::maj_nat: return maj(s.word(), LetterOrder::natural, boundary);
    case StatId::maj_spec: return maj(s.word(), LetterOrder::special, boundary);
    case StatId::neg_stat: return neg_count(s);
    case StatId::len_a: return length(s, CoxeterType::A);
    case StatId::len_b: return length(s, CoxeterType::B);
    case StatId::len_d: return length(s, CoxeterType::D);
    case StatId::fmaj_stat: return fmaj(s);
    case StatId::dmaj_stat: return dmaj(s);
    case StatId::maj_a_stat: return maj_a(s);
    }
    throw invalid_spec("eval_stat: unknown statistic");
}

/// Length whose parity defines the even-length restriction of a family.
inline CoxeterType parity_length_type(GroupFamily family) {
    switch (family) {
    case GroupFamily::S: return CoxeterType::A;
    case GroupFamily::D: return CoxeterType::D;
    default: return CoxeterType::B;
    }
}

inline void validate_spec(const BruteSpec& spec) {
    const bool needs_all_positive = spec.stat == StatId::len_a || spec.sign == SignWeight::len_a;
    if (needs_all_positive && spec.family != GroupFamily::S)
        throw invalid_spec("len-a is only defined on the symmetric group");
    const bool type_d_stat = spec.stat == StatId::len_d || spec.stat == StatId::dmaj_stat ||
                             spec.sign == SignWeight::len_d;
    if (type_d_stat && spec.family != GroupFamily::D)
        throw invalid_spec("len-d and dmaj are only defined on the even-signed group");
    if (spec.boundary != Boundary::none && spec.stat != StatId::des_stat &&
        spec.stat != StatId::maj_nat && spec.stat != StatId::maj_spec)
        throw invalid_spec("boundary applies to des/maj statistics only");
    if (spec.substitution) {
        const int s = spec.substitution->sign;
        if ((s != 1 && s != -1) || spec.substitution->power < 1)
            throw invalid_spec("substitution must be (sign +-1, positive power)");
    }
}

namespace detail {

inline bool passes_restriction(const BruteSpec& spec, const SignedPermutation& s) {
    switch (spec.restriction) {
    case Restriction::all:
        return true;
    case Restriction::derangements:
        return is_derangement(s);
    case Restriction::even_derangements:
        return is_derangement(s) &&
               length(s, parity_length_type(spec.family)) % 2 == 0;
    }
    return false;
}

inline int element_weight(const BruteSpec& spec, const SignedPermutation& s) {
    switch (spec.sign) {
    case SignWeight::none: return 1;
    case SignWeight::len_a: return length(s, CoxeterType::A) % 2 == 0 ? 1 : -1;
    case SignWeight::len_b: return length(s, CoxeterType::B) % 2 == 0 ? 1 : -1;
    case SignWeight::len_d: return length(s, CoxeterType::D) % 2 == 0 ? 1 : -1;
    }
    return 1;
}

using ExponentCounts = std::map<long long, long long>;

inline void accumulate(const BruteSpec& spec, const SignedPermutation& s, ExponentCounts& counts) {
    if (!passes_restriction(spec, s)) return;
    counts[eval_stat(spec.stat, spec.boundary, s)] += element_weight(spec, s);
}

inline QPoly counts_to_poly(const ExponentCounts& counts) {
    QPoly p;
    for (const auto& [deg, c] : counts)
        if (c != 0) p += QPoly::monomial(Rational(c), deg);
    return p;
}

} // namespace detail

/**
 * Exact sum of (sign)^length * q^stat over the specified set.  chunks > 1
 * splits the underlying index space and evaluates the parts concurrently;
 * the aggregation is commutative addition, so the result is identical.
 */
inline QPoly brute_sum(const BruteSpec& spec, int n, int chunks = 1) {
    validate_spec(spec);
    if (spec.boundary == Boundary::type_d && n < 2)
        throw invalid_spec("type-D boundary requires n >= 2");
    ElementRange range(spec.family, n);
    detail::ExponentCounts counts;
    if (chunks <= 1) {
        range.for_each([&](const SignedPermutation& s) { detail::accumulate(spec, s, counts); });
    } else {
        const unsigned long long total = range.raw_size();
        const auto nchunks = static_cast<unsigned long long>(chunks);
        std::vector<std::future<detail::ExponentCounts>> parts;
        for (unsigned long long c = 0; c < nchunks; ++c) {
            const unsigned long long begin = total * c / nchunks;
            const unsigned long long end = total * (c + 1) / nchunks;
            parts.push_back(std::async(std::launch::async, [&range, &spec, begin, end] {
                detail::ExponentCounts part;
                range.for_each_raw(begin, end, [&](const SignedPermutation& s) {
                    detail::accumulate(spec, s, part);
                });
                return part;
            }));
        }
        for (auto& f : parts)
            for (const auto& [deg, c] : f.get()) counts[deg] += c;
    }
    QPoly p = detail::counts_to_poly(counts);
    if (spec.substitution) p = substitute(p, spec.substitution->sign, spec.substitution->power);
    return p;
}

/// First element of the enumeration whose statistic value is `degree`
/// (after restriction, before substitution); used in failure reports.
inline std::optional<SignedPermutation> brute_witness(const BruteSpec& spec, int n,
                                                      long long degree) {
    validate_spec(spec);
    std::optional<SignedPermutation> found;
    ElementRange range(spec.family, n);
    range.for_each([&](const SignedPermutation& s) {
        if (found) return;
        if (detail::passes_restriction(spec, s) &&
            eval_stat(spec.stat, spec.boundary, s) == degree)
            found = s;
    });
    return found;
}

// --- name tables shared by the CLI ----------------------------------------

inline const char* to_name(StatId id) {
    switch (id) {
    case StatId::inv_nat: return "inv-nat";
    case StatId::inv_spec: return "inv-spec";
    case StatId::des_stat: return "des";
    case StatId::maj_nat: return "maj-nat";
    case StatId::maj_spec: return "maj-spec";
    case StatId::neg_stat: return "neg";
    case StatId::len_a: return "len-a";
    case StatId::len_b: return "len-b";
    case StatId::len_d: return "len-d";
    case StatId::fmaj_stat: return "fmaj";
    case StatId::dmaj_stat: return "dmaj";
    case StatId::maj_a_stat: return "maj-a";
    }
    return "?";
}

inline StatId stat_from_name(const std::string& name) {
    for (StatId id : {StatId::inv_nat, StatId::inv_spec, StatId::des_stat, StatId::maj_nat,
                      StatId::maj_spec, StatId::neg_stat, StatId::len_a, StatId::len_b,
                      StatId::len_d, StatId::fmaj_stat, StatId::dmaj_stat, StatId::maj_a_stat})
        if (name == to_name(id)) return id;
    throw invalid_spec("unknown statistic: " + name);
}

inline GroupFamily family_from_name(const std::string& name) {
    if (name == "s") return GroupFamily::S;
    if (name == "b") return GroupFamily::B;
    if (name == "d") return GroupFamily::D;
    if (name == "delta") return GroupFamily::Delta;
    if (name == "delta-less") return GroupFamily::DeltaLess;
    throw invalid_spec("unknown family: " + name);
}

inline const char* to_name(GroupFamily f) {
    switch (f) {
    case GroupFamily::S: return "s";
    case GroupFamily::B: return "b";
    case GroupFamily::D: return "d";
    case GroupFamily::Delta: return "delta";
    case GroupFamily::DeltaLess: return "delta-less";
    }
    return "?";
}

} // namespace mahonian
