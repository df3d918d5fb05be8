#pragma once

/**
 * Closed-form right-hand sides for the Poincare, signed Mahonian and
 * derangement generating polynomials on S_n, B_n, D_n, Delta_n, Delta^<_n,
 * the fiber and shuffle product formulas, and the integer counts of
 * even-length derangements.
 *
 * Everything is assembled in exact rational-function arithmetic and reduced
 * once at the end; each public operation asserts that the result is a
 * polynomial with integer coefficients and throws non_integral_result
 * otherwise, so a transcription slip in any formula fails loudly.
 *
 * Known display slips in the literature, fixed here and confirmed by
 * exhaustive enumeration: the (1-q)/(1+q) exponent in the signed Mahonian
 * product over B_n is floor((n+1)/2) (the factored form [2]_{-q}[4]_q...
 * [2n]_{(-1)^n q} is authoritative), and correspondingly the per-term
 * exponent in the signed derangement sum over B_n is floor((n-k+1)/2).
 */

#include <optional>
#include <string>

#include "mahonian/errors.hpp"
#include "mahonian/qpoly.hpp"
#include "mahonian/signed_word.hpp"
#include "mahonian/stats.hpp"

namespace mahonian {

enum class Sign : int { plus = +1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }

/// Reduce to a polynomial and require integer coefficients.
inline QPoly to_integral_poly(const QRat& r, const std::string& context) {
    QPoly p;
    try {
        p = r.to_poly();
    } catch (const not_a_polynomial&) {
        throw not_a_polynomial(context + ": result is not a polynomial");
    }
    if (!p.is_integral()) throw non_integral_result(context + ": non-integer coefficients");
    return p;
}

namespace detail {

inline long long binom2(long long k) { return k * (k - 1) / 2; }

/// [m]_{s*q}
inline QPoly q_int_at(long long m, int s) { return substitute(q_int(m), s, 1); }

/// [2]_q [4]_q ... [2n]_q
inline QPoly prod_even(int n) {
    QPoly r(1);
    for (int k = 1; k <= n; ++k) r *= q_int(2 * k);
    return r;
}

/// [2]_{e q}[4]_{e^2 q} ... [2n]_{e^n q}
inline QPoly prod_even_eps(int n, int eps) {
    QPoly r(1);
    for (int k = 1; k <= n; ++k) r *= q_int_at(2 * k, k % 2 == 0 ? 1 : eps);
    return r;
}

/// ((1-q) / (1 - e q))^exp
inline QRat shrink_ratio_pow(int eps, long long exp) {
    const QPoly one_minus_q = QPoly(1) - QPoly::var();
    const QPoly den = QPoly(1) - QPoly(Rational(eps)) * QPoly::var();
    return pow(QRat(one_minus_q, den), exp);
}

inline Rational pow2_rational(long long e) {
    Rational r(1);
    for (long long i = 0; i < e; ++i) r *= 2;
    for (long long i = 0; i > e; --i) r /= 2;
    return r;
}

inline Integer int_factorial(int n) {
    Integer r(1);
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer require_integer(const Rational& v, const std::string& context) {
    if (denominator(v) != 1) throw non_integral_result(context);
    return numerator(v);
}

} // namespace detail

// --- Poincare / signed Mahonian products over the full sets ---------------

/// [n]_q!  (plus)  or  [1]_q [2]_{-q} [3]_q [4]_{-q} ...  (minus)
inline QPoly mahonian_s(int n, Sign eps) {
    if (n < 0) throw precondition_violation("mahonian_s: n must be nonnegative");
    if (eps == Sign::plus) return q_factorial(n);
    QPoly r(1);
    for (int k = 1; k <= n; ++k) r *= detail::q_int_at(k, k % 2 == 0 ? -1 : 1);
    return r;
}

/// [2]_q...[2n]_q  (plus)  or  [2]_{-q}[4]_q...[2n]_{(-1)^n q}  (minus)
inline QPoly mahonian_b(int n, Sign eps) {
    if (n < 0) throw precondition_violation("mahonian_b: n must be nonnegative");
    return eps == Sign::plus ? detail::prod_even(n) : detail::prod_even_eps(n, -1);
}

/// [2]_q...[2n-2]_q [n]_q  (plus)  or  [2]_{-q}...[2n-2]_{(-1)^{n-1}q} [n]_q  (minus)
inline QPoly mahonian_d(int n, Sign eps) {
    if (n < 1) throw precondition_violation("mahonian_d: n must be >= 1");
    const QPoly prefix =
        eps == Sign::plus ? detail::prod_even(n - 1) : detail::prod_even_eps(n - 1, -1);
    return prefix * q_int(n);
}

/// Same products over Delta_n; the signed variant ends in [n]_{(-1)^n q}.
inline QPoly mahonian_delta(int n, Sign eps) {
    if (n < 1) throw precondition_violation("mahonian_delta: n must be >= 1");
    if (eps == Sign::plus) return detail::prod_even(n - 1) * q_int(n);
    return detail::prod_even_eps(n - 1, -1) * detail::q_int_at(n, n % 2 == 0 ? 1 : -1);
}

/// e^n q [2]_{e q}[4]_q ... [2n-2]_{e^{n-1} q} [n-1]_{e^n q}; zero for n = 1.
inline QPoly mahonian_delta_less(int n, Sign eps) {
    if (n < 1) throw precondition_violation("mahonian_delta_less: n must be >= 1");
    if (n == 1) return QPoly{};
    const int e = sign_value(eps);
    const int e_pow_n = (n % 2 == 0) ? 1 : e;
    QPoly r = QPoly::monomial(Rational(e_pow_n), 1);
    r *= detail::prod_even_eps(n - 1, e);
    r *= detail::q_int_at(n - 1, e_pow_n);
    return r;
}

// --- Derangement polynomials ----------------------------------------------

/// [n]_q! sum_k (-1)^k q^C(k,2) / [k]_q!  (with ((1-q)/(1+q))^floor((n-k)/2) when signed)
inline QPoly derangement_s(int n, Sign eps) {
    if (n < 0) throw precondition_violation("derangement_s: n must be nonnegative");
    QRat sum;
    QPoly kfac(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) kfac *= q_int(k);
        QRat term(QPoly::monomial(Rational(k % 2 == 0 ? 1 : -1), detail::binom2(k)), kfac);
        if (eps == Sign::minus) term *= detail::shrink_ratio_pow(-1, (n - k) / 2);
        sum += term;
    }
    return to_integral_poly(QRat(q_factorial(n)) * sum, "derangement_s");
}

inline QPoly even_derangement_s(int n) {
    const QPoly half_sum = derangement_s(n, Sign::plus) + derangement_s(n, Sign::minus);
    return to_integral_poly(QRat(Rational(1, 2) * half_sum), "even_derangement_s");
}

/// [2]_q...[2n]_q sum_k (-1)^k q^{2 C(k,2)} / ([2]_q...[2k]_q)
/// (with ((1-q)/(1+q))^floor((n-k+1)/2) when signed)
inline QPoly derangement_b(int n, Sign eps) {
    if (n < 0) throw precondition_violation("derangement_b: n must be nonnegative");
    QRat sum;
    QPoly pk(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) pk *= q_int(2 * k);
        QRat term(QPoly::monomial(Rational(k % 2 == 0 ? 1 : -1), 2 * detail::binom2(k)), pk);
        if (eps == Sign::minus) term *= detail::shrink_ratio_pow(-1, (n - k + 1) / 2);
        sum += term;
    }
    return to_integral_poly(QRat(detail::prod_even(n)) * sum, "derangement_b");
}

inline QPoly even_derangement_b(int n) {
    const QPoly half_sum = derangement_b(n, Sign::plus) + derangement_b(n, Sign::minus);
    return to_integral_poly(QRat(Rational(1, 2) * half_sum), "even_derangement_b");
}

/**
 * Generating polynomial of fmaj (signed: with e^{l_B}) over the derangements
 * of Delta_n:
 *   [2]_q...[2n-2]_q sum_{k<=n-2} (-1)^k q^{k^2+k+1} [n-k-1]_q
 *       / ([2]_q...[2k]_q) * e^{n-k} ((1-q)/(1-e q))^ceil((n-k)/2).
 * Zero for n = 1.
 */
inline QPoly derangement_delta(int n, Sign eps) {
    if (n < 1) throw precondition_violation("derangement_delta: n must be >= 1");
    if (n == 1) return QPoly{};
    const int e = sign_value(eps);
    QRat sum;
    QPoly pk(1);
    for (int k = 0; k <= n - 2; ++k) {
        if (k > 0) pk *= q_int(2 * k);
        const long long m = n - k; // >= 2
        Rational lead(k % 2 == 0 ? 1 : -1);
        if (e == -1 && m % 2 != 0) lead = -lead; // e^{n-k}
        QRat term(QPoly::monomial(lead, static_cast<long long>(k) * k + k + 1) * q_int(m - 1),
                  pk);
        term *= detail::shrink_ratio_pow(e, (m + 1) / 2);
        sum += term;
    }
    return to_integral_poly(QRat(detail::prod_even(n - 1)) * sum, "derangement_delta");
}

/**
 * Generating polynomial of Dmaj over the derangements of D_n; the signed
 * variant weights by (-1)^{l_D}.  Zero for n = 1 (both sums are empty).
 */
inline QPoly derangement_d(int n, Sign eps) {
    if (n < 1) throw precondition_violation("derangement_d: n must be >= 1");
    QRat sum;
    QPoly pk(1);
    const QPoly q = QPoly::var();
    for (int k = 0; k <= n - 2; ++k) {
        if (k > 0) pk *= q_int(2 * k);
        const int m = n - k; // >= 2
        if (eps == Sign::plus) {
            // q^{2k+1} [n-1-k]_q + (1 - ((1-q)/(1+q))^{n-k-1}) / 2
            QRat inner = QRat(q_int(m - 1).shifted(2 * k + 1));
            inner += QRat(Rational(1, 2)) * (QRat(1) - detail::shrink_ratio_pow(-1, m - 1));
            sum += QRat(QPoly::monomial(Rational(k % 2 == 0 ? 1 : -1), 2 * detail::binom2(k)),
                        pk) *
                   inner;
        } else {
            // (2q^{2k+1}(1 + (-1)^{n-k} q^{n-k-1}) - (1 + (-1)^{n-k}) q) / (2(1-q))
            const int par = m % 2 == 0 ? 1 : -1;
            QPoly numer = QPoly(2) * q.shifted(2 * k) *
                          (QPoly(1) + QPoly::monomial(Rational(par), m - 1));
            numer -= QPoly(1 + par) * q;
            QRat term(QPoly::monomial(Rational(n % 2 == 0 ? -1 : 1), 2 * detail::binom2(k)),
                      pk);
            term *= detail::shrink_ratio_pow(-1, m / 2);
            term *= QRat(numer, QPoly(2) * (QPoly(1) - q));
            sum += term;
        }
    }
    return to_integral_poly(QRat(detail::prod_even(n - 1)) * sum, "derangement_d");
}

inline QPoly even_derangement_d(int n) {
    const QPoly half_sum = derangement_d(n, Sign::plus) + derangement_d(n, Sign::minus);
    return to_integral_poly(QRat(Rational(1, 2) * half_sum), "even_derangement_d");
}

/**
 * Generating polynomial of the natural-order major index over the
 * derangements of D_n:
 *   sum_k (-1)^k q^C(k,2) 2^{n-1-k} [n]_q!/[k]_q!  +  (-1)^n q^C(n,2) / 2.
 * The k = n summand and the trailing half merge to an integer polynomial.
 */
inline QPoly derangement_d_maj_a(int n) {
    if (n < 1) throw precondition_violation("derangement_d_maj_a: n must be >= 1");
    QPoly sum;
    for (int k = 0; k <= n; ++k) {
        QPoly tail(1); // [n]_q! / [k]_q!
        for (int j = k + 1; j <= n; ++j) tail *= q_int(j);
        Rational scale = detail::pow2_rational(n - 1 - k);
        if (k % 2 != 0) scale = -scale;
        sum += QPoly::monomial(scale, detail::binom2(k)) * tail;
    }
    sum += QPoly::monomial(Rational(n % 2 == 0 ? 1 : -1) / 2, detail::binom2(n));
    if (!sum.is_integral())
        throw non_integral_result("derangement_d_maj_a: non-integer coefficients");
    return sum;
}

// --- Fiber and shuffle right-hand sides ------------------------------------

enum class FiberKind { s, b, delta_less };

/**
 * Closed form for the sum of q^stat over the derangement-part fiber of sigma
 * inside rank n: q^maj [n over k]_q for S, q^fmaj [n over k]_{q^2} for B, and
 * e^{l_B} q^{2(n-k)+fmaj} [n-1 over k-1]_{q^2} for the Delta^< refinement.
 * The minus sign weights by (-1)^length of sigma.
 */
inline QPoly fiber_rhs(FiberKind kind, int n, const SignedPermutation& sigma, Sign eps) {
    const int k = sigma.size();
    if (k > n) throw precondition_violation("fiber_rhs: derangement size exceeds n");
    if (!is_derangement(sigma))
        throw precondition_violation("fiber_rhs: sigma must be a derangement");
    switch (kind) {
    case FiberKind::s: {
        if (!sigma.word().all_positive())
            throw type_mismatch("fiber_rhs: type S requires an unsigned permutation");
        Rational lead(1);
        if (eps == Sign::minus && length(sigma, CoxeterType::A) % 2 != 0) lead = -1;
        return QPoly::monomial(lead, maj_a(sigma)) * q_binomial(n, k);
    }
    case FiberKind::b: {
        Rational lead(1);
        if (eps == Sign::minus && length(sigma, CoxeterType::B) % 2 != 0) lead = -1;
        return QPoly::monomial(lead, fmaj(sigma)) * substitute(q_binomial(n, k), 1, 2);
    }
    case FiberKind::delta_less: {
        if (k < 1 || sigma[static_cast<std::size_t>(k - 1)] < 0)
            throw precondition_violation("fiber_rhs: sigma must lie in the Delta derangement set");
        Rational lead(1);
        if (eps == Sign::minus && length(sigma, CoxeterType::B) % 2 != 0) lead = -1;
        return QPoly::monomial(lead, 2LL * (n - k) + fmaj(sigma)) *
               substitute(q_binomial(n - 1, k - 1), 1, 2);
    }
    }
    throw invalid_spec("fiber_rhs: unknown kind");
}

enum class ShuffleKind { maj_unsigned, fmaj, fmaj_sb, maj_refined };

/**
 * Closed forms for shuffle sums over two alphabet-disjoint words sigma (size
 * m) and pi (size n):
 *   maj_unsigned   q^{maj sigma + maj pi} [m+n over n]_q
 *   fmaj           q^{fmaj sigma + fmaj pi} [m+n over n]_{q^2}
 *   fmaj_sb        q^{fmaj sigma + fmaj pi + 2n} [m+n-1 over n]_{q^2}
 *   maj_refined    the single-descent-count term of the refined shuffle
 *                  theorem (pass the descent count k)
 */
inline QPoly shuffle_rhs(ShuffleKind kind, const SignedWord& sigma, const SignedWord& pi,
                         std::optional<long long> k = std::nullopt) {
    {
        std::set<int> seen;
        for (int x : sigma) seen.insert(std::abs(x));
        for (int x : pi)
            if (!seen.insert(std::abs(x)).second)
                throw disjointness_violation("shuffle_rhs: alphabets are not disjoint");
    }
    const long long m = static_cast<long long>(sigma.size());
    const long long n = static_cast<long long>(pi.size());
    switch (kind) {
    case ShuffleKind::maj_unsigned:
        return QPoly::monomial(1, maj_a(sigma) + maj_a(pi)) * q_binomial(m + n, n);
    case ShuffleKind::fmaj:
        return QPoly::monomial(1, fmaj(sigma) + fmaj(pi)) *
               substitute(q_binomial(m + n, n), 1, 2);
    case ShuffleKind::fmaj_sb: {
        if (sigma.empty() || pi.empty())
            throw precondition_violation("shuffle_rhs: fmaj_sb needs nonempty words");
        if (!letter_less(sigma[sigma.size() - 1], pi[pi.size() - 1], LetterOrder::special))
            throw precondition_violation(
                "shuffle_rhs: fmaj_sb requires sigma_m before pi_n in the special order");
        return QPoly::monomial(1, fmaj(sigma) + fmaj(pi) + 2 * n) *
               substitute(q_binomial(m + n - 1, n), 1, 2);
    }
    case ShuffleKind::maj_refined: {
        if (!k) throw precondition_violation("shuffle_rhs: maj_refined needs a descent count");
        if (sigma.empty() || pi.empty())
            throw precondition_violation("shuffle_rhs: maj_refined needs nonempty words");
        if (sigma[sigma.size() - 1] >= pi[pi.size() - 1])
            throw precondition_violation("shuffle_rhs: maj_refined requires pi_n > sigma_m");
        const long long ds = des(sigma, LetterOrder::natural);
        const long long dp = des(pi, LetterOrder::natural);
        const long long kk = *k;
        return q_binomial(m - ds + dp, kk - ds) * q_binomial(n - dp + ds - 1, n - kk + ds) *
               QPoly::monomial(1, maj_a(sigma) + maj_a(pi) + n + (kk - dp - 1) * (kk - ds));
    }
    }
    throw invalid_spec("shuffle_rhs: unknown kind");
}

// --- Even-length derangement counts ----------------------------------------

enum class CountFamily { as, ab, ad };
enum class CountMethod { closed, rec1, rec2 };

/**
 * Number of even-length derangements, by the closed sum or by either stated
 * recurrence (rec1 is first order, rec2 second order, each with its stated
 * initial conditions).
 */
inline Integer even_derangement_count(CountFamily family, int n, CountMethod method) {
    if (n < 1) throw precondition_violation("even_derangement_count: n must be >= 1");
    const auto sign_of = [](int e) { return e % 2 == 0 ? 1 : -1; };
    switch (family) {
    case CountFamily::as:
        switch (method) {
        case CountMethod::closed: {
            Rational acc(0), kfac(1);
            for (int k = 0; k <= n - 2; ++k) {
                if (k > 0) kfac *= k;
                acc += Rational(sign_of(k)) / kfac;
            }
            Rational v = Rational(detail::int_factorial(n)) / 2 * acc +
                         Rational(sign_of(n - 1) * (n - 1));
            return detail::require_integer(v, "even_derangement_count: as closed");
        }
        case CountMethod::rec1: {
            Integer d(0); // d_1
            for (int m = 2; m <= n; ++m)
                d = Integer(m) * d + Integer(sign_of(m - 1)) * (m - 2) * (m + 1) / 2;
            return d;
        }
        case CountMethod::rec2: {
            Integer prev(0), cur(0); // d_1, d_2
            if (n == 1) return prev;
            for (int m = 3; m <= n; ++m) {
                Integer next = Integer(m - 1) * (cur + prev + sign_of(m - 1));
                prev = cur;
                cur = next;
            }
            return cur;
        }
        }
        break;
    case CountFamily::ab:
        switch (method) {
        case CountMethod::closed: {
            Rational acc(0), kfac(1);
            for (int k = 0; k <= n - 1; ++k) {
                if (k > 0) kfac *= k;
                acc += Rational(sign_of(k)) * detail::pow2_rational(n - k - 1) / kfac;
            }
            Rational v = Rational(detail::int_factorial(n)) * acc + Rational(sign_of(n));
            return detail::require_integer(v, "even_derangement_count: ab closed");
        }
        case CountMethod::rec1: {
            Integer d(0); // d_1
            for (int m = 2; m <= n; ++m) d = Integer(2 * m) * d + Integer(sign_of(m)) * (m + 1);
            return d;
        }
        case CountMethod::rec2: {
            Integer prev(0), cur(3); // d_1, d_2
            if (n == 1) return prev;
            for (int m = 3; m <= n; ++m) {
                Integer next = Integer(m - 1) * (2 * cur + 4 * prev + sign_of(m - 1));
                prev = cur;
                cur = next;
            }
            return cur;
        }
        }
        break;
    case CountFamily::ad:
        switch (method) {
        case CountMethod::closed: {
            Rational acc(0), kfac(1);
            for (int k = 0; k <= n - 2; ++k) {
                if (k > 0) kfac *= k;
                acc += Rational(sign_of(k)) * detail::pow2_rational(n - k - 2) / kfac;
            }
            Rational v = Rational(detail::int_factorial(n)) * acc +
                         Rational(sign_of(n - 1) * (n - 1));
            return detail::require_integer(v, "even_derangement_count: ad closed");
        }
        case CountMethod::rec1: {
            Integer d(0); // d_1
            for (int m = 2; m <= n; ++m)
                d = Integer(2 * m) * d + Integer(sign_of(m - 1)) * (m * m - 2 * m - 1);
            return d;
        }
        case CountMethod::rec2: {
            Integer prev(0), cur(1); // d_1, d_2
            if (n == 1) return prev;
            for (int m = 3; m <= n; ++m) {
                Integer next = Integer(2 * m - 1) * cur + Integer(2 * (m - 1)) * prev +
                               Integer(sign_of(m - 1)) * (2 * m - 3);
                prev = cur;
                cur = next;
            }
            return cur;
        }
        }
        break;
    }
    throw invalid_spec("even_derangement_count: unknown family/method");
}

} // namespace mahonian
