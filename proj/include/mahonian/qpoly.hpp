#pragma once

/**
 * Exact Laurent polynomial and rational-function arithmetic in the single
 * variable q, with arbitrary-precision rational coefficients, plus the
 * standard q-analog constructors [n]_q, [n]_q! and the Gaussian binomial.
 *
 * QPoly is stored densely: coeffs_[i] is the coefficient of q^(min_deg_+i).
 * The representation is canonical -- leading and trailing coefficients are
 * nonzero, and the zero polynomial is the empty coefficient vector.  All
 * values are immutable in spirit: every operation returns a fresh canonical
 * value, so QPoly and QRat are safe to share across threads.
 */

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mahonian/errors.hpp"

namespace mahonian {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class QPoly {
public:
    QPoly() = default;
    QPoly(int c) : QPoly(Rational(c)) {}
    QPoly(long long c) : QPoly(Rational(c)) {}
    QPoly(Rational c) {
        if (c != 0) {
            min_deg_ = 0;
            coeffs_.push_back(std::move(c));
        }
    }
    QPoly(long long min_deg, std::vector<Rational> coeffs)
        : min_deg_(min_deg), coeffs_(std::move(coeffs)) {
        trim();
    }

    static QPoly monomial(Rational c, long long deg) {
        if (c == 0) return QPoly{};
        return QPoly(deg, {std::move(c)});
    }
    static QPoly var() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree bounds; the zero polynomial reports min_degree() == max_degree() == 0.
    long long min_degree() const { return coeffs_.empty() ? 0 : min_deg_; }
    long long max_degree() const {
        return coeffs_.empty() ? 0 : min_deg_ + static_cast<long long>(coeffs_.size()) - 1;
    }

    Rational coeff(long long deg) const {
        if (coeffs_.empty() || deg < min_deg_) return Rational(0);
        const auto idx = deg - min_deg_;
        if (idx >= static_cast<long long>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(idx)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool operator==(const QPoly& o) const = default;

    QPoly operator-() const {
        QPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long long lo = std::min(a.min_deg_, b.min_deg_);
        const long long hi = std::max(a.max_degree(), b.max_degree());
        std::vector<Rational> cs(static_cast<std::size_t>(hi - lo + 1), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            cs[static_cast<std::size_t>(a.min_deg_ - lo) + i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            cs[static_cast<std::size_t>(b.min_deg_ - lo) + i] += b.coeffs_[i];
        return QPoly(lo, std::move(cs));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly{};
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(a.min_deg_ + b.min_deg_, std::move(cs));
    }

    friend QPoly operator*(const Rational& s, const QPoly& p) {
        if (s == 0 || p.is_zero()) return QPoly{};
        QPoly r(p);
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }
    friend QPoly operator*(const QPoly& p, const Rational& s) { return s * p; }

    /// Multiply by q^k.
    QPoly shifted(long long k) const {
        if (is_zero()) return QPoly{};
        QPoly r(*this);
        r.min_deg_ += k;
        return r;
    }

    Rational evaluate(const Rational& x) const {
        // Horner on the ordinary part, then the q^min_deg factor.
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        if (min_deg_ > 0) {
            for (long long i = 0; i < min_deg_; ++i) acc *= x;
        } else if (min_deg_ < 0) {
            if (x == 0) throw division_by_zero("evaluate: q=0 with negative exponents");
            for (long long i = 0; i < -min_deg_; ++i) acc /= x;
        }
        return acc;
    }
    Rational evaluate_at_one() const {
        Rational acc(0);
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    bool is_integral() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return denominator(c) == 1; });
    }
    bool has_nonnegative_coeffs() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const Rational& c) { return c >= 0; });
    }

private:
    void trim() {
        std::size_t front = 0;
        while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
        if (front == coeffs_.size()) {
            coeffs_.clear();
            min_deg_ = 0;
            return;
        }
        std::size_t back = coeffs_.size();
        while (back > front && coeffs_[back - 1] == 0) --back;
        if (front > 0 || back < coeffs_.size()) {
            std::vector<Rational> kept(coeffs_.begin() + static_cast<long long>(front),
                                       coeffs_.begin() + static_cast<long long>(back));
            coeffs_ = std::move(kept);
            min_deg_ += static_cast<long long>(front);
        }
    }

    long long min_deg_ = 0;
    std::vector<Rational> coeffs_;
};

/// p with q replaced by sign * q^power, recomputed canonically.
inline QPoly substitute(const QPoly& p, int sign, long long power) {
    if (sign != 1 && sign != -1)
        throw precondition_violation("substitute: sign must be +1 or -1");
    if (power < 1)
        throw precondition_violation("substitute: power must be positive");
    QPoly r;
    for (long long d = p.min_degree(); d <= p.max_degree(); ++d) {
        Rational c = p.coeff(d);
        if (c == 0) continue;
        if (sign == -1 && (d % 2 != 0)) c = -c;
        r += QPoly::monomial(std::move(c), d * power);
    }
    return r;
}

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
inline QPoly q_int(long long n) {
    if (n < 0) throw precondition_violation("q_int: n must be nonnegative");
    std::vector<Rational> cs(static_cast<std::size_t>(n), Rational(1));
    return QPoly(0, std::move(cs));
}

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
inline QPoly q_factorial(long long n) {
    if (n < 0) throw precondition_violation("q_factorial: n must be nonnegative");
    QPoly r(1);
    for (long long k = 1; k <= n; ++k) r *= q_int(k);
    return r;
}

/// Gaussian binomial [n over k]_q; 0 when k < 0 or k > n.
inline QPoly q_binomial(long long n, long long k) {
    if (k < 0 || k > n) return QPoly{};
    k = std::min(k, n - k);
    // Pascal recurrence [m over j] = [m-1 over j-1] + q^j [m-1 over j], row by row.
    std::vector<QPoly> row(static_cast<std::size_t>(k) + 1, QPoly{});
    row[0] = QPoly(1);
    for (long long m = 1; m <= n; ++m) {
        for (long long j = std::min(m, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(j)].shifted(j);
    }
    return row[static_cast<std::size_t>(k)];
}

namespace detail {

// Quotient/remainder of ordinary (min degree >= 0) polynomials.
inline void poly_divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    quo = QPoly{};
    rem = a;
    const long long db = b.max_degree();
    const Rational lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_degree() >= db) {
        const long long d = rem.max_degree();
        QPoly t = QPoly::monomial(rem.coeff(d) / lead_b, d - db);
        quo += t;
        rem -= t * b;
    }
}

inline QPoly poly_exact_div(const QPoly& a, const QPoly& b) {
    QPoly quo, rem;
    poly_divmod(a, b, quo, rem);
    if (!rem.is_zero()) throw not_a_polynomial("exact division left a remainder");
    return quo;
}

// Monic gcd over the rationals; Euclidean algorithm, degrees stay small here.
inline QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly quo, rem;
        poly_divmod(a, b, quo, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.coeff(a.max_degree())) * a;
}

} // namespace detail

/**
 * Reduced ratio of two Laurent polynomials.  Canonical form: the denominator
 * is an ordinary polynomial with nonzero constant term, monic, and coprime to
 * the numerator's ordinary part; any q-power excess lives in the numerator.
 */
class QRat {
public:
    QRat() : num_(0), den_(1) {}
    QRat(QPoly p) : num_(std::move(p)), den_(1) {}
    QRat(int c) : num_(c), den_(1) {}
    QRat(Rational c) : num_(std::move(c)), den_(1) {}
    QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw division_by_zero("QRat: zero denominator");
        reduce();
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const QRat& o) const = default;

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw division_by_zero("QRat: division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat operator-() const {
        QRat r(*this);
        r.num_ = -r.num_;
        return r;
    }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    /// Lossless conversion; throws not_a_polynomial if the reduced denominator is not 1.
    QPoly to_poly() const {
        if (den_ == QPoly(1)) return num_;
        throw not_a_polynomial("QRat::to_poly: denominator is not constant");
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = QPoly(1);
            return;
        }
        // Pull the denominator's q-power into the numerator side.
        const long long dshift = den_.min_degree();
        den_ = den_.shifted(-dshift);
        num_ = num_.shifted(-dshift);

        const long long nshift = num_.min_degree();
        QPoly nord = num_.shifted(-nshift);
        QPoly g = detail::poly_gcd(nord, den_);
        if (g.max_degree() > 0) {
            nord = detail::poly_exact_div(nord, g);
            den_ = detail::poly_exact_div(den_, g);
        }
        const Rational lead = den_.coeff(den_.max_degree());
        num_ = (Rational(1) / lead) * nord.shifted(nshift);
        den_ = (Rational(1) / lead) * den_;
    }

    QPoly num_;
    QPoly den_;
};

inline QRat pow(const QRat& base, long long e) {
    if (e < 0) return QRat(1) / pow(base, -e);
    QRat acc(1);
    QRat b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

inline QPoly pow(const QPoly& base, long long e) {
    if (e < 0) throw precondition_violation("QPoly pow: negative exponent");
    QPoly acc(1);
    QPoly b = base;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        b *= b;
    }
    return acc;
}

/// Canonical rendering, terms in increasing degree: `1 + 2*q + 2*q^2 + q^3`.
inline std::string to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long d = p.min_degree(); d <= p.max_degree(); ++d) {
        const Rational c = p.coeff(d);
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (d == 0) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << "q";
            if (d != 1) out << "^" << d;
        }
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }

/// JSON rendering with exact string coefficients:
/// {"min_deg": d, "coeffs": ["num/den", ...]}
inline std::string to_json_string(const QPoly& p) {
    std::ostringstream out;
    out << "{\"min_deg\": " << p.min_degree() << ", \"coeffs\": [";
    bool first = true;
    for (long long d = p.min_degree(); d <= p.max_degree(); ++d) {
        if (!first) out << ", ";
        first = false;
        out << '"' << p.coeff(d) << '"';
    }
    if (p.is_zero()) {
        // keep a single explicit zero so the object round-trips
        out << "\"0\"";
    }
    out << "]}";
    return out.str();
}

} // namespace mahonian
