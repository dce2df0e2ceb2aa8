#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "qburge/partition.hpp"

namespace qburge {

using BigInt = boost::multiprecision::cpp_int;
using Fraction = boost::multiprecision::cpp_rational;

/* Exact polynomials in the formal variable q, with arbitrary-precision
 * integer coefficients. Coefficients are stored in ascending powers and
 * normalized (no trailing zeros); the zero polynomial has no coefficients.
 */
class QPoly {
public:
    QPoly() = default;

    explicit QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static QPoly constant(const BigInt& v) {
        return v == 0 ? QPoly() : QPoly(std::vector<BigInt>{v});
    }
    static QPoly one() { return constant(1); }
    // c * q^e
    static QPoly monomial(const BigInt& c, int e) {
        if (c == 0) return QPoly();
        std::vector<BigInt> v(e + 1, 0);
        v[e] = c;
        return QPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigInt& coeff(int i) const {
        static const BigInt zero = 0;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero;
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    // smallest exponent with nonzero coefficient (0 for the zero polynomial)
    int low_degree() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return 0;
    }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator-() const {
        std::vector<BigInt> r(c_);
        for (auto& x : r) x = -x;
        return QPoly(std::move(r));
    }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return QPoly(std::move(r));
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return QPoly(std::move(r));
    }

    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    QPoly pow(int e) const {
        QPoly r = one(), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    // quotient and remainder over Q; both returned with rational bookkeeping
    // handled internally, exact when the division is exact over Z
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
        if (b.is_zero()) throw std::domain_error("QPoly: division by zero");
        // fraction-free when b is monic up to sign of its content; we divide
        // over Q via rational coefficients and convert back at the end
        std::vector<Fraction> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = Fraction(a.c_[i]);
        int db = b.degree();
        Fraction lead(b.c_.back());
        std::vector<Fraction> q(a.degree() >= db ? a.degree() - db + 1 : 0, Fraction(0));
        for (int i = a.degree(); i >= db; --i) {
            Fraction f = r[i] / lead;
            if (f == 0) continue;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= f * Fraction(b.c_[j]);
        }
        auto to_poly = [](const std::vector<Fraction>& v) {
            std::vector<BigInt> out(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (boost::multiprecision::denominator(v[i]) != 1)
                    throw std::domain_error("QPoly: non-integer division result");
                out[i] = boost::multiprecision::numerator(v[i]);
            }
            return QPoly(std::move(out));
        };
        quot = to_poly(q);
        rem = to_poly(r);
    }

    // exact division; throws if the remainder is nonzero
    friend QPoly div_exact(const QPoly& a, const QPoly& b) {
        QPoly q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("QPoly: division not exact");
        return q;
    }

    Fraction eval(const Fraction& q0) const {
        Fraction v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q0 + Fraction(*it);
        return v;
    }

    BigInt content() const {  // gcd of coefficients, nonnegative
        BigInt g = 0;
        for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
        return g;
    }

    QPoly primitive_part() const {
        if (is_zero()) return QPoly();
        BigInt g = content();
        if (c_.back() < 0) g = -g;
        std::vector<BigInt> r(c_);
        for (auto& x : r) x /= g;
        return QPoly(std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i <= degree(); ++i) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0 ? " + " : " - ");
            else if (c_[i] < 0) s += "-";
            BigInt a = boost::multiprecision::abs(c_[i]);
            if (i == 0) s += a.str();
            else {
                if (a != 1) s += a.str() + "*";
                s += (i == 1) ? "q" : "q^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

// primitive polynomial gcd over Z, via the primitive Euclidean algorithm
inline QPoly poly_gcd(QPoly a, QPoly b) {
    a = a.is_zero() ? QPoly() : a.primitive_part();
    b = b.is_zero() ? QPoly() : b.primitive_part();
    while (!b.is_zero()) {
        // pseudo-remainder: scale a so the division is integral
        int d = a.degree() - b.degree();
        if (d < 0) {
            std::swap(a, b);
            continue;
        }
        BigInt lead = b.coeffs().back();
        QPoly scaled = a * QPoly::constant(boost::multiprecision::pow(lead, d + 1));
        QPoly q, r;
        QPoly::divmod(scaled, b, q, r);
        a = b;
        b = r.is_zero() ? QPoly() : r.primitive_part();
    }
    return a;
}

// ---- q-analogues ----

// [n]_q = 1 + q + ... + q^{n-1}
inline QPoly qnumber(int n) {
    if (n < 0) throw std::invalid_argument("qnumber: n must be nonnegative");
    return QPoly(std::vector<BigInt>(n, 1));
}

// [n]!_q
inline QPoly qfactorial(int n) {
    if (n < 0) throw std::invalid_argument("qfactorial: n must be nonnegative");
    QPoly r = QPoly::one();
    for (int i = 1; i <= n; ++i) r *= qnumber(i);
    return r;
}

// [n choose k]_q; exact polynomial division, asserts zero remainder
inline QPoly qbinomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("qbinomial: need 0 <= k <= n");
    return div_exact(qfactorial(n), qfactorial(k) * qfactorial(n - k));
}

// [n choose alpha]_q for a weak composition alpha of n
inline QPoly qmultinomial(int n, const Composition& alpha) {
    if (alpha.size() != n) throw std::invalid_argument("qmultinomial: |alpha| != n");
    QPoly den = QPoly::one();
    for (int p : alpha.parts()) den *= qfactorial(p);
    return div_exact(qfactorial(n), den);
}

}  // namespace qburge
