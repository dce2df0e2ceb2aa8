#pragma once

#include "qburge/qpoly.hpp"

namespace qburge {

/* Reduced ratios of integer polynomials in q. Laurent terms q^{-m} and the
 * geometric factor (1-q)^{-1} are both represented here; there is no
 * separate Laurent type. The canonical form has gcd(num, den) = 1, integer
 * content 1 in the denominator, and the denominator's lowest-degree nonzero
 * coefficient positive, so equality is structural.
 */
class QRat {
public:
    QRat() : num_(), den_(QPoly::one()) {}
    QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit QRat(const QPoly& p) : num_(p), den_(QPoly::one()) {}
    explicit QRat(const BigInt& v) : num_(QPoly::constant(v)), den_(QPoly::one()) {}
    explicit QRat(const Fraction& v)
        : num_(QPoly::constant(boost::multiprecision::numerator(v))),
          den_(QPoly::constant(boost::multiprecision::denominator(v))) {
        reduce();
    }

    static QRat one() { return QRat(QPoly::one()); }
    // q^e for any integer e
    static QRat qpow(int e) {
        return e >= 0 ? QRat(QPoly::monomial(1, e)) : QRat(QPoly::one(), QPoly::monomial(1, -e));
    }
    // (1-q)^e for any integer e
    static QRat one_minus_q_pow(int e) {
        QPoly base(std::vector<BigInt>{1, -1});
        return e >= 0 ? QRat(base.pow(e)) : QRat(QPoly::one(), base.pow(-e));
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPoly::one(); }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat operator-() const {
        QRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw std::domain_error("QRat: division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }

    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    QRat pow(int e) const {
        if (e < 0) return QRat::one() / pow(-e);
        QRat r = QRat::one(), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    // exact evaluation; throws on a pole
    Fraction eval(const Fraction& q0) const {
        Fraction d = den_.eval(q0);
        if (d == 0) throw std::domain_error("QRat::eval: pole at q0");
        return num_.eval(q0) / d;
    }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
        if (num_.is_zero()) {
            den_ = QPoly::one();
            return;
        }
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        BigInt cn = num_.content(), cd = den_.content();
        BigInt c = boost::multiprecision::gcd(cn, cd);
        if (c > 1) {
            std::vector<BigInt> n2(num_.coeffs()), d2(den_.coeffs());
            for (auto& x : n2) x /= c;
            for (auto& x : d2) x /= c;
            num_ = QPoly(std::move(n2));
            den_ = QPoly(std::move(d2));
        }
        // sign: lowest nonzero denominator coefficient positive
        if (den_.coeff(den_.low_degree()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    QPoly num_, den_;
};

inline QRat eval_free(const QPoly& p) { return QRat(p); }

// ---- finite-field counting formulas, as rational functions of q = 1/|F| ----

// |GL_n(F_{1/q})| = q^{-n^2} (1-q)^n [n]!_q
inline QRat gl_count(int n) {
    if (n < 0) throw std::invalid_argument("gl_count: n must be nonnegative");
    return QRat::qpow(-n * n) * QRat::one_minus_q_pow(n) * QRat(qfactorial(n));
}

// |Gr_{k,n}| = q^{-k(n-k)} [n choose k]_q
inline QRat grassmannian_count(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("grassmannian_count: need 0 <= k <= n");
    return QRat::qpow(-k * (n - k)) * QRat(qbinomial(n, k));
}

// |Fl_alpha| = q^{-e2(alpha)} [n choose alpha]_q
inline QRat flag_variety_count(const Composition& alpha) {
    return QRat::qpow(static_cast<int>(-e2_stat(alpha))) *
           QRat(qmultinomial(alpha.size(), alpha));
}

// number of m x n matrices of rank k over F_{1/q}
inline QRat rank_matrix_count(int m, int n, int k) {
    if (k < 0 || k > std::min(m, n))
        throw std::invalid_argument("rank_matrix_count: need 0 <= k <= min(m,n)");
    QPoly num = qbinomial(m, k) * qbinomial(n, k) * qfactorial(k);
    return QRat::qpow(-k * (m + n - k)) * QRat::one_minus_q_pow(k) * QRat(num);
}

// |P_alpha| = |GL_n| / |Fl_alpha|
inline QRat parabolic_count(const Composition& alpha) {
    return gl_count(alpha.size()) / flag_variety_count(alpha);
}

}  // namespace qburge
