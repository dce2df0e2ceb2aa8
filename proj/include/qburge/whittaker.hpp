#pragma once

#include "qburge/intmat.hpp"
#include "qburge/qrat.hpp"
#include "qburge/tableau.hpp"

namespace qburge {

/* q-Whittaker weights and coefficients, and the coefficient-level Cauchy
 * identity. All identities are checked as structural equalities of reduced
 * rational functions; nothing is ever evaluated numerically here.
 */

// wt_q(T) = prod_{i,j} [ T^(j)_i - T^(j)_{i+1} choose T^(j)_i - T^(j-1)_i ]_q
inline QPoly wtq(const SSYTableau& t) {
    auto chain = tableau_chain(t);
    QPoly w = QPoly::one();
    for (std::size_t j = 1; j < chain.size(); ++j) {
        const Partition& cur = chain[j];
        const Partition& prev = chain[j - 1];
        for (int i = 1; i <= cur.num_parts(); ++i)
            w *= qbinomial(cur.part(i) - cur.part(i + 1), cur.part(i) - prev.part(i));
    }
    return w;
}

// (1-q)^{-lambda_1} / prod_i [lambda_i - lambda_{i+1}]!_q
inline QRat dual_prefactor(const Partition& lambda) {
    QPoly den = QPoly::one();
    for (int i = 1; i <= lambda.num_parts(); ++i)
        den *= qfactorial(lambda.part(i) - lambda.part(i + 1));
    return QRat::one_minus_q_pow(-lambda.part(1)) * QRat(QPoly::one(), den);
}

/* Dual form of the weight:
 * prod_{i,j} [ T^(j-1)_{i-1} - T^(j-1)_i choose T^(j)_i - T^(j-1)_i ]_q,
 * where the i = 1 factor uses the limit [infinity choose m]_q =
 * (1-q)^{-m} / [m]!_q. Equals dual_prefactor(shape) * wtq(T) identically.
 */
inline QRat wtq_dual(const SSYTableau& t) {
    auto chain = tableau_chain(t);
    QRat w = QRat::one();
    for (std::size_t j = 1; j < chain.size(); ++j) {
        const Partition& cur = chain[j];
        const Partition& prev = chain[j - 1];
        for (int i = 1; i <= cur.num_parts(); ++i) {
            int m = cur.part(i) - prev.part(i);
            if (i == 1) {
                w *= QRat::one_minus_q_pow(-m) * QRat(QPoly::one(), qfactorial(m));
            } else {
                w *= QRat(qbinomial(prev.part(i - 1) - prev.part(i), m));
            }
        }
    }
    return w;
}

// [x^alpha] W_lambda(x;q) = sum over SSYT(lambda, alpha) of wt_q
inline QPoly whittaker_coeff(const Partition& lambda, const Composition& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("whittaker_coeff: |lambda| != |alpha|");
    QPoly s;
    for (const SSYTableau& t : ssyt_enumerate(lambda, alpha)) s += wtq(t);
    return s;
}

// psi(M) = (1-q)^{-n} / prod [M_{i,j}]!_q
inline QRat matrix_weight(const IntMat& m) {
    QPoly den = QPoly::one();
    for (long long x : m.e) den *= qfactorial(static_cast<int>(x));
    return QRat::one_minus_q_pow(static_cast<int>(-m.total())) * QRat(QPoly::one(), den);
}

// psi~(T,T') = dual_prefactor(shape) wt_q(T) wt_q(T')
inline QRat pair_weight(const SSYTableau& t, const SSYTableau& u) {
    if (t.shape() != u.shape()) throw std::invalid_argument("pair_weight: shapes differ");
    return dual_prefactor(t.shape()) * QRat(wtq(t)) * QRat(wtq(u));
}

// coefficient of x^alpha y^beta on the matrix side of the Cauchy identity
inline QRat cauchy_lhs(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("cauchy_lhs: |alpha| != |beta|");
    QRat s;
    for (const IntMat& m : enumerate_matrices(alpha, beta)) s += matrix_weight(m);
    return s;
}

// the same coefficient on the tableau side
inline QRat cauchy_rhs(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("cauchy_rhs: |alpha| != |beta|");
    QRat s;
    for (const Partition& lambda : partitions_of(alpha.size())) {
        QPoly wa = whittaker_coeff(lambda, alpha);
        if (wa.is_zero()) continue;
        QPoly wb = whittaker_coeff(lambda, beta);
        if (wb.is_zero()) continue;
        s += dual_prefactor(lambda) * QRat(wa) * QRat(wb);
    }
    return s;
}

inline bool cauchy_check(const Composition& alpha, const Composition& beta) {
    return cauchy_lhs(alpha, beta) == cauchy_rhs(alpha, beta);
}

}  // namespace qburge
