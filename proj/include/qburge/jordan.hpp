#pragma once

#include "qburge/qrat.hpp"
#include "qburge/subspace.hpp"
#include "qburge/tableau.hpp"

namespace qburge {

inline bool is_nilpotent(const GFMatrix& n) {
    if (n.rows() != n.cols()) return false;
    return n.pow(n.rows()).is_zero();
}

/* Conjugated Jordan form partition of a nilpotent matrix:
 * lambda_1 + ... + lambda_i = dim(ker(N^i)), i.e.
 * lambda_i = rank(N^{i-1}) - rank(N^i), stopping once the rank reaches 0.
 */
inline Partition jordan_partition(const GFMatrix& n) {
    if (n.rows() != n.cols()) throw std::invalid_argument("jordan_partition: not square");
    const int d = n.rows();
    std::vector<int> parts;
    GFMatrix power = GFMatrix::identity(n.p(), d);
    int prev = d;
    for (int i = 1; i <= d && prev > 0; ++i) {
        power = power * n;
        int r = rank(power);
        parts.push_back(prev - r);
        prev = r;
    }
    if (prev != 0) throw std::invalid_argument("jordan_partition: matrix is not nilpotent");
    return Partition(std::move(parts));
}

// nilpotent matrix acting on the boxes of lambda: each box maps to the box
// above it, boxes ordered row by row; JF of the result is lambda
inline GFMatrix jordan_representative(int p, const Partition& lambda) {
    const int n = lambda.size();
    GFMatrix m(p, n, n);
    std::vector<int> rowstart;  // index of first box in each row
    int acc = 0;
    for (int r = 1; r <= lambda.num_parts(); ++r) {
        rowstart.push_back(acc);
        acc += lambda.part(r);
    }
    for (int r = 2; r <= lambda.num_parts(); ++r)
        for (int c = 0; c < lambda.part(r); ++c)
            m.at(rowstart[r - 2] + c, rowstart[r - 1] + c) = 1;
    return m;
}

// matrix of N restricted to an invariant subspace W, in W's canonical basis
inline GFMatrix restrict(const GFMatrix& n, const Subspace& w) {
    const int d = w.dim();
    GFMatrix a(n.p(), d, d);
    GFMatrix nb = n * w.basis();
    for (int c = 0; c < d; ++c) {
        std::vector<int> v(n.rows());
        for (int r = 0; r < n.rows(); ++r) v[r] = nb.at(r, c);
        auto coords = w.coordinates(v);
        if (!coords) throw std::invalid_argument("restrict: subspace is not N-invariant");
        for (int r = 0; r < d; ++r) a.at(r, c) = (*coords)[r];
    }
    return a;
}

/* Number of nilpotent N in gl_n(F_{1/q}) with JF(N) = lambda:
 * q^{-n^2+n+2n(lambda)} (1-q)^{n-lambda_1} [n]!_q / prod [lambda_i - lambda_{i+1}]!_q
 */
inline QRat nilpotent_count_formula(int n, const Partition& lambda) {
    if (lambda.size() != n) throw std::invalid_argument("nilpotent_count_formula: |lambda| != n");
    QPoly den = QPoly::one();
    for (int i = 1; i <= lambda.num_parts(); ++i)
        den *= qfactorial(lambda.part(i) - lambda.part(i + 1));
    return QRat::qpow(static_cast<int>(-1LL * n * n + n + 2 * n_stat(lambda))) *
           QRat::one_minus_q_pow(n - lambda.part(1)) * QRat(qfactorial(n), den);
}

/* |Stab_{GL_n}(N)| for JF(N) = lambda:
 * prod_i |k|^{(lambda_1+...+lambda_{i-1}+lambda_{i+1})(lambda_i-lambda_{i+1})} |GL_{lambda_i-lambda_{i+1}}|,
 * with |k| = q^{-1}.
 */
inline QRat stabilizer_size_formula(const Partition& lambda) {
    QRat r = QRat::one();
    long long prefix = 0;
    for (int i = 1; i <= lambda.num_parts(); ++i) {
        int diff = lambda.part(i) - lambda.part(i + 1);
        long long exp = (prefix + lambda.part(i + 1)) * diff;
        r *= QRat::qpow(static_cast<int>(-exp)) * gl_count(diff);
        prefix += lambda.part(i);
    }
    return r;
}

/* Brute-force census: enumerate every n x n matrix over GF(p) and count the
 * nilpotent ones with JF = lambda. Guarded to p^(n^2) <= 2^24.
 */
inline long long nilpotent_census(int n, int p, const Partition& lambda) {
    if (lambda.size() != n) throw std::invalid_argument("nilpotent_census: |lambda| != n");
    double bits = n * n * std::log2(static_cast<double>(p));
    if (bits > 24.0)
        throw std::invalid_argument("nilpotent_census: p^(n^2) exceeds the 2^24 guard");
    long long count = 0;
    GFMatrix m(p, n, n);
    std::vector<int> vals(n * n, 0);
    for (;;) {
        for (int i = 0; i < n * n; ++i) m.at(i / n, i % n) = vals[i];
        if (is_nilpotent(m) && jordan_partition(m) == lambda) ++count;
        int t = n * n - 1;
        while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
        if (t < 0) break;
        ++vals[t];
    }
    return count;
}

}  // namespace qburge
