#pragma once

#include <cstdint>
#include <random>

#include "qburge/partition.hpp"

namespace qburge {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* Dense matrix over the prime field GF(p). Entries are kept reduced to
 * [0, p). This is the general-purpose type; the enumeration hot loops in
 * census.hpp use their own fixed-size kernels.
 */
class GFMatrix {
public:
    GFMatrix() : p_(2), rows_(0), cols_(0) {}

    GFMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
        if (!is_prime(p)) throw std::invalid_argument("GFMatrix: modulus must be prime");
        if (rows < 0 || cols < 0) throw std::invalid_argument("GFMatrix: bad dimensions");
    }

    // entries reduced mod p; negative values allowed on input
    GFMatrix(int p, const std::vector<std::vector<long long>>& rows)
        : GFMatrix(p, static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
        for (int r = 0; r < rows_; ++r) {
            if (static_cast<int>(rows[r].size()) != cols_)
                throw std::invalid_argument("GFMatrix: ragged rows");
            for (int c = 0; c < cols_; ++c) at(r, c) = static_cast<int>(((rows[r][c] % p) + p) % p);
        }
    }

    static GFMatrix identity(int p, int n) {
        GFMatrix m(p, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int& at(int r, int c) { return e_[r * cols_ + c]; }
    int at(int r, int c) const { return e_[r * cols_ + c]; }

    bool operator==(const GFMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const GFMatrix& o) const { return !(*this == o); }
    bool operator<(const GFMatrix& o) const { return e_ < o.e_; }

    bool is_zero() const {
        for (int x : e_)
            if (x) return false;
        return true;
    }

    friend GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
        if (a.p_ != b.p_ || a.cols_ != b.rows_) throw std::invalid_argument("GFMatrix: bad product");
        GFMatrix r(a.p_, a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                int aik = a.at(i, k);
                if (!aik) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r.at(i, j) = static_cast<int>((r.at(i, j) + 1LL * aik * b.at(k, j)) % a.p_);
            }
        return r;
    }

    friend GFMatrix operator+(const GFMatrix& a, const GFMatrix& b) {
        if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("GFMatrix: bad sum");
        GFMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = (r.e_[i] + b.e_[i]) % a.p_;
        return r;
    }

    GFMatrix transpose() const {
        GFMatrix r(p_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    GFMatrix pow(int e) const {
        if (rows_ != cols_) throw std::invalid_argument("GFMatrix::pow: not square");
        GFMatrix r = identity(p_, rows_), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    GFMatrix submatrix(const std::vector<int>& rowidx, const std::vector<int>& colidx) const {
        GFMatrix r(p_, static_cast<int>(rowidx.size()), static_cast<int>(colidx.size()));
        for (std::size_t i = 0; i < rowidx.size(); ++i)
            for (std::size_t j = 0; j < colidx.size(); ++j) r.at(i, j) = at(rowidx[i], colidx[j]);
        return r;
    }

private:
    int p_, rows_, cols_;
    std::vector<int> e_;
};

inline int mod_inverse(int a, int p) {
    // p is prime and a != 0 mod p
    int t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    return ((t % p) + p) % p;
}

inline int rank(GFMatrix m) {
    const int p = m.p();
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int piv = -1;
        for (int r = rk; r < m.rows(); ++r)
            if (m.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rk, j));
        int inv = mod_inverse(m.at(rk, c), p);
        for (int r = rk + 1; r < m.rows(); ++r) {
            int f = static_cast<int>(1LL * m.at(r, c) * inv % p);
            if (!f) continue;
            for (int j = c; j < m.cols(); ++j)
                m.at(r, j) = static_cast<int>(((m.at(r, j) - 1LL * f * m.at(rk, j)) % p + p) % p);
        }
        ++rk;
    }
    return rk;
}

inline bool is_invertible(const GFMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline GFMatrix inverse(const GFMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows(), p = m.p();
    GFMatrix a = m, inv = GFMatrix::identity(p, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a.at(piv, j), a.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        int f = mod_inverse(a.at(c, c), p);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) = static_cast<int>(1LL * a.at(c, j) * f % p);
            inv.at(c, j) = static_cast<int>(1LL * inv.at(c, j) * f % p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !a.at(r, c)) continue;
            int g = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = static_cast<int>(((a.at(r, j) - 1LL * g * a.at(c, j)) % p + p) % p);
                inv.at(r, j) =
                    static_cast<int>(((inv.at(r, j) - 1LL * g * inv.at(c, j)) % p + p) % p);
            }
        }
    }
    return inv;
}

inline GFMatrix random_matrix(int p, int rows, int cols, std::mt19937& rng) {
    GFMatrix m(p, rows, cols);
    std::uniform_int_distribution<int> dist(0, p - 1);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = dist(rng);
    return m;
}

inline GFMatrix random_invertible(int p, int n, std::mt19937& rng) {
    for (;;) {
        GFMatrix g = random_matrix(p, n, n, rng);
        if (is_invertible(g)) return g;
    }
}

}  // namespace qburge
