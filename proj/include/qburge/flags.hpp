#pragma once

#include "qburge/intmat.hpp"
#include "qburge/jordan.hpp"

namespace qburge {

/* Partial flags over GF(p), their relative position, the canonical coset
 * permutation of a nonnegative-integer matrix, and the associated counting
 * formulas with brute-force oracles.
 */

// permutations of [n] in one-line notation, 1-indexed values
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return w;
}

inline Perm perm_inverse(const Perm& w) {
    Perm inv(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) inv[w[j] - 1] = static_cast<int>(j) + 1;
    return inv;
}

// permutation matrix with entries delta_{i, w(j)}, i.e. w-dot e_j = e_{w(j)}
inline GFMatrix perm_matrix(int p, const Perm& w) {
    const int n = static_cast<int>(w.size());
    GFMatrix m(p, n, n);
    for (int j = 0; j < n; ++j) m.at(w[j] - 1, j) = 1;
    return m;
}

/* Canonical minimal-length representative w-hat of the double coset labeled
 * by M: reading M row-major, each entry M_{i,j} contributes an identity
 * block placed as far northwest as possible within rows block_alpha(i) and
 * columns block_beta(j).
 */
inline Perm canonical_perm(const IntMat& m) {
    Composition alpha = m.row_sums(), beta = m.col_sums();
    const int n = static_cast<int>(m.total());
    Perm w(n, 0);
    for (int i = 1; i <= m.k; ++i) {
        long long rowoff = alpha.block_start(i) - 1;  // rows used so far in block i
        for (int j = 1; j <= m.l; ++j) {
            long long mij = m.at(i - 1, j - 1);
            if (mij == 0) continue;
            long long coloff = beta.block_start(j) - 1;
            for (int t = 1; t < i; ++t) coloff += m.at(t - 1, j - 1);
            for (long long t = 1; t <= mij; ++t) w[coloff + t - 1] = static_cast<int>(rowoff + t);
            rowoff += mij;
        }
    }
    return w;
}

struct Flag {
    Composition type_comp;
    std::vector<Subspace> steps;  // F_0 = 0 through F_k = full space
    int p = 2;
    int n = 0;

    int num_steps() const { return static_cast<int>(steps.size()) - 1; }  // k

    bool operator==(const Flag& o) const { return steps == o.steps && type_comp == o.type_comp; }
    bool operator<(const Flag& o) const { return steps < o.steps; }
};

inline Flag flag_from_representative(const Composition& alpha, const GFMatrix& g) {
    const int n = alpha.size();
    if (g.rows() != n || g.cols() != n)
        throw std::invalid_argument("flag_from_representative: dimension mismatch");
    if (!is_invertible(g)) throw std::invalid_argument("flag_from_representative: singular matrix");
    Flag f;
    f.type_comp = alpha;
    f.p = g.p();
    f.n = n;
    auto d = alpha.partial_sums();
    for (int i = 0; i <= alpha.length(); ++i) {
        std::vector<int> cols(d[i]);
        for (int c = 0; c < d[i]; ++c) cols[c] = c;
        std::vector<int> rows(n);
        for (int r = 0; r < n; ++r) rows[r] = r;
        f.steps.push_back(Subspace::span(g.submatrix(rows, cols)));
    }
    return f;
}

// the flag E_w of type alpha: steps spanned by e_{w(1)}, ..., e_{w(prefix)}
inline Flag coordinate_flag(const Composition& alpha, const Perm& w, int p) {
    if (static_cast<int>(w.size()) != alpha.size())
        throw std::invalid_argument("coordinate_flag: |alpha| != n");
    return flag_from_representative(alpha, perm_matrix(p, w));
}

/* Relative position of (F, F'): the unique M with
 * dim(F_i cap F'_j) = sum_{i'<=i, j'<=j} M_{i',j'}.
 */
inline IntMat relative_position(const Flag& f, const Flag& g) {
    if (f.n != g.n || f.p != g.p)
        throw std::invalid_argument("relative_position: different ambient spaces");
    const int k = f.num_steps(), l = g.num_steps();
    std::vector<std::vector<int>> dims(k + 1, std::vector<int>(l + 1, 0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) dims[i][j] = intersection_dim(f.steps[i], g.steps[j]);
    IntMat m(k, l);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            m.at(i - 1, j - 1) = dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1];
    return m;
}

/* Double coset label of g in P_alpha \ GL_n / P_beta, from the ranks of the
 * lower-left block submatrices:
 * rank(g[blocks > i, blocks <= j]) = sum_{i' > i, j' <= j} M_{i',j'}.
 */
inline IntMat coset_label(const GFMatrix& g, const Composition& alpha, const Composition& beta) {
    const int n = alpha.size();
    if (beta.size() != n || g.rows() != n || g.cols() != n)
        throw std::invalid_argument("coset_label: dimension mismatch");
    if (!is_invertible(g)) throw std::invalid_argument("coset_label: singular matrix");
    const int k = alpha.length(), l = beta.length();
    auto da = alpha.partial_sums(), db = beta.partial_sums();
    // r[i][j] = rank of rows (da[i], n], columns [0, db[j])
    std::vector<std::vector<int>> r(k + 1, std::vector<int>(l + 1, 0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
            std::vector<int> rowidx, colidx;
            for (int t = da[i]; t < n; ++t) rowidx.push_back(t);
            for (int t = 0; t < db[j]; ++t) colidx.push_back(t);
            r[i][j] = rank(g.submatrix(rowidx, colidx));
        }
    IntMat m(k, l);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= l; ++j)
            m.at(i - 1, j - 1) = r[i - 1][j] - r[i][j] - r[i - 1][j - 1] + r[i][j - 1];
    return m;
}

/* Zero pattern of n_M = n_alpha cap w-hat n_beta w-hat^{-1}: the positions
 * (row, col), 1-indexed, where a strictly compatible nilpotent may be
 * nonzero. Row-major order.
 */
struct ZeroPattern {
    int n = 0;
    std::vector<std::pair<int, int>> free_positions;
};

inline ZeroPattern nm_pattern(const IntMat& m) {
    Composition alpha = m.row_sums(), beta = m.col_sums();
    const int n = static_cast<int>(m.total());
    Perm winv = perm_inverse(canonical_perm(m));
    ZeroPattern z;
    z.n = n;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
            if (alpha.block_of(r) >= alpha.block_of(s)) continue;
            if (beta.block_of(winv[r - 1]) >= beta.block_of(winv[s - 1])) continue;
            z.free_positions.emplace_back(r, s);
        }
    return z;
}

inline long long nm_dimension(const IntMat& m) {
    long long d = 0;
    for (int i = 0; i < m.k; ++i)
        for (int ip = i + 1; ip < m.k; ++ip)
            for (int j = 0; j < m.l; ++j)
                for (int jp = j + 1; jp < m.l; ++jp) d += m.at(i, j) * m.at(ip, jp);
    return d;
}

/* |X_M|, the size of the P_alpha-orbit of Fl_beta labeled by M:
 * q^{-sum_{i'<=i, j<j'} M_{i,j} M_{i',j'}} prod_i [alpha_i]! / prod [M_{i,j}]!
 */
inline QRat orbit_size_formula(const IntMat& m) {
    Composition alpha = m.row_sums();
    long long exp = 0;
    for (int i = 0; i < m.k; ++i)
        for (int ip = 0; ip <= i; ++ip)
            for (int j = 0; j < m.l; ++j)
                for (int jp = j + 1; jp < m.l; ++jp) exp += m.at(i, j) * m.at(ip, jp);
    QPoly num = QPoly::one(), den = QPoly::one();
    for (int p : alpha.parts()) num *= qfactorial(p);
    for (long long x : m.e) den *= qfactorial(static_cast<int>(x));
    return QRat::qpow(static_cast<int>(-exp)) * QRat(num, den);
}

/* |Y_M|, the size of the double coset of P_alpha \ GL_n / P_beta labeled by M:
 * q^{-n^2 + sum_{i<i', j<j'} M_{i,j} M_{i',j'}} (1-q)^n
 *   prod [alpha_i]! prod [beta_j]! / prod [M_{i,j}]!
 */
inline QRat double_coset_size_formula(const IntMat& m) {
    Composition alpha = m.row_sums(), beta = m.col_sums();
    const long long n = m.total();
    QPoly num = QPoly::one(), den = QPoly::one();
    for (int p : alpha.parts()) num *= qfactorial(p);
    for (int p : beta.parts()) num *= qfactorial(p);
    for (long long x : m.e) den *= qfactorial(static_cast<int>(x));
    return QRat::qpow(static_cast<int>(-n * n + nm_dimension(m))) * QRat::one_minus_q_pow(n) *
           QRat(num, den);
}

// size of the double coset of S_alpha \ S_n / S_beta labeled by M
inline BigInt sym_double_coset_size(const IntMat& m) {
    auto fact = [](long long v) {
        BigInt r = 1;
        for (long long i = 2; i <= v; ++i) r *= i;
        return r;
    };
    Composition alpha = m.row_sums(), beta = m.col_sums();
    BigInt num = 1, den = 1;
    for (int p : alpha.parts()) num *= fact(p);
    for (int p : beta.parts()) num *= fact(p);
    for (long long x : m.e) den *= fact(x);
    return num / den;
}

// ---- strict compatibility ----

inline bool is_strictly_compatible(const GFMatrix& n, const Flag& f) {
    for (int i = 1; i <= f.num_steps(); ++i)
        if (!f.steps[i - 1].contains(image(n, f.steps[i]))) return false;
    return true;
}

/* The tableau JF(N;F): chain T^(i) = JF(N restricted to F_i). Requires N
 * strictly compatible with F; semistandardness is then automatic and the
 * chain assembly asserts it.
 */
inline SSYTableau jf_tableau(const GFMatrix& n, const Flag& f) {
    if (!is_strictly_compatible(n, f))
        throw std::invalid_argument("jf_tableau: N is not strictly compatible with F");
    std::vector<Partition> chain;
    for (int i = 0; i <= f.num_steps(); ++i)
        chain.push_back(jordan_partition(restrict(n, f.steps[i])));
    return tableau_from_chain(chain);
}

/* All partial flags of type alpha strictly compatible with N, built top
 * down: F_k is the full space, and F_{i-1} ranges over the subspaces of F_i
 * of the right dimension containing N(F_i).
 */
inline std::vector<Flag> enumerate_compatible_flags(const GFMatrix& n, const Composition& alpha,
                                                    double cap_bits = 24.0) {
    const int nn = alpha.size();
    if (n.rows() != nn || n.cols() != nn)
        throw std::invalid_argument("enumerate_compatible_flags: dimension mismatch");
    if (!is_nilpotent(n))
        throw std::invalid_argument("enumerate_compatible_flags: N is not nilpotent");
    {
        Fraction bound = flag_variety_count(alpha).eval(Fraction(1, n.p()));
        if (bound > Fraction(BigInt(1) << 30))
            throw std::invalid_argument("enumerate_compatible_flags: search exceeds guard");
        (void)cap_bits;
    }
    const int k = alpha.length();
    auto d = alpha.partial_sums();
    std::vector<Flag> out;
    std::vector<Subspace> rev;  // F_k, F_{k-1}, ..., built downward
    rev.push_back(Subspace::full(n.p(), nn));
    auto rec = [&](auto&& self, int i) -> void {
        // rev holds F_k .. F_{i}; choose F_{i-1} inside F_i containing N(F_i)
        if (i == 0) {
            Flag f;
            f.type_comp = alpha;
            f.p = n.p();
            f.n = nn;
            f.steps.assign(rev.rbegin(), rev.rend());
            out.push_back(std::move(f));
            return;
        }
        const Subspace& cur = rev.back();
        Subspace img = image(n, cur);
        if (img.dim() > d[i - 1]) return;
        for (const Subspace& w : subspaces_between(img, cur, d[i - 1])) {
            rev.push_back(w);
            self(self, i - 1);
            rev.pop_back();
        }
    };
    rec(rec, k);
    std::sort(out.begin(), out.end());
    return out;
}

// all partial flags of type alpha over GF(p)
inline std::vector<Flag> enumerate_flags(const Composition& alpha, int p) {
    GFMatrix zero(p, alpha.size(), alpha.size());
    // with N = 0 strict compatibility is vacuous
    return enumerate_compatible_flags(zero, alpha);
}

/* |{N in n_alpha : JF(N) = lambda}| by exhaustive enumeration of the
 * e2(alpha) free entries. Guarded to e2(alpha) * log2(p) <= 24 bits.
 */
inline long long nilpotent_in_nalpha_census(const Composition& alpha, const Partition& lambda,
                                            int p) {
    const int n = alpha.size();
    if (lambda.size() != n)
        throw std::invalid_argument("nilpotent_in_nalpha_census: |lambda| != |alpha|");
    long long free_dim = e2_stat(alpha);
    if (free_dim * std::log2(static_cast<double>(p)) > 24.0)
        throw std::invalid_argument("nilpotent_in_nalpha_census: exceeds the 2^24 guard");
    std::vector<std::pair<int, int>> pos;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
            if (alpha.block_of(r) < alpha.block_of(s)) pos.emplace_back(r - 1, s - 1);
    GFMatrix m(p, n, n);
    std::vector<int> vals(pos.size(), 0);
    long long count = 0;
    for (;;) {
        for (std::size_t t = 0; t < pos.size(); ++t) m.at(pos[t].first, pos[t].second) = vals[t];
        if (jordan_partition(m) == lambda) ++count;
        int t = static_cast<int>(pos.size()) - 1;
        while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
        if (t < 0) break;
        ++vals[t];
    }
    return count;
}

}  // namespace qburge
