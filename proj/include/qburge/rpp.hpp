#pragma once

#include "qburge/qburge.hpp"

namespace qburge {

/* Reverse plane partitions of the k x l rectangle R(k,l), the bijection with
 * pairs of tableaux via Gelfand-Tsetlin patterns, socle filtration data of
 * the associated modules, and the census masses with their direct
 * automorphism-size oracle.
 *
 * Coordinates follow the rectangle convention: row index i runs from k-1
 * down to -l+1; row i holds min(k-i, l) entries for i >= 0 and min(l+i, k)
 * entries for i <= 0, at grid positions j = |i|+1, |i|+3, ...
 */

struct RPP {
    int k = 0, l = 0;
    std::vector<std::vector<int>> rows;  // rows[t] is row i = k-1-t

    int row_count(int i) const { return i >= 0 ? std::min(k - i, l) : std::min(l + i, k); }

    const std::vector<int>& row(int i) const { return rows[k - 1 - i]; }
    std::vector<int>& row(int i) { return rows[k - 1 - i]; }

    // entry at grid position (i, j); m-th entry of row i has j = |i| + 2m - 1
    int entry(int i, int m) const { return row(i)[m - 1]; }

    long long row_sum(int i) const {
        long long s = 0;
        for (int v : row(i)) s += v;
        return s;
    }

    Partition central() const {
        std::vector<int> parts(row(0));
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    // (alpha, beta) with row sums d_{k-i} = alpha_1 + ... + alpha_i
    std::pair<Composition, Composition> type() const {
        std::vector<int> a(k), b(l);
        for (int i = 1; i <= k; ++i) {
            long long lo = (i == 1) ? 0 : row_sum(k - i + 1);
            a[i - 1] = static_cast<int>(row_sum(k - i) - lo);
        }
        for (int j = 1; j <= l; ++j) {
            long long lo = (j == 1) ? 0 : row_sum(-l + j - 1);
            b[j - 1] = static_cast<int>(row_sum(-l + j) - lo);
        }
        return {Composition(std::move(a)), Composition(std::move(b))};
    }

    bool operator==(const RPP& o) const { return k == o.k && l == o.l && rows == o.rows; }
    bool operator<(const RPP& o) const { return rows < o.rows; }

    std::string to_string() const {
        std::string s;
        for (int t = 0; t < static_cast<int>(rows.size()); ++t) {
            if (t) s += " / ";
            for (std::size_t m = 0; m < rows[t].size(); ++m) {
                if (m) s += ",";
                s += std::to_string(rows[t][m]);
            }
        }
        return s;
    }
};

// weak decrease toward the northwest and the northeast
inline bool is_valid_rpp(const RPP& r) {
    if (static_cast<int>(r.rows.size()) != r.k + r.l - 1) return false;
    for (int i = -r.l + 1; i <= r.k - 1; ++i) {
        if (static_cast<int>(r.row(i).size()) != r.row_count(i)) return false;
        for (int v : r.row(i))
            if (v < 0) return false;
    }
    for (int i = -r.l + 1; i <= r.k - 1; ++i) {
        for (int m = 1; m <= r.row_count(i); ++m) {
            int j = std::abs(i) + 2 * m - 1;
            // R(i,j) >= R(i+1,j+1)
            if (i + 1 <= r.k - 1) {
                int m2 = (j + 1 - std::abs(i + 1) + 1) / 2;
                if (m2 >= 1 && m2 <= r.row_count(i + 1) && r.entry(i, m) < r.entry(i + 1, m2))
                    return false;
            }
            // R(i,j) >= R(i-1,j+1)
            if (i - 1 >= -r.l + 1) {
                int m2 = (j + 1 - std::abs(i - 1) + 1) / 2;
                if (m2 >= 1 && m2 <= r.row_count(i - 1) && r.entry(i, m) < r.entry(i - 1, m2))
                    return false;
            }
        }
    }
    return true;
}

/* Phi: glue the Gelfand-Tsetlin patterns of T and T' along their common
 * bottom row lambda. Row i >= 0 of the rectangle holds T^(k-i); row i <= 0
 * holds T'^(l+i).
 */
inline RPP rpp_from_pair(const SSYTableau& t, const SSYTableau& u, int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("rpp_from_pair: need k, l >= 1");
    if (t.shape() != u.shape()) throw std::invalid_argument("rpp_from_pair: shapes differ");
    if (t.max_letter() > k || u.max_letter() > l)
        throw std::invalid_argument("rpp_from_pair: entry bound exceeded");
    auto chain_t = tableau_chain(t, k);
    auto chain_u = tableau_chain(u, l);
    RPP r;
    r.k = k;
    r.l = l;
    r.rows.resize(k + l - 1);
    for (int i = k - 1; i >= 0; --i) {
        auto& row = r.row(i);
        row.resize(r.row_count(i));
        for (int m = 1; m <= static_cast<int>(row.size()); ++m)
            row[m - 1] = chain_t[k - i].part(m);
    }
    for (int i = -1; i >= -l + 1; --i) {
        auto& row = r.row(i);
        row.resize(r.row_count(i));
        for (int m = 1; m <= static_cast<int>(row.size()); ++m)
            row[m - 1] = chain_u[l + i].part(m);
    }
    return r;
}

// inverse of Phi; throws if the filling is not a reverse plane partition of
// tableau-pair type
inline std::pair<SSYTableau, SSYTableau> pair_from_rpp(const RPP& r) {
    if (!is_valid_rpp(r)) throw std::invalid_argument("pair_from_rpp: not a reverse plane partition");
    auto row_to_partition = [](const std::vector<int>& row) {
        std::vector<int> parts(row);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    };
    std::vector<Partition> chain_t{Partition{}}, chain_u{Partition{}};
    for (int m = 1; m <= r.k; ++m) chain_t.push_back(row_to_partition(r.row(r.k - m)));
    for (int m = 1; m <= r.l; ++m) chain_u.push_back(row_to_partition(r.row(-r.l + m)));
    return {tableau_from_chain(chain_t), tableau_from_chain(chain_u)};
}

// all reverse plane partitions of type (alpha, beta), via the bijection
inline std::vector<RPP> enumerate_rpps(const Composition& alpha, const Composition& beta) {
    std::vector<RPP> out;
    for (const auto& [t, u] : tableau_pairs(alpha, beta))
        out.push_back(rpp_from_pair(t, u, std::max(alpha.length(), 1), std::max(beta.length(), 1)));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool in_nm_pattern(const GFMatrix& n, const IntMat& m) {
    ZeroPattern z = nm_pattern(m);
    std::vector<std::vector<bool>> ok(z.n, std::vector<bool>(z.n, false));
    for (auto [r, c] : z.free_positions) ok[r - 1][c - 1] = true;
    for (int r = 0; r < z.n; ++r)
        for (int c = 0; c < z.n; ++c)
            if (n.at(r, c) && !ok[r][c]) return false;
    return true;
}

/* Socle filtration data of the module attached to N in n_M: the reverse
 * plane partition Phi(JF(N;E_id), JF(N;E_wM)).
 */
inline RPP socle_rpp_from_census(const IntMat& m, const GFMatrix& n, int p) {
    const int nn = static_cast<int>(m.total());
    if (n.rows() != nn || n.cols() != nn || n.p() != p)
        throw std::invalid_argument("socle_rpp_from_census: dimension mismatch");
    if (!in_nm_pattern(n, m))
        throw std::invalid_argument("socle_rpp_from_census: N is not in the n_M pattern");
    Flag fa = coordinate_flag(m.row_sums(), perm_identity(nn), p);
    Flag fb = coordinate_flag(m.col_sums(), canonical_perm(m), p);
    return rpp_from_pair(jf_tableau(n, fa), jf_tableau(n, fb), m.k, m.l);
}

/* Mass of isomorphism classes with relative position M and socle data R:
 * sum over classes of 1/|Aut| =
 *   q^{n + n(alpha) + n(beta)} (1-q)^{-n} / prod [M_{i,j}]!_q * p_M(T,T')
 * at q = 1/p, where R = Phi(T,T').
 */
inline Fraction preprojective_mass_from_table(const ProbTable& table, const RPP& r) {
    const IntMat& m = table.m;
    Composition alpha = m.row_sums(), beta = m.col_sums();
    auto [ra, rb] = r.type();
    if (!(ra == alpha && rb == beta))
        throw std::invalid_argument("preprojective_mass: type of R does not match M");
    auto [t, u] = pair_from_rpp(r);
    const int n = static_cast<int>(m.total());
    QRat prefactor = QRat::qpow(static_cast<int>(n + n_stat(alpha) + n_stat(beta))) * matrix_weight(m);
    return prefactor.eval(Fraction(1, table.p)) * table.prob({t, u});
}

inline Fraction preprojective_mass(const IntMat& m, const RPP& r, int p, int workers = 0,
                                   double cap_bits = 24.0) {
    return preprojective_mass_from_table(forward_table(m, p, workers, cap_bits), r);
}

// ---- direct orbit/automorphism oracles ----

/* Free positions of the stabilizer pattern Stab_GL(E_id, E_wM) =
 * P_alpha cap wM P_beta wM^{-1}: (r,s) allowed iff r,s are weakly ordered by
 * both block structures.
 */
inline std::vector<std::pair<int, int>> stabilizer_pattern(const IntMat& m) {
    Composition alpha = m.row_sums(), beta = m.col_sums();
    const int n = static_cast<int>(m.total());
    Perm winv = perm_inverse(canonical_perm(m));
    std::vector<std::pair<int, int>> pos;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
            if (alpha.block_of(r) <= alpha.block_of(s) &&
                beta.block_of(winv[r - 1]) <= beta.block_of(winv[s - 1]))
                pos.emplace_back(r - 1, s - 1);
    return pos;
}

// all invertible matrices supported on the stabilizer pattern
inline std::vector<GFMatrix> enumerate_stabilizer(const IntMat& m, int p,
                                                  double cap_bits = 20.0) {
    auto pos = stabilizer_pattern(m);
    if (pos.size() * std::log2(static_cast<double>(p)) > cap_bits)
        throw std::invalid_argument("enumerate_stabilizer: pattern exceeds the enumeration cap");
    const int n = static_cast<int>(m.total());
    std::vector<GFMatrix> out;
    GFMatrix g(p, n, n);
    std::vector<int> vals(pos.size(), 0);
    for (;;) {
        for (std::size_t t = 0; t < pos.size(); ++t) g.at(pos[t].first, pos[t].second) = vals[t];
        if (is_invertible(g)) out.push_back(g);
        int t = static_cast<int>(pos.size()) - 1;
        while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
        if (t < 0) break;
        ++vals[t];
    }
    return out;
}

/* |Aut| of the module attached to (M, N): the number of g fixing both
 * canonical flags and commuting with N. Enumerates only the
 * parabolic-intersection pattern, never all of GL_n.
 */
inline long long aut_size_direct(const IntMat& m, const GFMatrix& n, int p,
                                 double cap_bits = 20.0) {
    if (!in_nm_pattern(n, m))
        throw std::invalid_argument("aut_size_direct: N is not in the n_M pattern");
    auto pos = stabilizer_pattern(m);
    if (pos.size() * std::log2(static_cast<double>(p)) > cap_bits)
        throw std::invalid_argument("aut_size_direct: pattern exceeds the enumeration cap");
    const int nn = static_cast<int>(m.total());
    long long count = 0;
    GFMatrix g(p, nn, nn);
    std::vector<int> vals(pos.size(), 0);
    for (;;) {
        for (std::size_t t = 0; t < pos.size(); ++t) g.at(pos[t].first, pos[t].second) = vals[t];
        if (g * n == n * g && is_invertible(g)) ++count;
        int t = static_cast<int>(pos.size()) - 1;
        while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
        if (t < 0) break;
        ++vals[t];
    }
    return count;
}

/* Cross-validates the mass formula by direct orbit enumeration: group the
 * n_M census into stabilizer orbits, sum 1/|Aut| over the orbits whose socle
 * data equals R, and compare with preprojective_mass.
 */
inline bool preprojective_direct_check(const IntMat& m, const RPP& r, int p, int workers = 0,
                                       double cap_bits = 20.0) {
    ZeroPattern z = nm_pattern(m);
    if (z.free_positions.size() * std::log2(static_cast<double>(p)) > cap_bits)
        throw std::invalid_argument("preprojective_direct_check: exceeds the enumeration cap");
    const int nn = static_cast<int>(m.total());
    auto group = enumerate_stabilizer(m, p, cap_bits);

    std::vector<GFMatrix> points;
    {
        GFMatrix n(p, nn, nn);
        std::vector<int> vals(z.free_positions.size(), 0);
        for (;;) {
            for (std::size_t t = 0; t < z.free_positions.size(); ++t)
                n.at(z.free_positions[t].first - 1, z.free_positions[t].second - 1) = vals[t];
            points.push_back(n);
            int t = static_cast<int>(z.free_positions.size()) - 1;
            while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
            if (t < 0) break;
            ++vals[t];
        }
    }

    std::map<GFMatrix, int> orbit_of;
    Fraction mass(0);
    for (const GFMatrix& n0 : points) {
        if (orbit_of.count(n0)) continue;
        int id = static_cast<int>(orbit_of.size());
        long long orbit_size = 0;
        for (const GFMatrix& g : group) {
            GFMatrix conj = g * n0 * inverse(g);
            if (!orbit_of.count(conj)) {
                orbit_of[conj] = id;
                ++orbit_size;
            }
        }
        long long aut = aut_size_direct(m, n0, p, cap_bits);
        if (orbit_size * aut != static_cast<long long>(group.size()))
            throw std::logic_error("preprojective_direct_check: orbit-stabilizer mismatch");
        if (socle_rpp_from_census(m, n0, p) == r) mass += Fraction(1, aut);
    }
    return mass == preprojective_mass(m, r, p, workers, cap_bits + 4);
}

// ---- Nakajima quiver-variety point counts ----

/* |QV_alpha^T| by formula:
 * q^{-n^2+n+n(lambda)+n(alpha)} (1-q)^{n-lambda_1} [n]!_q / prod [l_i - l_{i+1}]!_q * wt_q(T)
 * evaluated at q = 1/p.
 */
inline BigInt quiver_variety_count(const Composition& alpha, const SSYTableau& t, int p) {
    if (t.size() != alpha.size())
        throw std::invalid_argument("quiver_variety_count: size mismatch");
    const int n = alpha.size();
    Partition lambda = t.shape();
    QPoly den = QPoly::one();
    for (int i = 1; i <= lambda.num_parts(); ++i)
        den *= qfactorial(lambda.part(i) - lambda.part(i + 1));
    QRat formula =
        QRat::qpow(static_cast<int>(-1LL * n * n + n + n_stat(lambda) + n_stat(alpha))) *
        QRat::one_minus_q_pow(n - lambda.part(1)) * QRat(qfactorial(n) * wtq(t), den);
    Fraction v = formula.eval(Fraction(1, p));
    if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("quiver_variety_count: non-integer evaluation");
    return boost::multiprecision::numerator(v);
}

/* Oracle: pairs (F, N) with F strictly compatible with N and JF(N;F) = T,
 * counted as (# nilpotents of the class) x (# flags for one representative).
 */
inline BigInt quiver_variety_census(const Composition& alpha, const SSYTableau& t, int p) {
    const int n = alpha.size();
    if (t.size() != n) throw std::invalid_argument("quiver_variety_census: size mismatch");
    Partition lambda = t.shape();
    GFMatrix n0 = jordan_representative(p, lambda);
    long long flags = 0;
    for (const Flag& f : enumerate_compatible_flags(n0, alpha))
        if (jf_tableau(n0, f) == t) ++flags;
    return BigInt(nilpotent_census(n, p, lambda)) * flags;
}

}  // namespace qburge
