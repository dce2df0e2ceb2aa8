#pragma once

#include "qburge/burge.hpp"
#include "qburge/census.hpp"
#include "qburge/whittaker.hpp"

namespace qburge {

/* The q-Burge probabilistic correspondence, realized by exhaustive
 * enumeration per prime: forward/backward probability tables, the
 * reversibility conditions (B1)-(B3), growth-diagram distributions, and
 * cross-prime interpolation of the forward probabilities.
 */

using TableauPair = std::pair<SSYTableau, SSYTableau>;

struct ProbTable {
    IntMat m;
    int p = 2;
    long long free_dim = 0;
    long long total = 1;
    // censuses are the ground truth; probabilities are derived views
    std::vector<std::pair<TableauPair, long long>> counts;

    long long count_of(const TableauPair& key) const {
        for (const auto& [k, v] : counts)
            if (k == key) return v;
        return 0;
    }
    Fraction prob(const TableauPair& key) const { return Fraction(count_of(key), total); }
};

// forward table p_M over GF(p): count of N in n_M with the given tableau pair
inline ProbTable forward_table(const IntMat& m, int p, int workers = 0, double cap_bits = 24.0) {
    PairCensus c = pair_census(m, p, workers, cap_bits);
    ProbTable t;
    t.m = m;
    t.p = p;
    t.free_dim = c.free_dim;
    t.total = c.total;
    t.counts.assign(c.counts.begin(), c.counts.end());
    // table keys ordered lexicographically by (reading word of T, reading word of T')
    std::sort(t.counts.begin(), t.counts.end(), [](const auto& a, const auto& b) {
        auto ka = std::make_pair(a.first.first.reading_word(), a.first.second.reading_word());
        auto kb = std::make_pair(b.first.first.reading_word(), b.first.second.reading_word());
        return ka < kb;
    });
    long long sum = 0;
    for (const auto& [k, v] : t.counts) sum += v;
    if (sum != t.total) throw std::logic_error("forward_table: census does not sum to p^free_dim");
    return t;
}

/* Backward probabilities from a forward table, at q = 1/p exactly:
 * p~_M(T,T') = psi(M) p_M(T,T') / psi~(T,T').
 */
inline std::map<TableauPair, Fraction> backward_from_forward(const ProbTable& t) {
    const Fraction q0(1, t.p);
    Fraction psi_m = matrix_weight(t.m).eval(q0);
    std::map<TableauPair, Fraction> out;
    for (const auto& [key, cnt] : t.counts) {
        Fraction psi_pair = pair_weight(key.first, key.second).eval(q0);
        if (psi_pair == 0) throw std::logic_error("backward_from_forward: zero pair weight");
        out[key] = psi_m * Fraction(cnt, t.total) / psi_pair;
    }
    return out;
}

struct CheckReport {
    bool ok = true;
    std::string detail;
};

/* Verifies, exactly at q = 1/p, that the forward/backward probabilities for
 * all M in Mat(alpha,beta) form a probabilistic bijection:
 *   (B1) rows of p sum to 1 (census sums to p^free_dim),
 *   (B2) rows of p~ sum to 1, i.e. sum_M psi(M) p_M(T,T') = psi~(T,T'),
 *   (B3) psi(M) p = psi~ p~ (holds by construction of p~, rechecked),
 * plus the triples count |T_M| = q^{-n^2+n+n(alpha)+n(beta)} [n choose M]_q.
 */
inline CheckReport reversibility_check(const Composition& alpha, const Composition& beta, int p,
                                       int workers = 0, double cap_bits = 24.0) {
    const int n = alpha.size();
    if (beta.size() != n) return {false, "size mismatch between alpha and beta"};
    const Fraction q0(1, p);
    CheckReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += msg;
    };

    std::map<TableauPair, Fraction> lhs_by_pair;  // sum_M psi(M) p_M(T,T')
    for (const IntMat& m : enumerate_matrices(alpha, beta)) {
        ProbTable t = forward_table(m, p, workers, cap_bits);

        long long cs = 0;
        for (const auto& [key, cnt] : t.counts) cs += cnt;
        if (cs != t.total) fail("(B1) fails for M=" + m.to_string());

        // triples count: (# flag pairs in relative position M) * |n_M|
        Fraction flag_pairs =
            (flag_variety_count(alpha) * orbit_size_formula(m)).eval(q0);
        std::vector<int> mparts;
        for (long long x : m.e) mparts.push_back(static_cast<int>(x));
        Fraction triples_closed =
            (QRat::qpow(static_cast<int>(-1LL * n * n + n + n_stat(alpha) + n_stat(beta))) *
             QRat(qmultinomial(n, Composition(std::move(mparts)))))
                .eval(q0);
        if (flag_pairs * Fraction(t.total) != triples_closed)
            fail("triples count fails for M=" + m.to_string());

        Fraction psi_m = matrix_weight(m).eval(q0);
        auto backward = backward_from_forward(t);
        for (const auto& [key, cnt] : t.counts) {
            Fraction fwd(cnt, t.total);
            Fraction psi_pair = pair_weight(key.first, key.second).eval(q0);
            if (psi_m * fwd != psi_pair * backward.at(key))
                fail("(B3) fails for M=" + m.to_string() + " T=" + key.first.to_string() +
                     " T'=" + key.second.to_string());
            lhs_by_pair[key] += psi_m * fwd;
        }
    }

    // (B2): rows of the backward table sum to 1, over every pair of the
    // correct contents (pairs never produced by any census must have weight 0,
    // which cannot happen since psi~ is never 0; so require full coverage)
    for (const auto& [t, u] : tableau_pairs(alpha, beta)) {
        TableauPair key{t, u};
        Fraction psi_pair = pair_weight(t, u).eval(q0);
        auto it = lhs_by_pair.find(key);
        Fraction lhs = it == lhs_by_pair.end() ? Fraction(0) : it->second;
        if (lhs != psi_pair)
            fail("(B2) fails for T=" + t.to_string() + " T'=" + u.to_string());
    }
    // and no spurious keys outside Tabs(alpha, beta)
    for (const auto& [key, v] : lhs_by_pair) {
        if (key.first.shape() != key.second.shape())
            fail("census produced a pair of different shapes");
        if (key.first.content(alpha.length()) != alpha ||
            key.second.content(beta.length()) != beta)
            fail("census produced a pair of wrong contents");
    }
    return rep;
}

// ---- growth diagrams ----

struct GrowthDiagram {
    int k = 0, l = 0;
    std::vector<Partition> grid;  // (k+1) x (l+1), row-major

    const Partition& at(int i, int j) const { return grid[i * (l + 1) + j]; }
    bool operator<(const GrowthDiagram& o) const { return grid < o.grid; }
    bool operator==(const GrowthDiagram& o) const {
        return k == o.k && l == o.l && grid == o.grid;
    }
};

/* Census of growth diagrams G(E_id, E_wM, N)_{i,j} = JF(N restricted to
 * F_i cap F'_j) over N in n_M. Intersections of coordinate flags are spanned
 * by unit vectors, so every restriction is a principal submatrix.
 */
inline std::map<GrowthDiagram, long long> growth_distribution(const IntMat& m, int p,
                                                              double cap_bits = 24.0) {
    const int n = static_cast<int>(m.total());
    ZeroPattern z = nm_pattern(m);
    const int f = static_cast<int>(z.free_positions.size());
    if (f * std::log2(static_cast<double>(p)) > cap_bits)
        throw std::invalid_argument("growth_distribution: exceeds the enumeration cap");
    Composition alpha = m.row_sums(), beta = m.col_sums();
    Perm what = canonical_perm(m);
    auto setsA = census_detail::coordinate_stage_sets(perm_identity(n), alpha);
    auto setsB = census_detail::coordinate_stage_sets(what, beta);
    const int k = alpha.length(), l = beta.length();

    // index sets of F_i cap F'_j
    std::vector<std::vector<std::vector<int>>> cell(k + 1,
                                                    std::vector<std::vector<int>>(l + 1));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= l; ++j) {
            if (i == 0 || j == 0) continue;
            std::set_intersection(setsA[i - 1].begin(), setsA[i - 1].end(), setsB[j - 1].begin(),
                                  setsB[j - 1].end(), std::back_inserter(cell[i][j]));
        }

    std::map<GrowthDiagram, long long> out;
    GFMatrix nm(p, n, n);
    std::vector<int> vals(f, 0);
    for (;;) {
        for (int t = 0; t < f; ++t)
            nm.at(z.free_positions[t].first - 1, z.free_positions[t].second - 1) = vals[t];
        GrowthDiagram g;
        g.k = k;
        g.l = l;
        g.grid.reserve((k + 1) * (l + 1));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= l; ++j)
                g.grid.push_back(jordan_partition(nm.submatrix(cell[i][j], cell[i][j])));
        ++out[g];
        int t = f - 1;
        while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
        if (t < 0) break;
        ++vals[t];
    }
    return out;
}

// ---- interpolation across primes ----

struct InterpolationResult {
    bool success = false;
    long long free_dim = 0;
    std::vector<Fraction> coeffs;  // probability polynomial in q, ascending powers
    bool integer_coeffs = false;
    QPoly poly;  // set when integer_coeffs
    std::vector<int> fit_primes, holdout_primes;
    std::string failure_report;
};

namespace interp_detail {

// Lagrange interpolation through (x_i, y_i), exact over Q
inline std::vector<Fraction> lagrange(const std::vector<Fraction>& xs,
                                      const std::vector<Fraction>& ys) {
    const std::size_t n = xs.size();
    std::vector<Fraction> acc(n, Fraction(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fraction> basis{Fraction(1)};
        Fraction denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= xs[i] - xs[j];
            std::vector<Fraction> next(basis.size() + 1, Fraction(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t] -= basis[t] * xs[j];
                next[t + 1] += basis[t];
            }
            basis = std::move(next);
        }
        Fraction w = ys[i] / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * w;
    }
    return acc;
}

inline Fraction poly_eval(const std::vector<Fraction>& coeffs, const Fraction& x) {
    Fraction v(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
    return v;
}

}  // namespace interp_detail

/* Interpolates the census count g(1/q) = |{N : pair = (T,T')}| as a
 * polynomial in x = 1/q of degree <= free_dim, from free_dim + 1 primes, and
 * validates on at least two held-out primes. On success the forward
 * probability polynomial is p(q) = q^free_dim g(1/q). Validation failure
 * produces a structured report; the result is never extrapolated silently.
 */
inline std::map<TableauPair, InterpolationResult> interpolate_forward_all(
    const IntMat& m, const std::vector<int>& primes, int workers = 0, double cap_bits = 24.0) {
    for (int p : primes)
        if (!is_prime(p)) throw std::invalid_argument("interpolate_forward: non-prime in list");
    {
        std::vector<int> s(primes);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("interpolate_forward: primes must be distinct");
    }
    const long long f = nm_dimension(m);
    if (static_cast<long long>(primes.size()) < f + 3)
        throw std::invalid_argument("interpolate_forward: need at least free_dim + 3 primes");

    std::vector<ProbTable> tables;
    for (int p : primes) tables.push_back(forward_table(m, p, workers, cap_bits));

    std::map<TableauPair, std::vector<long long>> counts;  // per pair, per prime
    for (std::size_t t = 0; t < tables.size(); ++t)
        for (const auto& [key, cnt] : tables[t].counts) {
            auto& v = counts[key];
            v.resize(tables.size(), 0);
            v[t] = cnt;
        }
    for (auto& [key, v] : counts) v.resize(tables.size(), 0);

    const int nfit = static_cast<int>(f) + 1;
    std::map<TableauPair, InterpolationResult> out;
    for (const auto& [key, v] : counts) {
        InterpolationResult r;
        r.free_dim = f;
        r.fit_primes.assign(primes.begin(), primes.begin() + nfit);
        r.holdout_primes.assign(primes.begin() + nfit, primes.end());
        std::vector<Fraction> xs, ys;
        for (int t = 0; t < nfit; ++t) {
            xs.emplace_back(primes[t]);
            ys.emplace_back(v[t]);
        }
        std::vector<Fraction> g = interp_detail::lagrange(xs, ys);  // in x = 1/q
        r.success = true;
        for (std::size_t t = nfit; t < primes.size(); ++t) {
            Fraction predicted = interp_detail::poly_eval(g, Fraction(primes[t]));
            if (predicted != Fraction(v[t])) {
                r.success = false;
                r.failure_report += "holdout prime " + std::to_string(primes[t]) + ": census " +
                                    std::to_string(v[t]) + ", interpolant predicts " +
                                    predicted.str() + ". ";
            }
        }
        // p(q) = q^f g(1/q): coefficient of q^{f-i} is g_i
        r.coeffs.assign(f + 1, Fraction(0));
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) r.coeffs[f - i] = g[i];
        while (!r.coeffs.empty() && r.coeffs.back() == 0) r.coeffs.pop_back();
        r.integer_coeffs = true;
        for (const auto& c : r.coeffs)
            if (boost::multiprecision::denominator(c) != 1) r.integer_coeffs = false;
        if (r.success && r.integer_coeffs) {
            std::vector<BigInt> ic;
            for (const auto& c : r.coeffs) ic.push_back(boost::multiprecision::numerator(c));
            r.poly = QPoly(std::move(ic));
        }
        out[key] = std::move(r);
    }
    return out;
}

inline InterpolationResult interpolate_forward(const IntMat& m, const SSYTableau& t,
                                               const SSYTableau& u, const std::vector<int>& primes,
                                               int workers = 0, double cap_bits = 24.0) {
    auto all = interpolate_forward_all(m, primes, workers, cap_bits);
    auto it = all.find({t, u});
    if (it != all.end()) return it->second;
    // pair never seen: the zero polynomial, trivially validated
    InterpolationResult r;
    r.success = true;
    r.free_dim = nm_dimension(m);
    r.integer_coeffs = true;
    return r;
}

/* q -> 0 limit: the constant terms of the interpolated forward polynomials
 * must form exactly the indicator of the classical Burge image of M.
 */
inline bool burge_limit_check(const IntMat& m, const std::vector<int>& primes, int workers = 0,
                              double cap_bits = 24.0) {
    auto all = interpolate_forward_all(m, primes, workers, cap_bits);
    BurgePair bp = burge_forward(m);
    TableauPair burge_key{bp.P, bp.Q};
    bool saw_burge = false;
    for (const auto& [key, r] : all) {
        if (!r.success) return false;
        Fraction c0 = r.coeffs.empty() ? Fraction(0) : r.coeffs[0];
        if (key == burge_key) {
            saw_burge = true;
            if (c0 != 1) return false;
        } else if (c0 != 0) {
            return false;
        }
    }
    return saw_burge;
}

// p_M(T,T') = p_{M^t}(T',T), checked at one prime as exact table equality
inline bool transpose_symmetry_check(const IntMat& m, int p, int workers = 0,
                                     double cap_bits = 24.0) {
    ProbTable a = forward_table(m, p, workers, cap_bits);
    ProbTable b = forward_table(m.transpose(), p, workers, cap_bits);
    if (a.total != b.total || a.counts.size() != b.counts.size()) return false;
    for (const auto& [key, cnt] : a.counts)
        if (b.count_of({key.second, key.first}) != cnt) return false;
    return true;
}

}  // namespace qburge
