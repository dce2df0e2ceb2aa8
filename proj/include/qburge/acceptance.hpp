#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "qburge/rpp.hpp"

namespace qburge {

/* The verification suite behind `qburge verify-all` and the acceptance test
 * binary. Every check is exact: a criterion fails on any mismatch, and the
 * detail string names the first offending instance.
 *
 * `level` caps the sweep size n of each criterion (the full suite uses the
 * built-in bounds); fixtures from worked examples always run.
 */

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceConfig {
    int level = 6;          // cap on the sweep sizes
    unsigned rng_seed = 0;  // seed for the sampled checks
    int workers = 0;        // 0 = hardware concurrency
    double cap_bits = 28.0; // enumeration cap for the census-heavy checks
};

namespace acceptance_detail {

class Checker {
public:
    explicit Checker(std::string name, int id) : result_() {
        result_.id = id;
        result_.name = std::move(name);
    }

    template <typename A, typename B>
    void equal(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) fail(what);
    }
    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
    void fail(const std::string& what) {
        result_.pass = false;
        if (result_.detail.empty()) result_.detail = what;
    }

    CriterionResult finish(double seconds) {
        result_.seconds = seconds;
        return result_;
    }

private:
    CriterionResult result_;
};

inline CriterionResult run_criterion(int id, const std::string& name,
                                     const std::function<void(Checker&)>& body) {
    Checker c(name, id);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fail(std::string("exception: ") + e.what());
    }
    return c.finish(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

inline QPoly ints(std::vector<long long> v) {
    std::vector<BigInt> c(v.begin(), v.end());
    return QPoly(std::move(c));
}

}  // namespace acceptance_detail

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg = {}) {
    using acceptance_detail::Checker;
    using acceptance_detail::ints;
    using acceptance_detail::run_criterion;
    std::vector<CriterionResult> out;
    auto cap = [&](int pinned) { return std::min(pinned, cfg.level); };

    out.push_back(run_criterion(1, "Cauchy identity, structural equality", [&](Checker& c) {
        for (int n = 1; n <= cap(5); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n))
                    if (!cauchy_check(alpha, beta))
                        c.fail("alpha=" + alpha.to_string() + " beta=" + beta.to_string());
    }));

    out.push_back(run_criterion(2, "q-Whittaker coefficient fixtures", [&](Checker& c) {
        c.equal(whittaker_coeff(Partition{4, 2}, Composition{2, 1, 3}), ints({2, 3, 2, 1}),
                "coefficient of shape (4,2), content (2,1,3)");
        c.equal(whittaker_coeff(Partition{3, 1}, Composition{2, 2}), ints({1, 1}),
                "coefficient of shape (3,1), content (2,2)");
    }));

    out.push_back(run_criterion(3, "flag-count formulation", [&](Checker& c) {
        c.equal(
            enumerate_compatible_flags(jordan_representative(2, Partition{4, 2}), Composition{2, 1, 3})
                .size(),
            std::size_t{33}, "the 33 strictly compatible flags at p=2");
        for (int p : {2, 3})
            for (int n = 1; n <= cap(4); ++n)
                for (const Partition& lam : partitions_of(n)) {
                    GFMatrix nil = jordan_representative(p, lam);
                    for (const Composition& alpha : positive_compositions_of(n)) {
                        Fraction lhs =
                            QRat::qpow(static_cast<int>(n_stat(lam) - n_stat(alpha)))
                                .eval(Fraction(1, p)) *
                            Fraction(enumerate_compatible_flags(nil, alpha).size());
                        if (lhs != whittaker_coeff(lam, alpha).eval(Fraction(1, p)))
                            c.fail("lambda=" + lam.to_string() + " alpha=" + alpha.to_string() +
                                   " p=" + std::to_string(p));
                    }
                }
    }));

    out.push_back(run_criterion(4, "dual formulation over n_alpha", [&](Checker& c) {
        // worked example: q^{-8} (1-q)^2 (1+q)(1+q+q^2)(2+q+q^2)
        QRat expr = QRat::qpow(-8) * QRat::one_minus_q_pow(2) *
                    QRat(qnumber(2) * qnumber(3) * ints({2, 1, 1}));
        for (int p : {2, 3})
            c.equal(Fraction(nilpotent_in_nalpha_census(Composition{2, 1, 3}, Partition{4, 2}, p)),
                    expr.eval(Fraction(1, p)), "worked example at p=" + std::to_string(p));
        for (int p : {2, 3})
            for (int n = 1; n <= cap(4); ++n)
                for (const Partition& lam : partitions_of(n)) {
                    QPoly dens = QPoly::one();
                    for (int i = 1; i <= lam.num_parts(); ++i)
                        dens *= qfactorial(lam.part(i) - lam.part(i + 1));
                    for (const Composition& alpha : positive_compositions_of(n)) {
                        QPoly nums = QPoly::one();
                        for (int part : alpha.parts()) nums *= qfactorial(part);
                        QRat pref = QRat::qpow(static_cast<int>(binom2(n) - n_stat(lam))) *
                                    QRat::one_minus_q_pow(-n + lam.part(1)) * QRat(dens, nums);
                        if (pref.eval(Fraction(1, p)) *
                                nilpotent_in_nalpha_census(alpha, lam, p) !=
                            whittaker_coeff(lam, alpha).eval(Fraction(1, p)))
                            c.fail("lambda=" + lam.to_string() + " alpha=" + alpha.to_string() +
                                   " p=" + std::to_string(p));
                    }
                }
    }));

    out.push_back(run_criterion(5, "double coset sizes", [&](Checker& c) {
        c.equal(sym_double_coset_size(IntMat({{1, 1}, {2, 1}})), BigInt(72),
                "symmetric group double coset of size 72");
        // |Y_M| against the 168 elements of GL_3(F_2)
        for (int n = 1; n <= cap(3); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n)) {
                    std::map<IntMat, long long> census;
                    long long total = 1;
                    for (int i = 0; i < n * n; ++i) total *= 2;
                    for (long long bits = 0; bits < total; ++bits) {
                        GFMatrix g(2, n, n);
                        for (int i = 0; i < n * n; ++i) g.at(i / n, i % n) = (bits >> i) & 1;
                        if (is_invertible(g)) ++census[coset_label(g, alpha, beta)];
                    }
                    for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                        auto it = census.find(m);
                        long long cnt = it == census.end() ? 0 : it->second;
                        if (Fraction(cnt) != double_coset_size_formula(m).eval(Fraction(1, 2)))
                            c.fail("|Y_M| for M=" + m.to_string());
                    }
                }
        // |X_M| against the flag census over F_2, n <= 4
        for (int n = 1; n <= cap(4); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n)) {
                    Flag e_id = coordinate_flag(alpha, perm_identity(n), 2);
                    std::map<IntMat, long long> census;
                    for (const Flag& f : enumerate_flags(beta, 2))
                        ++census[relative_position(e_id, f)];
                    for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                        auto it = census.find(m);
                        long long cnt = it == census.end() ? 0 : it->second;
                        if (Fraction(cnt) != orbit_size_formula(m).eval(Fraction(1, 2)))
                            c.fail("|X_M| for M=" + m.to_string());
                    }
                }
    }));

    out.push_back(run_criterion(6, "q-Burge tables: (B1)-(B3)", [&](Checker& c) {
        for (int p : {2, 3, 5})
            for (int n = 1; n <= cap(5); ++n)
                for (const Composition& alpha : positive_compositions_of(n))
                    for (const Composition& beta : positive_compositions_of(n)) {
                        CheckReport r =
                            reversibility_check(alpha, beta, p, cfg.workers, cfg.cap_bits);
                        if (!r.ok)
                            c.fail("p=" + std::to_string(p) + ": " + r.detail);
                    }
        // the worked chain at each prime
        for (int p : {2, 3, 5}) {
            const Fraction q0(1, p);
            ProbTable t = forward_table(IntMat({{1, 1}, {2, 1}}), p, cfg.workers);
            SSYTableau tt{{1, 1, 2, 2}, {2}}, tp{{1, 1, 1, 2}, {2}};
            c.equal(t.prob({tt, tp}), 1 - q0, "forward probability 1-q");
            auto b = backward_from_forward(t);
            c.equal(b.at({tt, tp}), QRat(QPoly::one(), qnumber(3)).eval(q0),
                    "backward probability 1/(1+q+q^2)");
        }
    }));

    out.push_back(run_criterion(7, "interpolation fixtures", [&](Checker& c) {
        SSYTableau tt{{1, 1, 2, 2}, {2}}, tp{{1, 1, 1, 2}, {2}};
        auto r1 = interpolate_forward(IntMat({{1, 1}, {2, 1}}), tt, tp, {2, 3, 5, 7}, cfg.workers);
        c.require(r1.success && r1.integer_coeffs && r1.poly == ints({1, -1}),
                  "recovering 1-q");
        auto r2 = interpolate_forward(IntMat({{1, 1}, {2, 1}}), SSYTableau{{1, 1, 2, 2, 2}},
                                      SSYTableau{{1, 1, 1, 2, 2}}, {2, 3, 5, 7}, cfg.workers);
        c.require(r2.success && r2.poly == QPoly::monomial(1, 1), "recovering q");
        auto diag = interpolate_forward_all(IntMat({{1, 0}, {0, 1}}), {2, 3, 5, 7}, cfg.workers);
        TableauPair col{SSYTableau{{1}, {2}}, SSYTableau{{1}, {2}}};
        TableauPair row{SSYTableau{{1, 2}}, SSYTableau{{1, 2}}};
        c.require(diag.at(col).success && diag.at(col).poly == ints({1, -1}),
                  "diagonal 2x2: 1-q on the column pair");
        c.require(diag.at(row).success && diag.at(row).poly == QPoly::monomial(1, 1),
                  "diagonal 2x2: q on the row pair");
        auto anti = interpolate_forward_all(IntMat({{0, 1}, {1, 0}}), {2, 3, 5}, cfg.workers);
        c.require(anti.at(row).success && anti.at(row).poly == QPoly::one(),
                  "antidiagonal 2x2: constant 1");
        IntMat m4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        SSYTableau sq{{1, 2}, {3, 4}};
        auto r4 = interpolate_forward(m4, sq, sq, {2, 3, 5, 7, 11, 13, 17}, cfg.workers);
        c.require(r4.success && r4.integer_coeffs &&
                      r4.poly == ints({1, -1}) * ints({1, -1}) * ints({1, 1}),
                  "the 4x4 pattern: (1-q)^2 (1+q)");
    }));

    out.push_back(run_criterion(8, "Burge limit of the interpolants", [&](Checker& c) {
        const std::vector<int> prime_pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
        for (int n = 1; n <= cap(4); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n))
                    for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                        long long f = nm_dimension(m);
                        std::vector<int> primes(prime_pool.begin(),
                                                prime_pool.begin() + (f + 3));
                        if (!burge_limit_check(m, primes, cfg.workers, cfg.cap_bits))
                            c.fail("M=" + m.to_string());
                    }
    }));

    out.push_back(run_criterion(9, "classical Burge correspondence", [&](Checker& c) {
        auto pq = burge_forward(IntMat({{1, 0, 1}, {2, 1, 1}, {0, 1, 2}}));
        c.equal(pq.P, SSYTableau{{1, 1, 2, 2, 2}, {2, 3, 3}, {3}}, "P of the worked example");
        c.equal(pq.Q, SSYTableau{{1, 1, 1, 3, 3}, {2, 2, 3}, {3}}, "Q of the worked example");
        for (int n = 1; n <= cap(6); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n)) {
                    std::set<std::pair<SSYTableau, SSYTableau>> images;
                    for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                        BurgePair fw = burge_forward(m);
                        if (burge_inverse(fw) != m)
                            c.fail("round trip for M=" + m.to_string());
                        if (!images.emplace(fw.P, fw.Q).second)
                            c.fail("collision at M=" + m.to_string());
                        BurgePair tw = burge_forward(m.transpose());
                        if (tw.P != fw.Q || tw.Q != fw.P)
                            c.fail("transpose symmetry for M=" + m.to_string());
                    }
                }
    }));

    out.push_back(run_criterion(10, "diagonal closed form", [&](Checker& c) {
        for (int p : {2, 3})
            for (int n = 1; n <= cap(5); ++n)
                for (const Composition& alpha : positive_compositions_of(n)) {
                    IntMat m = IntMat::diagonal(alpha);
                    ProbTable t = forward_table(m, p, cfg.workers, cfg.cap_bits);
                    for (const auto& [key, cnt] : t.counts) {
                        if (key.first != key.second) {
                            c.fail("off-diagonal pair for alpha=" + alpha.to_string());
                            continue;
                        }
                        Partition lam = key.first.shape();
                        QPoly num = wtq(key.first), den = QPoly::one();
                        for (int part : alpha.parts()) num *= qfactorial(part);
                        for (int i = 1; i <= lam.num_parts(); ++i)
                            den *= qfactorial(lam.part(i) - lam.part(i + 1));
                        QRat closed =
                            QRat::qpow(static_cast<int>(n_stat(lam) - n_stat(alpha))) *
                            QRat::one_minus_q_pow(n - lam.part(1)) * QRat(num, den);
                        if (t.prob(key) != closed.eval(Fraction(1, p)))
                            c.fail("closed form for alpha=" + alpha.to_string() + " T=" +
                                   key.first.to_string() + " p=" + std::to_string(p));
                    }
                }
    }));

    out.push_back(run_criterion(11, "growth non-locality", [&](Checker& c) {
        auto conditioned = [&](const IntMat& m) {
            std::map<Partition, long long> outcome;
            for (const auto& [g, cnt] : growth_distribution(m, 2, cfg.cap_bits)) {
                if (g.at(3, 3) != Partition{2}) continue;
                if (g.at(3, 4) != Partition{2, 1} || g.at(4, 3) != Partition{2, 1}) continue;
                outcome[g.at(4, 4)] += cnt;
            }
            return outcome;
        };
        auto o1 = conditioned(IntMat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
        c.require(o1.size() == 1 && o1.begin()->first == Partition{2, 2},
                  "3412: conditional outcome (2,2)");
        auto o2 = conditioned(IntMat({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}));
        c.require(o2.size() == 1 && o2.begin()->first == Partition{3, 1},
                  "1432: conditional outcome (3,1)");
    }));

    out.push_back(run_criterion(12, "preprojective masses", [&](Checker& c) {
        // worked example: q^13 (1-q)^{-4} (1+q)^{-1}
        {
            IntMat m({{1, 1}, {2, 1}});
            RPP r = rpp_from_pair(SSYTableau{{1, 1, 2, 2}, {2}}, SSYTableau{{1, 1, 1, 2}, {2}}, 2, 2);
            QRat expr = QRat::qpow(13) * QRat::one_minus_q_pow(-4) * QRat(QPoly::one(), ints({1, 1}));
            for (int p : {2, 3})
                if (preprojective_mass(m, r, p, cfg.workers) != expr.eval(Fraction(1, p)))
                    c.fail("worked 2x2 example at p=" + std::to_string(p));
        }
        {
            IntMat m4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
            SSYTableau sq{{1, 2}, {3, 4}};
            RPP r = rpp_from_pair(sq, sq, 4, 4);
            QRat expr = QRat::qpow(4) * QRat::one_minus_q_pow(-2) * QRat(ints({1, 1}));
            if (preprojective_mass(m4, r, 2, cfg.workers) != expr.eval(Fraction(1, 2)))
                c.fail("worked 4x4 example");
            // and its displayed per-class decomposition at q = 1/2
            GFMatrix n1(2, {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
            Fraction q6 = Fraction(1, 64) * 4;  // q^6 (1-q)^{-2}
            if (Fraction(1, aut_size_direct(m4, n1, 2)) != q6)
                c.fail("per-class |Aut| in the 4x4 example");
        }
        // total mass identity and direct orbit check
        for (int p : {2, 3})
            for (int n = 1; n <= cap(4); ++n)
                for (const Composition& alpha : positive_compositions_of(n))
                    for (const Composition& beta : positive_compositions_of(n))
                        for (const IntMat& m : enumerate_matrices(alpha, beta)) {
                            ProbTable table = forward_table(m, p, cfg.workers, cfg.cap_bits);
                            Fraction total = 0;
                            for (const RPP& r : enumerate_rpps(alpha, beta))
                                total += preprojective_mass_from_table(table, r);
                            QRat expect =
                                QRat::qpow(static_cast<int>(n + n_stat(alpha) + n_stat(beta))) *
                                matrix_weight(m);
                            if (total != expect.eval(Fraction(1, p)))
                                c.fail("mass total for M=" + m.to_string() + " p=" +
                                       std::to_string(p));
                        }
        for (int n = 1; n <= cap(3); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n))
                    for (const IntMat& m : enumerate_matrices(alpha, beta))
                        for (const RPP& r : enumerate_rpps(alpha, beta))
                            if (!preprojective_direct_check(m, r, 2, cfg.workers))
                                c.fail("direct check for M=" + m.to_string());
    }));

    out.push_back(run_criterion(13, "quiver variety counts", [&](Checker& c) {
        QRat expr = QRat::qpow(-10) * QRat::one_minus_q_pow(1) *
                    QRat(qnumber(3) * qnumber(4) * qnumber(5));
        c.equal(Fraction(quiver_variety_count(Composition{2, 3}, SSYTableau{{1, 1, 2, 2}, {2}}, 2)),
                expr.eval(Fraction(1, 2)), "worked expression at q=1/2");
        for (int p : {2, 3})
            for (int n = 1; n <= cap(3); ++n)
                for (const Composition& alpha : positive_compositions_of(n))
                    for (const Partition& lam : partitions_of(n))
                        for (const SSYTableau& t : ssyt_enumerate(lam, alpha))
                            if (quiver_variety_count(alpha, t, p) !=
                                quiver_variety_census(alpha, t, p))
                                c.fail("alpha=" + alpha.to_string() + " T=" + t.to_string() +
                                       " p=" + std::to_string(p));
    }));

    out.push_back(run_criterion(14, "reverse plane partition bijection", [&](Checker& c) {
        for (int n = 0; n <= cap(5); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n)) {
                    int kk = std::max(alpha.length(), 1), ll = std::max(beta.length(), 1);
                    for (const auto& [t, u] : tableau_pairs(alpha, beta)) {
                        RPP r = rpp_from_pair(t, u, kk, ll);
                        if (!is_valid_rpp(r)) c.fail("invalid image for T=" + t.to_string());
                        auto [t2, u2] = pair_from_rpp(r);
                        if (t2 != t || u2 != u) c.fail("round trip for T=" + t.to_string());
                    }
                }
        // socle data of 10,000 sampled (M, N) instances at p = 2
        std::mt19937 rng(cfg.rng_seed);
        std::vector<IntMat> pool;
        for (int n = 1; n <= cap(5); ++n)
            for (const Composition& alpha : positive_compositions_of(n))
                for (const Composition& beta : positive_compositions_of(n))
                    for (const IntMat& m : enumerate_matrices(alpha, beta)) pool.push_back(m);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            const IntMat& m = pool[pick(rng)];
            ZeroPattern z = nm_pattern(m);
            GFMatrix nil(2, static_cast<int>(m.total()), static_cast<int>(m.total()));
            for (auto [r, cc] : z.free_positions)
                nil.at(r - 1, cc - 1) = static_cast<int>(rng() & 1);
            if (!is_valid_rpp(socle_rpp_from_census(m, nil, 2))) {
                c.fail("sampled instance " + std::to_string(trial) + " for M=" + m.to_string());
                break;
            }
        }
    }));

    return out;
}

inline std::string format_result_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " (" << r.seconds << "s)";
    if (!r.pass) os << " -- " << r.detail;
    return os.str();
}

}  // namespace qburge
