#pragma once

#include <cstring>
#include <map>
#include <thread>
#include <unordered_map>

#include "qburge/flags.hpp"

namespace qburge {

/* Exhaustive enumeration of the zero-pattern space n_M over GF(p), with the
 * pair of Jordan-form tableaux (JF(N;E_id), JF(N;E_wM)) computed for every
 * point. This is the hot loop of the whole artifact, so the kernel is built
 * around three facts:
 *
 *  - the modulus is a small compile-time constant, so every reduction is a
 *    multiply-shift rather than a division (one instantiation per prime,
 *    with a bit-packed specialization for GF(2));
 *  - the free cells are enumerated in odometer order, sorted by the first
 *    flag stage whose submatrix contains them; a bump at cell t only
 *    invalidates chain stages from a precomputed suffix minimum onward, so
 *    the innermost loop recomputes one or two Jordan forms, not the chain;
 *  - rank profiles of powers are computed by the shrinking row-image chain
 *    R_{j+1} = row basis of R_j * A, never by forming matrix powers.
 *
 * The range [0, p^free_dim) is split into contiguous chunks, one per worker;
 * workers fill local histograms which are merged by key order, so the result
 * is identical for every worker count.
 */

namespace census_detail {

constexpr int kMaxN = 8;
constexpr int kMaxStages = 20;

// tableau-pair key: rows of T each terminated by 0, then 0xFF, then rows of
// T'. Letters and row lengths are tiny so 48 bytes always suffice for n <= 8.
struct TabKey {
    std::array<std::uint8_t, 48> b{};
    int len = 0;

    bool operator==(const TabKey& o) const {
        return len == o.len &&
               std::memcmp(b.data(), o.b.data(), static_cast<std::size_t>(len)) == 0;
    }
    bool operator<(const TabKey& o) const {
        int c = std::memcmp(b.data(), o.b.data(), static_cast<std::size_t>(std::min(len, o.len)));
        return c != 0 ? c < 0 : len < o.len;
    }
};

struct TabKeyHash {
    std::size_t operator()(const TabKey& k) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int i = 0; i < k.len; ++i) h = (h ^ k.b[i]) * 1099511628211ULL;
        return static_cast<std::size_t>(h);
    }
};

inline std::pair<SSYTableau, SSYTableau> decode_key(const TabKey& key) {
    std::vector<std::vector<int>> rows[2];
    int which = 0;
    std::vector<int> cur;
    for (int i = 0; i < key.len; ++i) {
        std::uint8_t v = key.b[i];
        if (v == 0xFF) {
            which = 1;
        } else if (v == 0) {
            rows[which].push_back(cur);
            cur.clear();
        } else {
            cur.push_back(v);
        }
    }
    return {SSYTableau(std::move(rows[0])), SSYTableau(std::move(rows[1]))};
}

// stage index sets of the coordinate flag E_w of type gamma: the i-th set is
// {w(1)-1, ..., w(d_i)-1}, sorted
inline std::vector<std::vector<int>> coordinate_stage_sets(const Perm& w,
                                                           const Composition& gamma) {
    std::vector<std::vector<int>> sets;
    auto d = gamma.partial_sums();
    for (int i = 1; i <= gamma.length(); ++i) {
        std::vector<int> s(w.begin(), w.begin() + d[i]);
        for (int& x : s) --x;
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    return sets;
}

struct PairCensusSpec {
    int n = 0, p = 2;
    std::vector<std::pair<int, int>> positions;      // 0-indexed free cells
    std::vector<std::vector<int>> stagesA, stagesB;  // coordinate prefixes
};

template <int P>
struct ModInverses {
    std::uint8_t inv[P];
    constexpr ModInverses() : inv{} {
        for (int a = 1; a < P; ++a)
            for (int b = 1; b < P; ++b)
                if (a * b % P == 1) inv[a] = static_cast<std::uint8_t>(b);
    }
};

// Jordan partition of the principal submatrix nmat[set x set] via the row
// image chain; returns the number of parts written
template <int P>
int jf_profile(const std::uint8_t* nmat, const int* set, int d, std::uint8_t* parts) {
    static constexpr ModInverses<P> tbl{};
    std::uint8_t a[kMaxN][kMaxN];
    std::uint8_t rows[kMaxN][kMaxN], next[kMaxN][kMaxN];
    for (int r = 0; r < d; ++r) {
        const std::uint8_t* src = nmat + set[r] * kMaxN;
        for (int c = 0; c < d; ++c) a[r][c] = src[set[c]];
    }
    std::memcpy(rows, a, sizeof(a));
    int nrows = d, prev = d, np = 0;
    for (int step = 1; step <= d && prev > 0; ++step) {
        // echelonize rows in place
        int rk = 0;
        for (int c = 0; c < d && rk < nrows; ++c) {
            int piv = -1;
            for (int r = rk; r < nrows; ++r)
                if (rows[r][c]) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            if (piv != rk)
                for (int j = c; j < d; ++j) std::swap(rows[piv][j], rows[rk][j]);
            int pinv = tbl.inv[rows[rk][c]];
            for (int r = rk + 1; r < nrows; ++r) {
                int f = rows[r][c] * pinv % P;
                if (!f) continue;
                rows[r][c] = 0;
                for (int j = c + 1; j < d; ++j)
                    rows[r][j] = static_cast<std::uint8_t>((rows[r][j] + (P - f) * rows[rk][j]) % P);
            }
            ++rk;
        }
        parts[np++] = static_cast<std::uint8_t>(prev - rk);
        prev = rk;
        if (rk == 0) break;
        // next spanning set: (echelonized rows) * A
        for (int r = 0; r < rk; ++r)
            for (int c = 0; c < d; ++c) {
                int acc = 0;
                for (int k = 0; k < d; ++k) acc += rows[r][k] * a[k][c];
                next[r][c] = static_cast<std::uint8_t>(acc % P);
            }
        std::memcpy(rows, next, sizeof(next));
        nrows = rk;
    }
    if (prev != 0) throw std::logic_error("pair census: point is not nilpotent");
    return np;
}

// bit-packed fast path for GF(2): a row is one byte of column bits
template <>
inline int jf_profile<2>(const std::uint8_t* nmat, const int* set, int d, std::uint8_t* parts) {
    std::uint8_t a[kMaxN], rows[kMaxN], next[kMaxN];
    for (int r = 0; r < d; ++r) {
        std::uint8_t row = 0;
        const std::uint8_t* src = nmat + set[r] * kMaxN;
        for (int c = 0; c < d; ++c) row |= static_cast<std::uint8_t>((src[set[c]] & 1) << c);
        a[r] = row;
    }
    std::memcpy(rows, a, sizeof(a));
    int nrows = d, prev = d, np = 0;
    for (int step = 1; step <= d && prev > 0; ++step) {
        int rk = 0;
        for (int c = 0; c < d && rk < nrows; ++c) {
            int piv = -1;
            for (int r = rk; r < nrows; ++r)
                if (rows[r] >> c & 1) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            std::swap(rows[piv], rows[rk]);
            for (int r = rk + 1; r < nrows; ++r)
                if (rows[r] >> c & 1) rows[r] ^= rows[rk];
            ++rk;
        }
        parts[np++] = static_cast<std::uint8_t>(prev - rk);
        prev = rk;
        if (rk == 0) break;
        for (int r = 0; r < rk; ++r) {
            std::uint8_t bits = rows[r], acc = 0;
            while (bits) {
                acc ^= a[std::countr_zero(static_cast<unsigned>(bits))];
                bits &= static_cast<std::uint8_t>(bits - 1);
            }
            next[r] = acc;
        }
        std::memcpy(rows, next, sizeof(next));
        nrows = rk;
    }
    if (prev != 0) throw std::logic_error("pair census: point is not nilpotent");
    return np;
}

/* Stateful enumerator over one chunk of [0, p^f). Keeps, per flag, the chain
 * of Jordan partitions and the letter grid of the growing tableau; a bump of
 * odometer digit t only recomputes stages from stage_floor[t] onward.
 */
template <int P>
class CensusRunner {
public:
    explicit CensusRunner(const PairCensusSpec& spec) : spec_(spec) {
        f_ = static_cast<int>(spec.positions.size());
        ka_ = static_cast<int>(spec.stagesA.size());
        kb_ = static_cast<int>(spec.stagesB.size());
        if (spec.n > kMaxN || ka_ > kMaxStages || kb_ > kMaxStages || f_ > 63)
            throw std::invalid_argument("pair census: dimensions exceed kernel limits");
        same_flags_ = spec.stagesA == spec.stagesB;
        for (int i = 0; i < ka_; ++i) {
            lenA_[i] = static_cast<int>(spec.stagesA[i].size());
            for (int t = 0; t < lenA_[i]; ++t) setA_[i][t] = spec.stagesA[i][t];
        }
        for (int i = 0; i < kb_; ++i) {
            lenB_[i] = static_cast<int>(spec.stagesB[i].size());
            for (int t = 0; t < lenB_[i]; ++t) setB_[i][t] = spec.stagesB[i][t];
        }
        // first stage whose index set contains a given cell, per flag
        auto first_stage = [&](const std::vector<std::vector<int>>& stages, int r, int c) {
            for (std::size_t i = 0; i < stages.size(); ++i) {
                const auto& s = stages[i];
                if (std::binary_search(s.begin(), s.end(), r) &&
                    std::binary_search(s.begin(), s.end(), c))
                    return static_cast<int>(i) + 1;
            }
            return static_cast<int>(stages.size()) + 1;  // never used by this flag
        };
        order_.resize(f_);
        for (int t = 0; t < f_; ++t) order_[t] = t;
        std::vector<int> sa(f_), sb(f_);
        for (int t = 0; t < f_; ++t) {
            sa[t] = first_stage(spec.stagesA, spec.positions[t].first, spec.positions[t].second);
            sb[t] = first_stage(spec.stagesB, spec.positions[t].first, spec.positions[t].second);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int x, int y) { return std::max(sa[x], sb[x]) < std::max(sa[y], sb[y]); });
        floorA_.assign(f_ + 1, ka_ + 1);
        floorB_.assign(f_ + 1, kb_ + 1);
        for (int t = f_ - 1; t >= 0; --t) {
            floorA_[t] = std::min(floorA_[t + 1], sa[order_[t]]);
            floorB_[t] = std::min(floorB_[t + 1], sb[order_[t]]);
        }
        std::memset(nmat_, 0, sizeof(nmat_));
        digits_.assign(f_, 0);
    }

    // position the odometer at an absolute index and rebuild both chains
    void seed(long long index) {
        for (int t = f_ - 1; t >= 0; --t) {
            digits_[t] = static_cast<int>(index % P);
            index /= P;
            cell(t) = static_cast<std::uint8_t>(digits_[t]);
        }
        recompute_a(1);
        if (!same_flags_) recompute_b(1);
    }

    // advance to the next point; returns false when the chunk's digits wrap
    bool step() {
        int t = f_ - 1;
        while (t >= 0 && digits_[t] == P - 1) {
            digits_[t] = 0;
            cell(t) = 0;
            --t;
        }
        if (t < 0) return false;
        ++digits_[t];
        cell(t) = static_cast<std::uint8_t>(digits_[t]);
        recompute_a(floorA_[t]);
        if (!same_flags_) recompute_b(floorB_[t]);
        return true;
    }

    TabKey key() const {
        TabKey key;
        int pos = 0;
        emit(partsA_, valsA_, ka_, key, pos);
        if (same_flags_) {
            int seg = pos;
            key.b[pos++] = 0xFF;
            std::memcpy(key.b.data() + pos, key.b.data(), static_cast<std::size_t>(seg));
            pos += seg;
        } else {
            key.b[pos++] = 0xFF;
            emit(partsB_, valsB_, kb_, key, pos);
        }
        key.len = pos;
        return key;
    }

private:
    std::uint8_t& cell(int t) {
        auto [r, c] = spec_.positions[order_[t]];
        return nmat_[r * kMaxN + c];
    }

    void recompute_a(int from) {
        for (int i = from; i <= ka_; ++i) {
            std::uint8_t cur[kMaxN + 1] = {};
            int np = jf_profile<P>(nmat_, setA_[i - 1], lenA_[i - 1], cur);
            const std::uint8_t* prev = partsA_[i - 1];
            for (int r = 0; r < np; ++r)
                for (int t = prev[r]; t < cur[r]; ++t)
                    valsA_[r][t] = static_cast<std::uint8_t>(i);
            std::memcpy(partsA_[i], cur, sizeof(cur));
        }
    }
    void recompute_b(int from) {
        for (int i = from; i <= kb_; ++i) {
            std::uint8_t cur[kMaxN + 1] = {};
            int np = jf_profile<P>(nmat_, setB_[i - 1], lenB_[i - 1], cur);
            const std::uint8_t* prev = partsB_[i - 1];
            for (int r = 0; r < np; ++r)
                for (int t = prev[r]; t < cur[r]; ++t)
                    valsB_[r][t] = static_cast<std::uint8_t>(i);
            std::memcpy(partsB_[i], cur, sizeof(cur));
        }
    }

    static void emit(const std::uint8_t parts[][kMaxN + 1], const std::uint8_t vals[][kMaxN],
                     int stages, TabKey& key, int& pos) {
        const std::uint8_t* shape = parts[stages];
        for (int r = 0; r < kMaxN && shape[r] > 0; ++r) {
            for (int t = 0; t < shape[r]; ++t) key.b[pos++] = vals[r][t];
            key.b[pos++] = 0;
        }
    }

    PairCensusSpec spec_;
    int f_ = 0, ka_ = 0, kb_ = 0;
    bool same_flags_ = false;
    int setA_[kMaxStages][kMaxN] = {}, setB_[kMaxStages][kMaxN] = {};
    int lenA_[kMaxStages] = {}, lenB_[kMaxStages] = {};
    std::vector<int> order_;            // odometer index -> position index
    std::vector<int> floorA_, floorB_;  // suffix minima of first stages
    std::vector<int> digits_;
    std::uint8_t nmat_[kMaxN * kMaxN] = {};
    std::uint8_t partsA_[kMaxStages + 1][kMaxN + 1] = {};
    std::uint8_t partsB_[kMaxStages + 1][kMaxN + 1] = {};
    std::uint8_t valsA_[kMaxN][kMaxN] = {}, valsB_[kMaxN][kMaxN] = {};
};

using Histogram = std::unordered_map<TabKey, long long, TabKeyHash>;

template <int P>
void census_range(const PairCensusSpec& spec, long long begin, long long end, Histogram& hist) {
    CensusRunner<P> runner(spec);
    runner.seed(begin);
    TabKey last;
    long long* lastcnt = nullptr;  // consecutive points usually share a key
    for (long long idx = begin; idx < end; ++idx) {
        TabKey k = runner.key();
        if (lastcnt && k == last) {
            ++*lastcnt;
        } else {
            lastcnt = &hist[k];
            ++*lastcnt;
            last = k;
        }
        if (idx + 1 < end && !runner.step()) break;
    }
}

using RangeFn = void (*)(const PairCensusSpec&, long long, long long, Histogram&);

inline RangeFn range_fn_for_prime(int p) {
    switch (p) {
        case 2: return census_range<2>;
        case 3: return census_range<3>;
        case 5: return census_range<5>;
        case 7: return census_range<7>;
        case 11: return census_range<11>;
        case 13: return census_range<13>;
        case 17: return census_range<17>;
        case 19: return census_range<19>;
        case 23: return census_range<23>;
        case 29: return census_range<29>;
        case 31: return census_range<31>;
        default: throw std::invalid_argument("pair census: primes above 31 are not supported");
    }
}

}  // namespace census_detail

struct PairCensus {
    IntMat m;
    int p = 2;
    long long free_dim = 0;
    long long total = 1;  // p^free_dim
    std::map<std::pair<SSYTableau, SSYTableau>, long long> counts;
};

inline int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/* Census of N in n_M over GF(p), keyed by (JF(N;E_id), JF(N;E_wM)). The cap
 * bounds free_dim * log2(p); exceeding it is an error, not silence.
 */
inline PairCensus pair_census(const IntMat& m, int p, int workers = 0, double cap_bits = 24.0) {
    if (!is_prime(p)) throw std::invalid_argument("pair_census: p must be prime");
    if (workers <= 0) workers = default_workers();
    census_detail::PairCensusSpec spec;
    spec.n = static_cast<int>(m.total());
    spec.p = p;
    ZeroPattern z = nm_pattern(m);
    for (auto [r, c] : z.free_positions) spec.positions.emplace_back(r - 1, c - 1);
    const int f = static_cast<int>(spec.positions.size());
    if (f * std::log2(static_cast<double>(p)) > cap_bits)
        throw std::invalid_argument("pair_census: free dimension " + std::to_string(f) +
                                    " over GF(" + std::to_string(p) + ") exceeds the " +
                                    std::to_string(static_cast<int>(cap_bits)) + "-bit cap");
    Perm what = canonical_perm(m);
    spec.stagesA = census_detail::coordinate_stage_sets(perm_identity(spec.n), m.row_sums());
    spec.stagesB = census_detail::coordinate_stage_sets(what, m.col_sums());

    census_detail::RangeFn range_fn = census_detail::range_fn_for_prime(p);
    long long total = 1;
    for (int i = 0; i < f; ++i) total *= p;

    int nworkers = static_cast<int>(std::min<long long>(workers, std::max<long long>(total, 1)));
    std::vector<census_detail::Histogram> hists(nworkers);
    if (nworkers <= 1) {
        range_fn(spec, 0, total, hists[0]);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (total + nworkers - 1) / nworkers;
        for (int wkr = 0; wkr < nworkers; ++wkr) {
            long long b = wkr * chunk, e = std::min(total, b + chunk);
            pool.emplace_back([&, b, e, wkr] { range_fn(spec, b, e, hists[wkr]); });
        }
        for (auto& th : pool) th.join();
    }

    std::map<census_detail::TabKey, long long> merged;
    for (const auto& h : hists)
        for (const auto& [k, v] : h) merged[k] += v;

    PairCensus out;
    out.m = m;
    out.p = p;
    out.free_dim = f;
    out.total = total;
    for (const auto& [k, v] : merged) out.counts.emplace(census_detail::decode_key(k), v);
    return out;
}

}  // namespace qburge
