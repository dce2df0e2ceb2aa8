#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qburge {

/* Integer partitions and weak compositions.
 *
 * A Partition stores weakly decreasing positive parts; trailing zeros are
 * stripped at construction, so two representations of the same partition
 * compare equal structurally. A Composition keeps its length: positions are
 * alphabet letters, and a zero part in the middle (or at the end) is
 * meaningful.
 */

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must weakly decrease");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // part(i) is 1-indexed and 0 beyond the last stored part
    int part(int i) const {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.num_parts(); ++i)
            if (part(i) < mu.part(i)) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> c;
    for (int i = 1; i <= lambda.part(1); ++i) {
        int count = 0;
        for (int j = 1; j <= lambda.num_parts(); ++j)
            if (lambda.part(j) >= i) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

// lambda/mu has at most one box per column: mu <= lambda and lambda[i+1] <= mu[i]
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    for (int i = 1; i <= lambda.num_parts(); ++i)
        if (lambda.part(i + 1) > mu.part(i)) return false;
    return true;
}

class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("Composition: parts must be nonnegative");
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    explicit Composition(const Partition& lambda) : parts_(lambda.parts()) {}

    int part(int i) const {
        return (i >= 1 && i <= static_cast<int>(parts_.size())) ? parts_[i - 1] : 0;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // the i-th block of alpha: the interval of integers it occupies in [n]
    int block_start(int i) const {  // 1-indexed, inclusive
        int s = 1;
        for (int j = 1; j < i; ++j) s += part(j);
        return s;
    }
    int block_end(int i) const { return block_start(i) + part(i) - 1; }

    // index of the block containing position r in [n], 1-indexed
    int block_of(int r) const {
        int acc = 0;
        for (int i = 1; i <= length(); ++i) {
            acc += part(i);
            if (r <= acc) return i;
        }
        throw std::out_of_range("Composition::block_of: position beyond |alpha|");
    }

    std::vector<int> partial_sums() const {  // k+1 entries, starting at 0
        std::vector<int> d{0};
        for (int p : parts_) d.push_back(d.back() + p);
        return d;
    }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

inline long long binom2(long long m) { return m * (m - 1) / 2; }

// n(alpha) = sum_i C(alpha_i, 2)
inline long long n_stat(const Composition& alpha) {
    long long s = 0;
    for (int p : alpha.parts()) s += binom2(p);
    return s;
}
inline long long n_stat(const Partition& lambda) { return n_stat(Composition(lambda)); }

// e2(alpha) = sum_{i<j} alpha_i alpha_j
inline long long e2_stat(const Composition& alpha) {
    long long s = 0;
    const auto& p = alpha.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) s += static_cast<long long>(p[i]) * p[j];
    return s;
}
inline long long e2_stat(const Partition& lambda) { return e2_stat(Composition(lambda)); }

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// compositions of n into exactly k parts, zeros allowed
inline std::vector<Composition> compositions_of(int n, int k) {
    std::vector<Composition> out;
    std::vector<int> cur(k, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == k) {
            if (rem == 0) out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, n);
    return out;
}

// compositions of n into positive parts (any length); the natural finite
// set of contents to sweep once trailing zeros are modded out
inline std::vector<Composition> positive_compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace qburge
