#pragma once

#include <map>
#include <optional>

#include "qburge/partition.hpp"

namespace qburge {

/* Semistandard Young tableaux.
 *
 * A tableau is stored by rows. The chain view T^(0) <= T^(1) <= ... records,
 * for each letter i, the partition formed by the boxes with entries <= i;
 * consecutive chain steps differ by horizontal strips, which is exactly
 * semistandardness.
 */

class SSYTableau {
public:
    SSYTableau() = default;

    explicit SSYTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        validate();
    }

    SSYTableau(std::initializer_list<std::vector<int>> rows)
        : SSYTableau(std::vector<std::vector<int>>(rows)) {}

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int size() const {
        int s = 0;
        for (const auto& r : rows_) s += static_cast<int>(r.size());
        return s;
    }

    Partition shape() const {
        std::vector<int> parts;
        for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
        return Partition(std::move(parts));
    }

    int max_letter() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int v : r) m = std::max(m, v);
        return m;
    }

    // content with explicit length k (>= max letter); letters with no boxes get 0
    Composition content(int k) const {
        std::vector<int> c(k, 0);
        for (const auto& r : rows_)
            for (int v : r) {
                if (v > k) throw std::invalid_argument("SSYTableau::content: letter exceeds k");
                ++c[v - 1];
            }
        return Composition(std::move(c));
    }
    Composition content() const { return content(max_letter()); }

    // row-reading word: rows concatenated top to bottom
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    bool operator==(const SSYTableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const SSYTableau& o) const { return rows_ != o.rows_; }
    bool operator<(const SSYTableau& o) const { return rows_ < o.rows_; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(rows_[i][j]);
            }
            s += "]";
        }
        return s + "]";
    }

private:
    void validate() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].empty()) throw std::invalid_argument("SSYTableau: empty middle row");
            if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size())
                throw std::invalid_argument("SSYTableau: shape not a partition");
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[i][j] <= 0) throw std::invalid_argument("SSYTableau: entries positive");
                if (j + 1 < rows_[i].size() && rows_[i][j] > rows_[i][j + 1])
                    throw std::invalid_argument("SSYTableau: rows must weakly increase");
                if (i + 1 < rows_.size() && j < rows_[i + 1].size() &&
                    rows_[i][j] >= rows_[i + 1][j])
                    throw std::invalid_argument("SSYTableau: columns must strictly increase");
            }
        }
    }

    std::vector<std::vector<int>> rows_;
};

// chain of k+1 partitions, T^(0) = empty through T^(k)
inline std::vector<Partition> tableau_chain(const SSYTableau& T, int k) {
    if (k < T.max_letter()) throw std::invalid_argument("tableau_chain: k below max letter");
    std::vector<Partition> chain;
    for (int i = 0; i <= k; ++i) {
        std::vector<int> parts;
        for (const auto& r : T.rows()) {
            int cnt = 0;
            for (int v : r)
                if (v <= i) ++cnt;
            if (cnt) parts.push_back(cnt);
        }
        chain.emplace_back(std::move(parts));
    }
    return chain;
}

inline std::vector<Partition> tableau_chain(const SSYTableau& T) {
    return tableau_chain(T, T.max_letter());
}

// inverse of tableau_chain; throws unless consecutive steps are horizontal strips
inline SSYTableau tableau_from_chain(const std::vector<Partition>& chain) {
    if (chain.empty() || !chain.front().empty())
        throw std::invalid_argument("tableau_from_chain: chain must start at the empty partition");
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const Partition& prev = chain[i - 1];
        const Partition& cur = chain[i];
        if (!is_horizontal_strip(cur, prev))
            throw std::invalid_argument("tableau_from_chain: step is not a horizontal strip");
        for (int r = 1; r <= cur.num_parts(); ++r) {
            if (r > static_cast<int>(rows.size())) rows.emplace_back();
            for (int c = prev.part(r); c < cur.part(r); ++c)
                rows[r - 1].push_back(static_cast<int>(i));
        }
    }
    return SSYTableau(std::move(rows));
}

// all semistandard tableaux of shape lambda and content alpha, sorted by
// row-reading word for reproducible output
inline std::vector<SSYTableau> ssyt_enumerate(const Partition& lambda, const Composition& alpha) {
    if (lambda.size() != alpha.size())
        throw std::invalid_argument("ssyt_enumerate: |lambda| != |alpha|");
    std::vector<SSYTableau> out;
    const int k = alpha.length();
    std::vector<Partition> chain{Partition{}};
    auto rec = [&](auto&& self, int letter) -> void {
        if (letter > k) {
            if (chain.back() == lambda) out.push_back(tableau_from_chain(chain));
            return;
        }
        // extend chain.back() by a horizontal strip of size alpha[letter], inside lambda
        const Partition mu = chain.back();
        std::vector<int> parts(mu.parts());
        parts.resize(std::max<std::size_t>(parts.size() + 1, lambda.num_parts()), 0);
        auto grow = [&](auto&& g, int row, int remaining) -> void {
            if (remaining < 0) return;
            if (remaining == 0 || row > static_cast<int>(parts.size())) {
                if (remaining == 0) {
                    std::vector<int> p2(parts);
                    Partition next(std::move(p2));
                    if (is_horizontal_strip(next, mu)) {
                        chain.push_back(next);
                        self(self, letter + 1);
                        chain.pop_back();
                    }
                }
                return;
            }
            int lo = mu.part(row);
            int hi = std::min(lambda.part(row), row == 1 ? lambda.part(1) : mu.part(row - 1));
            int orig = parts[row - 1];
            for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
                parts[row - 1] = v;
                g(g, row + 1, remaining - (v - lo));
            }
            parts[row - 1] = orig;
        };
        grow(grow, 1, alpha.part(letter));
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const SSYTableau& a, const SSYTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

// pairs (T, T') of equal shape with contents (alpha, beta), over all shapes
inline std::vector<std::pair<SSYTableau, SSYTableau>> tableau_pairs(const Composition& alpha,
                                                                    const Composition& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("tableau_pairs: |alpha| != |beta|");
    std::vector<std::pair<SSYTableau, SSYTableau>> out;
    for (const Partition& lambda : partitions_of(alpha.size())) {
        auto ts = ssyt_enumerate(lambda, alpha);
        if (ts.empty()) continue;
        auto us = ssyt_enumerate(lambda, beta);
        for (const auto& t : ts)
            for (const auto& u : us) out.emplace_back(t, u);
    }
    return out;
}

}  // namespace qburge
