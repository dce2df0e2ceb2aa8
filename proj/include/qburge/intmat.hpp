#pragma once

#include "qburge/partition.hpp"

namespace qburge {

// Small nonnegative-integer matrix: the combinatorial label of a double
// coset / relative position, and the input of the Burge correspondence.
struct IntMat {
    int k = 0, l = 0;
    std::vector<long long> e;

    IntMat() = default;
    IntMat(int k_, int l_) : k(k_), l(l_), e(static_cast<std::size_t>(k_) * l_, 0) {}

    explicit IntMat(const std::vector<std::vector<long long>>& rows)
        : k(static_cast<int>(rows.size())), l(rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
        e.resize(static_cast<std::size_t>(k) * l);
        for (int i = 0; i < k; ++i) {
            if (static_cast<int>(rows[i].size()) != l)
                throw std::invalid_argument("IntMat: ragged rows");
            for (int j = 0; j < l; ++j) {
                if (rows[i][j] < 0) throw std::invalid_argument("IntMat: negative entry");
                at(i, j) = rows[i][j];
            }
        }
    }

    long long& at(int i, int j) { return e[static_cast<std::size_t>(i) * l + j]; }
    long long at(int i, int j) const { return e[static_cast<std::size_t>(i) * l + j]; }

    long long total() const {
        long long s = 0;
        for (long long x : e) s += x;
        return s;
    }

    Composition row_sums() const {
        std::vector<int> a(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) a[i] += static_cast<int>(at(i, j));
        return Composition(std::move(a));
    }

    Composition col_sums() const {
        std::vector<int> b(l, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) b[j] += static_cast<int>(at(i, j));
        return Composition(std::move(b));
    }

    IntMat transpose() const {
        IntMat t(l, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < l; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    static IntMat diagonal(const Composition& alpha) {
        IntMat m(alpha.length(), alpha.length());
        for (int i = 0; i < alpha.length(); ++i) m.at(i, i) = alpha.part(i + 1);
        return m;
    }

    bool operator==(const IntMat& o) const { return k == o.k && l == o.l && e == o.e; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }
    bool operator<(const IntMat& o) const {
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        return e < o.e;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += "[";
            for (int j = 0; j < l; ++j) {
                if (j) s += ",";
                s += std::to_string(at(i, j));
            }
            s += "]";
        }
        return s + "]";
    }
};

// all of Mat(alpha, beta), by row-major lattice search with remaining-sum
// pruning on the column budgets
inline std::vector<IntMat> enumerate_matrices(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("enumerate_matrices: |alpha| != |beta|");
    const int k = alpha.length(), l = beta.length();
    std::vector<IntMat> out;
    IntMat m(k, l);
    std::vector<long long> colrem(l);
    for (int j = 0; j < l; ++j) colrem[j] = beta.part(j + 1);
    auto rec = [&](auto&& self, int i, int j, long long rowrem) -> void {
        if (i == k) {
            out.push_back(m);
            return;
        }
        if (j == l) {
            if (rowrem == 0) self(self, i + 1, 0, i + 1 < k ? alpha.part(i + 2) : 0);
            return;
        }
        // remaining row budget must fit in the remaining column budgets
        long long later = 0;
        for (int t = j; t < l; ++t) later += colrem[t];
        if (later < rowrem) return;
        long long hi = std::min(rowrem, colrem[j]);
        for (long long v = 0; v <= hi; ++v) {
            m.at(i, j) = v;
            colrem[j] -= v;
            self(self, i, j + 1, rowrem - v);
            colrem[j] += v;
        }
        m.at(i, j) = 0;
    };
    rec(rec, 0, 0, k > 0 ? alpha.part(1) : 0);
    return out;
}

}  // namespace qburge
