#pragma once

#include "qburge/intmat.hpp"
#include "qburge/tableau.hpp"

namespace qburge {

/* The classical Burge correspondence (column RSK): column insertion, the
 * bijection M -> (P(M), Q(M)), and its inverse by reverse bumping.
 */

struct InsertResult {
    SSYTableau tableau;
    int row = 0;  // 1-indexed location of the new box
    int col = 0;
};

namespace detail {

inline std::vector<std::vector<int>> to_columns(const SSYTableau& t) {
    std::vector<std::vector<int>> cols;
    for (const auto& row : t.rows())
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= cols.size()) cols.emplace_back();
            cols[c].push_back(row[c]);
        }
    return cols;
}

inline SSYTableau from_columns(const std::vector<std::vector<int>>& cols) {
    std::vector<std::vector<int>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) {
            if (r >= rows.size()) rows.emplace_back();
            rows[r].push_back(cols[c][r]);
        }
    return SSYTableau(std::move(rows));
}

// bump value v through columns starting at column c (0-indexed); returns the
// (row, col) of the final new box, both 0-indexed
inline std::pair<int, int> column_bump(std::vector<std::vector<int>>& cols, int v, int c) {
    for (;; ++c) {
        if (c == static_cast<int>(cols.size())) cols.emplace_back();
        auto& col = cols[c];
        // smallest entry >= v; columns strictly increase, so binary search
        auto it = std::lower_bound(col.begin(), col.end(), v);
        if (it == col.end()) {
            col.push_back(v);
            return {static_cast<int>(col.size()) - 1, c};
        }
        std::swap(v, *it);
    }
}

}  // namespace detail

// column insertion of letter v into T
inline InsertResult column_insert(const SSYTableau& t, int v) {
    if (v <= 0) throw std::invalid_argument("column_insert: letters are positive");
    auto cols = detail::to_columns(t);
    auto [r, c] = detail::column_bump(cols, v, 0);
    return {detail::from_columns(cols), r + 1, c + 1};
}

struct BurgePair {
    SSYTableau P, Q;
};

/* Burge forward map: read M column by column left to right, within each
 * column bottom to top; column-insert the row index into P, record the
 * column index in Q.
 */
inline BurgePair burge_forward(const IntMat& m) {
    std::vector<std::vector<int>> pcols, qrows;
    for (int j = 1; j <= m.l; ++j)
        for (int i = m.k; i >= 1; --i)
            for (long long rep = 0; rep < m.at(i - 1, j - 1); ++rep) {
                auto [r, c] = detail::column_bump(pcols, i, 0);
                if (r >= static_cast<int>(qrows.size())) qrows.emplace_back();
                if (c != static_cast<int>(qrows[r].size()))
                    throw std::logic_error("burge_forward: non-corner growth");
                qrows[r].push_back(j);
            }
    return {detail::from_columns(pcols), SSYTableau(std::move(qrows))};
}

/* Inverse of the Burge correspondence. Boxes recorded with the same letter j
 * form a horizontal strip added left to right, so removal proceeds from the
 * largest letter down, rightmost box first, reverse-bumping through the
 * columns: the returning value replaces the largest entry <= it.
 */
inline IntMat burge_inverse(const BurgePair& pq) {
    if (pq.P.shape() != pq.Q.shape()) throw std::invalid_argument("burge_inverse: shape mismatch");
    const int k = std::max(pq.P.max_letter(), 1);
    const int l = std::max(pq.Q.max_letter(), 1);
    auto pcols = detail::to_columns(pq.P);
    auto qcols = detail::to_columns(pq.Q);
    IntMat m(k, l);
    for (int j = l; j >= 1; --j) {
        for (;;) {
            // rightmost box of Q containing j
            int c = -1, r = -1;
            for (int cc = static_cast<int>(qcols.size()) - 1; cc >= 0 && c < 0; --cc)
                for (int rr = static_cast<int>(qcols[cc].size()) - 1; rr >= 0; --rr)
                    if (qcols[cc][rr] == j) {
                        c = cc;
                        r = rr;
                        break;
                    }
            if (c < 0) break;
            if (r != static_cast<int>(qcols[c].size()) - 1)
                throw std::invalid_argument("burge_inverse: recording tableau is not a Burge image");
            qcols[c].pop_back();
            if (qcols[c].empty()) qcols.pop_back();
            if (r != static_cast<int>(pcols[c].size()) - 1)
                throw std::invalid_argument("burge_inverse: shape mismatch during removal");
            int v = pcols[c].back();
            pcols[c].pop_back();
            if (pcols[c].empty()) pcols.pop_back();
            for (int cc = c - 1; cc >= 0; --cc) {
                auto& col = pcols[cc];
                // largest entry <= v
                auto it = std::upper_bound(col.begin(), col.end(), v);
                if (it == col.begin())
                    throw std::invalid_argument("burge_inverse: reverse bump failed");
                --it;
                std::swap(v, *it);
            }
            if (v > k) throw std::invalid_argument("burge_inverse: letter out of range");
            ++m.at(v - 1, j - 1);
        }
    }
    if (!pcols.empty()) throw std::invalid_argument("burge_inverse: leftover boxes");
    return m;
}

}  // namespace qburge
