#pragma once

#include "qburge/gf.hpp"

namespace qburge {

/* Subspaces of GF(p)^n in canonical reduced column echelon form: pivot rows
 * strictly increase across columns, each pivot is 1 and is the first nonzero
 * entry of its column, and a pivot row is zero in every other column. The
 * form is unique, so subspace equality is structural equality of bases.
 */
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int p, int n) {
        Subspace s;
        s.basis_ = GFMatrix(p, n, 0);
        return s;
    }

    static Subspace full(int p, int n) { return span(GFMatrix::identity(p, n)); }

    // span of the columns of a matrix
    static Subspace span(const GFMatrix& columns) {
        Subspace s;
        s.basis_ = column_echelon(columns);
        return s;
    }

    int ambient_dim() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    int p() const { return basis_.p(); }
    const GFMatrix& basis() const { return basis_; }

    std::vector<int> pivot_rows() const {
        std::vector<int> piv;
        for (int c = 0; c < basis_.cols(); ++c)
            for (int r = 0; r < basis_.rows(); ++r)
                if (basis_.at(r, c)) {
                    piv.push_back(r);
                    break;
                }
        return piv;
    }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return basis_ != o.basis_; }
    bool operator<(const Subspace& o) const {
        if (dim() != o.dim()) return dim() < o.dim();
        return basis_ < o.basis_;
    }

    // coordinates of v in this basis, if v lies in the subspace. In RCEF the
    // candidate coordinates are just the pivot-row entries of v.
    std::optional<std::vector<int>> coordinates(const std::vector<int>& v) const {
        const int p = basis_.p();
        auto piv = pivot_rows();
        std::vector<int> x(dim());
        for (int j = 0; j < dim(); ++j) x[j] = v[piv[j]];
        for (int r = 0; r < ambient_dim(); ++r) {
            long long acc = 0;
            for (int j = 0; j < dim(); ++j) acc += 1LL * basis_.at(r, j) * x[j];
            if (acc % p != v[r] % p) return std::nullopt;
        }
        return x;
    }

    bool contains(const std::vector<int>& v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const {
        if (other.dim() > dim()) return false;
        for (int c = 0; c < other.dim(); ++c) {
            std::vector<int> v(ambient_dim());
            for (int r = 0; r < ambient_dim(); ++r) v[r] = other.basis_.at(r, c);
            if (!contains(v)) return false;
        }
        return true;
    }

    // is this subspace spanned by unit vectors? if so return their indices
    std::optional<std::vector<int>> coordinate_support() const {
        std::vector<int> idx;
        for (int c = 0; c < dim(); ++c) {
            int nz = -1;
            for (int r = 0; r < ambient_dim(); ++r)
                if (basis_.at(r, c)) {
                    if (nz >= 0) return std::nullopt;
                    nz = r;
                }
            idx.push_back(nz);
        }
        return idx;
    }

private:
    static GFMatrix column_echelon(GFMatrix m) {
        // column reduction = row reduction of the transpose
        const int p = m.p();
        GFMatrix t = m.transpose();  // rows are generators
        int rk = 0;
        std::vector<int> pivcol;
        for (int c = 0; c < t.cols() && rk < t.rows(); ++c) {
            int piv = -1;
            for (int r = rk; r < t.rows(); ++r)
                if (t.at(r, c)) {
                    piv = r;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < t.cols(); ++j) std::swap(t.at(piv, j), t.at(rk, j));
            int f = mod_inverse(t.at(rk, c), p);
            for (int j = 0; j < t.cols(); ++j)
                t.at(rk, j) = static_cast<int>(1LL * t.at(rk, j) * f % p);
            for (int r = 0; r < t.rows(); ++r) {
                if (r == rk || !t.at(r, c)) continue;
                int g = t.at(r, c);
                for (int j = 0; j < t.cols(); ++j)
                    t.at(r, j) =
                        static_cast<int>(((t.at(r, j) - 1LL * g * t.at(rk, j)) % p + p) % p);
            }
            pivcol.push_back(c);
            ++rk;
        }
        GFMatrix b(p, m.rows(), rk);
        for (int i = 0; i < rk; ++i)
            for (int r = 0; r < m.rows(); ++r) b.at(r, i) = t.at(i, r);
        return b;
    }

    GFMatrix basis_;
};

inline Subspace sum(const Subspace& a, const Subspace& b) {
    GFMatrix m(a.p(), a.ambient_dim(), a.dim() + b.dim());
    for (int r = 0; r < a.ambient_dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) m.at(r, c) = a.basis().at(r, c);
        for (int c = 0; c < b.dim(); ++c) m.at(r, a.dim() + c) = b.basis().at(r, c);
    }
    return Subspace::span(m);
}

inline int intersection_dim(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - sum(a, b).dim();
}

// N * S as a subspace
inline Subspace image(const GFMatrix& n, const Subspace& s) {
    return Subspace::span(n * s.basis());
}

/* Enumerate, in a deterministic order, the canonical echelon bases of all
 * d-dimensional subspaces of GF(p)^m: pivot row sets in lexicographic order,
 * free entries in odometer order.
 */
inline void for_each_subspace_basis(int p, int m, int d,
                                    const std::function<void(const GFMatrix&)>& fn) {
    if (d < 0 || d > m) return;
    std::vector<int> piv(d);
    for (int i = 0; i < d; ++i) piv[i] = i;
    for (;;) {
        // free positions: (r, j) with r > piv[j] and r not a pivot row
        std::vector<bool> ispiv(m, false);
        for (int r : piv) ispiv[r] = true;
        std::vector<std::pair<int, int>> freepos;
        for (int j = 0; j < d; ++j)
            for (int r = piv[j] + 1; r < m; ++r)
                if (!ispiv[r]) freepos.emplace_back(r, j);
        GFMatrix b(p, m, d);
        for (int j = 0; j < d; ++j) b.at(piv[j], j) = 1;
        std::vector<int> vals(freepos.size(), 0);
        for (;;) {
            for (std::size_t t = 0; t < freepos.size(); ++t)
                b.at(freepos[t].first, freepos[t].second) = vals[t];
            fn(b);
            int t = static_cast<int>(freepos.size()) - 1;
            while (t >= 0 && vals[t] == p - 1) vals[t--] = 0;
            if (t < 0) break;
            ++vals[t];
        }
        // next pivot set in lexicographic order
        int i = d - 1;
        while (i >= 0 && piv[i] == m - d + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
    }
}

// all subspaces W with inner <= W <= outer and dim(W) = d, via the quotient
inline std::vector<Subspace> subspaces_between(const Subspace& inner, const Subspace& outer,
                                               int d) {
    const int p = outer.p();
    if (!outer.contains(inner)) throw std::invalid_argument("subspaces_between: inner not inside");
    if (d < inner.dim() || d > outer.dim()) return {};
    // express inner in outer-coordinates
    const int dv = outer.dim(), du = inner.dim();
    GFMatrix x(p, dv, du);
    for (int c = 0; c < du; ++c) {
        std::vector<int> v(outer.ambient_dim());
        for (int r = 0; r < outer.ambient_dim(); ++r) v[r] = inner.basis().at(r, c);
        auto coords = outer.coordinates(v);
        for (int r = 0; r < dv; ++r) x.at(r, c) = (*coords)[r];
    }
    Subspace inner_local = Subspace::span(x);
    auto pivots = inner_local.pivot_rows();
    std::vector<bool> ispiv(dv, false);
    for (int r : pivots) ispiv[r] = true;
    std::vector<int> qcoords;  // complement coordinates, spanning the quotient
    for (int r = 0; r < dv; ++r)
        if (!ispiv[r]) qcoords.push_back(r);

    std::vector<Subspace> out;
    for_each_subspace_basis(p, static_cast<int>(qcoords.size()), d - du, [&](const GFMatrix& qb) {
        GFMatrix cols(p, outer.ambient_dim(), du + qb.cols());
        for (int r = 0; r < outer.ambient_dim(); ++r)
            for (int c = 0; c < du; ++c) cols.at(r, c) = inner.basis().at(r, c);
        // lift quotient basis through the outer basis
        for (int c = 0; c < qb.cols(); ++c)
            for (int t = 0; t < qb.rows(); ++t) {
                int val = qb.at(t, c);
                if (!val) continue;
                int r_local = qcoords[t];
                for (int r = 0; r < outer.ambient_dim(); ++r)
                    cols.at(r, du + c) = static_cast<int>(
                        (cols.at(r, du + c) + 1LL * val * outer.basis().at(r, r_local)) % p);
            }
        out.push_back(Subspace::span(cols));
    });
    return out;
}

}  // namespace qburge
