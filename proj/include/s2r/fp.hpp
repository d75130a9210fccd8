#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace s2r {

/// Scalars of a prime field F_p, stored as residues in [0, p).
using Coef = std::uint8_t;

/// Dense coefficient vector over F_p.
using Vec = std::vector<Coef>;

inline Coef fp_add(Coef a, Coef b, int p) { return static_cast<Coef>((a + b) % p); }
inline Coef fp_sub(Coef a, Coef b, int p) { return static_cast<Coef>((a + p - b) % p); }
inline Coef fp_mul(Coef a, Coef b, int p) { return static_cast<Coef>((a * b) % p); }
inline Coef fp_neg(Coef a, int p) { return static_cast<Coef>((p - a) % p); }

/// Image of (-1)^e in F_p.
inline Coef fp_sign(int e, int p) {
    return (e % 2 == 0) ? Coef{1} : static_cast<Coef>(p - 1);
}

inline Coef fp_inv(Coef a, int p) {
    for (int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return static_cast<Coef>(x);
    throw std::domain_error("fp_inv: not invertible");
}

inline bool vec_is_zero(const Vec& v) {
    for (Coef c : v)
        if (c != 0) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b, int p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b, int p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_sub(a[i], b[i], p);
    return r;
}

inline Vec vec_scale(Coef c, const Vec& a, int p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(c, a[i], p);
    return r;
}

inline Vec vec_neg(const Vec& a, int p) { return vec_scale(fp_neg(1, p), a, p); }

/// Row-major dense matrix over F_p.  Small sizes only; everything here is
/// plain Gaussian elimination.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec data;  // rows * cols

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    Coef& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    Coef at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

inline Mat mat_mul(const Mat& a, const Mat& b, int p) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            Coef aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = fp_add(r.at(i, j), fp_mul(aik, b.at(k, j), p), p);
        }
    return r;
}

inline Vec mat_apply(const Mat& a, const Vec& v, int p) {
    if (a.cols != static_cast<int>(v.size())) throw std::invalid_argument("mat_apply: shape mismatch");
    Vec r(a.rows, 0);
    for (int i = 0; i < a.rows; ++i) {
        int acc = 0;
        for (int j = 0; j < a.cols; ++j) acc += a.at(i, j) * v[j];
        r[i] = static_cast<Coef>(acc % p);
    }
    return r;
}

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
inline std::vector<int> rref(Mat& m, int p) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
        Coef inv = fp_inv(m.at(row, col), p);
        for (int c = 0; c < m.cols; ++c) m.at(row, c) = fp_mul(inv, m.at(row, c), p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            Coef f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = fp_sub(m.at(r, c), fp_mul(f, m.at(row, c), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// F_p-subspace of a fixed ambient space, kept as an rref basis.
class Subspace {
public:
    Subspace(int ambient_dim, int p) : ambient_(ambient_dim), p_(p) {}

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Adds a vector; returns true if the dimension grew.
    bool add(const Vec& v) {
        Vec w = reduce(v);
        if (vec_is_zero(w)) return false;
        // normalize leading coefficient and re-reduce existing rows
        int lead = leading(w);
        w = vec_scale(fp_inv(w[lead], p_), w, p_);
        for (Vec& b : basis_) {
            Coef f = b[lead];
            if (f != 0) b = vec_sub(b, vec_scale(f, w, p_), p_);
        }
        basis_.push_back(w);
        sort_basis();
        return true;
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains_all(const Subspace& other) const {
        for (const Vec& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    /// Remainder of v after reduction against the basis.
    Vec reduce(Vec v) const {
        for (const Vec& b : basis_) {
            int lead = leading(b);
            Coef f = v[lead];
            if (f != 0) v = vec_sub(v, vec_scale(f, b, p_), p_);
        }
        return v;
    }

    /// Coordinates of v in the stored basis; throws if v is outside.
    Vec coords(const Vec& v) const {
        Vec c(basis_.size(), 0);
        Vec w = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            int lead = leading(basis_[i]);
            c[i] = w[lead];
            if (c[i] != 0) w = vec_sub(w, vec_scale(c[i], basis_[i], p_), p_);
        }
        if (!vec_is_zero(w)) throw std::domain_error("Subspace::coords: vector outside subspace");
        return c;
    }

    /// All p^dim elements, in deterministic order.
    std::vector<Vec> elements() const {
        std::vector<Vec> out;
        out.push_back(Vec(ambient_, 0));
        for (const Vec& b : basis_) {
            std::vector<Vec> next;
            for (const Vec& e : out)
                for (int c = 0; c < p_; ++c)
                    next.push_back(vec_add(e, vec_scale(static_cast<Coef>(c), b, p_), p_));
            out = std::move(next);
        }
        return out;
    }

private:
    static int leading(const Vec& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
        return -1;
    }

    void sort_basis() {
        std::sort(basis_.begin(), basis_.end(), [](const Vec& a, const Vec& b) {
            return leading(a) < leading(b);
        });
    }

    int ambient_;
    int p_;
    std::vector<Vec> basis_;
};

/// Solves A x = b; nullopt if inconsistent.  A is small and dense.
inline std::optional<Vec> solve(const Mat& a, const Vec& b, int p) {
    Mat aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    std::vector<int> pivots = rref(aug, p);
    Vec x(a.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols) return std::nullopt;  // row (0 ... 0 | 1)
        x[pivots[r]] = aug.at(static_cast<int>(r), a.cols);
    }
    return x;
}

/// Basis of the null space of m (column vectors x with m x = 0).
inline std::vector<Vec> kernel_basis(Mat m, int p) {
    std::vector<int> pivots = rref(m, p);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec x(m.cols, 0);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = fp_neg(m.at(static_cast<int>(r), free), p);
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace s2r
