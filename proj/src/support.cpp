#include "s2r/support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "s2r/spectrum.hpp"

namespace s2r {

// --- modules -----------------------------------------------------------------

int GradedModule::total_dim() const {
    int n = 0;
    for (int d : dims) n += d;
    return n;
}

Mat GradedModule::value_action(int val_deg, const Vec& v, int d) const {
    const GradedRing& ring = *R;
    int target = ring.group().add(val_deg, d);
    Mat acc(dims[target], dims[d]);
    for (int i = 0; i < ring.dim(); ++i) {
        if (v[i] == 0) continue;
        if (ring.basis_degrees()[i] != val_deg)
            throw std::invalid_argument("value_action: value not homogeneous of the given degree");
        const Mat& a = action[i][d];
        for (int r = 0; r < acc.rows; ++r)
            for (int c = 0; c < acc.cols; ++c)
                acc.at(r, c) = fp_add(acc.at(r, c), fp_mul(v[i], a.at(r, c), ring.p()), ring.p());
    }
    return acc;
}

std::vector<std::string> GradedModule::check() const {
    std::vector<std::string> out;
    const GradedRing& ring = *R;
    const GradingGroup& G = ring.group();
    for (int i = 0; i < ring.dim(); ++i)
        for (int d = 0; d < G.size(); ++d) {
            const Mat& a = action[i][d];
            if (a.cols != dims[d] || a.rows != dims[G.add(ring.basis_degrees()[i], d)]) {
                out.push_back("action matrix shape mismatch");
                return out;
            }
        }
    // unit acts as the identity
    for (int d = 0; d < G.size(); ++d) {
        Mat u(dims[d], dims[d]);
        const Vec& one = ring.one();
        for (int i = 0; i < ring.dim(); ++i) {
            if (one[i] == 0) continue;
            const Mat& a = action[i][d];
            for (int r = 0; r < u.rows; ++r)
                for (int c = 0; c < u.cols; ++c)
                    u.at(r, c) = fp_add(u.at(r, c), fp_mul(one[i], a.at(r, c), ring.p()), ring.p());
        }
        for (int r = 0; r < u.rows; ++r)
            for (int c = 0; c < u.cols; ++c)
                if (u.at(r, c) != (r == c ? 1 : 0)) {
                    out.push_back("unit does not act as identity");
                    return out;
                }
    }
    // associativity of the action on basis pairs
    for (int i = 0; i < ring.dim(); ++i)
        for (int j = 0; j < ring.dim(); ++j) {
            int dj = ring.basis_degrees()[j];
            Vec bi = ring.zero(), bj = ring.zero();
            bi[i] = 1;
            bj[j] = 1;
            Vec prod = ring.multiply(bi, bj);
            int dp = G.add(ring.basis_degrees()[i], dj);
            for (int d = 0; d < G.size(); ++d) {
                Mat lhs = mat_mul(action[i][G.add(dj, d)], action[j][d], ring.p());
                Mat rhs = vec_is_zero(prod) ? Mat(dims[G.add(dp, d)], dims[d])
                                            : value_action(dp, prod, d);
                if (!(lhs.data == rhs.data && lhs.rows == rhs.rows)) {
                    out.push_back("action not associative");
                    return out;
                }
            }
        }
    return out;
}

// --- complexes ---------------------------------------------------------------

std::vector<std::string> Complex::check() const {
    std::vector<std::string> out;
    const GradedRing& ring = *R;
    const GradingGroup& G = ring.group();
    if (diff.size() + 1 != terms.size() && !(terms.empty() && diff.empty())) {
        out.push_back("differential count mismatch");
        return out;
    }
    for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
        const auto& d = diff[k];
        if (d.size() != terms[k].size()) {
            out.push_back("differential row count mismatch");
            return out;
        }
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i].size() != terms[k + 1].size()) {
                out.push_back("differential column count mismatch");
                return out;
            }
            for (std::size_t j = 0; j < d[i].size(); ++j) {
                const Vec& e = d[i][j];
                if (vec_is_zero(e)) continue;
                auto dg = ring.degree_of(e);
                if (!dg || *dg != G.sub(terms[k + 1][j], terms[k][i]))
                    out.push_back("differential entry degree mismatch");
            }
        }
    }
    // d^2 = 0, entrywise ring products
    for (std::size_t k = 0; k + 2 < terms.size(); ++k)
        for (std::size_t i = 0; i < terms[k].size(); ++i)
            for (std::size_t j = 0; j < terms[k + 2].size(); ++j) {
                Vec acc = ring.zero();
                for (std::size_t m = 0; m < terms[k + 1].size(); ++m)
                    acc = ring.add(acc, ring.multiply(diff[k][i][m], diff[k + 1][m][j]));
                if (!vec_is_zero(acc)) {
                    out.push_back("d^2 != 0");
                    return out;
                }
            }
    return out;
}

Complex zero_complex(const GradedRing& R) { return {&R, 0, {}, {}}; }

Complex free_twist(const GradedRing& R, int g, int n) {
    return {&R, n, {{g}}, {}};
}

Complex cone_of(const TwoRing& t, const Mor& r) {
    const GradedRing& R = t.ring();
    Complex c{&R, -1, {{r.src}, {r.tgt}}, {{{r.val}}}};
    return c;
}

Complex shift(const Complex& c, int k) {
    Complex out = c;
    out.min_index -= k;
    if (k % 2 != 0) {
        for (auto& d : out.diff)
            for (auto& row : d)
                for (Vec& e : row) e = c.R->negate(e);
    }
    return out;
}

Complex twist(const Complex& c, int g) {
    Complex out = c;
    const GradingGroup& G = c.R->group();
    for (auto& term : out.terms)
        for (int& t : term) t = G.add(t, g);
    return out;
}

Complex direct_sum(const Complex& a, const Complex& b) {
    if (a.R != b.R) throw std::invalid_argument("direct_sum: ring mismatch");
    if (a.terms.empty()) return b;
    if (b.terms.empty()) return a;
    const GradedRing& R = *a.R;
    int lo = std::min(a.min_index, b.min_index);
    int hi = std::max(a.min_index + a.slots(), b.min_index + b.slots());
    Complex out{&R, lo, {}, {}};
    auto term_at = [&](const Complex& c, int n) -> std::vector<int> {
        int k = n - c.min_index;
        if (k < 0 || k >= c.slots()) return {};
        return c.terms[k];
    };
    for (int n = lo; n < hi; ++n) {
        std::vector<int> t = term_at(a, n);
        std::vector<int> tb = term_at(b, n);
        t.insert(t.end(), tb.begin(), tb.end());
        out.terms.push_back(t);
    }
    for (int n = lo; n + 1 < hi; ++n) {
        std::vector<int> ra = term_at(a, n), rb = term_at(b, n);
        std::vector<int> ca = term_at(a, n + 1), cb = term_at(b, n + 1);
        std::vector<std::vector<Vec>> block(ra.size() + rb.size(),
                                            std::vector<Vec>(ca.size() + cb.size(), R.zero()));
        auto copy_block = [&](const Complex& c, int row_off, int col_off, int n0) {
            int k = n0 - c.min_index;
            if (k < 0 || k + 1 >= c.slots()) return;
            const auto& d = c.diff[k];
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = 0; j < d[i].size(); ++j)
                    block[row_off + i][col_off + j] = d[i][j];
        };
        copy_block(a, 0, 0, n);
        copy_block(b, static_cast<int>(ra.size()), static_cast<int>(ca.size()), n);
        out.diff.push_back(std::move(block));
    }
    return out;
}

// --- homology ----------------------------------------------------------------

namespace {

/// F_p data of the complex in one group degree d: spaces and differential
/// matrices, plus bookkeeping to map vectors back and forth.
struct DegreeSlice {
    std::vector<int> dims;        // per slot
    std::vector<Mat> d_mats;      // slot k: F^k_d -> F^{k+1}_d
};

int term_dim(const GradedRing& R, const std::vector<int>& gens, int d) {
    int n = 0;
    for (int g : gens) n += R.component_dim(R.group().add(d, g));
    return n;
}

/// Matrix (over F_p) of right multiplication by entry values between two
/// free terms, in component coordinates stacked per generator.
Mat diff_matrix(const GradedRing& R, const std::vector<int>& from, const std::vector<int>& to,
                const std::vector<std::vector<Vec>>& entries, int d) {
    const GradingGroup& G = R.group();
    int rows = term_dim(R, to, d), cols = term_dim(R, from, d);
    Mat m(rows, cols);
    int col_off = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        int di = G.add(d, from[i]);
        int ni = R.component_dim(di);
        for (int c = 0; c < ni; ++c) {
            Vec e(ni, 0);
            e[c] = 1;
            Vec x = R.component_embed(di, e);
            int row_off = 0;
            for (std::size_t j = 0; j < to.size(); ++j) {
                int dj = G.add(d, to[j]);
                int nj = R.component_dim(dj);
                Vec y = R.multiply(x, entries[i][j]);
                Vec yc = R.component_coords(dj, y);
                for (int r = 0; r < nj; ++r) m.at(row_off + r, col_off + c) = yc[r];
                row_off += nj;
            }
            col_off += 1;
        }
    }
    return m;
}

DegreeSlice slice_of(const Complex& c, int d) {
    DegreeSlice s;
    const GradedRing& R = *c.R;
    for (const auto& t : c.terms) s.dims.push_back(term_dim(R, t, d));
    for (std::size_t k = 0; k + 1 < c.terms.size(); ++k)
        s.d_mats.push_back(diff_matrix(R, c.terms[k], c.terms[k + 1], c.diff[k], d));
    return s;
}

/// Matrix of left multiplication by ring basis element b on a free term,
/// from group degree d to d + |b|.
Mat left_mult_matrix(const GradedRing& R, const std::vector<int>& gens, int b, int d) {
    const GradingGroup& G = R.group();
    int db = R.basis_degrees()[b];
    int rows = term_dim(R, gens, G.add(db, d)), cols = term_dim(R, gens, d);
    Mat m(rows, cols);
    Vec bv = R.zero();
    bv[b] = 1;
    int col_off = 0, row_off = 0;
    for (int g : gens) {
        int dg = G.add(d, g);
        int ng = R.component_dim(dg);
        int dt = G.add(db, dg);
        int nt = R.component_dim(dt);
        for (int c = 0; c < ng; ++c) {
            Vec e(ng, 0);
            e[c] = 1;
            Vec y = R.multiply(bv, R.component_embed(dg, e));
            Vec yc = R.component_coords(dt, y);
            for (int r = 0; r < nt; ++r) m.at(row_off + r, col_off + c) = yc[r];
            ++col_off;
        }
        row_off += nt;
    }
    return m;
}

}  // namespace

GradedModule homology(const Complex& c, int n) {
    const GradedRing& R = *c.R;
    const GradingGroup& G = R.group();
    const int p = R.p();
    GradedModule H;
    H.R = &R;
    H.dims.assign(G.size(), 0);

    int k = n - c.min_index;
    if (k < 0 || k >= c.slots()) {
        H.action.assign(R.dim(), std::vector<Mat>(G.size()));
        for (int i = 0; i < R.dim(); ++i)
            for (int d = 0; d < G.size(); ++d)
                H.action[i][d] = Mat(0, 0);
        return H;
    }

    // per degree: kernel basis extended over the image; store the coset
    // representatives and a solver matrix for projections
    struct DegData {
        std::vector<Vec> im_basis;
        std::vector<Vec> reps;   // homology representatives (in F^k_d coords)
        Mat basis_mat;           // columns: im_basis then reps
    };
    std::vector<DegData> data(G.size());

    for (int d = 0; d < G.size(); ++d) {
        DegreeSlice s = slice_of(c, d);
        int dim_here = s.dims[k];
        // kernel of d^k
        std::vector<Vec> ker;
        if (k + 1 < c.slots()) {
            ker = kernel_basis(s.d_mats[k], p);
        } else {
            for (int i = 0; i < dim_here; ++i) {
                Vec e(dim_here, 0);
                e[i] = 1;
                ker.push_back(e);
            }
        }
        // image of d^{k-1}
        Subspace im(dim_here, p);
        if (k > 0) {
            const Mat& dm = s.d_mats[k - 1];
            for (int cidx = 0; cidx < dm.cols; ++cidx) {
                Vec col(dim_here, 0);
                for (int r = 0; r < dim_here; ++r) col[r] = dm.at(r, cidx);
                im.add(col);
            }
        }
        DegData& dd = data[d];
        for (const Vec& b : im.basis()) dd.im_basis.push_back(b);
        Subspace span = im;
        for (const Vec& kv : ker)
            if (span.add(kv)) dd.reps.push_back(kv);
        H.dims[d] = static_cast<int>(dd.reps.size());
        dd.basis_mat = Mat(dim_here, static_cast<int>(dd.im_basis.size() + dd.reps.size()));
        for (std::size_t j = 0; j < dd.im_basis.size(); ++j)
            for (int r = 0; r < dim_here; ++r) dd.basis_mat.at(r, static_cast<int>(j)) = dd.im_basis[j][r];
        for (std::size_t j = 0; j < dd.reps.size(); ++j)
            for (int r = 0; r < dim_here; ++r)
                dd.basis_mat.at(r, static_cast<int>(dd.im_basis.size() + j)) = dd.reps[j][r];
    }

    // induced left action on the homology representatives
    H.action.assign(R.dim(), std::vector<Mat>(G.size()));
    for (int b = 0; b < R.dim(); ++b) {
        int db = R.basis_degrees()[b];
        for (int d = 0; d < G.size(); ++d) {
            int dt = G.add(db, d);
            Mat lm = left_mult_matrix(R, c.terms[k], b, d);
            Mat act(H.dims[dt], H.dims[d]);
            for (int j = 0; j < H.dims[d]; ++j) {
                Vec moved = mat_apply(lm, data[d].reps[j], p);
                auto sol = solve(data[dt].basis_mat, moved, p);
                if (!sol) throw std::logic_error("homology: action leaves the cycle space");
                for (int r = 0; r < H.dims[dt]; ++r)
                    act.at(r, j) = (*sol)[data[dt].im_basis.size() + r];
            }
            H.action[b][d] = std::move(act);
        }
    }
    return H;
}

bool is_acyclic(const Complex& c) {
    for (int k = 0; k < c.slots(); ++k)
        if (homology(c, c.index_of(k)).total_dim() != 0) return false;
    return true;
}

// --- chain maps --------------------------------------------------------------

std::vector<ChainMap> chain_map_basis(const Complex& a, const Complex& b) {
    if (a.R != b.R) throw std::invalid_argument("chain_map_basis: ring mismatch");
    const GradedRing& R = *a.R;
    const GradingGroup& G = R.group();
    const int p = R.p();

    // unknowns: for every shared index n, entry (i,j) in R_{g_b - g_a};
    // flatten component coordinates
    struct Slot {
        int n, i, j, deg, width, offset;
    };
    std::vector<Slot> unknowns;
    int total = 0;
    int lo = std::min(a.min_index, b.min_index);
    int hi = std::max(a.min_index + a.slots(), b.min_index + b.slots());
    auto terms_at = [](const Complex& c, int n) -> std::vector<int> {
        int k = n - c.min_index;
        if (k < 0 || k >= c.slots()) return {};
        return c.terms[k];
    };
    for (int n = lo; n < hi; ++n) {
        auto ta = terms_at(a, n), tb = terms_at(b, n);
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; j < tb.size(); ++j) {
                int deg = G.sub(tb[j], ta[i]);
                int w = R.component_dim(deg);
                unknowns.push_back({n, static_cast<int>(i), static_cast<int>(j), deg, w, total});
                total += w;
            }
    }

    auto unknown_at = [&](int n, int i, int j) -> const Slot* {
        for (const Slot& s : unknowns)
            if (s.n == n && s.i == i && s.j == j) return &s;
        return nullptr;
    };

    // constraints: for each n: d_a^n . f^{n+1} = f^n . d_b^n, one linear
    // equation per matrix entry per coefficient of the target component
    std::vector<Vec> rows;  // each row: length = total
    auto add_rows = [&](int n) {
        auto ta = terms_at(a, n), ta1 = terms_at(a, n + 1);
        auto tb1 = terms_at(b, n + 1);
        auto tb = terms_at(b, n);
        int ka = n - a.min_index;
        int kb = n - b.min_index;
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; j < tb1.size(); ++j) {
                int deg = G.sub(tb1[j], ta[i]);
                int w = R.component_dim(deg);
                // sum_m dA[i][m] * f^{n+1}[m][j]  -  sum_m f^n[i][m] * dB[m][j] = 0
                std::vector<Vec> row(static_cast<std::size_t>(w), Vec(total, 0));
                for (std::size_t m = 0; m < ta1.size(); ++m) {
                    const Slot* s = unknown_at(n + 1, static_cast<int>(m), static_cast<int>(j));
                    if (!s) continue;
                    const Vec& dA = a.diff[ka][i][m];
                    if (vec_is_zero(dA)) continue;
                    // coefficient of unknown coordinate c: component coords of dA * e_c
                    for (int cu = 0; cu < s->width; ++cu) {
                        Vec e(s->width, 0);
                        e[cu] = 1;
                        Vec prod = R.multiply(dA, R.component_embed(s->deg, e));
                        Vec pc = R.component_coords(deg, prod);
                        for (int r = 0; r < w; ++r)
                            row[r][s->offset + cu] = fp_add(row[r][s->offset + cu], pc[r], p);
                    }
                }
                for (std::size_t m = 0; m < tb.size(); ++m) {
                    const Slot* s = unknown_at(n, static_cast<int>(i), static_cast<int>(m));
                    if (!s) continue;
                    const Vec& dB = b.diff[kb][m][j];
                    if (vec_is_zero(dB)) continue;
                    for (int cu = 0; cu < s->width; ++cu) {
                        Vec e(s->width, 0);
                        e[cu] = 1;
                        Vec prod = R.multiply(R.component_embed(s->deg, e), dB);
                        Vec pc = R.component_coords(deg, prod);
                        for (int r = 0; r < w; ++r)
                            row[r][s->offset + cu] =
                                fp_sub(row[r][s->offset + cu], pc[r], p);
                    }
                }
                for (int r = 0; r < w; ++r) rows.push_back(row[r]);
            }
    };
    // rows of zeros are harmless, so add constraints for every index
    for (int n = lo; n + 1 < hi; ++n)
        if (!terms_at(a, n).empty() || !terms_at(b, n).empty()) add_rows(n);

    Mat sys(static_cast<int>(rows.size()), total);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int cidx = 0; cidx < total; ++cidx) sys.at(static_cast<int>(r), cidx) = rows[r][cidx];
    std::vector<Vec> null = total == 0 ? std::vector<Vec>{} : kernel_basis(sys, p);

    std::vector<ChainMap> out;
    for (const Vec& x : null) {
        ChainMap f;
        f.from = &a;
        f.to = &b;
        f.comp.assign(static_cast<std::size_t>(hi - lo), {});
        for (int n = lo; n < hi; ++n) {
            auto ta = terms_at(a, n), tb = terms_at(b, n);
            f.comp[n - lo].assign(ta.size(), std::vector<Vec>(tb.size(), R.zero()));
        }
        for (const Slot& s : unknowns) {
            Vec coords(s.width, 0);
            for (int cu = 0; cu < s.width; ++cu) coords[cu] = x[s.offset + cu];
            f.comp[s.n - lo][s.i][s.j] = R.component_embed(s.deg, coords);
        }
        out.push_back(std::move(f));
    }
    return out;
}

Complex mapping_cone(const ChainMap& f) {
    const Complex& a = *f.from;
    const Complex& b = *f.to;
    const GradedRing& R = *a.R;
    int lo = std::min(a.min_index - 1, b.min_index);
    int hi = std::max(a.min_index - 1 + a.slots(), b.min_index + b.slots());
    auto terms_at = [](const Complex& c, int n) -> std::vector<int> {
        int k = n - c.min_index;
        if (k < 0 || k >= c.slots()) return {};
        return c.terms[k];
    };
    int flo = std::min(a.min_index, b.min_index);
    auto f_at = [&](int n, int i, int j) -> Vec {
        int k = n - flo;
        if (k < 0 || k >= static_cast<int>(f.comp.size())) return R.zero();
        if (i >= static_cast<int>(f.comp[k].size())) return R.zero();
        if (j >= static_cast<int>(f.comp[k][i].size())) return R.zero();
        return f.comp[k][i][j];
    };

    Complex out{&R, lo, {}, {}};
    for (int n = lo; n < hi; ++n) {
        std::vector<int> t = terms_at(a, n + 1);  // cone^n = A^{n+1} (+) B^n
        std::vector<int> tb = terms_at(b, n);
        t.insert(t.end(), tb.begin(), tb.end());
        out.terms.push_back(t);
    }
    for (int n = lo; n + 1 < hi; ++n) {
        auto a1 = terms_at(a, n + 1), a2 = terms_at(a, n + 2);
        auto b0 = terms_at(b, n), b1 = terms_at(b, n + 1);
        std::vector<std::vector<Vec>> block(
            a1.size() + b0.size(), std::vector<Vec>(a2.size() + b1.size(), R.zero()));
        // [-d_A, f; 0, d_B]
        int ka = n + 1 - a.min_index;
        if (ka >= 0 && ka + 1 < a.slots())
            for (std::size_t i = 0; i < a1.size(); ++i)
                for (std::size_t j = 0; j < a2.size(); ++j)
                    block[i][j] = R.negate(a.diff[ka][i][j]);
        for (std::size_t i = 0; i < a1.size(); ++i)
            for (std::size_t j = 0; j < b1.size(); ++j)
                block[i][a2.size() + j] = f_at(n + 1, static_cast<int>(i), static_cast<int>(j));
        int kb = n - b.min_index;
        if (kb >= 0 && kb + 1 < b.slots())
            for (std::size_t i = 0; i < b0.size(); ++i)
                for (std::size_t j = 0; j < b1.size(); ++j)
                    block[a1.size() + i][a2.size() + j] = b.diff[kb][i][j];
        out.diff.push_back(std::move(block));
    }
    return out;
}

// --- support -----------------------------------------------------------------

GradedModule free_module(const GradedRing& R, int g) {
    const GradingGroup& G = R.group();
    GradedModule m;
    m.R = &R;
    for (int d = 0; d < G.size(); ++d) m.dims.push_back(R.component_dim(G.add(d, g)));
    m.action.assign(R.dim(), std::vector<Mat>(G.size()));
    for (int b = 0; b < R.dim(); ++b)
        for (int d = 0; d < G.size(); ++d) m.action[b][d] = left_mult_matrix(R, {g}, b, d);
    return m;
}

GradedModule quotient_module(const GradedRing& R, const RingIdeal& I, int g) {
    // R/I twisted by g, via the quotient ring's components
    const GradingGroup& G = R.group();
    const int p = R.p();
    GradedModule m;
    m.R = &R;

    // coset representatives per degree of R/I
    std::vector<std::vector<Vec>> reps(G.size());  // component coords in R
    std::vector<Mat> basis_mats(G.size());
    for (int d = 0; d < G.size(); ++d) {
        int n = R.component_dim(d);
        Subspace span(n, p);
        for (const Vec& b : I.component(d).basis()) span.add(b);
        int im_dim = span.dim();
        std::vector<Vec> im_basis = span.basis();
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            if (span.add(e)) reps[d].push_back(e);
        }
        Mat bm(n, im_dim + static_cast<int>(reps[d].size()));
        for (int j = 0; j < im_dim; ++j)
            for (int r = 0; r < n; ++r) bm.at(r, j) = im_basis[j][r];
        for (std::size_t j = 0; j < reps[d].size(); ++j)
            for (int r = 0; r < n; ++r) bm.at(r, im_dim + static_cast<int>(j)) = reps[d][j][r];
        basis_mats[d] = std::move(bm);
    }

    for (int d = 0; d < G.size(); ++d) m.dims.push_back(static_cast<int>(reps[G.add(d, g)].size()));
    m.action.assign(R.dim(), std::vector<Mat>(G.size()));
    for (int b = 0; b < R.dim(); ++b) {
        Vec bv = R.zero();
        bv[b] = 1;
        int db = R.basis_degrees()[b];
        for (int d = 0; d < G.size(); ++d) {
            int src_deg = G.add(d, g);
            int dst_deg = G.add(db, src_deg);
            int im_dim = static_cast<int>(I.component(dst_deg).basis().size());
            Mat act(m.dims[G.add(db, d)], m.dims[d]);
            for (std::size_t j = 0; j < reps[src_deg].size(); ++j) {
                Vec x = R.multiply(bv, R.component_embed(src_deg, reps[src_deg][j]));
                Vec xc = R.component_coords(dst_deg, x);
                auto sol = solve(basis_mats[dst_deg], xc, p);
                if (!sol) throw std::logic_error("quotient_module: projection failed");
                for (int r = 0; r < act.rows; ++r)
                    act.at(r, static_cast<int>(j)) = (*sol)[im_dim + r];
            }
            m.action[b][d] = std::move(act);
        }
    }
    return m;
}

RingIdeal module_annihilator(const GradedModule& m) {
    const GradedRing& R = *m.R;
    const GradingGroup& G = R.group();
    RingIdeal ann(R);
    for (int vd = 0; vd < G.size(); ++vd)
        for (const Vec& v : R.component_values(vd)) {
            if (vec_is_zero(v)) continue;
            bool kills = true;
            for (int d = 0; d < G.size() && kills; ++d) {
                if (m.dims[d] == 0) continue;
                Mat a = m.value_action(vd, v, d);
                for (Coef c : a.data)
                    if (c != 0) kills = false;
            }
            if (kills) ann.insert(vd, v);
        }
    return ann;
}

std::set<std::string> module_supp(const GradedModule& m) {
    const GradedRing& R = *m.R;
    RingIdeal ann = module_annihilator(m);
    std::set<std::string> out;
    for (const RingIdeal& p : enumerate_ring_primes(R))
        if (ann.subset_of(p)) out.insert(p.key());
    return out;
}

std::set<std::string> module_supp_localization(const GradedModule& m) {
    const GradedRing& R = *m.R;
    const GradingGroup& G = R.group();
    const int p = R.p();
    std::set<std::string> out;
    for (const RingIdeal& q : enumerate_ring_primes(R)) {
        // the localized module survives iff some homogeneous element of M is
        // killed by no homogeneous s outside q
        bool survives = false;
        for (int d = 0; d < G.size() && !survives; ++d) {
            if (m.dims[d] == 0) continue;
            long count = 1;
            for (int i = 0; i < m.dims[d]; ++i) count *= p;
            for (long x = 1; x < count && !survives; ++x) {
                Vec mv(m.dims[d], 0);
                long acc = x;
                for (int i = 0; i < m.dims[d]; ++i) {
                    mv[i] = static_cast<Coef>(acc % p);
                    acc /= p;
                }
                bool killed = false;
                for (int sd = 0; sd < G.size() && !killed; ++sd)
                    for (const Vec& s : R.component_values(sd)) {
                        if (vec_is_zero(s) || q.contains(sd, s)) continue;
                        Mat a = m.value_action(sd, s, d);
                        if (vec_is_zero(mat_apply(a, mv, p))) {
                            killed = true;
                            break;
                        }
                    }
                if (!killed) survives = true;
            }
        }
        if (survives) out.insert(q.key());
    }
    return out;
}

std::set<std::string> supph(const Complex& c) {
    std::set<std::string> out;
    for (int k = 0; k < c.slots(); ++k) {
        GradedModule h = homology(c, c.index_of(k));
        if (h.is_zero()) continue;
        for (const std::string& key : module_supp(h)) out.insert(key);
    }
    return out;
}

ThickIdealModel sigma(const GradedRing& R, const RingIdeal& p) {
    return {&R, p.key()};
}

Ideal rho(const TwoRing& t, const ThickIdealModel& P) {
    const GradedRing& R = t.ring();
    // collect { r : cone(r) not in P } degreewise at canonical endpoints
    std::vector<std::vector<Vec>> hits(t.objects());
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& v : R.component_values(d)) {
            Mor r{t.group().zero(), d, v};
            if (!P.contains(cone_of(t, r))) {
                if (vec_is_zero(v))
                    continue;  // the zero morphism's cone has full support
                hits[d].push_back(v);
            } else if (vec_is_zero(v) && !R.is_zero_ring()) {
                throw std::logic_error("rho: model contains the cone of a zero morphism");
            }
        }
    Ideal out(t);
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& v : hits[d]) out.insert_value(d, v);
    // the collected set must already be the ideal: no closure growth allowed
    for (int d = 0; d < t.objects(); ++d) {
        std::size_t members = 0;
        for (const Vec& c : out.component(d).elements())
            if (!vec_is_zero(c)) ++members;
        if (members != hits[d].size())
            throw std::logic_error("rho: collected morphisms do not form an ideal");
    }
    if (!is_prime(out)) throw std::logic_error("rho: resulting ideal is not prime");
    return out;
}

std::vector<std::string> basis_check(const TwoRing& t) {
    std::vector<std::string> out;
    auto tp = std::make_shared<TwoRing>(t);
    SpecSpace sp = enumerate_primes(tp);

    // identify each spectrum prime with its ring-level key
    std::vector<std::string> ring_keys;
    for (const Ideal& p : sp.primes) ring_keys.push_back(corr_to_ring(p).key());

    auto supp_indices = [&](const std::set<std::string>& keys) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < ring_keys.size(); ++i)
            if (keys.count(ring_keys[i])) idx.push_back(static_cast<int>(i));
        return idx;
    };

    // (a) supph(cone r) = V(<r>) for every morphism
    for (const Mor& r : tp->all_morphisms()) {
        std::vector<int> lhs = supp_indices(supph(cone_of(*tp, r)));
        std::vector<int> rhs = v_set(sp, ideal_generate(*tp, {r}));
        if (lhs != rhs) {
            out.push_back("supph(cone r) differs from V(<r>) at " + mor_to_string(*tp, r));
            break;
        }
    }

    // (b) the sets supph(cone r) form a basis of closed subsets
    std::vector<std::vector<int>> cone_supps;
    for (int d = 0; d < tp->objects(); ++d)
        for (const Vec& v : tp->ring().component_values(d))
            cone_supps.push_back(
                supp_indices(supph(cone_of(*tp, {tp->group().zero(), d, v}))));
    for (const auto& z : sp.closed_sets) {
        for (std::size_t i = 0; i < sp.primes.size(); ++i) {
            if (std::binary_search(z.begin(), z.end(), static_cast<int>(i))) continue;
            bool found = false;
            for (const auto& cs : cone_supps)
                if (std::includes(cs.begin(), cs.end(), z.begin(), z.end()) &&
                    !std::binary_search(cs.begin(), cs.end(), static_cast<int>(i))) {
                    found = true;
                    break;
                }
            if (!found) {
                out.push_back("no cone support separates a closed set from an outside prime");
                return out;
            }
        }
    }
    return out;
}

}  // namespace s2r
