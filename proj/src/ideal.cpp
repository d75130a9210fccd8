#include "s2r/ideal.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace s2r {

Ideal::Ideal(const TwoRing& t) : t_(&t) {
    const GradedRing& R = t.ring();
    for (int d = 0; d < t.objects(); ++d) comp_.emplace_back(R.component_dim(d), R.p());
}

Ideal Ideal::whole(const TwoRing& t) {
    Ideal i(t);
    const GradedRing& R = t.ring();
    for (int d = 0; d < t.objects(); ++d) {
        int n = R.component_dim(d);
        for (int k = 0; k < n; ++k) {
            Vec e(n, 0);
            e[k] = 1;
            i.comp_[d].add(e);
        }
    }
    return i;
}

bool Ideal::contains_value(int deg, const Vec& v) const {
    if (vec_is_zero(v)) return true;
    return comp_[deg].contains(t_->ring().component_coords(deg, v));
}

bool Ideal::contains(const Mor& m) const {
    return contains_value(t_->hom_degree(m.src, m.tgt), m.val);
}

std::vector<Mor> Ideal::slot(int g, int h) const {
    int d = t_->hom_degree(g, h);
    const GradedRing& R = t_->ring();
    std::vector<Mor> out;
    for (const Vec& c : comp_[d].elements()) out.push_back({g, h, R.component_embed(d, c)});
    return out;
}

std::vector<Mor> Ideal::members() const {
    const GradedRing& R = t_->ring();
    std::vector<Mor> out;
    for (int d = 0; d < t_->objects(); ++d)
        for (const Vec& c : comp_[d].elements())
            if (!vec_is_zero(c)) out.push_back({t_->group().zero(), d, R.component_embed(d, c)});
    return out;
}

void Ideal::close() {
    // closure under two-sided composition; twisting only flips signs at the
    // value level, which subgroups absorb
    const GradedRing& R = t_->ring();
    const GradingGroup& G = t_->group();
    std::deque<std::pair<int, Vec>> queue;  // (degree, full value)
    for (int d = 0; d < G.size(); ++d)
        for (const Vec& b : comp_[d].basis()) queue.emplace_back(d, R.component_embed(d, b));

    while (!queue.empty()) {
        auto [d, v] = queue.front();
        queue.pop_front();
        for (int i = 0; i < R.dim(); ++i) {
            Vec bi = R.zero();
            bi[i] = 1;
            int di = R.basis_degrees()[i];
            Vec left = R.multiply(bi, v);
            if (!vec_is_zero(left)) {
                int dl = G.add(di, d);
                if (comp_[dl].add(R.component_coords(dl, left))) queue.emplace_back(dl, left);
            }
            Vec right = R.multiply(v, bi);
            if (!vec_is_zero(right)) {
                int dr = G.add(d, di);
                if (comp_[dr].add(R.component_coords(dr, right))) queue.emplace_back(dr, right);
            }
        }
    }
}

bool Ideal::insert_value(int deg, const Vec& v) {
    if (vec_is_zero(v)) return false;
    if (!comp_[deg].add(t_->ring().component_coords(deg, v))) return false;
    close();
    return true;
}

bool Ideal::insert(const Mor& m) {
    if (vec_is_zero(m.val)) return false;
    auto d = t_->ring().degree_of(m.val);
    if (!d || *d != t_->hom_degree(m.src, m.tgt))
        throw std::invalid_argument("Ideal::insert: morphism value degree mismatch");
    return insert_value(*d, m.val);
}

bool Ideal::subset_of(const Ideal& o) const {
    for (int d = 0; d < t_->objects(); ++d)
        if (!o.comp_[d].contains_all(comp_[d])) return false;
    return true;
}

bool Ideal::operator==(const Ideal& o) const { return subset_of(o) && o.subset_of(*this); }

bool Ideal::is_proper() const {
    return !contains_value(t_->group().zero(), t_->ring().one());
}

bool Ideal::is_whole() const { return !is_proper(); }

int Ideal::total_dim() const {
    int n = 0;
    for (const Subspace& s : comp_) n += s.dim();
    return n;
}

std::string Ideal::key() const {
    const GradedRing& R = t_->ring();
    std::string k;
    for (int d = 0; d < t_->objects(); ++d) {
        std::vector<int> idx;
        for (const Vec& c : comp_[d].elements())
            if (!vec_is_zero(c)) idx.push_back(R.value_index(d, R.component_embed(d, c)));
        std::sort(idx.begin(), idx.end());
        k += "d" + std::to_string(d) + ":";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(idx[i]);
        }
        k += ";";
    }
    return k;
}

Ideal ideal_generate(const TwoRing& t, const std::vector<Mor>& gens) {
    Ideal i(t);
    const GradedRing& R = t.ring();
    for (const Mor& m : gens) {
        if (vec_is_zero(m.val)) continue;
        auto d = R.degree_of(m.val);
        if (!d || *d != t.hom_degree(m.src, m.tgt))
            throw std::invalid_argument("ideal_generate: bad generator");
        i.insert_value(*d, m.val);
    }
    return i;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (&a.parent() != &b.parent()) throw std::invalid_argument("ideal_sum: parent mismatch");
    const TwoRing& t = a.parent();
    Ideal s = a;
    const GradedRing& R = t.ring();
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& c : b.component(d).basis())
            s.insert_value(d, R.component_embed(d, c));
    return s;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    if (&a.parent() != &b.parent()) throw std::invalid_argument("ideal_intersect: parent mismatch");
    const TwoRing& t = a.parent();
    const GradedRing& R = t.ring();
    Ideal m(t);
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& c : a.component(d).elements()) {
            if (vec_is_zero(c)) continue;
            if (b.component(d).contains(c)) m.insert_value(d, R.component_embed(d, c));
        }
    return m;
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    if (&a.parent() != &b.parent()) throw std::invalid_argument("ideal_product: parent mismatch");
    const TwoRing& t = a.parent();
    const GradedRing& R = t.ring();
    Ideal out(t);
    for (int da = 0; da < t.objects(); ++da)
        for (const Vec& ca : a.component(da).elements()) {
            if (vec_is_zero(ca)) continue;
            Vec va = R.component_embed(da, ca);
            for (int db = 0; db < t.objects(); ++db)
                for (const Vec& cb : b.component(db).elements()) {
                    if (vec_is_zero(cb)) continue;
                    Vec prod = R.multiply(va, R.component_embed(db, cb));
                    if (!vec_is_zero(prod)) out.insert_value(t.group().add(da, db), prod);
                }
        }
    return out;
}

Ideal ideal_product_tensor(const Ideal& a, const Ideal& b) {
    if (&a.parent() != &b.parent())
        throw std::invalid_argument("ideal_product_tensor: parent mismatch");
    const TwoRing& t = a.parent();
    std::vector<Mor> gens;
    for (const Mor& s : a.members())
        for (const Mor& u : b.members()) {
            Mor prod = t.tensor(s, u);
            if (!vec_is_zero(prod.val)) gens.push_back(prod);
        }
    return ideal_generate(t, gens);
}

bool is_prime(const Ideal& ideal) {
    if (!ideal.is_proper()) return false;
    const TwoRing& t = ideal.parent();
    const GradedRing& R = t.ring();
    const GradingGroup& G = t.group();
    // r o s in I => r in I or s in I, over every composable pair g -> h -> l
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h) {
            int ds = G.sub(h, g);
            for (const Vec& vs : R.component_values(ds)) {
                if (vec_is_zero(vs) || ideal.contains_value(ds, vs)) continue;
                for (int l = 0; l < G.size(); ++l) {
                    int dr = G.sub(l, h);
                    for (const Vec& vr : R.component_values(dr)) {
                        if (vec_is_zero(vr) || ideal.contains_value(dr, vr)) continue;
                        Vec comp = R.multiply(vr, vs);
                        if (ideal.contains_value(G.add(dr, ds), comp)) return false;
                    }
                }
            }
        }
    return true;
}

Ideal annihilator(const TwoRing& t, const Mor& s) {
    std::vector<Mor> gens;
    for (int l = 0; l < t.objects(); ++l)
        for (const Vec& v : t.hom_values(s.tgt, l)) {
            Mor r{s.tgt, l, v};
            if (vec_is_zero(t.compose(r, s).val)) gens.push_back(r);
        }
    return ideal_generate(t, gens);
}

namespace {

std::vector<std::vector<Vec>> collect_sets(const TwoRing& t,
                                           const std::function<bool(int, const Vec&)>& pred) {
    const GradedRing& R = t.ring();
    std::vector<std::vector<Vec>> out(t.objects());
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& v : R.component_values(d))
            if (pred(d, v)) out[d].push_back(v);
    return out;
}

}  // namespace

std::vector<std::vector<Vec>> annihilator_left_set(const TwoRing& t, const Mor& s) {
    // r (at canonical endpoints 0 -> d) with (g (x) r) u s = 0 for some
    // object g and isomorphism u
    return collect_sets(t, [&](int d, const Vec& v) {
        if (vec_is_zero(v)) return true;
        Mor r{t.group().zero(), d, v};
        for (int g = 0; g < t.objects(); ++g) {
            Mor tw = t.ltwist(g, r);
            for (const Mor& u : t.isos(s.tgt, tw.src))
                if (vec_is_zero(t.compose(tw, t.compose(u, s)).val)) return true;
        }
        return false;
    });
}

std::vector<std::vector<Vec>> annihilator_right_set(const TwoRing& t, const Mor& s) {
    // r with s u (g (x) r) = 0 for some object g and isomorphism u
    return collect_sets(t, [&](int d, const Vec& v) {
        if (vec_is_zero(v)) return true;
        Mor r{t.group().zero(), d, v};
        for (int g = 0; g < t.objects(); ++g) {
            Mor tw = t.ltwist(g, r);
            for (const Mor& u : t.isos(tw.tgt, s.src))
                if (vec_is_zero(t.compose(s, t.compose(u, tw)).val)) return true;
        }
        return false;
    });
}

std::vector<std::vector<Vec>> principal_left_form(const TwoRing& t, const Mor& r) {
    // morphisms s (l (x) r) u with u an isomorphism, collected at canonical
    // endpoints (targets vary with s)
    const GradedRing& R = t.ring();
    std::vector<std::set<Vec>> acc(t.objects());
    for (int d = 0; d < t.objects(); ++d) acc[d].insert(R.zero());
    for (int l = 0; l < t.objects(); ++l) {
        Mor tw = t.ltwist(l, r);
        for (int g = 0; g < t.objects(); ++g)
            for (const Mor& u : t.isos(g, tw.src))
                for (int h = 0; h < t.objects(); ++h)
                    for (const Vec& sv : t.hom_values(tw.tgt, h)) {
                        Mor m = t.compose(Mor{tw.tgt, h, sv}, t.compose(tw, u));
                        acc[t.hom_degree(m.src, m.tgt)].insert(m.val);
                    }
    }
    std::vector<std::vector<Vec>> out(t.objects());
    for (int d = 0; d < t.objects(); ++d) out[d] = {acc[d].begin(), acc[d].end()};
    return out;
}

std::vector<std::vector<Vec>> principal_right_form(const TwoRing& t, const Mor& r) {
    // morphisms v (r (x) k) s with v an isomorphism
    const GradedRing& R = t.ring();
    std::vector<std::set<Vec>> acc(t.objects());
    for (int d = 0; d < t.objects(); ++d) acc[d].insert(R.zero());
    for (int k = 0; k < t.objects(); ++k) {
        Mor tw = t.rtwist(r, k);
        for (int h = 0; h < t.objects(); ++h)
            for (const Mor& v : t.isos(tw.tgt, h))
                for (int g = 0; g < t.objects(); ++g)
                    for (const Vec& sv : t.hom_values(g, tw.src)) {
                        Mor m = t.compose(v, t.compose(tw, Mor{g, tw.src, sv}));
                        acc[t.hom_degree(m.src, m.tgt)].insert(m.val);
                    }
    }
    std::vector<std::vector<Vec>> out(t.objects());
    for (int d = 0; d < t.objects(); ++d) out[d] = {acc[d].begin(), acc[d].end()};
    return out;
}

namespace {

std::vector<Ideal> lattice_bfs(const TwoRing& t, bool parallel) {
    const GradedRing& R = t.ring();
    std::map<std::string, Ideal> seen;
    Ideal zero(t);
    seen.emplace(zero.key(), zero);
    std::vector<Ideal> frontier{zero};

    while (!frontier.empty()) {
        // candidate growth steps for each frontier ideal: one new homogeneous
        // value per distinct coset
        std::vector<std::vector<Ideal>> produced(frontier.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long fi = 0; fi < static_cast<long>(frontier.size()); ++fi) {
            const Ideal& base = frontier[fi];
            std::set<Vec> tried;  // coset representatives already expanded
            for (int d = 0; d < t.objects(); ++d)
                for (const Vec& v : R.component_values(d)) {
                    if (vec_is_zero(v)) continue;
                    Vec coords = R.component_coords(d, v);
                    if (base.component(d).contains(coords)) continue;
                    Vec rep = base.component(d).reduce(coords);
                    rep.push_back(static_cast<Coef>(d));
                    if (!tried.insert(rep).second) continue;
                    Ideal grown = base;
                    grown.insert_value(d, v);
                    produced[fi].push_back(std::move(grown));
                }
        }

        std::vector<Ideal> next;
        for (auto& batch : produced)
            for (Ideal& cand : batch) {
                std::string k = cand.key();
                if (seen.emplace(k, cand).second) next.push_back(std::move(cand));
            }
        frontier = std::move(next);
    }

    std::vector<Ideal> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;  // std::map iteration = sorted by canonical key
}

}  // namespace

std::vector<Ideal> enumerate_ideals_serial(const TwoRing& t) { return lattice_bfs(t, false); }

std::vector<Ideal> enumerate_ideals_parallel(const TwoRing& t) { return lattice_bfs(t, true); }

std::vector<Ideal> enumerate_ideals(const TwoRing& t) {
#ifdef _OPENMP
    return enumerate_ideals_parallel(t);
#else
    return enumerate_ideals_serial(t);
#endif
}

QuotientResult quotient(std::shared_ptr<const TwoRing> t, const Ideal& ideal) {
    const GradedRing& R = t->ring();
    const GradingGroup& G = t->group();
    int p = R.p();

    // per degree: pick the non-pivot unit vectors as coset representatives
    std::vector<std::vector<int>> rep_pos(G.size());   // positions in component coords
    std::vector<Mat> proj(G.size());
    for (int d = 0; d < G.size(); ++d) {
        int n = R.component_dim(d);
        std::vector<bool> pivot(n, false);
        for (const Vec& b : ideal.component(d).basis())
            for (int i = 0; i < n; ++i)
                if (b[i] != 0) {
                    pivot[i] = true;  // rref: first nonzero is the pivot
                    break;
                }
        for (int i = 0; i < n; ++i)
            if (!pivot[i]) rep_pos[d].push_back(i);
        Mat m(static_cast<int>(rep_pos[d].size()), n);
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            Vec red = ideal.component(d).reduce(e);
            for (std::size_t rr = 0; rr < rep_pos[d].size(); ++rr)
                m.at(static_cast<int>(rr), i) = red[rep_pos[d][rr]];
        }
        proj[d] = std::move(m);
    }

    // quotient ring basis: one element per surviving coset representative
    std::vector<std::string> names;
    std::vector<int> degs;
    std::vector<std::pair<int, int>> origin;  // (degree, position)
    for (int d = 0; d < G.size(); ++d)
        for (int posn : rep_pos[d]) {
            const Vec full = R.component_embed(d, [&] {
                Vec e(R.component_dim(d), 0);
                e[posn] = 1;
                return e;
            }());
            std::string nm;
            for (int i = 0; i < R.dim(); ++i)
                if (full[i] != 0) nm = R.basis_names()[i];
            names.push_back("q" + nm);
            degs.push_back(d);
            origin.emplace_back(d, posn);
        }

    int qdim = static_cast<int>(names.size());
    std::vector<Vec> table(static_cast<std::size_t>(qdim) * qdim, Vec(qdim, 0));
    auto project_to_quotient = [&](int d, const Vec& full) {
        Vec c = mat_apply(proj[d], R.component_coords(d, full), p);
        Vec q(qdim, 0);
        for (int k = 0; k < qdim; ++k)
            if (origin[k].first == d)
                for (std::size_t rr = 0; rr < rep_pos[d].size(); ++rr)
                    if (rep_pos[d][rr] == origin[k].second) q[k] = c[rr];
        return q;
    };
    for (int a = 0; a < qdim; ++a)
        for (int b = 0; b < qdim; ++b) {
            auto [da, pa] = origin[a];
            auto [db, pb] = origin[b];
            Vec ea(R.component_dim(da), 0), eb(R.component_dim(db), 0);
            ea[pa] = 1;
            eb[pb] = 1;
            Vec prod = R.multiply(R.component_embed(da, ea), R.component_embed(db, eb));
            table[static_cast<std::size_t>(a) * qdim + b] = project_to_quotient(G.add(da, db), prod);
        }

    auto qt = std::make_shared<TwoRing>(GradedRing(p, G, R.eps(), names, degs, table));

    RingFunctor f;
    f.source = t;
    f.target = qt;
    for (int g = 0; g < G.size(); ++g) f.obj_map.push_back(g);
    for (int d = 0; d < G.size(); ++d) {
        // component coords of R_d -> component coords of the quotient at d
        int n = R.component_dim(d);
        int qn = qt->ring().component_dim(d);
        Mat m(qn, n);
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            Vec q = project_to_quotient(d, R.component_embed(d, e));
            Vec qc = qt->ring().component_coords(d, q);
            for (int rr = 0; rr < qn; ++rr) m.at(rr, i) = qc[rr];
        }
        f.comp_map.push_back(std::move(m));
    }

    return {qt, std::move(f)};
}

}  // namespace s2r
