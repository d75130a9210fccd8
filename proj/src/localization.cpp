#include "s2r/localization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "s2r/spectrum.hpp"

namespace s2r {

// --- MultSystem --------------------------------------------------------------

MultSystem::MultSystem(std::shared_ptr<const TwoRing> t) : t_(std::move(t)) {
    const GradedRing& R = t_->ring();
    for (int d = 0; d < t_->objects(); ++d)
        member_.push_back(std::vector<char>(R.component_values(d).size(), 0));
}

MultSystem MultSystem::closure(std::shared_ptr<const TwoRing> t, const std::vector<Mor>& gens) {
    MultSystem S(t);
    const GradedRing& R = t->ring();
    const GradingGroup& G = t->group();

    // isomorphisms first, then the generators
    std::vector<std::pair<int, Vec>> queue;
    auto push = [&](int d, const Vec& v) {
        int idx = R.value_index(d, v);
        if (S.member_[d][idx]) return;
        S.member_[d][idx] = 1;
        queue.emplace_back(d, v);
    };
    for (int d = 0; d < t->objects(); ++d)
        for (int u : R.component_units(d)) push(d, R.component_values(d)[u]);
    for (const Mor& m : gens) {
        auto deg = R.degree_of(m.val);
        if (vec_is_zero(m.val))
            push(t->hom_degree(m.src, m.tgt), m.val);
        else
            push(*deg, m.val);
    }

    // close under composition; translates only flip signs, and -1 is a unit
    while (!queue.empty()) {
        auto [d, v] = queue.back();
        queue.pop_back();
        for (int e = 0; e < t->objects(); ++e) {
            const auto& vals = R.component_values(e);
            for (std::size_t i = 0; i < vals.size(); ++i) {
                if (!S.member_[e][i]) continue;
                push(G.add(e, d), R.multiply(vals[i], v));
                push(G.add(d, e), R.multiply(v, vals[i]));
            }
        }
    }
    return S;
}

MultSystem MultSystem::at_prime(std::shared_ptr<const TwoRing> t, const Ideal& p) {
    MultSystem S(t);
    const GradedRing& R = t->ring();
    for (int d = 0; d < t->objects(); ++d) {
        const auto& vals = R.component_values(d);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (!p.contains_value(d, vals[i])) S.member_[d][i] = 1;
    }
    return S;
}

bool MultSystem::contains_value(int deg, const Vec& v) const {
    return member_[deg][t_->ring().value_index(deg, v)] != 0;
}

std::vector<Mor> MultSystem::slot(int g, int h) const {
    int d = t_->hom_degree(g, h);
    const auto& vals = t_->ring().component_values(d);
    std::vector<Mor> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (member_[d][i]) out.push_back({g, h, vals[i]});
    return out;
}

bool MultSystem::contains_zero() const {
    return contains_value(t_->group().zero(), t_->ring().zero());
}

std::string MultSystem::key() const {
    std::string k;
    for (std::size_t d = 0; d < member_.size(); ++d) {
        k += "d" + std::to_string(d) + ":";
        for (std::size_t i = 0; i < member_[d].size(); ++i)
            if (member_[d][i]) k += std::to_string(i) + ",";
        k += ";";
    }
    return k;
}

std::vector<std::string> MultSystem::check_invariants() const {
    std::vector<std::string> out;
    const TwoRing& t = *t_;
    const GradedRing& R = t.ring();

    for (int d = 0; d < t.objects(); ++d)
        for (int u : R.component_units(d))
            if (!member_[d][u]) {
                out.push_back("an isomorphism is missing");
                break;
            }

    const auto mors = [&] {
        std::vector<Mor> ms;
        for (int g = 0; g < t.objects(); ++g)
            for (int h = 0; h < t.objects(); ++h)
                for (const Mor& m : slot(g, h)) ms.push_back(m);
        return ms;
    }();

    for (const Mor& a : mors) {
        for (const Mor& b : mors)
            if (a.src == b.tgt && !contains(t.compose(a, b))) {
                out.push_back("not closed under composition");
                return out;
            }
        for (int g = 0; g < t.objects(); ++g)
            if (!contains(t.ltwist(g, a)) || !contains(t.rtwist(a, g))) {
                out.push_back("not closed under twists");
                return out;
            }
        if (!contains(t.dual(a))) {
            out.push_back("not closed under duals");
            return out;
        }
    }
    return out;
}

// --- Ore calculus ------------------------------------------------------------

OreSquare ore_complete(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s) {
    if (r.src != s.src) throw std::invalid_argument("ore_complete: no common source");
    if (!S.contains(s)) throw std::invalid_argument("ore_complete: s not in the system");
    const GradingGroup& G = t.group();
    int g = r.src, h = r.tgt, l = s.tgt;

    auto inv_of = [&](const Mor& m) {
        auto i = t.inverse(m);
        if (!i) throw std::logic_error("ore_complete: structural map not invertible");
        return *i;
    };

    // r' : l -> h g^v l along lambda^{-1}, (eps_{h^v} l)^{-1}, h r^v l
    Mor e_hv_l = t.tensor(t.epsilon(G.neg(h)), t.identity(l));
    Mor h_rv_l = t.tensor(t.tensor(t.identity(h), t.dual(r)), t.identity(l));
    Mor r_prime = t.compose(h_rv_l, inv_of(e_hv_l));

    // s' : h -> h g^v l along lambda^{-1}, (eps_{h^v} h)^{-1}, h eps_h,
    // (h eps_g)^{-1}, h g^v s
    Mor e_hv_h = t.tensor(t.epsilon(G.neg(h)), t.identity(h));
    Mor h_e_h = t.tensor(t.identity(h), t.epsilon(h));
    Mor h_e_g = t.tensor(t.identity(h), t.epsilon(g));
    Mor h_gv_s = t.tensor(t.identity(G.add(h, G.neg(g))), s);
    Mor s_prime =
        t.compose(h_gv_s, t.compose(inv_of(h_e_g), t.compose(h_e_h, inv_of(e_hv_h))));

    if (!S.contains(s_prime)) throw std::logic_error("ore_complete: s' escaped the system");
    if (!(t.compose(s_prime, r) == t.compose(r_prime, s)))
        throw std::logic_error("ore_complete: square does not commute");
    return {s_prime, r_prime};
}

std::optional<OreSquare> ore_search(const TwoRing& t, const MultSystem& S, const Mor& r,
                                    const Mor& s) {
    if (r.src != s.src || !S.contains(s)) return std::nullopt;
    for (int m = 0; m < t.objects(); ++m)
        for (const Mor& sp : S.slot(r.tgt, m))
            for (const Vec& rv : t.hom_values(s.tgt, m)) {
                Mor rp{s.tgt, m, rv};
                if (t.compose(sp, r) == t.compose(rp, s)) return OreSquare{sp, rp};
            }
    return std::nullopt;
}

OreSquare right_ore_complete(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s) {
    if (r.tgt != s.tgt) throw std::invalid_argument("right_ore_complete: no common target");
    if (!S.contains(s)) throw std::invalid_argument("right_ore_complete: s not in the system");
    // dualize, complete on the left, dualize back
    Mor rd = t.dual(r), sd = t.dual(s);
    OreSquare left = ore_complete(t, S, rd, sd);
    Mor s_prime = t.dual(left.s_prime);
    Mor r_prime = t.dual(left.r_prime);
    // dual is only an anti-automorphism up to the degree sign, so fix the
    // scalar on r' by solving r s' = c (s r')
    Mor lhs = t.compose(r, s_prime);
    Mor rhs = t.compose(s, r_prime);
    if (!(lhs == rhs)) {
        bool fixed = false;
        for (int c = 2; c < t.ring().p(); ++c) {
            Mor cand = t.scale(static_cast<Coef>(c), r_prime);
            if (t.compose(s, cand) == lhs) {
                r_prime = cand;
                fixed = true;
                break;
            }
        }
        if (!fixed) throw std::logic_error("right_ore_complete: square does not commute");
    }
    if (!S.contains(s_prime)) throw std::logic_error("right_ore_complete: s' escaped the system");
    return {s_prime, r_prime};
}

Mor cancellation_witness(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s) {
    if (r.tgt != s.src) throw std::invalid_argument("cancellation_witness: pair not composable");
    if (!S.contains(s)) throw std::invalid_argument("cancellation_witness: s not in the system");
    if (!vec_is_zero(t.compose(s, r).val))
        throw std::invalid_argument("cancellation_witness: s r != 0");
    const GradingGroup& G = t.group();

    PseudoCommuteWitness pc = t.pseudo_commute(r, s);
    int m = G.add(s.tgt, G.neg(s.src));  // r_tw = m (x) r
    Mor sP = t.compose(pc.s_tw, pc.u);   // in S: translate of s composed with an iso

    Mor big = t.tensor(t.identity(G.neg(m)), sP);
    Mor eps_m_g = t.tensor(t.epsilon(m), t.identity(r.src));
    auto inv = t.inverse(eps_m_g);
    if (!inv) throw std::logic_error("cancellation_witness: structural map not invertible");
    Mor s_prime = t.compose(eps_m_g, big);

    if (!S.contains(s_prime)) throw std::logic_error("cancellation_witness: s' escaped the system");
    if (!vec_is_zero(t.compose(r, s_prime).val))
        throw std::logic_error("cancellation_witness: r s' != 0");
    return s_prime;
}

// --- fractions ---------------------------------------------------------------

bool fraction_eq(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                 const LeftFraction& b) {
    if (a.r.src != b.r.src || a.s.src != b.s.src)
        throw std::invalid_argument("fraction_eq: endpoint mismatch");
    // common amplification: u a.s = v b.s in S and u a.r = v b.r
    for (int w = 0; w < t.objects(); ++w)
        for (const Vec& uv : t.hom_values(a.s.tgt, w)) {
            Mor u{a.s.tgt, w, uv};
            Mor us = t.compose(u, a.s);
            if (!S.contains(us)) continue;
            Mor ur = t.compose(u, a.r);
            for (const Vec& vv : t.hom_values(b.s.tgt, w)) {
                Mor v{b.s.tgt, w, vv};
                if (t.compose(v, b.s) == us && t.compose(v, b.r) == ur) return true;
            }
        }
    return false;
}

bool right_fraction_eq(const TwoRing& t, const MultSystem& S, const RightFraction& a,
                       const RightFraction& b) {
    if (a.r.tgt != b.r.tgt || a.s.tgt != b.s.tgt)
        throw std::invalid_argument("right_fraction_eq: endpoint mismatch");
    for (int w = 0; w < t.objects(); ++w)
        for (const Vec& uv : t.hom_values(w, a.s.src)) {
            Mor u{w, a.s.src, uv};
            Mor su = t.compose(a.s, u);
            if (!S.contains(su)) continue;
            Mor ru = t.compose(a.r, u);
            for (const Vec& vv : t.hom_values(w, b.s.src)) {
                Mor v{w, b.s.src, vv};
                if (t.compose(b.s, v) == su && t.compose(b.r, v) == ru) return true;
            }
        }
    return false;
}

bool fraction_eq_cross(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                       const LeftFraction& b) {
    // amplify to a common denominator with Ore, then kill the difference
    OreSquare sq = ore_complete(t, S, b.s, a.s);  // sq.s' b.s ... r' a.s
    Mor u = sq.r_prime;                           // applied to the a side
    Mor v = sq.s_prime;                           // applied to the b side, in S
    Mor den = t.compose(u, a.s);                  // equals v b.s
    if (!(den == t.compose(v, b.s))) throw std::logic_error("fraction_eq_cross: bad square");
    Mor delta = t.add(t.compose(u, a.r), t.scale(fp_neg(1, t.ring().p()), t.compose(v, b.r)));
    for (int w = 0; w < t.objects(); ++w)
        for (const Vec& kv : t.hom_values(delta.tgt, w)) {
            Mor k{delta.tgt, w, kv};
            if (!S.contains(t.compose(k, den))) continue;
            if (vec_is_zero(t.compose(k, delta).val)) return true;
        }
    return false;
}

LeftFraction fraction_compose(const TwoRing& t, const MultSystem& S, const LeftFraction& g,
                              const LeftFraction& f) {
    if (f.s.src != g.r.src) throw std::invalid_argument("fraction_compose: endpoints do not chain");
    // (s2^-1 r2)(s1^-1 r1) = (s~ s2)^-1 (r~ r1) where s~ r2 = r~ s1
    OreSquare sq = ore_complete(t, S, g.r, f.s);
    return {t.compose(sq.s_prime, g.s), t.compose(sq.r_prime, f.r)};
}

LeftFraction fraction_add(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                          const LeftFraction& b) {
    if (a.r.src != b.r.src || a.s.src != b.s.src)
        throw std::invalid_argument("fraction_add: endpoint mismatch");
    // common denominator s~ a.s = r~ b.s with s~ in S
    OreSquare sq = ore_complete(t, S, a.s, b.s);  // s': tgt(a.s)->m in S? note roles below
    // ore_complete(r = a.s, s = b.s): s' a.s = r' b.s with s' in S
    Mor den = t.compose(sq.s_prime, a.s);
    Mor num = t.add(t.compose(sq.s_prime, a.r), t.compose(sq.r_prime, b.r));
    return {den, num};
}

// --- localization ------------------------------------------------------------

namespace {

bool fraction_less(const GradedRing& R, const GradingGroup& G, const LeftFraction& a,
                   const LeftFraction& b) {
    if (a.s.tgt != b.s.tgt) return a.s.tgt < b.s.tgt;
    int ds_a = G.sub(a.s.tgt, a.s.src), ds_b = G.sub(b.s.tgt, b.s.src);
    int ia = R.value_index(ds_a, a.s.val), ib = R.value_index(ds_b, b.s.val);
    if (ia != ib) return ia < ib;
    int dr_a = G.sub(a.r.tgt, a.r.src), dr_b = G.sub(b.r.tgt, b.r.src);
    return R.value_index(dr_a, a.r.val) < R.value_index(dr_b, b.r.val);
}

}  // namespace

std::vector<LeftFraction> Localization::fractions(int x, int y) const {
    std::vector<LeftFraction> out;
    for (int z = 0; z < t_->objects(); ++z)
        for (const Mor& s : S_.slot(y, z))
            for (const Vec& rv : t_->hom_values(x, z)) out.push_back({s, Mor{x, z, rv}});
    return out;
}

int Localization::class_of(int x, int y, const LeftFraction& f) const {
    const auto& cls = classes_[slot_index(x, y)];
    for (std::size_t c = 0; c < cls.size(); ++c)
        if (fraction_eq(*t_, S_, cls[c].front(), f)) return static_cast<int>(c);
    throw std::logic_error("class_of: fraction matches no class");
}

void Localization::build_classes() {
    classes_.assign(static_cast<std::size_t>(t_->objects()) * t_->objects(), {});
    for (int x = 0; x < t_->objects(); ++x)
        for (int y = 0; y < t_->objects(); ++y) {
            auto& slot = classes_[slot_index(x, y)];
            std::vector<LeftFraction> all = fractions(x, y);
            std::sort(all.begin(), all.end(), [&](const LeftFraction& a, const LeftFraction& b) {
                return fraction_less(t_->ring(), t_->group(), a, b);
            });
            for (const LeftFraction& f : all) {
                bool placed = false;
                for (auto& cls : slot)
                    if (fraction_eq(*t_, S_, cls.front(), f)) {
                        cls.push_back(f);
                        placed = true;
                        break;
                    }
                if (!placed) slot.push_back({f});
            }
        }
}

void Localization::build_ring() {
    const GradedRing& R = t_->ring();
    const GradingGroup& G = t_->group();
    const int p = R.p();
    const int z0 = G.zero();

    // additive structure of the classes of hom(0, d)
    struct DegreeData {
        int zero_cls = -1;
        std::vector<int> basis_classes;
        std::map<Vec, int> coef_to_class;  // coefficient tuple -> class
        std::vector<Vec> class_to_coef;
    };
    std::vector<DegreeData> deg(t_->objects());

    for (int d = 0; d < t_->objects(); ++d) {
        int n = class_count(z0, d);
        DegreeData& dd = deg[d];
        LeftFraction zf{t_->identity(d), t_->zero_mor(z0, d)};
        dd.zero_cls = class_of(z0, d, zf);

        auto add_cls = [&](int c1, int c2) {
            LeftFraction f = fraction_add(*t_, S_, representative(z0, d, c1),
                                          representative(z0, d, c2));
            return class_of(z0, d, f);
        };

        // greedy basis over F_p
        std::map<int, Vec> span;  // class -> coefficient tuple
        span[dd.zero_cls] = Vec{};
        for (int c = 0; c < n; ++c) {
            if (span.count(c)) continue;
            // extend every spanned element by multiples of c
            dd.basis_classes.push_back(c);
            std::map<int, Vec> next;
            for (const auto& [cls, coef] : span) {
                int cur = cls;
                for (int k = 0; k < p; ++k) {
                    Vec ext = coef;
                    ext.push_back(static_cast<Coef>(k));
                    if (!next.count(cur)) next[cur] = ext;
                    if (k + 1 < p) cur = add_cls(cur, c);
                }
            }
            span = std::move(next);
        }
        if (static_cast<int>(span.size()) != n)
            throw std::logic_error("localization: classes do not form an F_p space");
        for (auto& [cls, coef] : span) {
            coef.resize(dd.basis_classes.size(), 0);
            dd.class_to_coef.resize(n);
            dd.coef_to_class[coef] = cls;
            dd.class_to_coef[cls] = coef;
        }
    }

    // assemble the graded ring of fraction classes
    std::vector<std::string> names;
    std::vector<int> degs;
    std::vector<std::pair<int, int>> origin;  // (degree, class)
    for (int d = 0; d < t_->objects(); ++d)
        for (int c : deg[d].basis_classes) {
            const LeftFraction& rep = representative(z0, d, c);
            names.push_back(value_to_string(R, rep.r.val) + "/" + value_to_string(R, rep.s.val));
            degs.push_back(d);
            origin.emplace_back(d, c);
        }

    const int qdim = static_cast<int>(names.size());
    auto coef_of_class = [&](int d, int cls) {
        Vec full(qdim, 0);
        const Vec& local = deg[d].class_to_coef[cls];
        int k = 0;
        for (int i = 0; i < qdim; ++i)
            if (origin[i].first == d) full[i] = local[k++];
        return full;
    };

    std::vector<Vec> table(static_cast<std::size_t>(qdim) * qdim, Vec(qdim, 0));
    for (int a = 0; a < qdim; ++a)
        for (int b = 0; b < qdim; ++b) {
            auto [da, ca] = origin[a];
            auto [db, cb] = origin[b];
            const LeftFraction& fa = representative(z0, da, ca);
            const LeftFraction& fb = representative(z0, db, cb);
            // ring product = (fa (x) id_db) o fb as a fraction 0 -> da+db
            LeftFraction fa_tw{t_->rtwist(fa.s, db), t_->rtwist(fa.r, db)};
            LeftFraction prod = fraction_compose(*t_, S_, fa_tw, fb);
            int cls = class_of(z0, G.add(da, db), prod);
            table[static_cast<std::size_t>(a) * qdim + b] = coef_of_class(G.add(da, db), cls);
        }

    loc_ring_ = std::make_shared<TwoRing>(GradedRing(p, G, R.eps(), names, degs, table));

    class_values_.assign(t_->objects(), {});
    for (int d = 0; d < t_->objects(); ++d)
        for (int c = 0; c < class_count(z0, d); ++c) class_values_[d][c] = coef_of_class(d, c);

    // the localization functor
    loc_functor_.source = t_;
    loc_functor_.target = loc_ring_;
    for (int g = 0; g < t_->objects(); ++g) loc_functor_.obj_map.push_back(g);
    for (int d = 0; d < t_->objects(); ++d) {
        int n = R.component_dim(d);
        int qn = loc_ring_->ring().component_dim(d);
        Mat m(qn, n);
        for (int i = 0; i < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            LeftFraction f{t_->identity(d), Mor{z0, d, R.component_embed(d, e)}};
            Vec qv = class_values_[d].at(class_of(z0, d, f));
            Vec qc = loc_ring_->ring().component_coords(d, qv);
            for (int rr = 0; rr < qn; ++rr) m.at(rr, i) = qc[rr];
        }
        loc_functor_.comp_map.push_back(std::move(m));
    }
}

Localization::Localization(std::shared_ptr<const TwoRing> t, MultSystem S)
    : t_(std::move(t)), S_(std::move(S)) {
    if (S_.parent_ptr().get() != t_.get())
        throw std::invalid_argument("Localization: system belongs to a different 2-ring");
    build_classes();
    build_ring();
}

Mor Localization::fraction_to_mor(const LeftFraction& f) const {
    const GradingGroup& G = t_->group();
    int x = f.r.src, y = f.s.src;
    // twist to canonical endpoints 0 -> y-x
    int nx = G.neg(x);
    LeftFraction f0{t_->ltwist(nx, f.s), t_->ltwist(nx, f.r)};
    int d = G.sub(y, x);
    int cls = class_of(G.zero(), d, f0);
    return {x, y, class_values_[d].at(cls)};
}

Vec Localization::class_value(int d, int cls) const { return class_values_[d].at(cls); }

Localization localize(std::shared_ptr<const TwoRing> t, MultSystem S) {
    return Localization(std::move(t), std::move(S));
}

Ideal localize_ideal(const Localization& L, const Ideal& I) {
    const TwoRing& t = L.source();
    Ideal out(L.localized());
    for (int d = 0; d < t.objects(); ++d)
        for (const LeftFraction& f : L.fractions(t.group().zero(), d)) {
            if (!I.contains(f.r)) continue;
            Mor lm = L.fraction_to_mor(f);
            if (!vec_is_zero(lm.val)) out.insert_value(d, lm.val);
        }
    return out;
}

std::vector<std::vector<int>> localize_ideal_class_sets(const Localization& L, const Ideal& I) {
    const TwoRing& t = L.source();
    std::vector<std::vector<int>> out(t.objects());
    for (int d = 0; d < t.objects(); ++d) {
        std::set<int> classes;
        for (const LeftFraction& f : L.fractions(t.group().zero(), d))
            if (I.contains(f.r)) classes.insert(L.class_of(t.group().zero(), d, f));
        out[d].assign(classes.begin(), classes.end());
    }
    return out;
}

SpecLocReport spec_localization(const Localization& L) {
    SpecLocReport rep;
    auto fail = [&](const std::string& m) { rep.violations.push_back(m); };

    std::shared_ptr<const TwoRing> src = L.loc().source;
    SpecSpace spec_src = enumerate_primes(src);
    SpecSpace spec_loc = enumerate_primes(L.localized_ptr());

    // the subset { p : p cap S = empty }
    std::vector<int> disjoint;
    for (std::size_t i = 0; i < spec_src.primes.size(); ++i) {
        bool meets = false;
        for (const Mor& m : spec_src.primes[i].members())
            if (L.system().contains(m)) meets = true;
        if (!meets) disjoint.push_back(static_cast<int>(i));
    }

    if (disjoint.size() != spec_loc.primes.size())
        fail("spectrum sizes differ: " + std::to_string(disjoint.size()) + " vs " +
             std::to_string(spec_loc.primes.size()));

    rep.forward.assign(disjoint.size(), -1);
    for (std::size_t k = 0; k < disjoint.size(); ++k) {
        Ideal image = localize_ideal(L, spec_src.primes[disjoint[k]]);
        if (!is_prime(image)) fail("S^-1 p is not prime");
        int idx = spec_loc.find_prime(image);
        if (idx < 0)
            fail("S^-1 p missing from the localized spectrum");
        else
            rep.forward[k] = idx;
    }

    rep.backward.assign(spec_loc.primes.size(), -1);
    for (std::size_t j = 0; j < spec_loc.primes.size(); ++j) {
        Ideal back = preimage_ideal(L.loc(), spec_loc.primes[j]);
        if (!is_prime(back)) fail("loc^-1 q is not prime");
        int idx = spec_src.find_prime(back);
        bool found = false;
        for (std::size_t k = 0; k < disjoint.size(); ++k)
            if (disjoint[k] == idx) {
                rep.backward[j] = static_cast<int>(k);
                found = true;
            }
        if (!found) fail("loc^-1 q meets S or is missing");
    }

    for (std::size_t k = 0; k < disjoint.size(); ++k)
        if (rep.forward[k] < 0 || rep.backward[rep.forward[k]] != static_cast<int>(k))
            fail("maps are not mutually inverse (forward first)");
    for (std::size_t j = 0; j < spec_loc.primes.size(); ++j)
        if (rep.backward[j] < 0 || rep.forward[rep.backward[j]] != static_cast<int>(j))
            fail("maps are not mutually inverse (backward first)");

    // every ideal of the localization is S^-1 of its preimage
    for (const Ideal& J : enumerate_ideals(L.localized()))
        if (!(localize_ideal(L, preimage_ideal(L.loc(), J)) == J)) {
            fail("an ideal of the localization is not S^-1 of its preimage");
            break;
        }

    // basic opens correspond: S^-1 p contains [s^-1 r] iff p contains r
    const TwoRing& t = L.source();
    bool claim5_ok = true;
    for (int x = 0; x < t.objects() && claim5_ok; ++x)
        for (int y = 0; y < t.objects() && claim5_ok; ++y)
            for (const LeftFraction& f : L.fractions(x, y)) {
                Mor lm = L.fraction_to_mor(f);
                for (std::size_t k = 0; k < disjoint.size(); ++k) {
                    if (rep.forward[k] < 0) continue;
                    const Ideal& p = spec_src.primes[disjoint[k]];
                    const Ideal& q = spec_loc.primes[rep.forward[k]];
                    if (q.contains(lm) != p.contains(f.r)) {
                        fail("basic-open correspondence fails");
                        claim5_ok = false;
                        break;
                    }
                }
                if (!claim5_ok) break;
            }

    return rep;
}

QuotLocReport quotient_localize_commute(std::shared_ptr<const TwoRing> t, const Ideal& I,
                                        const MultSystem& S) {
    QuotLocReport rep;
    auto fail = [&](const std::string& m) { rep.violations.push_back(m); };
    const GradingGroup& G = t->group();
    const int z0 = G.zero();
    const int p = t->ring().p();

    // side A: S^-1 T / S^-1 I
    Localization L1(t, S);
    Ideal IA = localize_ideal(L1, I);
    QuotientResult QA = quotient(L1.localized_ptr(), IA);
    RingFunctor FA = compose_functors(QA.proj, L1.loc());

    // side B: (S/I)^-1 (T/I)
    QuotientResult QB = quotient(t, I);
    std::vector<Mor> s_images;
    for (int g = 0; g < t->objects(); ++g)
        for (int h = 0; h < t->objects(); ++h)
            for (const Mor& m : S.slot(g, h)) s_images.push_back(QB.proj.apply(m));
    MultSystem SB = MultSystem::closure(QB.quotient, s_images);
    Localization L2(QB.quotient, SB);
    RingFunctor FB = compose_functors(L2.loc(), QB.proj);

    const GradedRing& RA = QA.quotient->ring();
    const GradedRing& RB = L2.localized().ring();

    // the canonical component-wise comparison, built from fractions over T
    std::vector<std::map<Vec, Vec>> phi(t->objects());
    for (int d = 0; d < t->objects(); ++d) {
        for (const LeftFraction& f : L1.fractions(z0, d)) {
            Vec aval = QA.proj.apply(L1.fraction_to_mor(f)).val;
            Mor sB = QB.proj.apply(f.s);
            Mor rB = QB.proj.apply(f.r);
            if (!SB.contains(sB)) {
                fail("image of a denominator escaped S/I");
                continue;
            }
            Vec bval = L2.fraction_to_mor({sB, rB}).val;
            auto [it, inserted] = phi[d].emplace(aval, bval);
            if (!inserted && it->second != bval) fail("comparison map is not well-defined");
        }
        // defined everywhere and bijective on the component
        if (phi[d].size() != RA.component_values(d).size())
            fail("comparison map not defined on the whole component");
        std::set<Vec> image;
        for (const auto& [a, b] : phi[d]) image.insert(b);
        if (image.size() != RB.component_values(d).size())
            fail("comparison map not bijective on a component");
        // additive
        for (const auto& [a1, b1] : phi[d])
            for (const auto& [a2, b2] : phi[d]) {
                Vec asum = vec_add(a1, a2, p);
                if (phi[d].count(asum) && phi[d][asum] != vec_add(b1, b2, p)) {
                    fail("comparison map is not additive");
                    break;
                }
            }
    }

    // multiplicative across components, hence compatible with composition
    // and tensor of the companion categories
    for (int d1 = 0; d1 < t->objects(); ++d1)
        for (int d2 = 0; d2 < t->objects(); ++d2) {
            for (const auto& [a1, b1] : phi[d1])
                for (const auto& [a2, b2] : phi[d2]) {
                    Vec pa = RA.multiply(a1, a2);
                    Vec pb = RB.multiply(b1, b2);
                    if (phi[G.add(d1, d2)][pa] != pb) {
                        fail("comparison map is not multiplicative");
                        d1 = d2 = t->objects();
                        goto done_mult;
                    }
                }
        done_mult:;
        }

    if (phi[z0].count(RA.one()) == 0 || phi[z0][RA.one()] != RB.one())
        fail("comparison map does not preserve the unit");

    // compatibility with the canonical functors from T
    for (const Mor& m : t->all_morphisms()) {
        Mor ma = FA.apply(m);
        Mor mb = FB.apply(m);
        if (phi[t->hom_degree(m.src, m.tgt)][ma.val] != mb.val) {
            fail("comparison does not commute with the canonical functors");
            break;
        }
    }

    return rep;
}

std::vector<std::string> saturation_and_local_check(std::shared_ptr<const TwoRing> t,
                                                    const Ideal& p) {
    std::vector<std::string> out;
    const TwoRing& T = *t;
    MultSystem S = MultSystem::at_prime(t, p);

    // (a) saturation: ts in S and sr in S force s in S
    for (int g = 0; g < T.objects(); ++g)
        for (int h = 0; h < T.objects(); ++h)
            for (int l = 0; l < T.objects(); ++l)
                for (int m = 0; m < T.objects(); ++m)
                    for (const Vec& rv : T.hom_values(g, h))
                        for (const Vec& sv : T.hom_values(h, l)) {
                            Mor r{g, h, rv}, s{h, l, sv};
                            if (S.contains(s)) continue;
                            Mor sr = T.compose(s, r);
                            if (!S.contains(sr)) continue;
                            for (const Vec& uv : T.hom_values(l, m)) {
                                Mor u{l, m, uv};
                                if (S.contains(T.compose(u, s))) {
                                    out.push_back("S_p is not saturated");
                                    goto saturation_done;
                                }
                            }
                        }
saturation_done:;

    // (b) S_p = { morphisms inverted by the localization }
    Localization L(t, S);
    for (const Mor& m : T.all_morphisms())
        if (S.contains(m) != L.localized().is_invertible(L.loc().apply(m))) {
            out.push_back("S_p differs from the preimage of the invertibles");
            break;
        }

    // (c) the non-invertible morphisms of the localization form the unique
    // maximal homogeneous ideal
    const TwoRing& Lt = L.localized();
    const GradedRing& LR = Lt.ring();
    std::vector<std::set<int>> noninv(Lt.objects());
    for (int d = 0; d < Lt.objects(); ++d) {
        const auto& vals = LR.component_values(d);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (!Lt.is_invertible(Mor{Lt.group().zero(), d, vals[i]}))
                noninv[d].insert(static_cast<int>(i));
    }
    Ideal J(Lt);
    for (int d = 0; d < Lt.objects(); ++d)
        for (int i : noninv[d]) J.insert_value(d, LR.component_values(d)[i]);
    for (int d = 0; d < Lt.objects(); ++d) {
        std::set<int> got;
        for (const Vec& c : J.component(d).elements())
            got.insert(LR.value_index(d, LR.component_embed(d, c)));
        if (got != noninv[d]) {
            out.push_back("non-invertibles do not form an ideal");
            break;
        }
    }
    std::vector<Ideal> lattice = enumerate_ideals(Lt);
    std::vector<const Ideal*> maximal;
    for (const Ideal& a : lattice) {
        if (!a.is_proper()) continue;
        bool is_max = true;
        for (const Ideal& b : lattice)
            if (b.is_proper() && a.subset_of(b) && !(a == b)) is_max = false;
        if (is_max) maximal.push_back(&a);
    }
    if (maximal.size() != 1)
        out.push_back("localization does not have a unique maximal ideal");
    else if (!(*maximal.front() == J))
        out.push_back("maximal ideal differs from the non-invertibles");

    return out;
}

std::vector<std::vector<RightFraction>> right_fraction_classes(const TwoRing& t,
                                                               const MultSystem& S, int x, int y) {
    std::vector<RightFraction> all;
    for (int z = 0; z < t.objects(); ++z)
        for (const Mor& s : S.slot(z, x))
            for (const Vec& rv : t.hom_values(z, y)) all.push_back({s, Mor{z, y, rv}});
    std::vector<std::vector<RightFraction>> classes;
    for (const RightFraction& f : all) {
        bool placed = false;
        for (auto& cls : classes)
            if (right_fraction_eq(t, S, cls.front(), f)) {
                cls.push_back(f);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({f});
    }
    return classes;
}

}  // namespace s2r
