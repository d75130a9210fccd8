#include "s2r/two_ring.hpp"

#include <stdexcept>

namespace s2r {

TwoRing::TwoRing(GradedRing ring) : ring_(std::make_shared<GradedRing>(std::move(ring))) {
    auto violations = ring_->check_axioms();
    if (!violations.empty())
        throw std::invalid_argument("TwoRing: ring fails axiom check (" + violations.front().kind +
                                    ": " + violations.front().detail + ")");
    derive_dual_signs();
}

bool TwoRing::valid_mor(const Mor& r) const {
    if (r.src < 0 || r.src >= objects() || r.tgt < 0 || r.tgt >= objects()) return false;
    if (static_cast<int>(r.val.size()) != ring_->dim()) return false;
    if (vec_is_zero(r.val)) return true;
    auto d = ring_->degree_of(r.val);
    return d && *d == hom_degree(r.src, r.tgt);
}

std::vector<Mor> TwoRing::hom(int g, int h) const {
    std::vector<Mor> out;
    for (const Vec& v : hom_values(g, h)) out.push_back({g, h, v});
    return out;
}

std::vector<Mor> TwoRing::all_morphisms() const {
    std::vector<Mor> out;
    for (int g = 0; g < objects(); ++g)
        for (int h = 0; h < objects(); ++h)
            for (const Vec& v : hom_values(g, h)) out.push_back({g, h, v});
    return out;
}

Mor TwoRing::gamma(int g, int h) const {
    int gh = group().add(g, h);
    Coef s = ring_->eps_sign(g, h);
    return {gh, gh, ring_->scale(s, ring_->one())};
}

Mor TwoRing::compose(const Mor& s, const Mor& r) const {
    if (r.tgt != s.src) throw std::invalid_argument("compose: endpoints do not chain");
    return {r.src, s.tgt, ring_->multiply(s.val, r.val)};
}

Mor TwoRing::add(const Mor& a, const Mor& b) const {
    if (a.src != b.src || a.tgt != b.tgt) throw std::invalid_argument("add: endpoint mismatch");
    return {a.src, a.tgt, ring_->add(a.val, b.val)};
}

Mor TwoRing::tensor(const Mor& a, const Mor& b) const {
    // a (x) b = (-1)^{eps(src a, src b - tgt b)} a b
    int e = ring_->eps().eval(group().elt(a.src), group().elt(group().sub(b.src, b.tgt)));
    Vec v = ring_->scale(fp_sign(e, ring_->p()), ring_->multiply(a.val, b.val));
    return {group().add(a.src, b.src), group().add(a.tgt, b.tgt), std::move(v)};
}

Mor TwoRing::ltwist(int obj, const Mor& r) const { return tensor(identity(obj), r); }

Mor TwoRing::rtwist(const Mor& r, int obj) const { return tensor(r, identity(obj)); }

bool TwoRing::dinaturality_holds(const Mor& r, const Mor& cand) const {
    // cand: -tgt -> -src, candidate for r^v
    int g = r.src, h = r.tgt;
    int ng = group().neg(g), nh = group().neg(h);
    // square 1: eps_h o (id_{h^v} (x) r) = eps_g o (cand (x) id_g)
    Mor lhs1 = compose(epsilon(h), tensor(identity(nh), r));
    Mor rhs1 = compose(epsilon(g), tensor(cand, identity(g)));
    if (!(lhs1 == rhs1)) return false;
    // square 2: (r (x) id_{g^v}) o eta_g = (id_h (x) cand) o eta_h
    Mor lhs2 = compose(tensor(r, identity(ng)), eta(g));
    Mor rhs2 = compose(tensor(identity(h), cand), eta(h));
    return lhs2 == rhs2;
}

void TwoRing::derive_dual_signs() {
    const int n = objects();
    dual_sign_.assign(static_cast<std::size_t>(n) * n, 1);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int d = hom_degree(g, h);
            const auto& vals = ring_->component_values(d);
            // any nonzero value pins the sign; a zero component leaves it at 1
            const Vec* probe = nullptr;
            for (const Vec& v : vals)
                if (!vec_is_zero(v)) { probe = &v; break; }
            if (!probe) continue;
            Mor r{g, h, *probe};
            int ng = group().neg(g), nh = group().neg(h);
            std::optional<Coef> found;
            for (int c = 1; c < ring_->p(); ++c) {
                Mor cand{nh, ng, ring_->scale(static_cast<Coef>(c), *probe)};
                if (dinaturality_holds(r, cand)) {
                    if (found) throw std::logic_error("dual sign not unique");
                    found = static_cast<Coef>(c);
                }
            }
            if (!found) throw std::logic_error("no dual sign satisfies dinaturality");
            dual_sign_[static_cast<std::size_t>(g) * n + h] = *found;
        }
}

Mor TwoRing::dual(const Mor& r) const {
    Coef c = dual_sign(r.src, r.tgt);
    return {group().neg(r.tgt), group().neg(r.src), ring_->scale(c, r.val)};
}

bool TwoRing::is_invertible(const Mor& r) const { return inverse(r).has_value(); }

std::optional<Mor> TwoRing::inverse(const Mor& r) const {
    for (const Vec& w : hom_values(r.tgt, r.src)) {
        Mor s{r.tgt, r.src, w};
        if (compose(s, r) == identity(r.src) && compose(r, s) == identity(r.tgt)) return s;
    }
    return std::nullopt;
}

std::vector<Mor> TwoRing::isos(int g, int h) const {
    int d = hom_degree(g, h);
    std::vector<Mor> out;
    for (int idx : ring_->component_units(d)) out.push_back({g, h, ring_->component_values(d)[idx]});
    return out;
}

std::optional<TranslateWitness> TwoRing::translate_witness(const Mor& r, const Mor& target) const {
    for (int g = 0; g < objects(); ++g) {
        Mor tw = ltwist(g, r);
        for (const Mor& u : isos(tw.tgt, target.tgt))
            for (const Mor& v : isos(target.src, tw.src))
                if (compose(u, compose(tw, v)) == target) return TranslateWitness{g, u, v};
    }
    return std::nullopt;
}

std::vector<Mor> TwoRing::translate_closure(const Mor& r) const {
    std::vector<Mor> out{r};
    std::vector<Mor> queue{r};
    auto push = [&](const Mor& m) {
        for (const Mor& o : out)
            if (o == m) return;
        out.push_back(m);
        queue.push_back(m);
    };
    while (!queue.empty()) {
        Mor m = queue.back();
        queue.pop_back();
        for (int g = 0; g < objects(); ++g) {
            push(ltwist(g, m));
            push(rtwist(m, g));
        }
        for (int h = 0; h < objects(); ++h) {
            for (const Mor& u : isos(m.tgt, h)) push(compose(u, m));
            for (const Mor& v : isos(h, m.src)) push(compose(m, v));
        }
    }
    return out;
}

PseudoCommuteWitness TwoRing::pseudo_commute(const Mor& r, const Mor& s) const {
    if (r.tgt != s.src) throw std::invalid_argument("pseudo_commute: pair not composable");
    int g = r.src, h = r.tgt, l = s.tgt;
    int nh = group().neg(h);
    int nhg = group().add(nh, g);

    // u: g -> h h^v g, assembled from the structural maps of the diagram
    // (all of them are unit-valued in the strict model)
    Mor eta_h_g = tensor(eta(h), identity(g));            // 1 g -> h h^v g
    Mor eta_g_g = tensor(eta(g), identity(g));            // 1 g -> g g^v g
    Mor g_eps_g = tensor(identity(g), epsilon(g));        // g g^v g -> g 1
    auto inv_of = [&](const Mor& m) {
        auto i = inverse(m);
        if (!i) throw std::logic_error("pseudo_commute: structural map not invertible");
        return *i;
    };
    Mor u = compose(eta_h_g, compose(inv_of(eta_g_g), inv_of(g_eps_g)));

    Mor s_tw = tensor(s, identity(nhg));                  // s (x) h^v g : h h^v g -> l h^v g
    Mor r_tw = tensor(identity(group().add(l, nh)), r);   // l h^v (x) r : l h^v g -> l h^v h
    Mor v = tensor(identity(l), epsilon(h));              // l h^v h -> l 1 = l

    return {u, s_tw, r_tw, v};
}

std::vector<std::string> TwoRing::coherence_report() const {
    std::vector<std::string> out;
    const int n = objects();

    // zig-zag identities for every object
    for (int g = 0; g < n; ++g) {
        int ng = group().neg(g);
        Mor z1 = compose(tensor(identity(g), epsilon(g)), tensor(eta(g), identity(g)));
        if (!(z1 == identity(g))) out.push_back("zig-zag 1 fails at object " + std::to_string(g));
        Mor z2 = compose(tensor(epsilon(g), identity(ng)), tensor(identity(ng), eta(g)));
        if (!(z2 == identity(ng))) out.push_back("zig-zag 2 fails at object " + std::to_string(g));
    }

    // gamma is an involution and natural in both arguments
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            Mor gg = compose(gamma(h, g), gamma(g, h));
            if (!(gg == identity(group().add(g, h))))
                out.push_back("gamma^2 != id at (" + std::to_string(g) + "," + std::to_string(h) + ")");
        }
    for (const Mor& a : all_morphisms())
        for (const Mor& b : all_morphisms()) {
            Mor lhs = compose(gamma(a.tgt, b.tgt), tensor(a, b));
            Mor rhs = compose(tensor(b, a), gamma(a.src, b.src));
            if (!(lhs == rhs)) {
                out.push_back("gamma not natural");
                return out;
            }
        }

    // strict hexagon on object triples: gamma_{g,h+l} = (h (x) gamma_{g,l}) o (gamma_{g,h} (x) l)
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int l = 0; l < n; ++l) {
                Mor lhs = gamma(g, group().add(h, l));
                Mor rhs = compose(tensor(identity(h), gamma(g, l)), tensor(gamma(g, h), identity(l)));
                if (!(lhs == rhs))
                    out.push_back("hexagon fails at (" + std::to_string(g) + "," + std::to_string(h) +
                                  "," + std::to_string(l) + ")");
            }

    return out;
}

std::string mor_to_string(const TwoRing& t, const Mor& m) {
    return value_to_string(t.ring(), m.val) + ":" + group_elt_to_string(t.group().elt(m.src)) +
           "->" + group_elt_to_string(t.group().elt(m.tgt));
}

}  // namespace s2r
