#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s2r/graded_ring.hpp"

namespace s2r {

/**
 * Arrow g -> h of a companion category: endpoints are grading-group element
 * indices, the value is a homogeneous ring element of degree h - g.
 */
struct Mor {
    int src = 0;
    int tgt = 0;
    Vec val;

    bool operator==(const Mor& o) const = default;
};

struct TranslateWitness {
    int twist;  // object g with r' = u (g (x) r) v
    Mor u;
    Mor v;
};

struct PseudoCommuteWitness {
    Mor u;       // iso g -> h h^v g
    Mor s_tw;    // s (x) h^v (x) g
    Mor r_tw;    // l (x) h^v (x) r
    Mor v;       // iso l h^v h -> l
};

/**
 * Companion category of a graded ring: objects are the grading group's
 * elements, hom(g,h) = R_{h-g}, composition is ring multiplication and the
 * tensor is twisted by the sign form.  Strict: associator and unitors are
 * identities.  Duality signs are derived at construction by checking the
 * dinaturality squares, never assumed from a formula.
 */
class TwoRing {
public:
    explicit TwoRing(GradedRing ring);

    const GradedRing& ring() const { return *ring_; }
    std::shared_ptr<const GradedRing> ring_ptr() const { return ring_; }
    const GradingGroup& group() const { return ring_->group(); }
    int objects() const { return group().size(); }
    bool is_zero() const { return ring_->is_zero_ring(); }

    // hom(g,h) = R_{h-g}
    int hom_degree(int g, int h) const { return group().sub(h, g); }
    const std::vector<Vec>& hom_values(int g, int h) const {
        return ring_->component_values(hom_degree(g, h));
    }
    std::vector<Mor> hom(int g, int h) const;
    std::vector<Mor> all_morphisms() const;

    Mor zero_mor(int g, int h) const { return {g, h, ring_->zero()}; }
    Mor identity(int g) const { return {g, g, ring_->one()}; }

    /// Unit-valued coherence morphisms of the strict model.
    Mor eta(int g) const { return {group().zero(), group().zero(), ring_->one()}; }
    Mor epsilon(int g) const { return {group().zero(), group().zero(), ring_->one()}; }
    Mor gamma(int g, int h) const;

    Mor compose(const Mor& s, const Mor& r) const;
    Mor add(const Mor& a, const Mor& b) const;
    Mor scale(Coef c, const Mor& a) const { return {a.src, a.tgt, ring_->scale(c, a.val)}; }
    Mor tensor(const Mor& a, const Mor& b) const;

    Mor ltwist(int obj, const Mor& r) const;  // obj (x) r
    Mor rtwist(const Mor& r, int obj) const;  // r (x) obj

    /// Dual morphism -h -> -g; the sign comes from the cached dinaturality
    /// search (see dual_sign).
    Mor dual(const Mor& r) const;

    /// Cached sign c with dual(r).val = c * r.val for r: g -> h.
    Coef dual_sign(int g, int h) const { return dual_sign_[static_cast<std::size_t>(g) * objects() + h]; }

    bool is_invertible(const Mor& r) const;
    std::optional<Mor> inverse(const Mor& r) const;
    bool is_iso(const Mor& r) const { return is_invertible(r); }

    /// All isomorphisms g -> h.
    std::vector<Mor> isos(int g, int h) const;

    std::optional<TranslateWitness> translate_witness(const Mor& r, const Mor& target) const;
    bool is_translate(const Mor& r, const Mor& target) const {
        return translate_witness(r, target).has_value();
    }

    /// Fixpoint closure of {r} under twists and composition with isos; the
    /// reference oracle for translate_witness.
    std::vector<Mor> translate_closure(const Mor& r) const;

    PseudoCommuteWitness pseudo_commute(const Mor& r, const Mor& s) const;

    /// Coherence checks of the strict model: zig-zags, symmetry squared,
    /// naturality of gamma, hexagon on object triples.  Returns violation
    /// descriptions (empty = pass).
    std::vector<std::string> coherence_report() const;

    bool valid_mor(const Mor& r) const;

private:
    std::shared_ptr<const GradedRing> ring_;
    std::vector<Coef> dual_sign_;  // |G| x |G|

    void derive_dual_signs();
    bool dinaturality_holds(const Mor& r, const Mor& cand) const;
};

std::string mor_to_string(const TwoRing& t, const Mor& m);

}  // namespace s2r
