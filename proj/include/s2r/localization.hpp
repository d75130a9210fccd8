#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2r/functor.hpp"
#include "s2r/ideal.hpp"

namespace s2r {

/**
 * Homogeneous multiplicative system: contains all isomorphisms, closed under
 * composites and translates.  Like ideals, translate-closure collapses the
 * member sets to one value set per degree.
 */
class MultSystem {
public:
    static MultSystem closure(std::shared_ptr<const TwoRing> t, const std::vector<Mor>& gens);
    static MultSystem isos_only(std::shared_ptr<const TwoRing> t) { return closure(t, {}); }
    /// S_r: smallest system containing r.
    static MultSystem away_from(std::shared_ptr<const TwoRing> t, const Mor& r) {
        return closure(t, {r});
    }
    /// S_p: complement of a prime.
    static MultSystem at_prime(std::shared_ptr<const TwoRing> t, const Ideal& p);

    const TwoRing& parent() const { return *t_; }
    std::shared_ptr<const TwoRing> parent_ptr() const { return t_; }

    bool contains_value(int deg, const Vec& v) const;
    bool contains(const Mor& m) const { return contains_value(t_->hom_degree(m.src, m.tgt), m.val); }

    /// Members g -> h.
    std::vector<Mor> slot(int g, int h) const;

    /// Closure/translate/dual-stability checks; empty = valid system.
    std::vector<std::string> check_invariants() const;

    bool contains_zero() const;
    std::string key() const;

private:
    explicit MultSystem(std::shared_ptr<const TwoRing> t);
    std::shared_ptr<const TwoRing> t_;
    std::vector<std::vector<char>> member_;  // per degree: one flag per component value
};

/// s^{-1} r with a common target: s: y -> z in S, r: x -> z.
struct LeftFraction {
    Mor s;
    Mor r;
};

/// r s^{-1} with a common source: s: z -> x in S, r: z -> y.
struct RightFraction {
    Mor s;
    Mor r;
};

struct OreSquare {
    Mor s_prime;
    Mor r_prime;
};

/**
 * Left Ore completion for r: g -> h and s: g -> l with s in S: produces
 * s': h -> m in S and r': l -> m with s' r = r' s, built from the explicit
 * diagram (duals, evaluations, twists); the equation is verified before
 * returning.
 */
OreSquare ore_complete(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s);

/// Exhaustive-search oracle for the left Ore condition.
std::optional<OreSquare> ore_search(const TwoRing& t, const MultSystem& S, const Mor& r,
                                    const Mor& s);

/// Right Ore completion for r: x -> z and s: y -> z with s in S: produces
/// s': m -> x in S and r': m -> y with r s' = s r'; built through duals.
OreSquare right_ore_complete(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s);

/// Given s r = 0 with s in S, constructs s' in S with r s' = 0.
Mor cancellation_witness(const TwoRing& t, const MultSystem& S, const Mor& r, const Mor& s);

/// Equality by common amplification, decided by exhaustive witness search.
bool fraction_eq(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                 const LeftFraction& b);
bool right_fraction_eq(const TwoRing& t, const MultSystem& S, const RightFraction& a,
                       const RightFraction& b);

/// Ore-based cross-multiplication equality test; must agree with
/// fraction_eq (tested).
bool fraction_eq_cross(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                       const LeftFraction& b);

LeftFraction fraction_compose(const TwoRing& t, const MultSystem& S, const LeftFraction& g,
                              const LeftFraction& f);
LeftFraction fraction_add(const TwoRing& t, const MultSystem& S, const LeftFraction& a,
                          const LeftFraction& b);

/**
 * The localized 2-ring.  Hom-sets are materialized equivalence classes of
 * left fractions; the classes of morphisms 0 -> d assemble into a graded
 * ring whose companion category is the result.  Class representatives are
 * the lexicographically least (s, r) pairs.
 */
class Localization {
public:
    Localization(std::shared_ptr<const TwoRing> t, MultSystem S);

    const TwoRing& source() const { return *t_; }
    const MultSystem& system() const { return S_; }
    const TwoRing& localized() const { return *loc_ring_; }
    std::shared_ptr<const TwoRing> localized_ptr() const { return loc_ring_; }
    const RingFunctor& loc() const { return loc_functor_; }

    /// All fractions x -> y, deterministic order.
    std::vector<LeftFraction> fractions(int x, int y) const;

    int class_count(int x, int y) const { return static_cast<int>(classes_[slot_index(x, y)].size()); }
    int class_of(int x, int y, const LeftFraction& f) const;
    const LeftFraction& representative(int x, int y, int cls) const {
        return classes_[slot_index(x, y)][cls].front();
    }

    /// The localized morphism represented by a fraction.
    Mor fraction_to_mor(const LeftFraction& f) const;

    /// Value of a hom(0,d) fraction class in the localized component d.
    Vec class_value(int d, int cls) const;

private:
    int slot_index(int x, int y) const { return x * t_->objects() + y; }
    void build_classes();
    void build_ring();

    std::shared_ptr<const TwoRing> t_;
    MultSystem S_;
    std::vector<std::vector<std::vector<LeftFraction>>> classes_;  // per slot: class -> fractions
    std::vector<std::map<int, Vec>> class_values_;  // per degree: class index -> localized value
    std::shared_ptr<const TwoRing> loc_ring_;
    RingFunctor loc_functor_;
};

Localization localize(std::shared_ptr<const TwoRing> t, MultSystem S);

/// S^{-1} I = { [s^{-1} r] : r in I } as an ideal of the localization.
Ideal localize_ideal(const Localization& L, const Ideal& I);

/// Raw class sets per degree (before any closure), for the claim that
/// S^{-1} I is already an ideal.
std::vector<std::vector<int>> localize_ideal_class_sets(const Localization& L, const Ideal& I);

struct SpecLocReport {
    std::vector<std::string> violations;
    std::vector<int> forward;   // index in {p : p cap S empty} -> index in Spec(S^-1 R)
    std::vector<int> backward;  // inverse direction
};

/// The homeomorphism Spec(S^-1 R) ~ {p : p cap S = empty}, with primality,
/// mutual inverse, ideal-recovery and basic-open checks.
SpecLocReport spec_localization(const Localization& L);

struct QuotLocReport {
    std::vector<std::string> violations;
};

/// Compares S^-1 T / S^-1 I with (S/I)^-1 (T/I) through the canonical
/// functor; checks hom-set bijectivity and preservation of composition,
/// tensor and the canonical maps from T.
QuotLocReport quotient_localize_commute(std::shared_ptr<const TwoRing> t, const Ideal& I,
                                        const MultSystem& S);

/// Saturation of S_p and the local structure of the localization at p.
std::vector<std::string> saturation_and_local_check(std::shared_ptr<const TwoRing> t,
                                                    const Ideal& p);

/// Right-fraction hom classes: used to check that left and right
/// localizations agree.
std::vector<std::vector<RightFraction>> right_fraction_classes(const TwoRing& t,
                                                               const MultSystem& S, int x, int y);

}  // namespace s2r
