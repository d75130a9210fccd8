#pragma once

#include <string>
#include <vector>

#include "s2r/functor.hpp"
#include "s2r/two_ring.hpp"

namespace s2r {

/**
 * Homogeneous ideal of a companion category.  Twist-closure makes the slot
 * I(g,h) depend only on h-g as a value set, so the ideal is stored as one
 * F_p-subspace per degree; slot() rebuilds the extensional per-endpoint
 * view.  The slot-level reference implementation in reference.hpp checks
 * this collapse on the fixtures.
 */
class Ideal {
public:
    explicit Ideal(const TwoRing& t);  // zero ideal
    static Ideal whole(const TwoRing& t);

    const TwoRing& parent() const { return *t_; }

    bool contains_value(int deg, const Vec& v) const;
    bool contains(const Mor& m) const;

    /// Component I(0,d) as a subspace in component coordinates.
    const Subspace& component(int d) const { return comp_[d]; }

    /// Extensional slot view: all members of I(g,h), zero included.
    std::vector<Mor> slot(int g, int h) const;

    /// Nonzero members placed at canonical endpoints (0 -> d), every degree.
    std::vector<Mor> members() const;

    /// Adds m and restores closure; returns true if the ideal grew.
    bool insert(const Mor& m);
    bool insert_value(int deg, const Vec& v);

    bool subset_of(const Ideal& o) const;
    bool operator==(const Ideal& o) const;

    bool is_proper() const;
    bool is_whole() const;
    int total_dim() const;

    /// Canonical key: per-degree sorted member indices.  Stable across runs;
    /// used for dedup and for ordering spectra.
    std::string key() const;

private:
    const TwoRing* t_;
    std::vector<Subspace> comp_;  // per degree, in component coordinates

    void close();
};

Ideal ideal_generate(const TwoRing& t, const std::vector<Mor>& gens);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Product via composites (span of pairwise compositions).
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Product as the ideal generated by tensors s (x) t; must agree with
/// ideal_product (tested, and asserted by verify suites).
Ideal ideal_product_tensor(const Ideal& a, const Ideal& b);

/// Primality over composable pairs, object triples walked literally.
bool is_prime(const Ideal& ideal);

/// Annihilator as the generated ideal of the composable left-killers of s.
Ideal annihilator(const TwoRing& t, const Mor& s);
/// The two direct descriptions, as raw member sets per degree (for the
/// three-way agreement checks).
std::vector<std::vector<Vec>> annihilator_left_set(const TwoRing& t, const Mor& s);
std::vector<std::vector<Vec>> annihilator_right_set(const TwoRing& t, const Mor& s);

/// Explicit principal-ideal member sets: {s (l (x) r) u} and {v (r (x) k) t}.
std::vector<std::vector<Vec>> principal_left_form(const TwoRing& t, const Mor& r);
std::vector<std::vector<Vec>> principal_right_form(const TwoRing& t, const Mor& r);

/// Full ideal lattice by closure BFS, sorted by canonical key.
std::vector<Ideal> enumerate_ideals(const TwoRing& t);
std::vector<Ideal> enumerate_ideals_serial(const TwoRing& t);
std::vector<Ideal> enumerate_ideals_parallel(const TwoRing& t);

/// Quotient 2-ring together with the projection functor.
struct QuotientResult {
    std::shared_ptr<const TwoRing> quotient;
    RingFunctor proj;
};
QuotientResult quotient(std::shared_ptr<const TwoRing> t, const Ideal& ideal);

}  // namespace s2r
