#pragma once

#include <string>
#include <vector>

#include "s2r/graded_ring.hpp"
#include "s2r/ideal.hpp"

namespace s2r {

/**
 * Homogeneous two-sided ideal computed purely at ring level: one subgroup
 * per degree, closed under multiplication by homogeneous elements on both
 * sides.  Deliberately independent of the categorical Ideal machinery; the
 * two are reconciled by the companion-category correspondence.
 */
class RingIdeal {
public:
    explicit RingIdeal(const GradedRing& R);

    const GradedRing& ring() const { return *R_; }
    const Subspace& component(int d) const { return comp_[d]; }
    bool contains(int d, const Vec& v) const;
    bool insert(int d, const Vec& v);  // closes afterwards
    bool subset_of(const RingIdeal& o) const;
    bool operator==(const RingIdeal& o) const;
    bool is_proper() const;
    std::string key() const;

    /// Nonzero homogeneous members as (degree, value) pairs.
    std::vector<std::pair<int, Vec>> members() const;

private:
    const GradedRing* R_;
    std::vector<Subspace> comp_;
    void close();
};

RingIdeal ring_ideal_generate(const GradedRing& R, const std::vector<std::pair<int, Vec>>& gens);
std::vector<RingIdeal> enumerate_ring_ideals(const GradedRing& R);

/// Prime over homogeneous element pairs: ab in I forces a in I or b in I.
bool ring_ideal_is_prime(const RingIdeal& ideal);

std::vector<RingIdeal> enumerate_ring_primes(const GradedRing& R);

/// The correspondence between ring-level homogeneous ideals and the
/// companion category's homogeneous ideals: elements of I become morphisms
/// out of the tensor unit and are closed categorically; the inverse map
/// reads off the slots out of 0.
Ideal corr_to_companion(const TwoRing& t, const RingIdeal& I);
RingIdeal corr_to_ring(const Ideal& I);

struct CorrespondenceReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Verifies that the two prime enumerations are mutually inverse bijections
/// and that closed sets correspond.
CorrespondenceReport ring_spec_correspondence(const TwoRing& t);

}  // namespace s2r
