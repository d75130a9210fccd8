#pragma once

#include <map>
#include <set>
#include <vector>

#include "s2r/ideal.hpp"
#include "s2r/two_ring.hpp"

namespace s2r::reference {

/**
 * Slot-level homogeneous ideal: one explicit morphism-value set per ordered
 * pair of objects, with the closure rules applied literally.  This is the
 * serial reference the optimized degree-collapsed Ideal is tested against;
 * it is exponential in patience, fixture-sized inputs only.
 */
struct SlotIdeal {
    const TwoRing* t;
    // slot (g,h) -> set of values (zero always present)
    std::map<std::pair<int, int>, std::set<Vec>> slots;

    bool contains(const Mor& m) const;
};

/// Least slot ideal containing gens, closed under {sums, compose-left,
/// compose-right, left twists by every object, right twists}.
SlotIdeal slot_ideal_generate(const TwoRing& t, const std::vector<Mor>& gens);

/// Same fixpoint but under the weaker rule set {sums, compose-left,
/// compose-right, left twists only}.
SlotIdeal slot_ideal_generate_weak(const TwoRing& t, const std::vector<Mor>& gens);

/// Primality read off the slot sets, walking composable pairs as such.
bool slot_is_prime(const SlotIdeal& ideal);

/// Primality over arbitrary (not necessarily composable) pairs, adjusted by
/// translating the first factor into composing position.
bool slot_is_prime_translate_adjusted(const SlotIdeal& ideal);

bool slot_equals(const SlotIdeal& a, const Ideal& b);

/// All ideals as closures of all subsets of the nonzero homogeneous values
/// placed at canonical endpoints 0 -> d.  Fixture-sized inputs only.
std::vector<Ideal> enumerate_ideals_powerset(const TwoRing& t);

}  // namespace s2r::reference
