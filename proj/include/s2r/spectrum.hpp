#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "s2r/functor.hpp"
#include "s2r/ideal.hpp"

namespace s2r {

/**
 * The Zariski spectrum of a companion category: primes in canonical key
 * order, the specialization relation, and the closed-set family generated
 * by the full ideal lattice.
 */
struct SpecSpace {
    std::shared_ptr<const TwoRing> t;
    std::vector<Ideal> primes;                    // sorted by canonical key
    std::vector<std::vector<bool>> leq;           // leq[i][j] : primes[i] subset primes[j]
    std::vector<std::vector<int>> closed_sets;    // sorted index sets, deduped

    int find_prime(const Ideal& p) const;
};

SpecSpace enumerate_primes(std::shared_ptr<const TwoRing> t);
SpecSpace enumerate_primes_serial(std::shared_ptr<const TwoRing> t);
SpecSpace enumerate_primes_parallel(std::shared_ptr<const TwoRing> t);

/// V(I) = { p : I subset p }, D_r = complement of V(<r>); prime indices.
std::vector<int> v_set(const SpecSpace& sp, const Ideal& ideal);
std::vector<int> d_set(const SpecSpace& sp, const Mor& r);

/// Constructive finite subcover: indices into the cover plus a decomposition
/// id_1 = sum_i s_i (l_i (x) r_i) u_i witnessing 1 in the sum of the
/// selected principal ideals.
struct SubcoverWitness {
    std::vector<int> chosen;  // indices into the cover
    // one summand per term: (cover index, s, twist object l, iso u)
    std::vector<std::tuple<int, Mor, int, Mor>> terms;
};
std::optional<SubcoverWitness> finite_subcover(const SpecSpace& sp, const std::vector<Mor>& cover);

/// Spectral-space verification: T0, stored relation consistent with the
/// primes, unique generic points for irreducible closed sets, basic-open
/// intersection rule, basis property, subcover witness.  Violations are
/// reported, not thrown.
std::vector<std::string> verify_spectral(const SpecSpace& sp);

/// Spec of a structure-preserving functor: p -> F^{-1} p, with the
/// spectral-map check preimage(D_r) = D_{Fr}.
struct SpecMapResult {
    std::vector<int> map;  // index in Spec(target) -> index in Spec(source)
    std::vector<std::string> violations;
};
SpecMapResult spec_of_morphism(const RingFunctor& f, const SpecSpace& source_spec,
                               const SpecSpace& target_spec);

Ideal preimage_ideal(const RingFunctor& f, const Ideal& target_ideal);

}  // namespace s2r
