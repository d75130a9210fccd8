#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "s2r/ring_level.hpp"
#include "s2r/two_ring.hpp"

namespace s2r {

/**
 * Finitely generated graded left module, realized as one F_p space per
 * degree plus the action matrices of the ring basis elements.
 */
struct GradedModule {
    const GradedRing* R = nullptr;
    std::vector<int> dims;  // per degree d: dim M_d
    // action[i][d]: matrix M_d -> M_{d + |b_i|} for ring basis element i
    std::vector<std::vector<Mat>> action;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }

    /// Action of an arbitrary homogeneous value on M_d.
    Mat value_action(int val_deg, const Vec& v, int d) const;

    /// Degree-respecting, unital, associative action; empty = valid.
    std::vector<std::string> check() const;
};

/**
 * Bounded complex of twisted free modules R(g) with degree-0 differentials
 * acting by right multiplication.  R(g)_d = R_{d+g}; terms[k] lists the
 * generator twists of the term at cohomological index min_index + k.
 */
struct Complex {
    const GradedRing* R = nullptr;
    int min_index = 0;
    std::vector<std::vector<int>> terms;
    // diff[k]: matrix from terms[k] to terms[k+1]; entry (i,j) is a value in
    // R_{g_{k+1,j} - g_{k,i}}
    std::vector<std::vector<std::vector<Vec>>> diff;

    int index_of(int slot) const { return min_index + slot; }
    int slots() const { return static_cast<int>(terms.size()); }

    std::vector<std::string> check() const;  // shapes, degrees, d^2 = 0
};

Complex zero_complex(const GradedRing& R);
Complex free_twist(const GradedRing& R, int g, int n);  // R(g) placed in index n
Complex cone_of(const TwoRing& t, const Mor& r);         // R(src) -> R(tgt) in [-1, 0]
Complex shift(const Complex& c, int k);                  // C[k]^n = C^{n+k}
Complex twist(const Complex& c, int g);                  // - (x) R(g)
Complex direct_sum(const Complex& a, const Complex& b);
bool is_acyclic(const Complex& c);

/// Degree-0 chain map between complexes; entries like differentials.
struct ChainMap {
    const Complex* from = nullptr;
    const Complex* to = nullptr;
    // comp[k]: matrix from from->terms at index n to to->terms at the same n
    std::vector<std::vector<std::vector<Vec>>> comp;
};

/// All chain maps from a to b, as a basis of the F_p solution space.
std::vector<ChainMap> chain_map_basis(const Complex& a, const Complex& b);

Complex mapping_cone(const ChainMap& f);

GradedModule homology(const Complex& c, int n);

/// Free module R(g) and quotients R/I (g) as explicit modules.
GradedModule free_module(const GradedRing& R, int g);
GradedModule quotient_module(const GradedRing& R, const RingIdeal& I, int g);

/// Support as V(Ann M) over the ring-level homogeneous primes; prime keys.
std::set<std::string> module_supp(const GradedModule& m);
/// Independent oracle: primes p where the localized module survives.
std::set<std::string> module_supp_localization(const GradedModule& m);

RingIdeal module_annihilator(const GradedModule& m);

std::set<std::string> supph(const Complex& c);

/// Prime thick ideal model sigma(p) = { E : p not in supph E }.
struct ThickIdealModel {
    const GradedRing* R = nullptr;
    std::string prime_key;  // key of a ring-level homogeneous prime
    bool contains(const Complex& c) const { return supph(c).count(prime_key) == 0; }
};

ThickIdealModel sigma(const GradedRing& R, const RingIdeal& p);

/// rho(P) = { r : cone(r) not in P }, assembled and verified to be a prime
/// homogeneous ideal; throws if the model is inconsistent.
Ideal rho(const TwoRing& t, const ThickIdealModel& P);

/// Support-basis checks: supph(cone r) = V(<r>) through the ring/companion
/// correspondence, and the closed-set basis property.
std::vector<std::string> basis_check(const TwoRing& t);

}  // namespace s2r
