#pragma once

#include <memory>
#include <string>
#include <vector>

#include "s2r/graded_ring.hpp"
#include "s2r/two_ring.hpp"

namespace s2r {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Ring axioms; safe on rings that fail them.
std::vector<CheckResult> verify_ring(const GradedRing& R);

/// Coherence, pseudo-commutativity, ideal lattice, annihilators, spectrum
/// and the ring-level correspondence.
std::vector<CheckResult> verify_suite_ideals(std::shared_ptr<const TwoRing> t);

/// Multiplicative systems, Ore calculus, fractions, localizations and their
/// spectra, saturation and local structure.
std::vector<CheckResult> verify_suite_loc(std::shared_ptr<const TwoRing> t);

/// Complexes, homology supports, sigma/rho and the support basis.
std::vector<CheckResult> verify_suite_support(std::shared_ptr<const TwoRing> t);

/// suite in {"all", "ideals", "loc", "support"}; ring axioms always run
/// first and gate the rest.
std::vector<CheckResult> run_verify(const GradedRing& R, const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace s2r
