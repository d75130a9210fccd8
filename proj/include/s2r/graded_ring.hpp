#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s2r/fp.hpp"
#include "s2r/grading.hpp"

namespace s2r {

/// One finding of check_axioms: which law failed and where.
struct RingViolation {
    std::string kind;    // "degree", "assoc", "unit", "eps-comm", "eps-form"
    std::string detail;
};

/**
 * Finite G-graded eps-commutative algebra over F_p, given by a graded basis
 * and a multiplication table.  Elements are dense coefficient vectors over
 * the whole basis; homogeneous elements are supported in a single degree.
 *
 * Instances are immutable after construction and cheap to share by
 * reference across threads.
 */
class GradedRing {
public:
    GradedRing(int characteristic, GradingGroup group, SignForm eps,
               std::vector<std::string> basis_names, std::vector<int> basis_degrees,
               std::vector<Vec> mult_table);

    int p() const { return p_; }
    const GradingGroup& group() const { return group_; }
    const SignForm& eps() const { return eps_; }
    int dim() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<int>& basis_degrees() const { return degs_; }

    /// Product of basis elements i and j, as a dense coefficient vector.
    const Vec& table(int i, int j) const { return mult_[static_cast<std::size_t>(i) * dim() + j]; }

    Vec zero() const { return Vec(dim(), 0); }
    const Vec& one() const { return one_; }
    bool is_zero_ring() const { return dim() == 0; }

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const { return vec_add(a, b, p_); }
    Vec negate(const Vec& a) const { return vec_neg(a, p_); }
    Vec scale(Coef c, const Vec& a) const { return vec_scale(c, a, p_); }

    /// Sign (-1)^{eps(a,b)} as an element of F_p, degrees by index.
    Coef eps_sign(int deg_a, int deg_b) const {
        return fp_sign(eps_.eval(group_.elt(deg_a), group_.elt(deg_b)), p_);
    }

    /// Basis indices of the homogeneous component R_d.
    const std::vector<int>& component_basis(int d) const { return comp_basis_[d]; }
    int component_dim(int d) const { return static_cast<int>(comp_basis_[d].size()); }

    /// All p^{dim R_d} elements of R_d (dense vectors), deterministic order.
    const std::vector<Vec>& component_values(int d) const { return comp_values_[d]; }

    /// Index of a homogeneous value within component_values(d); throws if v
    /// is not supported in degree d.
    int value_index(int d, const Vec& v) const;

    /// Coordinates of a degree-d value over the component basis, and back.
    Vec component_coords(int d, const Vec& v) const;
    Vec component_embed(int d, const Vec& coords) const;

    /// Degree of a nonzero homogeneous element; nullopt for 0 or mixed support.
    std::optional<int> degree_of(const Vec& v) const;
    bool is_homogeneous(const Vec& v) const { return vec_is_zero(v) || degree_of(v).has_value(); }

    /// Two-sided invertibility in the ring; the inverse of a degree-d unit
    /// lives in degree -d.
    bool is_unit(const Vec& v) const;
    std::optional<Vec> unit_inverse(const Vec& v) const;

    /// Value indices of the units inside component d.
    const std::vector<int>& component_units(int d) const { return comp_units_[d]; }

    /// Exhaustive axiom check over basis tuples; empty result = valid ring.
    std::vector<RingViolation> check_axioms() const;

    bool operator==(const GradedRing& o) const;

private:
    int p_;
    GradingGroup group_;
    SignForm eps_;
    std::vector<std::string> names_;
    std::vector<int> degs_;
    std::vector<Vec> mult_;

    Vec one_;
    std::vector<std::vector<int>> comp_basis_;
    std::vector<std::vector<Vec>> comp_values_;
    std::vector<std::vector<int>> comp_units_;

    void find_unit();
    void build_components();
};

/// Element of a graded ring: coefficients plus (optional) homogeneity tag.
struct RingElement {
    const GradedRing* ring = nullptr;
    Vec coeffs;

    bool is_homogeneous() const { return ring->is_homogeneous(coeffs); }
    std::optional<int> degree() const { return ring->degree_of(coeffs); }
};

RingElement multiply(const RingElement& a, const RingElement& b);

/// Renders a value as a linear combination of basis names ("x+2y", "0").
std::string value_to_string(const GradedRing& R, const Vec& v);

// --- fixture library -------------------------------------------------------

GradedRing fixture_Z0();
GradedRing fixture_D2();
GradedRing fixture_P2();
GradedRing fixture_U2();
GradedRing fixture_E3();

const std::vector<std::string>& fixture_names();
GradedRing fixture_by_name(const std::string& name);

/**
 * Seed-reproducible random ring: random graded multiplication tables with a
 * forced unit, rejection-sampled through check_axioms.  Always returns a
 * valid ring with |R| <= 81.
 */
GradedRing random_ring(std::uint64_t seed);

}  // namespace s2r
