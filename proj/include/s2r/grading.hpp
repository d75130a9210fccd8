#pragma once

#include <map>
#include <string>
#include <vector>

namespace s2r {

/// Element of a finite abelian group, as a tuple of residues.
using GroupElt = std::vector<int>;

/**
 * Finite abelian group prod_i Z/n_i, given by its invariant factors
 * (all n_i >= 2; the empty list is the trivial group).  Elements are
 * addressed by their index in the lexicographic enumeration, which keeps
 * the hot loops on small ints.
 */
class GradingGroup {
public:
    GradingGroup() : GradingGroup(std::vector<int>{}) {}
    explicit GradingGroup(std::vector<int> invariant_factors);

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    int size() const { return static_cast<int>(elts_.size()); }

    /// All elements, lexicographic in the residue tuples.
    const std::vector<GroupElt>& elements() const { return elts_; }
    const GroupElt& elt(int i) const { return elts_[i]; }

    int index_of(const GroupElt& e) const;

    int zero() const { return zero_; }
    int add(int a, int b) const { return add_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }

    bool operator==(const GradingGroup& o) const { return factors_ == o.factors_; }

private:
    std::vector<int> factors_;
    std::vector<GroupElt> elts_;
    std::vector<std::vector<int>> add_;
    std::vector<int> neg_;
    int zero_ = 0;
};

/**
 * Z/2-valued bilinear form on a grading group, stored as a bit matrix of
 * size rank x rank.  eval(a,b) = a^T M b mod 2.
 */
class SignForm {
public:
    SignForm() = default;
    explicit SignForm(std::vector<std::vector<int>> matrix) : m_(std::move(matrix)) {}

    static SignForm zero(int rank) {
        return SignForm(std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0)));
    }

    const std::vector<std::vector<int>>& matrix() const { return m_; }

    int eval(const GroupElt& a, const GroupElt& b) const;

    bool is_symmetric() const;

    /// Well-definedness on residues: M_ij must vanish when n_i or n_j is odd.
    bool well_defined_for(const GradingGroup& g) const;

    bool operator==(const SignForm& o) const { return m_ == o.m_; }

private:
    std::vector<std::vector<int>> m_;
};

std::string group_elt_to_string(const GroupElt& e);

}  // namespace s2r
