#include "s2r/grading.hpp"

#include <stdexcept>

namespace s2r {

GradingGroup::GradingGroup(std::vector<int> invariant_factors)
    : factors_(std::move(invariant_factors)) {
    for (int n : factors_)
        if (n < 2) throw std::invalid_argument("GradingGroup: invariant factors must be >= 2");

    // lexicographic enumeration of residue tuples (mixed-radix counting)
    long total = 1;
    for (int n : factors_) total *= n;
    elts_.reserve(total);
    GroupElt cur(factors_.size(), 0);
    for (long k = 0; k < total; ++k) {
        elts_.push_back(cur);
        for (int i = static_cast<int>(factors_.size()) - 1; i >= 0; --i) {
            if (++cur[i] < factors_[i]) break;
            cur[i] = 0;
        }
    }

    const int n = size();
    add_.assign(n, std::vector<int>(n, 0));
    neg_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        GroupElt na(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            na[i] = (factors_[i] - elts_[a][i]) % factors_[i];
        neg_[a] = index_of(na);
        for (int b = 0; b < n; ++b) {
            GroupElt s(factors_.size());
            for (std::size_t i = 0; i < factors_.size(); ++i)
                s[i] = (elts_[a][i] + elts_[b][i]) % factors_[i];
            add_[a][b] = index_of(s);
        }
    }
    zero_ = index_of(GroupElt(factors_.size(), 0));
}

int GradingGroup::index_of(const GroupElt& e) const {
    if (e.size() != factors_.size())
        throw std::invalid_argument("GradingGroup: element arity mismatch");
    int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        int r = e[i] % factors_[i];
        if (r < 0) r += factors_[i];
        idx = idx * factors_[i] + r;
    }
    return idx;
}

int SignForm::eval(const GroupElt& a, const GroupElt& b) const {
    if (a.size() != m_.size() || b.size() != m_.size())
        throw std::invalid_argument("SignForm: element arity mismatch");
    int acc = 0;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (a[i] % 2 == 0) continue;
        for (std::size_t j = 0; j < m_.size(); ++j)
            acc += m_[i][j] * b[j];
    }
    return acc & 1;
}

bool SignForm::is_symmetric() const {
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if ((m_[i][j] & 1) != (m_[j][i] & 1)) return false;
    return true;
}

bool SignForm::well_defined_for(const GradingGroup& g) const {
    if (static_cast<int>(m_.size()) != g.rank()) return false;
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j) {
            if ((m_[i][j] & 1) == 0) continue;
            if (g.factors()[i] % 2 != 0 || g.factors()[j] % 2 != 0) return false;
        }
    return true;
}

std::string group_elt_to_string(const GroupElt& e) {
    if (e.empty()) return "()";
    if (e.size() == 1) return std::to_string(e[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    s += ")";
    return s;
}

}  // namespace s2r
