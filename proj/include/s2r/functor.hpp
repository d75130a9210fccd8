#pragma once

#include <memory>
#include <string>
#include <vector>

#include "s2r/two_ring.hpp"

namespace s2r {

/**
 * Structure-preserving functor between companion categories: a group
 * homomorphism on objects plus one linear map per source degree.  Additivity
 * is built in; everything else (unit, composition, tensor signs) is checked
 * by check_structure.
 */
struct RingFunctor {
    std::shared_ptr<const TwoRing> source;
    std::shared_ptr<const TwoRing> target;
    std::vector<int> obj_map;    // source object index -> target object index
    std::vector<Mat> comp_map;   // per source degree d: component coords of R_d
                                 // -> component coords of R'_{obj_map[d]}

    Mor apply(const Mor& m) const;
    Vec apply_value(int deg, const Vec& v) const;

    /// Violations of functoriality; empty = structure-preserving.
    std::vector<std::string> check_structure() const;
};

RingFunctor identity_functor(std::shared_ptr<const TwoRing> t);
RingFunctor compose_functors(const RingFunctor& g, const RingFunctor& f);

}  // namespace s2r
