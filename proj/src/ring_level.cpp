#include "s2r/ring_level.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace s2r {

RingIdeal::RingIdeal(const GradedRing& R) : R_(&R) {
    for (int d = 0; d < R.group().size(); ++d) comp_.emplace_back(R.component_dim(d), R.p());
}

bool RingIdeal::contains(int d, const Vec& v) const {
    if (vec_is_zero(v)) return true;
    return comp_[d].contains(R_->component_coords(d, v));
}

void RingIdeal::close() {
    const GradedRing& R = *R_;
    const GradingGroup& G = R.group();
    std::deque<std::pair<int, Vec>> queue;
    for (int d = 0; d < G.size(); ++d)
        for (const Vec& b : comp_[d].basis()) queue.emplace_back(d, R.component_embed(d, b));
    while (!queue.empty()) {
        auto [d, v] = queue.front();
        queue.pop_front();
        for (int e = 0; e < G.size(); ++e)
            for (const Vec& w : R.component_values(e)) {
                if (vec_is_zero(w)) continue;
                Vec lw = R.multiply(w, v);
                int dl = G.add(e, d);
                if (!vec_is_zero(lw) && comp_[dl].add(R.component_coords(dl, lw)))
                    queue.emplace_back(dl, lw);
                Vec rw = R.multiply(v, w);
                int dr = G.add(d, e);
                if (!vec_is_zero(rw) && comp_[dr].add(R.component_coords(dr, rw)))
                    queue.emplace_back(dr, rw);
            }
    }
}

bool RingIdeal::insert(int d, const Vec& v) {
    if (vec_is_zero(v)) return false;
    if (!comp_[d].add(R_->component_coords(d, v))) return false;
    close();
    return true;
}

bool RingIdeal::subset_of(const RingIdeal& o) const {
    for (std::size_t d = 0; d < comp_.size(); ++d)
        if (!o.comp_[d].contains_all(comp_[d])) return false;
    return true;
}

bool RingIdeal::operator==(const RingIdeal& o) const {
    return subset_of(o) && o.subset_of(*this);
}

bool RingIdeal::is_proper() const { return !contains(R_->group().zero(), R_->one()); }

std::string RingIdeal::key() const {
    std::string k;
    for (int d = 0; d < R_->group().size(); ++d) {
        std::vector<int> idx;
        for (const Vec& c : comp_[d].elements())
            if (!vec_is_zero(c)) idx.push_back(R_->value_index(d, R_->component_embed(d, c)));
        std::sort(idx.begin(), idx.end());
        k += "d" + std::to_string(d) + ":";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) k += ",";
            k += std::to_string(idx[i]);
        }
        k += ";";
    }
    return k;
}

std::vector<std::pair<int, Vec>> RingIdeal::members() const {
    std::vector<std::pair<int, Vec>> out;
    for (int d = 0; d < R_->group().size(); ++d)
        for (const Vec& c : comp_[d].elements())
            if (!vec_is_zero(c)) out.emplace_back(d, R_->component_embed(d, c));
    return out;
}

RingIdeal ring_ideal_generate(const GradedRing& R,
                              const std::vector<std::pair<int, Vec>>& gens) {
    RingIdeal i(R);
    for (const auto& [d, v] : gens) i.insert(d, v);
    return i;
}

std::vector<RingIdeal> enumerate_ring_ideals(const GradedRing& R) {
    std::map<std::string, RingIdeal> seen;
    RingIdeal zero(R);
    seen.emplace(zero.key(), zero);
    std::deque<RingIdeal> frontier{zero};
    while (!frontier.empty()) {
        RingIdeal base = frontier.front();
        frontier.pop_front();
        std::set<Vec> tried;
        for (int d = 0; d < R.group().size(); ++d)
            for (const Vec& v : R.component_values(d)) {
                if (vec_is_zero(v)) continue;
                Vec coords = R.component_coords(d, v);
                if (base.component(d).contains(coords)) continue;
                Vec rep = base.component(d).reduce(coords);
                rep.push_back(static_cast<Coef>(d));
                if (!tried.insert(rep).second) continue;
                RingIdeal grown = base;
                grown.insert(d, v);
                if (seen.emplace(grown.key(), grown).second) frontier.push_back(std::move(grown));
            }
    }
    std::vector<RingIdeal> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

bool ring_ideal_is_prime(const RingIdeal& ideal) {
    if (!ideal.is_proper()) return false;
    const GradedRing& R = ideal.ring();
    const GradingGroup& G = R.group();
    for (int da = 0; da < G.size(); ++da)
        for (const Vec& a : R.component_values(da)) {
            if (vec_is_zero(a) || ideal.contains(da, a)) continue;
            for (int db = 0; db < G.size(); ++db)
                for (const Vec& b : R.component_values(db)) {
                    if (vec_is_zero(b) || ideal.contains(db, b)) continue;
                    if (ideal.contains(G.add(da, db), R.multiply(a, b))) return false;
                }
        }
    return true;
}

std::vector<RingIdeal> enumerate_ring_primes(const GradedRing& R) {
    std::vector<RingIdeal> out;
    for (const RingIdeal& i : enumerate_ring_ideals(R))
        if (ring_ideal_is_prime(i)) out.push_back(i);
    return out;
}

Ideal corr_to_companion(const TwoRing& t, const RingIdeal& I) {
    std::vector<Mor> gens;
    for (const auto& [d, v] : I.members()) gens.push_back({t.group().zero(), d, v});
    return ideal_generate(t, gens);
}

RingIdeal corr_to_ring(const Ideal& I) {
    const TwoRing& t = I.parent();
    RingIdeal out(t.ring());
    for (const Mor& m : I.members()) out.insert(t.hom_degree(m.src, m.tgt), m.val);
    return out;
}

CorrespondenceReport ring_spec_correspondence(const TwoRing& t) {
    CorrespondenceReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };

    const GradedRing& R = t.ring();
    std::vector<RingIdeal> ring_primes = enumerate_ring_primes(R);

    std::vector<Ideal> cat_primes;
    for (const Ideal& i : enumerate_ideals(t))
        if (is_prime(i)) cat_primes.push_back(i);

    if (ring_primes.size() != cat_primes.size())
        fail("prime counts differ: ring " + std::to_string(ring_primes.size()) + " vs companion " +
             std::to_string(cat_primes.size()));

    // forward map lands on primes and hits each exactly once
    std::set<std::string> hit;
    for (const RingIdeal& rp : ring_primes) {
        Ideal image = corr_to_companion(t, rp);
        if (!is_prime(image)) {
            fail("image of ring prime is not prime: " + rp.key());
            continue;
        }
        if (!hit.insert(image.key()).second) fail("forward map not injective at " + rp.key());
        if (!(corr_to_ring(image) == rp)) fail("roundtrip ring->companion->ring differs at " + rp.key());
    }
    for (const Ideal& cp : cat_primes) {
        if (!hit.count(cp.key())) fail("companion prime not in image: " + cp.key());
        RingIdeal back = corr_to_ring(cp);
        if (!ring_ideal_is_prime(back)) fail("restriction of companion prime not prime");
        if (!(corr_to_companion(t, back) == cp)) fail("roundtrip companion->ring->companion differs");
    }

    // closed sets correspond: I subset p iff corr(I) subset corr(p), over the
    // full ideal lattices
    std::vector<RingIdeal> ring_lattice = enumerate_ring_ideals(R);
    for (const RingIdeal& ri : ring_lattice) {
        Ideal ci = corr_to_companion(t, ri);
        for (std::size_t k = 0; k < ring_primes.size(); ++k) {
            Ideal cp = corr_to_companion(t, ring_primes[k]);
            if (ri.subset_of(ring_primes[k]) != ci.subset_of(cp)) {
                fail("V-set mismatch under the correspondence");
                break;
            }
        }
    }

    return rep;
}

}  // namespace s2r
