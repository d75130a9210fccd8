#include "s2r/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace s2r {

int SpecSpace::find_prime(const Ideal& p) const {
    std::string k = p.key();
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (primes[i].key() == k) return static_cast<int>(i);
    return -1;
}

namespace {

SpecSpace build_space(std::shared_ptr<const TwoRing> t, bool parallel) {
    const std::vector<Ideal> lattice = parallel ? enumerate_ideals_parallel(*t)
                                                : enumerate_ideals_serial(*t);
    std::vector<char> prime_flag(lattice.size(), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long i = 0; i < static_cast<long>(lattice.size()); ++i)
        prime_flag[i] = is_prime(lattice[i]) ? 1 : 0;

    SpecSpace sp;
    sp.t = t;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (prime_flag[i]) sp.primes.push_back(lattice[i]);
    // lattice is already in canonical key order

    const std::size_t n = sp.primes.size();
    sp.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sp.leq[i][j] = sp.primes[i].subset_of(sp.primes[j]);

    std::set<std::vector<int>> closed;
    for (const Ideal& ideal : lattice) {
        std::vector<int> vs = v_set(sp, ideal);
        closed.insert(vs);
    }
    sp.closed_sets.assign(closed.begin(), closed.end());
    return sp;
}

}  // namespace

SpecSpace enumerate_primes_serial(std::shared_ptr<const TwoRing> t) { return build_space(t, false); }
SpecSpace enumerate_primes_parallel(std::shared_ptr<const TwoRing> t) { return build_space(t, true); }

SpecSpace enumerate_primes(std::shared_ptr<const TwoRing> t) {
#ifdef _OPENMP
    return enumerate_primes_parallel(t);
#else
    return enumerate_primes_serial(t);
#endif
}

std::vector<int> v_set(const SpecSpace& sp, const Ideal& ideal) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sp.primes.size(); ++i)
        if (ideal.subset_of(sp.primes[i])) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> d_set(const SpecSpace& sp, const Mor& r) {
    std::vector<int> out;
    for (std::size_t i = 0; i < sp.primes.size(); ++i)
        if (!sp.primes[i].contains(r)) out.push_back(static_cast<int>(i));
    return out;
}

std::optional<SubcoverWitness> finite_subcover(const SpecSpace& sp, const std::vector<Mor>& cover) {
    const TwoRing& t = *sp.t;
    const GradedRing& R = t.ring();
    const int z = t.group().zero();

    // the cover must actually cover
    std::set<int> covered;
    for (const Mor& r : cover)
        for (int p : d_set(sp, r)) covered.insert(p);
    if (covered.size() != sp.primes.size()) return std::nullopt;

    // grow reachable sums of End(0)-slot members of the principal ideals,
    // remembering one certificate s (l (x) r) u per contribution
    struct Cert {
        int cover_idx;
        Mor s;
        int twist;
        Mor u;
    };
    std::map<Vec, std::pair<Vec, std::optional<Cert>>> reach;  // value -> (previous value, cert)
    reach[R.zero()] = {R.zero(), std::nullopt};

    for (std::size_t ci = 0; ci < cover.size(); ++ci) {
        const Mor& r = cover[ci];
        // End(0) members of <r> in certificate form: s (l (x) r) u with u iso
        std::vector<std::pair<Vec, Cert>> contributions;
        for (int l = 0; l < t.objects(); ++l) {
            Mor tw = t.ltwist(l, r);
            for (const Mor& u : t.isos(z, tw.src))
                for (const Vec& sv : t.hom_values(tw.tgt, z)) {
                    Mor m = t.compose(Mor{tw.tgt, z, sv}, t.compose(tw, u));
                    contributions.push_back({m.val, Cert{static_cast<int>(ci), {tw.tgt, z, sv}, l, u}});
                }
        }
        // close reach under adding these contributions
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<Vec, std::pair<Vec, Cert>>> to_add;
            for (const auto& [val, back] : reach)
                for (const auto& [cv, cert] : contributions) {
                    Vec sum = R.add(val, cv);
                    if (!reach.count(sum)) to_add.push_back({sum, {val, cert}});
                }
            for (auto& [sum, entry] : to_add)
                if (reach.emplace(sum, std::make_pair(entry.first, std::make_optional(entry.second)))
                        .second)
                    grew = true;
        }
        if (reach.count(R.one())) break;
    }

    auto it = reach.find(R.one());
    if (it == reach.end()) return std::nullopt;

    SubcoverWitness w;
    std::set<int> chosen;
    Vec cur = R.one();
    while (!vec_is_zero(cur)) {
        const auto& [prev, cert] = reach.at(cur);
        if (!cert) break;
        chosen.insert(cert->cover_idx);
        w.terms.emplace_back(cert->cover_idx, cert->s, cert->twist, cert->u);
        // the chain strictly shortens: prev + contribution = cur
        cur = prev;
    }
    w.chosen.assign(chosen.begin(), chosen.end());
    return w;
}

std::vector<std::string> verify_spectral(const SpecSpace& sp) {
    std::vector<std::string> out;
    const std::size_t n = sp.primes.size();

    // stored relation must match the primes, and keys must be distinct
    std::set<std::string> keys;
    for (const Ideal& p : sp.primes)
        if (!keys.insert(p.key()).second) out.push_back("duplicate prime key");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sp.leq[i][j] != sp.primes[i].subset_of(sp.primes[j]))
                out.push_back("stored specialization relation is inconsistent");

    // T0: mutual specialization collapses points
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && sp.leq[i][j] && sp.leq[j][i])
                out.push_back("not T0: two points share a closure");

    // every irreducible closed subset has a unique generic point
    auto closure_of = [&](int i) {
        std::vector<int> c;
        for (std::size_t j = 0; j < n; ++j)
            if (sp.leq[i][j]) c.push_back(static_cast<int>(j));
        return c;
    };
    std::set<std::vector<int>> closed(sp.closed_sets.begin(), sp.closed_sets.end());
    for (const auto& z : sp.closed_sets) {
        if (z.empty()) continue;
        bool irreducible = true;
        for (const auto& a : closed) {
            if (!irreducible) break;
            if (a == z || !std::includes(z.begin(), z.end(), a.begin(), a.end())) continue;
            for (const auto& b : closed) {
                if (b == z || !std::includes(z.begin(), z.end(), b.begin(), b.end())) continue;
                std::vector<int> un;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(un));
                if (un == z) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (!irreducible) continue;
        int generic = 0;
        for (int i : z)
            if (closure_of(i) == z) ++generic;
        if (generic != 1)
            out.push_back("irreducible closed set with " + std::to_string(generic) +
                          " generic points");
    }

    // basic opens intersect via composition with a translate
    const TwoRing& t = *sp.t;
    const std::vector<Mor> mors = t.all_morphisms();
    std::vector<std::vector<int>> dsets;
    dsets.reserve(mors.size());
    for (const Mor& r : mors) dsets.push_back(d_set(sp, r));
    bool drule_ok = true;
    for (std::size_t a = 0; a < mors.size() && drule_ok; ++a)
        for (std::size_t b = 0; b < mors.size() && drule_ok; ++b) {
            const Mor& r = mors[a];
            const Mor& s = mors[b];
            Mor rt = t.ltwist(t.group().sub(s.tgt, r.src), r);
            std::vector<int> want;
            std::set_intersection(dsets[a].begin(), dsets[a].end(), dsets[b].begin(),
                                  dsets[b].end(), std::back_inserter(want));
            if (d_set(sp, t.compose(rt, s)) != want) {
                out.push_back("D_r and D_s do not intersect as D_{r~ o s}");
                drule_ok = false;
            }
        }

    // basis: every open is a union of D_r's
    std::set<std::vector<int>> opens;
    std::vector<int> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(static_cast<int>(i));
    for (const auto& z : sp.closed_sets) {
        std::vector<int> open;
        std::set_difference(all.begin(), all.end(), z.begin(), z.end(), std::back_inserter(open));
        opens.insert(open);
    }
    for (const auto& open : opens) {
        std::set<int> covered;
        for (const auto& dr : dsets)
            if (std::includes(open.begin(), open.end(), dr.begin(), dr.end()))
                covered.insert(dr.begin(), dr.end());
        if (std::vector<int>(covered.begin(), covered.end()) != open)
            out.push_back("an open set is not a union of basic opens");
    }

    // constructive quasi-compactness for the tautological cover
    std::vector<Mor> cover = t.all_morphisms();
    auto witness = finite_subcover(sp, cover);
    if (n > 0) {
        if (!witness) {
            out.push_back("no finite subcover witness for the full cover");
        } else {
            // re-evaluate the witness: the sum of the s (l (x) r) u terms
            // must be id_1
            Vec sum = t.ring().zero();
            for (const auto& [ci, s, l, u] : witness->terms) {
                Mor m = t.compose(s, t.compose(t.ltwist(l, cover[ci]), u));
                if (m.src != t.group().zero() || m.tgt != t.group().zero()) {
                    out.push_back("subcover witness term does not type-check");
                    break;
                }
                sum = t.ring().add(sum, m.val);
            }
            if (sum != t.ring().one()) out.push_back("subcover witness does not sum to id_1");
        }
    }

    return out;
}

Ideal preimage_ideal(const RingFunctor& f, const Ideal& target_ideal) {
    const TwoRing& src = *f.source;
    const GradedRing& R = src.ring();
    Ideal out(src);
    for (int d = 0; d < src.objects(); ++d)
        for (const Vec& v : R.component_values(d)) {
            if (vec_is_zero(v)) continue;
            Vec image = f.apply_value(d, v);
            if (target_ideal.contains_value(f.obj_map[d], image)) out.insert_value(d, v);
        }
    return out;
}

SpecMapResult spec_of_morphism(const RingFunctor& f, const SpecSpace& source_spec,
                               const SpecSpace& target_spec) {
    SpecMapResult res;
    auto structure = f.check_structure();
    if (!structure.empty()) {
        res.violations = structure;
        return res;
    }
    for (const Ideal& q : target_spec.primes) {
        Ideal pre = preimage_ideal(f, q);
        if (!is_prime(pre)) res.violations.push_back("preimage of a prime is not prime");
        int idx = source_spec.find_prime(pre);
        if (idx < 0) res.violations.push_back("preimage prime missing from source spectrum");
        res.map.push_back(idx);
    }
    // spectral: preimage of D_r is D_{Fr}
    const TwoRing& src = *f.source;
    for (const Mor& r : src.all_morphisms()) {
        std::vector<int> want;
        for (std::size_t j = 0; j < target_spec.primes.size(); ++j)
            if (res.map[j] >= 0) {
                std::vector<int> dr = d_set(source_spec, r);
                if (std::find(dr.begin(), dr.end(), res.map[j]) != dr.end())
                    want.push_back(static_cast<int>(j));
            }
        if (d_set(target_spec, f.apply(r)) != want) {
            res.violations.push_back("preimage of a basic open is not the matching basic open");
            break;
        }
    }
    return res;
}

}  // namespace s2r
