#include "s2r/verify.hpp"

#include <map>
#include <set>

#include "s2r/localization.hpp"
#include "s2r/reference.hpp"
#include "s2r/ring_level.hpp"
#include "s2r/spectrum.hpp"
#include "s2r/support.hpp"

namespace s2r {

namespace {

void add(std::vector<CheckResult>& out, const std::string& name, bool pass,
         const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

long morphism_count(const TwoRing& t) {
    long n = 0;
    for (int d = 0; d < t.objects(); ++d)
        n += static_cast<long>(t.ring().component_values(d).size());
    return n * t.objects();
}

/// Deduplicated multiplicative systems S_r (r over canonical morphisms) and
/// S_p (p over the primes).
std::vector<MultSystem> interesting_systems(std::shared_ptr<const TwoRing> t) {
    std::vector<MultSystem> out;
    std::set<std::string> seen;
    auto push = [&](MultSystem S) {
        if (seen.insert(S.key()).second) out.push_back(std::move(S));
    };
    const GradedRing& R = t->ring();
    for (int d = 0; d < t->objects(); ++d)
        for (const Vec& v : R.component_values(d))
            push(MultSystem::away_from(t, Mor{t->group().zero(), d, v}));
    for (const Ideal& p : enumerate_primes(t).primes) push(MultSystem::at_prime(t, p));
    return out;
}

}  // namespace

std::vector<CheckResult> verify_ring(const GradedRing& R) {
    std::vector<CheckResult> out;
    auto violations = R.check_axioms();
    std::string detail;
    for (const auto& v : violations) detail += v.kind + "(" + v.detail + ") ";
    add(out, "ring axioms", violations.empty(), detail);
    return out;
}

std::vector<CheckResult> verify_suite_ideals(std::shared_ptr<const TwoRing> t) {
    std::vector<CheckResult> out;
    const TwoRing& T = *t;

    add(out, "coherence (zig-zag, gamma, hexagon)", T.coherence_report().empty());

    // pseudo-commutativity witnesses on every composable pair
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms()) {
            for (const Mor& s : T.all_morphisms()) {
                if (s.src != r.tgt) continue;
                auto w = T.pseudo_commute(r, s);
                Mor lhs = T.compose(w.v, T.compose(w.r_tw, T.compose(w.s_tw, w.u)));
                if (!(lhs == T.compose(s, r))) ok = false;
                if (!T.is_translate(r, w.r_tw) || !T.is_translate(s, w.s_tw)) ok = false;
                if (!ok) break;
            }
            if (!ok) break;
        }
        add(out, "pseudo-commutativity witnesses", ok);
    }

    // invertible composites have invertible factors
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms())
            for (const Mor& s : T.all_morphisms()) {
                if (s.src != r.tgt) continue;
                if (T.is_invertible(T.compose(s, r)) &&
                    (!T.is_invertible(r) || !T.is_invertible(s)))
                    ok = false;
            }
        add(out, "invertible composite forces invertible factors", ok);
    }

    // translate witnesses agree with the twist/iso closure oracle
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms()) {
            auto closure = T.translate_closure(r);
            for (const Mor& m : T.all_morphisms()) {
                bool in_closure =
                    std::find(closure.begin(), closure.end(), m) != closure.end();
                if (in_closure != T.is_translate(r, m)) ok = false;
            }
            if (!ok) break;
        }
        add(out, "translate normal form matches closure oracle", ok);
    }

    const std::vector<Ideal> lattice = enumerate_ideals(T);
    add(out, "parallel and serial lattice enumeration agree", [&] {
        auto serial = enumerate_ideals_serial(T);
        if (serial.size() != lattice.size()) return false;
        for (std::size_t i = 0; i < serial.size(); ++i)
            if (!(serial[i] == lattice[i])) return false;
        return true;
    }());

    // lattice laws
    {
        bool products_ok = true, joins_ok = true, distrib_ok = true, inter_ok = true;
        for (const Ideal& a : lattice)
            for (const Ideal& b : lattice) {
                Ideal ab = ideal_product(a, b);
                if (!(ab == ideal_product(b, a)) || !(ab == ideal_product_tensor(a, b)))
                    products_ok = false;
                Ideal sum = ideal_sum(a, b);
                // join: least ideal containing both
                for (const Ideal& c : lattice)
                    if (a.subset_of(c) && b.subset_of(c) && !sum.subset_of(c)) joins_ok = false;
                if (!a.subset_of(sum) || !b.subset_of(sum)) joins_ok = false;
                Ideal meet = ideal_intersect(a, b);
                if (!ab.subset_of(meet)) inter_ok = false;
                for (const Ideal& c : lattice) {
                    Ideal lhs = ideal_product(a, ideal_sum(b, c));
                    Ideal rhs = ideal_sum(ideal_product(a, b), ideal_product(a, c));
                    if (!(lhs == rhs)) distrib_ok = false;
                }
            }
        add(out, "products agree (composite, tensor, swapped)", products_ok);
        add(out, "joins are hom-wise sums", joins_ok);
        add(out, "product distributes over join", distrib_ok);
        add(out, "IJ inside I meet J", inter_ok);
    }

    // every ideal is generated by its members (compactness at desk scale)
    {
        bool ok = true;
        for (const Ideal& a : lattice)
            if (!(ideal_generate(T, a.members()) == a)) ok = false;
        add(out, "every ideal generated by finitely many members", ok);
    }

    // maximal ideals are prime
    {
        bool ok = true;
        for (const Ideal& a : lattice) {
            if (!a.is_proper()) continue;
            bool maximal = true;
            for (const Ideal& b : lattice)
                if (b.is_proper() && a.subset_of(b) && !(a == b)) maximal = false;
            if (maximal && !is_prime(a)) ok = false;
        }
        add(out, "maximal ideals are prime", ok);
    }

    // principal ideals match their two explicit descriptions
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms()) {
            Ideal pr = ideal_generate(T, {r});
            auto left = principal_left_form(T, r);
            auto right = principal_right_form(T, r);
            for (int d = 0; d < T.objects() && ok; ++d) {
                std::set<Vec> want;
                for (const Vec& c : pr.component(d).elements())
                    want.insert(T.ring().component_embed(d, c));
                if (std::set<Vec>(left[d].begin(), left[d].end()) != want) ok = false;
                if (std::set<Vec>(right[d].begin(), right[d].end()) != want) ok = false;
            }
            if (!ok) break;
        }
        add(out, "principal ideal explicit forms", ok);
    }

    // annihilator three-way agreement
    {
        bool ok = true;
        for (const Mor& s : T.all_morphisms()) {
            Ideal ann = annihilator(T, s);
            auto left = annihilator_left_set(T, s);
            auto right = annihilator_right_set(T, s);
            for (int d = 0; d < T.objects() && ok; ++d) {
                std::set<Vec> want;
                for (const Vec& c : ann.component(d).elements())
                    want.insert(T.ring().component_embed(d, c));
                if (std::set<Vec>(left[d].begin(), left[d].end()) != want) ok = false;
                if (std::set<Vec>(right[d].begin(), right[d].end()) != want) ok = false;
            }
            if (!ok) break;
        }
        add(out, "annihilator three-way agreement", ok);
    }

    // slot-level reference checks (fixture scale only)
    if (morphism_count(T) <= 200) {
        bool closure_ok = true, weak_ok = true, prime_ok = true, powerset_ok = true;
        for (const Mor& r : T.all_morphisms()) {
            auto ref = reference::slot_ideal_generate(T, {r});
            auto weak = reference::slot_ideal_generate_weak(T, {r});
            Ideal fast = ideal_generate(T, {r});
            if (!reference::slot_equals(ref, fast)) closure_ok = false;
            if (ref.slots != weak.slots) weak_ok = false;
        }
        for (const Ideal& a : lattice) {
            auto ref = reference::slot_ideal_generate(T, a.members());
            if (reference::slot_is_prime(ref) != is_prime(a)) prime_ok = false;
            if (reference::slot_is_prime_translate_adjusted(ref) != is_prime(a))
                prime_ok = false;
        }
        auto pw = reference::enumerate_ideals_powerset(T);
        if (pw.size() != lattice.size()) powerset_ok = false;
        for (std::size_t i = 0; i < pw.size() && powerset_ok; ++i)
            if (!(pw[i] == lattice[i])) powerset_ok = false;
        add(out, "slot-level closure reference agrees", closure_ok);
        add(out, "weak and strong twist closures agree", weak_ok);
        add(out, "slot-level primality agrees (incl. translate-adjusted)", prime_ok);
        add(out, "powerset enumeration agrees with BFS", powerset_ok);
    }

    // spectrum
    {
        SpecSpace sp = enumerate_primes(t);
        add(out, "spectral space verification", verify_spectral(sp).empty());
        add(out, "spectrum empty iff zero 2-ring", sp.primes.empty() == T.is_zero());

        bool vrules_ok = true;
        for (const Ideal& a : lattice)
            for (const Ideal& b : lattice) {
                std::vector<int> va = v_set(sp, a), vb = v_set(sp, b);
                std::vector<int> uni;
                std::set_union(va.begin(), va.end(), vb.begin(), vb.end(),
                               std::back_inserter(uni));
                if (v_set(sp, ideal_product(a, b)) != uni) vrules_ok = false;
                std::vector<int> inter;
                std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                                      std::back_inserter(inter));
                if (v_set(sp, ideal_sum(a, b)) != inter) vrules_ok = false;
            }
        add(out, "V(IJ) union rule and V(sum) intersection rule", vrules_ok);

        auto corr = ring_spec_correspondence(T);
        add(out, "ring-level correspondence", corr.ok,
            corr.ok ? "" : corr.violations.front());
    }

    return out;
}

std::vector<CheckResult> verify_suite_loc(std::shared_ptr<const TwoRing> t) {
    std::vector<CheckResult> out;
    const TwoRing& T = *t;
    if (morphism_count(T) > 400) {
        add(out, "localization suite", true, "skipped: beyond desk scale");
        return out;
    }

    std::vector<MultSystem> systems = interesting_systems(t);

    bool sys_ok = true, ore_ok = true, cancel_ok = true, frac_ok = true, eqcross_ok = true;
    bool lr_ok = true, specloc_ok = true;
    for (const MultSystem& S : systems) {
        if (!S.check_invariants().empty()) sys_ok = false;

        for (const Mor& r : T.all_morphisms())
            for (const Mor& s : T.all_morphisms()) {
                if (!S.contains(s)) continue;
                if (s.src == r.src) {
                    OreSquare sq = ore_complete(T, S, r, s);
                    if (!(T.compose(sq.s_prime, r) == T.compose(sq.r_prime, s))) ore_ok = false;
                    if (!ore_search(T, S, r, s)) ore_ok = false;
                }
                if (s.tgt == r.tgt) {
                    OreSquare sq = right_ore_complete(T, S, r, s);
                    if (!(T.compose(r, sq.s_prime) == T.compose(s, sq.r_prime))) ore_ok = false;
                }
                if (s.src == r.tgt && vec_is_zero(T.compose(s, r).val)) {
                    Mor sp = cancellation_witness(T, S, r, s);
                    if (!S.contains(sp) || !vec_is_zero(T.compose(r, sp).val)) cancel_ok = false;
                }
            }

        // fraction ops well-defined on classes: alternative representatives
        Localization L(t, S);
        for (int x = 0; x < T.objects() && frac_ok; ++x)
            for (int y = 0; y < T.objects() && frac_ok; ++y) {
                auto fr = L.fractions(x, y);
                for (const LeftFraction& f1 : fr)
                    for (const LeftFraction& f2 : fr) {
                        if (fraction_eq(T, S, f1, f2) != fraction_eq_cross(T, S, f1, f2))
                            eqcross_ok = false;
                        if (!fraction_eq(T, S, f1, f2)) continue;
                        // adding / composing equal fractions lands in equal classes
                        Mor m1 = L.fraction_to_mor(f1), m2 = L.fraction_to_mor(f2);
                        if (!(m1 == m2)) frac_ok = false;
                    }
                if (!frac_ok || !eqcross_ok) break;
            }

        // left and right localizations agree hom-wise
        for (int x = 0; x < T.objects() && lr_ok; ++x)
            for (int y = 0; y < T.objects() && lr_ok; ++y) {
                auto rclasses = right_fraction_classes(T, S, x, y);
                if (static_cast<int>(rclasses.size()) != L.class_count(x, y)) lr_ok = false;
                // the Ore-built map left class -> right class is a bijection
                std::set<int> hit;
                for (int c = 0; c < L.class_count(x, y); ++c) {
                    const LeftFraction& f = L.representative(x, y, c);
                    OreSquare sq = right_ore_complete(T, S, f.r, f.s);
                    RightFraction rf{sq.s_prime, sq.r_prime};
                    int found = -1;
                    for (std::size_t rc = 0; rc < rclasses.size(); ++rc)
                        if (right_fraction_eq(T, S, rclasses[rc].front(), rf))
                            found = static_cast<int>(rc);
                    if (found < 0) lr_ok = false;
                    else hit.insert(found);
                }
                if (hit.size() != rclasses.size()) lr_ok = false;
            }

        if (!spec_localization(L).violations.empty()) specloc_ok = false;
    }
    add(out, "multiplicative system invariants", sys_ok);
    add(out, "Ore completions (left, right, search oracle)", ore_ok);
    add(out, "cancellation witnesses", cancel_ok);
    add(out, "fraction classes well-defined", frac_ok);
    add(out, "amplification equality matches cross-multiplication", eqcross_ok);
    add(out, "left and right fraction localizations agree", lr_ok);
    add(out, "Spec of localization homeomorphisms", specloc_ok);

    // localizing at all isomorphisms recovers the 2-ring
    {
        Localization L(t, MultSystem::isos_only(t));
        bool ok = L.loc().check_structure().empty();
        for (int d = 0; d < T.objects() && ok; ++d)
            if (T.ring().component_dim(d) != L.localized().ring().component_dim(d)) ok = false;
        add(out, "localization at isomorphisms is the identity", ok);
    }

    // saturation and local structure at every prime
    {
        bool ok = true;
        for (const Ideal& p : enumerate_primes(t).primes)
            if (!saturation_and_local_check(t, p).empty()) ok = false;
        add(out, "S_p saturated; localization local", ok);
    }

    // quotients commute with localization
    {
        bool ok = true;
        std::vector<Ideal> lattice = enumerate_ideals(T);
        for (const Ideal& I : lattice)
            for (const MultSystem& S : systems)
                if (!quotient_localize_commute(t, I, S).violations.empty()) ok = false;
        add(out, "quotient and localization commute", ok);
    }

    return out;
}

std::vector<CheckResult> verify_suite_support(std::shared_ptr<const TwoRing> t) {
    std::vector<CheckResult> out;
    const TwoRing& T = *t;
    const GradedRing& R = T.ring();
    if (morphism_count(T) > 400) {
        add(out, "support suite", true, "skipped: beyond desk scale");
        return out;
    }

    // supph(cone r) = V(<r>) and the basis property
    add(out, "cone supports match V(<r>) and form a basis", basis_check(T).empty());

    // cone acyclic iff invertible
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms())
            if (is_acyclic(cone_of(T, r)) != T.is_invertible(r)) ok = false;
        add(out, "cone acyclic iff morphism invertible", ok);
    }

    // module supports: the two implementations agree on homology modules
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms()) {
            Complex c = cone_of(T, r);
            for (int n = -1; n <= 0 && ok; ++n) {
                GradedModule h = homology(c, n);
                if (module_supp(h) != module_supp_localization(h)) ok = false;
            }
        }
        for (int g = 0; g < T.objects(); ++g) {
            GradedModule f = free_module(R, g);
            if (module_supp(f) != module_supp_localization(f)) ok = false;
        }
        add(out, "module support implementations agree", ok);
    }

    // rho(sigma(p)) = p over the whole spectrum
    {
        bool ok = true;
        auto ring_primes = enumerate_ring_primes(R);
        for (const RingIdeal& p : ring_primes) {
            Ideal back = rho(T, sigma(R, p));
            if (!(corr_to_ring(back) == p)) ok = false;
        }
        add(out, "rho after sigma is the identity", ok);
    }

    // twist invariance of supph
    {
        bool ok = true;
        for (const Mor& r : T.all_morphisms()) {
            Complex c = cone_of(T, r);
            auto base = supph(c);
            for (int g = 0; g < T.objects(); ++g)
                if (supph(twist(c, g)) != base) ok = false;
            if (supph(shift(c, 1)) != base) ok = false;
        }
        add(out, "supph invariant under twists and shifts", ok);
    }

    // sigma(p) behaves as a thick twist-closed tensor-ideal on the family
    {
        bool ok = true;
        std::vector<Complex> family;
        for (int d = 0; d < T.objects(); ++d) {
            const auto& vals = R.component_values(d);
            for (std::size_t i = 0; i < vals.size() && i < 4; ++i)
                family.push_back(cone_of(T, {T.group().zero(), d, vals[i]}));
            family.push_back(free_twist(R, d, 0));
        }
        auto ring_primes = enumerate_ring_primes(R);
        for (const RingIdeal& pr : ring_primes) {
            ThickIdealModel P = sigma(R, pr);
            for (const Complex& c : family) {
                if (!P.contains(c)) continue;
                for (int g = 0; g < T.objects() && ok; ++g)
                    if (!P.contains(twist(c, g))) ok = false;
                if (!P.contains(shift(c, 1)) || !P.contains(shift(c, -1))) ok = false;
                for (const Complex& d2 : family) {
                    if (!P.contains(d2)) continue;
                    if (!P.contains(direct_sum(c, d2))) ok = false;
                    auto maps = chain_map_basis(c, d2);
                    for (std::size_t mi = 0; mi < maps.size() && mi < 6; ++mi)
                        if (!P.contains(mapping_cone(maps[mi]))) ok = false;
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        add(out, "sigma(p) closed under shift/twist/sum/cones", ok);
    }

    return out;
}

std::vector<CheckResult> run_verify(const GradedRing& R, const std::string& suite) {
    std::vector<CheckResult> out = verify_ring(R);
    if (!all_passed(out)) return out;

    auto t = std::make_shared<const TwoRing>(R);
    if (suite == "ideals" || suite == "all") {
        auto r = verify_suite_ideals(t);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (suite == "loc" || suite == "all") {
        auto r = verify_suite_loc(t);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (suite == "support" || suite == "all") {
        auto r = verify_suite_support(t);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace s2r
