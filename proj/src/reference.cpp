#include "s2r/reference.hpp"

#include <deque>

namespace s2r::reference {

bool SlotIdeal::contains(const Mor& m) const {
    auto it = slots.find({m.src, m.tgt});
    if (it == slots.end()) return vec_is_zero(m.val);
    return it->second.count(m.val) > 0;
}

namespace {

SlotIdeal close(const TwoRing& t, const std::vector<Mor>& gens, bool with_right_twists) {
    const GradedRing& R = t.ring();
    SlotIdeal ideal{&t, {}};
    for (int g = 0; g < t.objects(); ++g)
        for (int h = 0; h < t.objects(); ++h) ideal.slots[{g, h}].insert(R.zero());

    std::deque<Mor> queue;
    auto push = [&](const Mor& m) {
        if (ideal.slots[{m.src, m.tgt}].insert(m.val).second) queue.push_back(m);
    };
    for (const Mor& m : gens) push(m);

    while (!queue.empty()) {
        Mor m = queue.front();
        queue.pop_front();
        // sums within the slot
        for (const Vec& w : ideal.slots[{m.src, m.tgt}])
            push({m.src, m.tgt, R.add(m.val, w)});
        // compositions with arbitrary morphisms on both sides
        for (int h = 0; h < t.objects(); ++h) {
            for (const Vec& w : t.hom_values(m.tgt, h)) push(t.compose({m.tgt, h, w}, m));
            for (const Vec& w : t.hom_values(h, m.src)) push(t.compose(m, {h, m.src, w}));
        }
        // twists
        for (int g = 0; g < t.objects(); ++g) {
            push(t.ltwist(g, m));
            if (with_right_twists) push(t.rtwist(m, g));
        }
    }
    return ideal;
}

}  // namespace

SlotIdeal slot_ideal_generate(const TwoRing& t, const std::vector<Mor>& gens) {
    return close(t, gens, true);
}

SlotIdeal slot_ideal_generate_weak(const TwoRing& t, const std::vector<Mor>& gens) {
    return close(t, gens, false);
}

bool slot_is_prime(const SlotIdeal& ideal) {
    const TwoRing& t = *ideal.t;
    if (ideal.contains(t.identity(t.group().zero()))) return false;  // not proper
    for (int g = 0; g < t.objects(); ++g)
        for (int h = 0; h < t.objects(); ++h)
            for (const Vec& vs : t.hom_values(g, h)) {
                Mor s{g, h, vs};
                if (ideal.contains(s)) continue;
                for (int l = 0; l < t.objects(); ++l)
                    for (const Vec& vr : t.hom_values(h, l)) {
                        Mor r{h, l, vr};
                        if (ideal.contains(r)) continue;
                        if (ideal.contains(t.compose(r, s))) return false;
                    }
            }
    return true;
}

bool slot_is_prime_translate_adjusted(const SlotIdeal& ideal) {
    const TwoRing& t = *ideal.t;
    if (ideal.contains(t.identity(t.group().zero()))) return false;
    // arbitrary pairs (r, s): translate r so it composes with s
    for (const Mor& s : t.all_morphisms()) {
        if (ideal.contains(s)) continue;
        for (const Mor& r : t.all_morphisms()) {
            if (ideal.contains(r)) continue;
            Mor rt = t.ltwist(t.group().sub(s.tgt, r.src), r);
            if (ideal.contains(t.compose(rt, s))) return false;
        }
    }
    return true;
}

bool slot_equals(const SlotIdeal& a, const Ideal& b) {
    const TwoRing& t = *a.t;
    for (int g = 0; g < t.objects(); ++g)
        for (int h = 0; h < t.objects(); ++h) {
            std::set<Vec> want;
            for (const Mor& m : b.slot(g, h)) want.insert(m.val);
            auto it = a.slots.find({g, h});
            std::set<Vec> got = (it == a.slots.end()) ? std::set<Vec>{t.ring().zero()} : it->second;
            if (want != got) return false;
        }
    return true;
}

std::vector<Ideal> enumerate_ideals_powerset(const TwoRing& t) {
    const GradedRing& R = t.ring();
    std::vector<Mor> values;
    for (int d = 0; d < t.objects(); ++d)
        for (const Vec& v : R.component_values(d))
            if (!vec_is_zero(v)) values.push_back({t.group().zero(), d, v});
    if (values.size() > 20) throw std::invalid_argument("powerset enumeration: too many values");

    std::map<std::string, Ideal> seen;
    for (unsigned long mask = 0; mask < (1UL << values.size()); ++mask) {
        std::vector<Mor> gens;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (mask & (1UL << i)) gens.push_back(values[i]);
        Ideal i = ideal_generate(t, gens);
        seen.emplace(i.key(), std::move(i));
    }
    std::vector<Ideal> out;
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

}  // namespace s2r::reference
