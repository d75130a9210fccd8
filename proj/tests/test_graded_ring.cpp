#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "s2r/graded_ring.hpp"

using namespace s2r;

namespace {

Vec unit_vec(const GradedRing& R, int i) {
    Vec v = R.zero();
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("all fixtures pass the axiom check") {
    for (const std::string& name : fixture_names()) {
        GradedRing R = fixture_by_name(name);
        INFO(name);
        CHECK(R.check_axioms().empty());
    }
}

TEST_CASE("D2 multiplication") {
    GradedRing R = fixture_D2();
    Vec one = unit_vec(R, 0), x = unit_vec(R, 1);
    CHECK(R.multiply(one, x) == x);  // unit law
    CHECK(R.multiply(x, x) == R.zero());
    CHECK(R.one() == one);
}

TEST_CASE("E3 squares vanish including scalar multiples") {
    GradedRing R = fixture_E3();
    Vec th = unit_vec(R, 1);
    Vec th2 = R.scale(2, th);
    CHECK(R.multiply(th, th) == R.zero());
    CHECK(R.multiply(th, th2) == R.zero());
}

TEST_CASE("planted degree defect is reported") {
    // D2 with x*x supported in degree 1 (should be degree 0)
    std::vector<Vec> t(4, Vec(2, 0));
    t[0] = {1, 0};
    t[1] = {0, 1};
    t[2] = {0, 1};
    t[3] = {0, 1};  // x*x = x: wrong degree
    GradedRing bad(2, GradingGroup({2}), SignForm::zero(1), {"1", "x"}, {0, 1}, t);
    auto v = bad.check_axioms();
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& viol : v)
        if (viol.kind == "degree") found = true;
    CHECK(found);
}

TEST_CASE("component enumeration") {
    GradedRing R = fixture_D2();
    CHECK(R.component_values(0).size() == 2);  // {0, 1}
    CHECK(R.component_values(1).size() == 2);  // {0, x}
    GradedRing Z = fixture_Z0();
    CHECK(Z.component_values(0).size() == 1);  // {0}
    // |R| = p^dim; components partition the basis
    int total = 0;
    for (int d = 0; d < R.group().size(); ++d) total += R.component_dim(d);
    CHECK(total == R.dim());
}

TEST_CASE("degree-0 units of each fixture form a group") {
    for (const std::string& name : fixture_names()) {
        GradedRing R = fixture_by_name(name);
        INFO(name);
        int z = R.group().zero();
        std::set<Vec> units;
        for (int idx : R.component_units(z)) units.insert(R.component_values(z)[idx]);
        for (const Vec& u : units) {
            auto inv = R.unit_inverse(u);
            REQUIRE(inv.has_value());
            if (!R.is_zero_ring()) CHECK(units.count(*inv) == 1);
            for (const Vec& w : units) CHECK(units.count(R.multiply(u, w)) == 1);
        }
    }
}

TEST_CASE("U2 is a graded field: every nonzero homogeneous element is a unit") {
    GradedRing R = fixture_U2();
    for (int d = 0; d < R.group().size(); ++d)
        for (const Vec& v : R.component_values(d)) {
            if (vec_is_zero(v)) continue;
            CHECK(R.is_unit(v));
        }
}

TEST_CASE("eps-commutativity of E3 against its sign form") {
    GradedRing R = fixture_E3();
    // r s = (-1)^{eps(|r|,|s|)} s r on all homogeneous pairs
    for (int a = 0; a < R.group().size(); ++a)
        for (int b = 0; b < R.group().size(); ++b)
            for (const Vec& r : R.component_values(a))
                for (const Vec& s : R.component_values(b)) {
                    Vec lhs = R.multiply(r, s);
                    Vec rhs = R.scale(R.eps_sign(a, b), R.multiply(s, r));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("random rings are valid, reproducible and small") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GradedRing R = random_ring(seed);
        CHECK(R.check_axioms().empty());
        long size = 1;
        for (int i = 0; i < R.dim(); ++i) size *= R.p();
        CHECK(size <= 81);
        GradedRing again = random_ring(seed);
        CHECK(R == again);
    }
}
