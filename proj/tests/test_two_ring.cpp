#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s2r/two_ring.hpp"

using namespace s2r;

namespace {

Mor mor_of(const TwoRing& t, int src, int tgt, std::initializer_list<Coef> coeffs) {
    Vec v(coeffs);
    return {src, tgt, v};
}

}  // namespace

TEST_CASE("companion hom-sets are ring components") {
    TwoRing t(fixture_D2());
    CHECK(t.hom(0, 1).size() == 2);  // {0, x}
    CHECK(t.hom(1, 1).size() == 2);  // {0, 1}
    CHECK(t.hom(1, 0).size() == 2);
}

TEST_CASE("tensor formula carries the sign over E3") {
    TwoRing t(fixture_E3());
    Mor th = mor_of(t, 0, 1, {0, 1});
    // th (x) th = (-1)^{eps(0,-1)} th^2 = 0
    CHECK(vec_is_zero(t.tensor(th, th).val));
    // id_1 (x) th = (-1)^{eps(1,-1)} th = 2 th : 1 -> 0
    Mor tw = t.tensor(t.identity(1), th);
    CHECK(tw.src == 1);
    CHECK(tw.tgt == 0);
    CHECK(tw.val == Vec{0, 2});
}

TEST_CASE("left and right twists over E3") {
    TwoRing t(fixture_E3());
    Mor th = mor_of(t, 0, 1, {0, 1});
    Mor lt = t.ltwist(1, th);
    CHECK(lt.src == 1);
    CHECK(lt.tgt == 0);
    CHECK(lt.val == Vec{0, 2});
    Mor rt = t.rtwist(th, 1);
    CHECK(rt.src == 1);
    CHECK(rt.tgt == 0);
    CHECK(rt.val == Vec{0, 1});  // right twists are sign-free
    // twisting an identity gives an identity
    CHECK(t.ltwist(1, t.identity(0)) == t.identity(1));
}

TEST_CASE("composition is ring multiplication") {
    TwoRing t(fixture_D2());
    Mor x01 = mor_of(t, 0, 1, {0, 1});
    Mor x10 = mor_of(t, 1, 0, {0, 1});
    CHECK(vec_is_zero(t.compose(x10, x01).val));  // x^2 = 0
    CHECK(t.compose(t.identity(1), x01) == x01);
    TwoRing p2(fixture_P2());
    Mor e1 = mor_of(p2, 0, 0, {1, 0});
    Mor e2 = mor_of(p2, 0, 0, {0, 1});
    CHECK(vec_is_zero(p2.compose(e1, e2).val));
}

TEST_CASE("duals are fixed by the dinaturality oracle") {
    TwoRing d2(fixture_D2());
    Mor x = mor_of(d2, 0, 1, {0, 1});
    Mor xd = d2.dual(x);
    CHECK(xd.src == 1);
    CHECK(xd.tgt == 0);
    CHECK(xd.val == Vec{0, 1});

    TwoRing e3(fixture_E3());
    Mor th = mor_of(e3, 0, 1, {0, 1});
    Mor thd = e3.dual(th);
    CHECK(thd.src == 1);
    CHECK(thd.tgt == 0);
    CHECK(thd.val == Vec{0, 2});  // 2 theta

    CHECK(e3.dual(e3.identity(1)) == e3.identity(1));  // -1 = 1 in Z/2
    CHECK(d2.dual(d2.identity(0)) == d2.identity(0));
}

TEST_CASE("invertibility by finite search") {
    TwoRing d2(fixture_D2());
    CHECK(d2.is_invertible(d2.identity(0)));
    CHECK_FALSE(d2.is_invertible(mor_of(d2, 0, 1, {0, 1})));
    TwoRing u2(fixture_U2());
    CHECK(u2.is_invertible(mor_of(u2, 0, 1, {0, 1})));  // x^2 = 1
}

TEST_CASE("translate witnesses") {
    TwoRing e3(fixture_E3());
    Mor th = mor_of(e3, 0, 1, {0, 1});
    Mor th2 = mor_of(e3, 1, 0, {0, 2});
    CHECK(e3.is_translate(th, th));  // reflexive
    auto w = e3.translate_witness(th, th2);
    REQUIRE(w.has_value());
    Mor rebuilt = e3.compose(w->u, e3.compose(e3.ltwist(w->twist, th), w->v));
    CHECK(rebuilt == th2);

    TwoRing d2(fixture_D2());
    CHECK_FALSE(d2.is_translate(mor_of(d2, 0, 1, {0, 1}), d2.identity(0)));
}

TEST_CASE("translate relation is symmetric and transitive on fixtures") {
    for (const std::string& name : {"D2", "P2", "E3", "U2"}) {
        TwoRing t(fixture_by_name(name));
        INFO(name);
        auto mors = t.all_morphisms();
        for (const Mor& a : mors)
            for (const Mor& b : mors) {
                bool ab = t.is_translate(a, b);
                CHECK(ab == t.is_translate(b, a));
                if (!ab) continue;
                for (const Mor& c : mors)
                    if (t.is_translate(b, c)) CHECK(t.is_translate(a, c));
            }
    }
}

TEST_CASE("pseudo-commutativity witness equation") {
    TwoRing d2(fixture_D2());
    Mor r = mor_of(d2, 0, 1, {0, 1});
    Mor s = mor_of(d2, 1, 0, {0, 1});
    auto w = d2.pseudo_commute(r, s);
    Mor lhs = d2.compose(w.v, d2.compose(w.r_tw, d2.compose(w.s_tw, w.u)));
    CHECK(lhs == d2.compose(s, r));
    CHECK(d2.is_translate(r, w.r_tw));
    CHECK(d2.is_translate(s, w.s_tw));

    // scalar case over E3: s r = 2 theta
    TwoRing e3(fixture_E3());
    Mor th = mor_of(e3, 0, 1, {0, 1});
    Mor two = mor_of(e3, 1, 1, {2, 0});
    auto w2 = e3.pseudo_commute(th, two);
    Mor lhs2 = e3.compose(w2.v, e3.compose(w2.r_tw, e3.compose(w2.s_tw, w2.u)));
    CHECK(lhs2 == e3.compose(two, th));
    CHECK(e3.compose(two, th).val == Vec{0, 2});
}

TEST_CASE("coherence report is clean on all fixtures") {
    for (const std::string& name : fixture_names()) {
        TwoRing t(fixture_by_name(name));
        INFO(name);
        CHECK(t.coherence_report().empty());
    }
}

TEST_CASE("zig-zag identities hold for every object") {
    for (const std::string& name : fixture_names()) {
        TwoRing t(fixture_by_name(name));
        for (int g = 0; g < t.objects(); ++g) {
            int ng = t.group().neg(g);
            CHECK(t.compose(t.tensor(t.identity(g), t.epsilon(g)),
                            t.tensor(t.eta(g), t.identity(g))) == t.identity(g));
            CHECK(t.compose(t.tensor(t.epsilon(g), t.identity(ng)),
                            t.tensor(t.identity(ng), t.eta(g))) == t.identity(ng));
        }
    }
}

TEST_CASE("invertible composites force invertible factors") {
    for (const std::string& name : {"D2", "P2", "U2", "E3"}) {
        TwoRing t(fixture_by_name(name));
        for (const Mor& r : t.all_morphisms())
            for (const Mor& s : t.all_morphisms()) {
                if (s.src != r.tgt) continue;
                if (t.is_invertible(t.compose(s, r))) {
                    CHECK(t.is_invertible(r));
                    CHECK(t.is_invertible(s));
                }
            }
    }
}

TEST_CASE("dual sign follows the closed-form conjecture on fixtures") {
    // recorded conjecture: dual(r) = (-1)^{eps(h, g-h)} r for r: g -> h; the
    // dinaturality search stays authoritative
    for (const std::string& name : fixture_names()) {
        TwoRing t(fixture_by_name(name));
        const GradingGroup& G = t.group();
        for (int g = 0; g < t.objects(); ++g)
            for (int h = 0; h < t.objects(); ++h) {
                int e = t.ring().eps().eval(G.elt(h), G.elt(G.sub(g, h)));
                CHECK(t.dual_sign(g, h) == fp_sign(e, t.ring().p()));
            }
    }
}
