#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "s2r/grading.hpp"

using namespace s2r;

TEST_CASE("trivial group enumerates to the empty tuple") {
    GradingGroup g({});
    REQUIRE(g.size() == 1);
    CHECK(g.elements() == std::vector<GroupElt>{GroupElt{}});
    CHECK(g.zero() == 0);
    CHECK(g.add(0, 0) == 0);
}

TEST_CASE("Z/2 enumerates in order") {
    GradingGroup g({2});
    CHECK(g.elements() == std::vector<GroupElt>{{0}, {1}});
    CHECK(g.add(1, 1) == 0);
    CHECK(g.neg(1) == 1);
}

TEST_CASE("Z/2 x Z/2 enumerates lexicographically, duplicate-free") {
    GradingGroup g({2, 2});
    std::vector<GroupElt> want = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(g.elements() == want);
    std::set<GroupElt> dedup(g.elements().begin(), g.elements().end());
    CHECK(dedup.size() == 4);
}

TEST_CASE("cardinality is the product of the invariant factors") {
    GradingGroup g({2, 3, 4});
    CHECK(g.size() == 24);
    // addition table consistency at a sample
    CHECK(g.elt(g.add(g.index_of({1, 2, 3}), g.index_of({1, 1, 1}))) == GroupElt{0, 0, 0});
}

TEST_CASE("zero form evaluates to 0") {
    GradingGroup g({2});
    SignForm e = SignForm::zero(1);
    CHECK(e.eval(g.elt(0), g.elt(1)) == 0);
    CHECK(e.eval(g.elt(1), g.elt(1)) == 0);
}

TEST_CASE("rank-one form [1] on Z/2") {
    GradingGroup g({2});
    SignForm e({{1}});
    CHECK(e.eval({1}, {1}) == 1);
    CHECK(e.eval({1}, {0}) == 0);
    CHECK(e.eval({0}, {1}) == 0);
    CHECK(e.well_defined_for(g));
    CHECK(e.is_symmetric());
}

TEST_CASE("forms with odd factors must vanish on those coordinates") {
    GradingGroup g({3, 2});
    CHECK_FALSE(SignForm({{1, 0}, {0, 0}}).well_defined_for(g));
    CHECK_FALSE(SignForm({{0, 1}, {1, 0}}).well_defined_for(g));
    CHECK(SignForm({{0, 0}, {0, 1}}).well_defined_for(g));
}

TEST_CASE("bilinearity and symmetry over all element triples") {
    GradingGroup g({2, 4});
    SignForm e({{1, 1}, {1, 0}});
    REQUIRE(e.well_defined_for(g));
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) {
            CHECK(e.eval(g.elt(a), g.elt(b)) == e.eval(g.elt(b), g.elt(a)));
            for (int c = 0; c < g.size(); ++c) {
                int lhs = e.eval(g.elt(g.add(a, b)), g.elt(c));
                int rhs = (e.eval(g.elt(a), g.elt(c)) + e.eval(g.elt(b), g.elt(c))) % 2;
                CHECK(lhs == rhs);
            }
        }
}
