#include <doctest.h>

#include "arr/massey.hpp"
#include "test_support.hpp"

#include <random>

using namespace arr;

namespace {

WeightMatrix braid_rb() {
    Scalar r = Scalar::variable();
    WeightMatrix a;
    a.rows = {{Scalar(0), r, r, Scalar(0), Scalar(-2) * r},
              {-r, Scalar(0), Scalar(0), -r, Scalar(2) * r}};
    return a;
}

LaurentElement cls_x1() {
    return LaurentElement::component({0, 1},
                                     OSElement::generator(1) - OSElement::generator(4));
}
LaurentElement cls_x2() {
    return LaurentElement::component({1, 0},
                                     OSElement::generator(2) - OSElement::generator(3));
}

}  // namespace

TEST_CASE("the braid Massey triple product is nonzero") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    WindowBox box = WindowBox::radius(2, 4);
    MasseyResult res = massey_triple(alg, a, cls_x1(), cls_x2(), cls_x2(), box);

    REQUIRE(res.defined);
    CHECK(res.nonzero_mod_indeterminacy);

    // representative equals (2/r) w2^w3 q1^2 q2 exactly
    OSElement value = alg.reduce_word({2, 3}) * Scalar::parse("2/r");
    CHECK(res.representative == LaurentElement::component({2, 1}, value));

    // certificate: d r12 = x1 x2 and d r23 = x2 x3 hold exactly
    CHECK(laurent_d(alg, a, res.r12) ==
          laurent_multiply(alg, cls_x1(), cls_x2(), box).value);
    CHECK(laurent_d(alg, a, res.r23) ==
          laurent_multiply(alg, cls_x2(), cls_x2(), box).value);

    // the indeterminacy at (2,1) is the single product line
    CHECK(res.indeterminacy_basis.size() == 1);
}

TEST_CASE("a zero input yields the zero coset") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    WindowBox box = WindowBox::radius(2, 4);
    MasseyResult res = massey_triple(alg, a, LaurentElement(), cls_x2(), cls_x2(), box);
    REQUIRE(res.defined);
    CHECK(res.representative.is_zero());
    CHECK_FALSE(res.nonzero_mod_indeterminacy);
}

TEST_CASE("untwisted products of parallel generators vanish") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a;
    a.rows = {{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
              {Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    WindowBox box = WindowBox::radius(2, 2);
    LaurentElement w1 = LaurentElement::component({0, 0}, OSElement::generator(1));
    LaurentElement w2 = LaurentElement::component({0, 0}, OSElement::generator(2));
    // w1 w2 = 0 (parallel lines), so the product is defined with primitives 0
    MasseyResult res = massey_triple(alg, a, w1, w2, w1, box);
    REQUIRE(res.defined);
    CHECK(res.r12.is_zero());
    CHECK(res.r23.is_zero());
    CHECK(res.representative.is_zero());
    CHECK_FALSE(res.nonzero_mod_indeterminacy);
}

TEST_CASE("scaling a class scales the coset") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    WindowBox box = WindowBox::radius(2, 4);
    std::mt19937 rng(808);
    Scalar c = random_rational_scalar(rng);
    if (c.is_zero()) c = Scalar(5);

    MasseyResult base = massey_triple(alg, a, cls_x1(), cls_x2(), cls_x2(), box);
    MasseyResult scaled = massey_triple(alg, a, cls_x1() * c, cls_x2(), cls_x2(), box);
    REQUIRE(base.defined);
    REQUIRE(scaled.defined);
    CHECK(scaled.nonzero_mod_indeterminacy == base.nonzero_mod_indeterminacy);

    // difference lies in indeterminacy + coboundaries at the target
    LaurentElement diff = scaled.representative - base.representative * c;
    if (!diff.is_zero()) {
        const auto& [k, val] = *diff.comps.begin();
        std::vector<Vec> span;
        Mat d1 = aomoto_differential(alg, a.row_action(k), 1);
        for (size_t col = 0; col < d1[0].size(); ++col) {
            Vec v(d1.size());
            for (size_t r = 0; r < d1.size(); ++r) v[r] = d1[r][col];
            span.push_back(std::move(v));
        }
        for (const auto& b : base.indeterminacy_basis)
            span.push_back(alg.coords(b.comps.begin()->second, 2));
        CHECK(in_span(span, alg.coords(val, 2)));
    }
}

TEST_CASE("perturbing a primitive moves the representative inside the coset") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    WindowBox box = WindowBox::radius(2, 4);
    MasseyResult res = massey_triple(alg, a, cls_x1(), cls_x2(), cls_x2(), box);
    REQUIRE(res.defined);

    // shift r12 by a closed degree-one element of component (1,1): the
    // kernel there is spanned by the weight row itself
    std::vector<Scalar> w = a.row_action({1, 1});
    OSElement closed;
    for (int j = 0; j < 5; ++j) closed.add_term({j + 1}, w[j]);
    LaurentElement shifted_r12 = res.r12 + LaurentElement::component({1, 1}, closed);
    CHECK(laurent_d(alg, a, shifted_r12) == laurent_d(alg, a, res.r12));

    LaurentElement rep2 =
        laurent_multiply(alg, shifted_r12, cls_x2(), box).value +
        laurent_multiply(alg, cls_x1(), res.r23, box).value;

    // the difference is a coboundary, so the verdict is unchanged
    LaurentElement diff = rep2 - res.representative;
    REQUIRE_FALSE(diff.is_zero());
    const auto& [k, val] = *diff.comps.begin();
    std::vector<Vec> span;
    Mat d1 = aomoto_differential(alg, a.row_action(k), 1);
    for (size_t col = 0; col < d1[0].size(); ++col) {
        Vec v(d1.size());
        for (size_t r = 0; r < d1.size(); ++r) v[r] = d1[r][col];
        span.push_back(std::move(v));
    }
    CHECK(in_span(span, alg.coords(val, 2)));
}

TEST_CASE("window too small is reported") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    WindowBox tiny = WindowBox::radius(2, 1);  // target (2,1) falls outside
    CHECK_THROWS_AS(massey_triple(alg, a, cls_x1(), cls_x2(), cls_x2(), tiny),
                    std::invalid_argument);
}

TEST_CASE("non-closed inputs are rejected") {
    OSAlgebra alg = build_os(make_braid());
    WeightMatrix a = braid_rb();
    LaurentElement bad = LaurentElement::component({1, 0}, OSElement::generator(1));
    CHECK_THROWS_AS(
        massey_triple(alg, a, bad, cls_x2(), cls_x2(), WindowBox::radius(2, 4)),
        std::invalid_argument);
}
