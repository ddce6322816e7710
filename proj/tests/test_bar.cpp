#include <doctest.h>

#include "arr/bar.hpp"
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

// Exterior algebra on x1, x2, z with dz = x1 x2: the smallest dga whose
// differential feeds the inner terms of the bar differential.
ConnectedDGA heisenberg() {
    ConnectedDGA dga;
    dga.nq = 0;
    dga.labeled = false;
    //          0: x1  1: x2  2: z   3: u=x1x2  4: v1=x1z  5: v2=x2z  6: w
    dga.degree = {1, 1, 1, 2, 2, 2, 3};
    dga.label.assign(7, {});
    dga.diff.assign(7, {});
    dga.diff[2] = {{3, Scalar(1)}};  // dz = u
    auto set = [&](int a, int b, int t, long c) { dga.prod[{a, b}] = {{t, Scalar(c)}}; };
    set(0, 1, 3, 1);
    set(1, 0, 3, -1);
    set(0, 2, 4, 1);
    set(2, 0, 4, -1);
    set(1, 2, 5, 1);
    set(2, 1, 5, -1);
    set(0, 5, 6, 1);
    set(5, 0, 6, 1);
    set(1, 4, 6, -1);
    set(4, 1, 6, -1);
    set(2, 3, 6, 1);
    set(3, 2, 6, 1);
    return dga;
}

BarTerm term(const ConnectedDGA& dga, std::vector<int> letters, std::vector<int> q = {}) {
    BarTerm t;
    t.letters = std::move(letters);
    t.q = q.empty() ? std::vector<int>(dga.nq, 0) : std::move(q);
    return t;
}

}  // namespace

TEST_CASE("dga axioms hold for the fixtures") {
    heisenberg().check_axioms();
    OSAlgebra alg = build_os(make_braid());
    ConnectedDGA::from_os_untwisted(alg).check_axioms();
    ConnectedDGA::cohomology_window(alg, braid_rb(), WindowBox::radius(2, 1)).check_axioms();
}

TEST_CASE("bar differential examples") {
    ConnectedDGA dga = heisenberg();

    SUBCASE("closed degree-one letters: d[r1|r2] = -[r1 ^ r2]") {
        BarElement x = BarElement::single(term(dga, {0, 1}));  // [x1|x2]
        BarElement expected = BarElement::single(term(dga, {3})) * Scalar(-1);
        CHECK(bar_d(dga, x) == expected);
    }
    SUBCASE("d[r] = -[dr] in degree one") {
        BarElement x = BarElement::single(term(dga, {2}));  // [z]
        BarElement expected = BarElement::single(term(dga, {3})) * Scalar(-1);
        CHECK(bar_d(dga, x) == expected);
    }
    SUBCASE("d[] = 0") {
        CHECK(bar_d(dga, BarElement::single(term(dga, {}))).is_zero());
    }
}

TEST_CASE("bar d squared vanishes on random elements") {
    ConnectedDGA heis = heisenberg();
    OSAlgebra alg = build_os(make_braid());
    ConnectedDGA braid_h = ConnectedDGA::from_os_untwisted(alg);
    ConnectedDGA window = ConnectedDGA::cohomology_window(alg, braid_rb(), WindowBox::radius(2, 1));

    std::mt19937 rng(515151);
    auto random_element = [&](const ConnectedDGA& dga, int max_len) {
        BarElement e;
        std::uniform_int_distribution<int> len(0, max_len);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        std::uniform_int_distribution<int> qv(-2, 2);
        for (int t = 0; t < 3; ++t) {
            std::vector<int> letters;
            int s = len(rng);
            for (int i = 0; i < s; ++i) letters.push_back(letter(rng));
            std::vector<int> q(dga.nq);
            for (auto& x : q) x = qv(rng);
            BarTerm bt;
            bt.letters = std::move(letters);
            bt.q = std::move(q);
            e.add(bt, random_rational_scalar(rng));
        }
        return e;
    };

    for (int i = 0; i < 200; ++i) {
        BarElement e = random_element(heis, 4);
        CHECK(bar_d(heis, bar_d(heis, e)).is_zero());
    }
    for (int i = 0; i < 200; ++i) {
        BarElement e = random_element(braid_h, 4);
        CHECK(bar_d(braid_h, bar_d(braid_h, e)).is_zero());
    }
    for (int i = 0; i < 100; ++i) {
        BarElement e = random_element(window, 3);
        CHECK(bar_d(window, bar_d(window, e)).is_zero());
    }
}

TEST_CASE("bar_d preserves bar length") {
    ConnectedDGA dga = heisenberg();
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
    for (int i = 0; i < 50; ++i) {
        std::vector<int> letters;
        for (int s = 0; s < 3; ++s) letters.push_back(letter(rng));
        BarElement e = BarElement::single(term(dga, letters));
        BarElement de = bar_d(dga, e);
        CHECK(de.max_length() <= e.max_length());
    }
}

TEST_CASE("shuffle product") {
    ConnectedDGA dga = heisenberg();

    SUBCASE("degree-one letters shuffle without signs") {
        BarElement x = BarElement::single(term(dga, {0}));
        BarElement y = BarElement::single(term(dga, {1}));
        BarElement expected =
            BarElement::single(term(dga, {0, 1})) + BarElement::single(term(dga, {1, 0}));
        CHECK(bar_shuffle(dga, x, y, 3) == expected);
    }
    SUBCASE("the empty tensor is the unit") {
        BarElement x = BarElement::single(term(dga, {0, 2}));
        BarElement one = BarElement::single(term(dga, {}));
        CHECK(bar_shuffle(dga, x, one, 3) == x);
        CHECK(bar_shuffle(dga, one, x, 3) == x);
    }
    SUBCASE("associativity on random letters") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        for (int i = 0; i < 40; ++i) {
            BarElement x = BarElement::single(term(dga, {letter(rng)}));
            BarElement y = BarElement::single(term(dga, {letter(rng)}));
            BarElement z = BarElement::single(term(dga, {letter(rng)}));
            CHECK(bar_shuffle(dga, bar_shuffle(dga, x, y, 4), z, 4) ==
                  bar_shuffle(dga, x, bar_shuffle(dga, y, z, 4), 4));
        }
    }
    SUBCASE("commutativity in bar degree") {
        std::mt19937 rng(18);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        for (int i = 0; i < 60; ++i) {
            std::vector<int> lx = {letter(rng)}, ly = {letter(rng), letter(rng)};
            BarElement x = BarElement::single(term(dga, lx));
            BarElement y = BarElement::single(term(dga, ly));
            int dx = x.bar_degree(dga), dy = y.bar_degree(dga);
            BarElement xy = bar_shuffle(dga, x, y, 4);
            BarElement yx = bar_shuffle(dga, y, x, 4);
            CHECK(xy == yx * Scalar((dx * dy) % 2 ? -1 : 1));
        }
    }
    SUBCASE("truncation overflow throws") {
        BarElement x = BarElement::single(term(dga, {0, 1}));
        CHECK_THROWS_AS(bar_shuffle(dga, x, x, 3), TruncationError);
    }
}

TEST_CASE("bar_d is a derivation for the shuffle") {
    ConnectedDGA dga = heisenberg();
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
    std::uniform_int_distribution<int> len(1, 2);
    for (int i = 0; i < 60; ++i) {
        std::vector<int> lx, ly;
        for (int s = len(rng); s-- > 0;) lx.push_back(letter(rng));
        for (int s = len(rng); s-- > 0;) ly.push_back(letter(rng));
        BarElement x = BarElement::single(term(dga, lx));
        BarElement y = BarElement::single(term(dga, ly));
        int dx = x.bar_degree(dga);
        BarElement lhs = bar_d(dga, bar_shuffle(dga, x, y, 6));
        BarElement x_dy = bar_shuffle(dga, x, bar_d(dga, y), 6);
        BarElement rhs =
            bar_shuffle(dga, bar_d(dga, x), y, 6) + (dx % 2 ? x_dy * Scalar(-1) : x_dy);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("coproduct on labeled windows") {
    OSAlgebra alg = build_os(make_braid());
    ConnectedDGA dga = ConnectedDGA::cohomology_window(alg, braid_rb(), WindowBox::radius(2, 2));
    REQUIRE(dga.labeled);
    // find a letter living at component (1,0), i.e. label (-1,0)
    int psi = -1;
    for (int l = 0; l < dga.letters(); ++l)
        if (dga.degree[l] == 1 && dga.label[l] == std::vector<int>{-1, 0}) psi = l;
    REQUIRE(psi >= 0);

    SUBCASE("single letter") {
        std::vector<int> m = {1, 1};
        BarElement x = BarElement::single(term(dga, {psi}, m));
        BarTensor delta = bar_coproduct(dga, x);
        // [] q^{m + label} (x) [psi] q^m  +  [psi] q^m (x) [] q^m
        BarTensor expected;
        expected.add({term(dga, {}, {0, 1}), term(dga, {psi}, m)}, Scalar(1));
        expected.add({term(dga, {psi}, m), term(dga, {}, m)}, Scalar(1));
        CHECK(delta == expected);
    }
    SUBCASE("the empty tensor is grouplike") {
        BarElement x = BarElement::single(term(dga, {}, {2, -1}));
        BarTensor delta = bar_coproduct(dga, x);
        BarTensor expected;
        expected.add({term(dga, {}, {2, -1}), term(dga, {}, {2, -1})}, Scalar(1));
        CHECK(delta == expected);
    }
    SUBCASE("coassociativity on random length-2 tensors") {
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        std::uniform_int_distribution<int> qv(-1, 1);
        for (int i = 0; i < 40; ++i) {
            BarElement x =
                BarElement::single(term(dga, {letter(rng), letter(rng)}, {qv(rng), qv(rng)}));
            BarTensor d1 = bar_coproduct(dga, x);
            CHECK(bar_coproduct_at(dga, d1, 0) == bar_coproduct_at(dga, d1, 1));
        }
    }
    SUBCASE("coproduct is an algebra map") {
        std::mt19937 rng(6);
        std::vector<int> deg1;
        for (int l = 0; l < dga.letters(); ++l)
            if (dga.degree[l] == 1) deg1.push_back(l);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(deg1.size()) - 1);
        std::uniform_int_distribution<int> qv(-1, 1);
        for (int i = 0; i < 25; ++i) {
            BarElement x = BarElement::single(term(dga, {deg1[pick(rng)]}, {qv(rng), qv(rng)}));
            BarElement y = BarElement::single(term(dga, {deg1[pick(rng)]}, {qv(rng), qv(rng)}));
            BarTensor lhs = bar_coproduct(dga, bar_shuffle(dga, x, y, 4));
            // (Delta x)(Delta y) with factorwise shuffles; bar degree 0, so
            // no Koszul signs between factors
            BarTensor rhs;
            BarTensor dx = bar_coproduct(dga, x), dy = bar_coproduct(dga, y);
            for (const auto& [fx, cx] : dx.terms)
                for (const auto& [fy, cy] : dy.terms) {
                    BarElement left = bar_shuffle(dga, BarElement::single(fx[0]),
                                                  BarElement::single(fy[0]), 4);
                    BarElement right = bar_shuffle(dga, BarElement::single(fx[1]),
                                                   BarElement::single(fy[1]), 4);
                    for (const auto& [lt, lc] : left.terms)
                        for (const auto& [rt, rc] : right.terms)
                            rhs.add({lt, rt}, cx * cy * lc * rc);
                }
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("unlabeled dgas reject the coproduct") {
        ConnectedDGA plain = heisenberg();
        CHECK_THROWS_AS(bar_coproduct(plain, BarElement::single(term(plain, {0}))),
                        std::invalid_argument);
    }
}

TEST_CASE("antipode") {
    OSAlgebra alg = build_os(make_braid());
    ConnectedDGA dga = ConnectedDGA::cohomology_window(alg, braid_rb(), WindowBox::radius(2, 2));

    SUBCASE("on the empty tensor") {
        BarElement x = BarElement::single(term(dga, {}, {3, -2}));
        CHECK(bar_antipode(dga, x) == BarElement::single(term(dga, {}, {-3, 2})));
    }
    SUBCASE("squares to the identity on short tensors") {
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        std::uniform_int_distribution<int> qv(-1, 1);
        for (int i = 0; i < 40; ++i) {
            std::vector<int> ls = {letter(rng)};
            if (i % 2) ls.push_back(letter(rng));
            BarElement x = BarElement::single(term(dga, ls, {qv(rng), qv(rng)}));
            CHECK(bar_antipode(dga, bar_antipode(dga, x)) == x);
        }
    }
    SUBCASE("convolution identity m(S (x) I) Delta = unit eps") {
        std::mt19937 rng(10);
        std::uniform_int_distribution<int> letter(0, dga.letters() - 1);
        std::uniform_int_distribution<int> qv(-1, 1);
        for (int i = 0; i < 40; ++i) {
            BarElement x = BarElement::single(term(dga, {letter(rng)}, {qv(rng), qv(rng)}));
            BarTensor delta = bar_coproduct(dga, x);
            BarElement conv;
            for (const auto& [f, c] : delta.terms)
                conv = conv + bar_shuffle(dga, bar_antipode(dga, BarElement::single(f[0])),
                                          BarElement::single(f[1]), 4) *
                                  c;
            // eps of a positive-length tensor is zero
            CHECK(conv.is_zero());
        }
    }
}

TEST_CASE("EM pages of the untwisted braid cohomology") {
    OSAlgebra alg = build_os(make_braid());
    ConnectedDGA h = ConnectedDGA::from_os_untwisted(alg);
    EMPages pages = em_pages(h, 3);
    CHECK(pages.e1.at({1, 1}) == 5);
    CHECK(pages.e1.at({2, 2}) == 25);
    CHECK(pages.e2.at({1, 1}) == 5);
    // kernel of the cup map on H^1 (x) H^1: 25 - 6
    CHECK(pages.e2.at({2, 2}) == 19);
    CHECK(pages.e1.at({0, 0}) == 1);
}

TEST_CASE("trivial positive part gives trivial pages") {
    ConnectedDGA dga;  // no letters at all
    dga.nq = 0;
    EMPages pages = em_pages(dga, 3);
    CHECK(pages.e1.at({0, 0}) == 1);
    for (const auto& [st, dim] : pages.e1)
        if (st != std::pair<int, int>{0, 0}) CHECK(dim == 0);
}
