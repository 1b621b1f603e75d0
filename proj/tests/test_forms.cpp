#include <doctest.h>

#include <set>

#include "dp2/golden.hpp"
#include "dp2/rng.hpp"
#include "dp2/ternary_form.hpp"

using namespace dp2;

namespace {

FieldPtr F3() { return FieldDescriptor::prime(3); }
FieldPtr F9() { return FieldDescriptor::f9(); }

BinaryForm rand_binary(FieldPtr F, int deg, Rng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_element(F, rng));
    c.push_back(random_nonzero_element(F, rng));
    return BinaryForm(F, deg, std::move(c));
}

}  // namespace

TEST_CASE("ternary arithmetic: (x^2+y^2)^2 over F_3") {
    FieldPtr F = F3();
    TernaryForm s = TernaryForm::from_terms(F, 2, {{1, {2, 0, 0}}, {1, {0, 2, 0}}});
    TernaryForm sq = s * s;
    // x^4 + 2x^2y^2 + y^4 = x^4 - x^2y^2 + y^4
    TernaryForm expect = TernaryForm::from_terms(
        F, 4, {{1, {4, 0, 0}}, {-1, {2, 2, 0}}, {1, {0, 4, 0}}});
    CHECK(sq == expect);
    CHECK((s * TernaryForm::zero(F, 2)).is_zero());
}

TEST_CASE("golden h_3 reassembles from its monomials") {
    const auto& d = golden::x3();
    FieldPtr F = d.surface.field();
    TernaryForm acc(F, 3);
    for (const auto& [e, c] : d.h.terms()) acc = acc + TernaryForm::monomial(c, e);
    CHECK(acc == d.h);
    CHECK(d.h.terms().size() == 8);
}

TEST_CASE("evaluation") {
    const auto& d3 = golden::x3();
    FieldPtr F = d3.surface.field();
    CHECK(d3.h.evaluate(F->one(), F->one(), F->one()).is_zero());

    const auto& d1 = golden::x1();
    FieldPtr E = d1.surface.field();
    CHECK(d1.h.evaluate(E->zero(), E->zero(), E->one()).is_zero());

    TernaryForm x4 = TernaryForm::monomial(E->one(), {4, 0, 0});
    CHECK(x4.evaluate(E->one(), E->zero(), E->zero()) == E->one());
    CHECK_THROWS_AS(x4.evaluate(E->zero(), E->zero(), E->zero()), ZeroVector);
}

TEST_CASE("compose basics") {
    FieldPtr F = F3();
    TernaryForm x = TernaryForm::monomial(F->one(), {1, 0, 0});
    BinaryForm u = BinaryForm::u(F), v = BinaryForm::v(F);
    CHECK(compose(x, u, v, BinaryForm::zero(F)) == u);

    // (x^2+y^2) o (u^2, uv, v^2) = u^4 + u^2 v^2
    TernaryForm s = TernaryForm::from_terms(F, 2, {{1, {2, 0, 0}}, {1, {0, 2, 0}}});
    BinaryForm u2 = u * u, uv = u * v, v2 = v * v;
    BinaryForm got = compose(s, u2, uv, v2);
    CHECK(got == BinaryForm::from_int_coeffs(F, 4, {0, 0, 1, 0, 1}));
}

TEST_CASE("compose is a ring homomorphism in the form argument") {
    Rng rng(11);
    FieldPtr F = F9();
    for (int i = 0; i < 60; ++i) {
        TernaryForm h1(F, 2), h2(F, 2);
        for (const auto& e : std::vector<TernaryForm::Exponents>{
                 {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}}) {
            h1.set_coeff(e, random_element(F, rng));
            h2.set_coeff(e, random_element(F, rng));
        }
        if (h1.is_zero() || h2.is_zero()) continue;
        BinaryForm tx = rand_binary(F, 2, rng), ty = rand_binary(F, 2, rng),
                   tz = rand_binary(F, 2, rng);
        BinaryForm lhs = compose(h1 * h2, tx, ty, tz);
        BinaryForm rhs = compose(h1, tx, ty, tz) * compose(h2, tx, ty, tz);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("binary gcd") {
    FieldPtr F = F3();
    BinaryForm u = BinaryForm::u(F), v = BinaryForm::v(F);
    CHECK(gcd(u * u * v, u * v * v) == u * v);
    BinaryForm a = BinaryForm::from_int_coeffs(F, 2, {0, 0, 2});  // 2u^2
    CHECK(gcd(a, BinaryForm::zero(F)) == u * u);

    // gcd(u^3 - uv^2, u^2 - v^2) = u^2 - v^2: u^3-uv^2 = u(u-v)(u+v)
    BinaryForm f = BinaryForm::from_int_coeffs(F, 3, {0, -1, 0, 1});
    BinaryForm g = BinaryForm::from_int_coeffs(F, 2, {-1, 0, 1});
    CHECK(gcd(f, g) == g);
    // cross-check by roots: every projective root of g is a root of f
    for (const auto& r : binary_roots(g, 2)) {
        CHECK(f.embed_into(r.u.field()).eval(r.u, r.v).is_zero());
    }
}

TEST_CASE("binary squarefree decomposition") {
    FieldPtr F = F3();
    BinaryForm u = BinaryForm::u(F), v = BinaryForm::v(F);

    BinaryForm s = BinaryForm::from_int_coeffs(F, 2, {-1, 0, 1});  // u^2 - v^2
    auto d = squarefree_decomposition(s * s);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].first == s);
    CHECK(d.factors[0].second == 2);
    CHECK(d.unit.is_one());

    // u^3: derivative path through p-th roots
    auto d2 = squarefree_decomposition(u * u * u);
    REQUIRE(d2.factors.size() == 1);
    CHECK(d2.factors[0].first == u);
    CHECK(d2.factors[0].second == 3);

    // v-powers are tracked as the (1:0) root
    auto d3 = squarefree_decomposition(u * u * v * v * v);
    REQUIRE(d3.factors.size() == 2);
    CHECK(d3.factors[0].first == u);
    CHECK(d3.factors[0].second == 2);
    CHECK(d3.factors[1].first == v);
    CHECK(d3.factors[1].second == 3);
}

TEST_CASE("binary squarefree reconstruction on random forms") {
    Rng rng(12);
    for (FieldPtr F : {F3(), F9()}) {
        for (int i = 0; i < 150; ++i) {
            BinaryForm f = BinaryForm::constant(random_nonzero_element(F, rng));
            int nf = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < nf; ++j) {
                BinaryForm s = rand_binary(F, 1 + static_cast<int>(rng() % 2), rng);
                int m = 1 + static_cast<int>(rng() % 5);
                for (int t = 0; t < m; ++t) f = f * s;
            }
            if (static_cast<int>(rng() % 3) == 0) f = f * BinaryForm::v(F).pow(3);
            auto d = squarefree_decomposition(f);
            CHECK(d.reconstruct() == f);
        }
    }
}

TEST_CASE("binary square root") {
    FieldPtr F = F3();
    BinaryForm u = BinaryForm::u(F), v = BinaryForm::v(F);

    auto r = binary_sqrt(u * u * v * v);
    CHECK(r.root == u * v);
    CHECK(r.unit.is_one());
    CHECK(r.unit_is_square);

    // 2u^2: squares in F_3 are {0, 1}, so the unit 2 stays outside
    auto r2 = binary_sqrt(BinaryForm::from_int_coeffs(F, 2, {0, 0, 2}));
    CHECK(r2.root == u);
    CHECK(r2.unit == F->from_int(2));
    CHECK(!r2.unit_is_square);

    CHECK_THROWS_AS(binary_sqrt(u * u * v), NotASquareUpToUnit);

    Rng rng(13);
    for (FieldPtr E : {F3(), F9()}) {
        for (int i = 0; i < 120; ++i) {
            BinaryForm s = rand_binary(E, 1 + static_cast<int>(rng() % 4), rng);
            FieldElement c = random_nonzero_element(E, rng);
            auto rr = binary_sqrt((s * s).scale(c));
            CHECK((rr.root * rr.root).scale(rr.unit) == (s * s).scale(c));
        }
    }
}

TEST_CASE("resultant basics") {
    FieldPtr F = F3();
    // res_z(z - x, z - y) = x - y up to sign
    TernaryForm a = TernaryForm::from_terms(F, 1, {{1, {0, 0, 1}}, {-1, {1, 0, 0}}});
    TernaryForm b = TernaryForm::from_terms(F, 1, {{1, {0, 0, 1}}, {-1, {0, 1, 0}}});
    BinaryForm r = resultant(a, b, 2);
    BinaryForm xmy = BinaryForm::from_int_coeffs(F, 1, {-1, 1});
    CHECK((r == xmy || r == -xmy));

    TernaryForm z2 = TernaryForm::monomial(F->one(), {0, 0, 2});
    CHECK(resultant(z2, z2, 2).is_zero());

    // degree 0 in the eliminated variable
    TernaryForm x3m = TernaryForm::monomial(F->one(), {3, 0, 0});
    CHECK_THROWS_AS(resultant(x3m, z2, 2), EliminationDegenerate);
}

TEST_CASE("resultant vanishes exactly at common roots") {
    // partials of x^4+y^4+z^4 over F_3 are x^3, y^3, z^3 (degenerate in z);
    // after the shear z -> x + z they become elimination-friendly
    FieldPtr F = F3();
    TernaryForm q = TernaryForm::from_terms(
        F, 4, {{1, {4, 0, 0}}, {1, {0, 4, 0}}, {1, {0, 0, 4}}});
    MatFq M = MatFq::identity(F, 3);
    M.at(1, 2) = F->one();  // y := y + z
    M.at(2, 0) = F->one();  // z := x + z
    TernaryForm qt = q.substitute_linear(M);
    TernaryForm px = qt.partial(0), py = qt.partial(1), pz = qt.partial(2);
    BinaryForm r = resultant(px, py, 2);
    REQUIRE(!r.is_zero());

    // oracle: exhaustive projective search over F_81 for common zeros of the
    // partials; the smooth quartic has none, so r has no root matching one
    FieldPtr F81 = F9()->extend(2);
    auto roots = binary_roots(r, 9);
    for (const auto& root : roots) {
        // solve for z and check all three partials
        FieldPtr E = root.u.field();
        bool found_common = false;
        if (E->q() <= 81) {
            for (int64_t i = 0; i < E->q() + 1; ++i) {
                FieldElement z = i < E->q() ? E->element_at(i) : E->one();
                FieldElement xx = root.u, yy = root.v;
                if (i == E->q() && (xx.is_zero() && yy.is_zero())) continue;
                FieldElement vx = px.embed_into(E).evaluate(xx, yy, z);
                FieldElement vy = py.embed_into(E).evaluate(xx, yy, z);
                FieldElement vz = pz.embed_into(E).evaluate(xx, yy, z);
                if (vx.is_zero() && vy.is_zero() && vz.is_zero()) found_common = true;
            }
        }
        CHECK(!found_common);
    }
    (void)F81;
}

TEST_CASE("randomized resultant against exhaustive common-zero search") {
    Rng rng(14);
    FieldPtr F = F3();
    FieldPtr F9e = F9();
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        TernaryForm a(F, 3), b(F, 3);
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; j + i <= 3; ++j) {
                a.set_coeff({i, j, 3 - i - j}, random_element(F, rng));
                b.set_coeff({i, j, 3 - i - j}, random_element(F, rng));
            }
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<BinaryForm> ca = a.collect(2), cb = b.collect(2);
        if (ca[3].is_zero() || ca[2].is_zero() || cb[3].is_zero()) continue;
        BinaryForm r;
        try {
            r = resultant(a, b, 2);
        } catch (const EliminationDegenerate&) {
            continue;
        }
        ++checked;
        // exhaustive over F_9: every common projective zero maps to a root of r
        for (int64_t xi = 0; xi < 10; ++xi)
            for (int64_t yi = 0; yi < 9; ++yi)
                for (int64_t zi = 0; zi < 10; ++zi) {
                    FieldElement x = xi < 9 ? F9e->element_at(xi) : F9e->one();
                    FieldElement y = F9e->element_at(yi);
                    FieldElement z = zi < 9 ? F9e->element_at(zi) : F9e->one();
                    if (xi == 9 && zi == 9) continue;
                    if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
                    if (!a.embed_into(F9e).evaluate(x, y, z).is_zero()) continue;
                    if (!b.embed_into(F9e).evaluate(x, y, z).is_zero()) continue;
                    if (r.is_zero()) continue;
                    if (x.is_zero() && y.is_zero()) continue;
                    CHECK(r.embed_into(F9e).eval(x, y).is_zero());
                }
    }
    CHECK(checked > 10);
}

TEST_CASE("binary roots") {
    FieldPtr F = F3();
    BinaryForm u = BinaryForm::u(F), v = BinaryForm::v(F);

    // uv(u - v): roots (0:1), (1:0), (1:1)
    BinaryForm f = u * v * (u - v);
    auto roots = binary_roots(f, 1);
    REQUIRE(roots.size() == 3);
    std::set<std::pair<int64_t, int64_t>> got;
    for (const auto& r : roots) {
        CHECK(r.multiplicity == 1);
        CHECK(r.ext_degree == 1);
        got.insert({r.u.lex_index(), r.v.lex_index()});
    }
    CHECK(got.count({0, 1}) == 1);
    CHECK(got.count({1, 0}) == 1);
    CHECK(got.count({1, 1}) == 1);

    // u^2 + v^2 has two conjugate roots over F_9
    BinaryForm g = BinaryForm::from_int_coeffs(F, 2, {1, 0, 1});
    CHECK(binary_roots(g, 1).empty());
    auto roots2 = binary_roots(g, 2);
    REQUIRE(roots2.size() == 2);
    for (const auto& r : roots2) {
        CHECK(r.ext_degree == 2);
        CHECK(r.multiplicity == 1);
        FieldPtr E = r.u.field();
        CHECK(g.embed_into(E).eval(r.u, r.v).is_zero());
    }
    CHECK(roots2[0].u != roots2[1].u);

    // tangent cone of the first golden curve at its marked point:
    // xy(x + y) has three rational directions
    BinaryForm tc = u * v * (u + v);
    CHECK(binary_roots(tc, 1).size() == 3);
}

TEST_CASE("binary roots multiplicities sum to the degree") {
    Rng rng(15);
    for (FieldPtr F : {F3(), F9()}) {
        for (int i = 0; i < 40; ++i) {
            BinaryForm f = rand_binary(F, 1 + static_cast<int>(rng() % 4), rng);
            if (static_cast<int>(rng() % 2)) f = f * BinaryForm::v(F);
            int n = f.degree();
            auto roots = binary_roots(f, n);
            int total = 0;
            for (const auto& r : roots) total += r.multiplicity;
            CHECK(total == n);
        }
    }
}

TEST_CASE("weighted form evaluation") {
    const auto& d = golden::x3();
    FieldPtr F = d.surface.field();
    WeightedForm eq = WeightedForm::surface_equation(d.surface.f(), d.surface.g());
    CHECK(eq.weighted_degree() == 4);
    // a point of X_3: x=0, y=0, z=1 gives w^2 = (gamma+2); gamma+2 = gamma^{-1}
    // is a nonsquare, so use the ramified point on x=1,y=z=0 instead:
    // actually check the equation form itself at a constructed fiber point
    FieldElement g0 = d.surface.g().evaluate(F->one(), F->zero(), F->zero());
    if (is_square(g0)) {
        FieldElement w = sqrt(g0);
        CHECK(eq.evaluate(F->one(), F->zero(), F->zero(), w).is_zero());
    }
    CHECK(!eq.is_zero());
}
