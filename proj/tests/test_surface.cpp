#include <doctest.h>

#include "dp2/golden.hpp"
#include "dp2/rng.hpp"

using namespace dp2;

namespace {

FieldPtr F3() { return FieldDescriptor::prime(3); }
FieldPtr F9() { return FieldDescriptor::f9(); }

}  // namespace

TEST_CASE("normal form") {
    FieldPtr F = F9();
    FieldElement gamma = F->generator();
    // X_3: gamma w^2 = x^4+y^4+z^4 becomes g = (gamma+2)(x^4+y^4+z^4)
    TernaryForm quartic = TernaryForm::from_terms(
        F, 4, {{1, {4, 0, 0}}, {1, {0, 4, 0}}, {1, {0, 0, 4}}});
    DelPezzo2 X = DelPezzo2::normal_form(gamma, TernaryForm::zero(F, 2), quartic);
    FieldElement gp2 = F->element({2, 1});  // gamma + 2 = 1/gamma
    CHECK(X.g() == quartic.scale(gp2));
    CHECK(X.f().is_zero());
    CHECK(golden::x3().surface.g() == X.g());

    // identity case
    FieldPtr E = F3();
    TernaryForm g1 = golden::x1().surface.g();
    DelPezzo2 X1 = DelPezzo2::normal_form(E->one(), TernaryForm::zero(E, 2), g1);
    CHECK(X1.g() == g1);

    // X_1 as printed: -w^2 = (x^2+y^2)^2 + y^3 z - y z^3
    TernaryForm gp = TernaryForm::from_terms(E, 4,
                                             {{1, {4, 0, 0}},
                                              {2, {2, 2, 0}},
                                              {1, {0, 4, 0}},
                                              {1, {0, 3, 1}},
                                              {-1, {0, 1, 3}}});
    DelPezzo2 X1b = DelPezzo2::normal_form(E->from_int(-1), TernaryForm::zero(E, 2), gp);
    CHECK(X1b.g() == gp.scale(E->from_int(-1)));
    CHECK(X1b.g() == golden::x1().surface.g());

    CHECK_THROWS_AS(
        DelPezzo2::normal_form(E->zero(), TernaryForm::zero(E, 2), gp), ZeroUnit);

    // completing the square kills f and keeps the branch locus (up to unit)
    TernaryForm f = TernaryForm::from_terms(E, 2, {{1, {2, 0, 0}}, {1, {0, 1, 1}}});
    DelPezzo2 Xf = DelPezzo2::normal_form(E->one(), f, gp);
    DelPezzo2 Xc = DelPezzo2::normal_form(E->one(), f, gp, /*complete_square=*/true);
    CHECK(Xc.f().is_zero());
    CHECK(Xc.branch() == Xf.branch().scale(E->one()));
}

TEST_CASE("branch locus") {
    // b = f^2 + 4g, degree 4; over F_3 with f = 0 this is just g
    const auto& d = golden::x1();
    CHECK(d.surface.branch() == d.surface.g());
    // Q_i lies on the branch locus B_i
    for (const auto* s : golden::all()) {
        FieldElement v = s->surface.branch().evaluate(s->Q.x(), s->Q.y(), s->Q.z());
        CHECK(v.is_zero());
    }
}

TEST_CASE("smoothness of the three demo surfaces") {
    for (const auto* s : golden::all()) {
        SmoothnessCertificate cert = s->surface.is_smooth();
        CHECK(cert.smooth);
        CHECK(cert.extension_bound == 9);
        CHECK(cert.euler_skips_b);
    }
}

TEST_CASE("a quadruple line is singular") {
    FieldPtr F = F3();
    TernaryForm g = TernaryForm::monomial(F->one(), {4, 0, 0});  // x^4
    DelPezzo2 X(TernaryForm::zero(F, 2), g);
    CHECK(!X.is_smooth().smooth);
}

TEST_CASE("a nodal branch quartic is singular") {
    FieldPtr F = F3();
    // g = x^4 + y^4 gives b with a singular point at (0:0:1)
    TernaryForm g = TernaryForm::from_terms(F, 4, {{1, {4, 0, 0}}, {1, {0, 4, 0}}});
    DelPezzo2 X(TernaryForm::zero(F, 2), g);
    CHECK(!X.is_smooth().smooth);
}

TEST_CASE("smoothness is invariant under linear changes of coordinates") {
    Rng rng(99);
    for (const auto* s : golden::all()) {
        FieldPtr F = s->surface.field();
        for (int trial = 0; trial < 10; ++trial) {
            MatFq M = random_gl3(F, rng);
            DelPezzo2 Xt(s->surface.f().substitute_linear(M),
                         s->surface.g().substitute_linear(M));
            CHECK(Xt.is_smooth(/*seed=*/static_cast<uint64_t>(trial)).smooth);
        }
    }
}

TEST_CASE("projection and involution") {
    const auto& d = golden::x2();
    const DelPezzo2& X = d.surface;
    // involution is an exact involution on every rational point
    PointCount pc = rational_points(X, 1, /*list_points=*/true);
    REQUIRE(pc.count >= 1);
    CHECK(pc.points.size() == static_cast<size_t>(pc.count));
    for (const auto& pt : pc.points) {
        SurfacePoint i1 = involution(X, pt);
        SurfacePoint i2 = involution(X, i1);
        CHECK(i2 == pt);
        CHECK(project(i1) == project(pt));
        // fixed points of the involution lie exactly over the branch locus
        PlanePoint q = project(pt);
        bool on_branch = X.branch().evaluate(q.x(), q.y(), q.z()).is_zero();
        CHECK((i1 == pt) == on_branch);
    }
}

TEST_CASE("fibers") {
    const auto& d1 = golden::x1();
    FieldPtr F = F3();
    // g_1(0,0,1) = 0 with f = 0: the fiber above (0:0:1) is one ramified point
    Fiber fib = fiber(d1.surface, PlanePoint(F->zero(), F->zero(), F->one()));
    CHECK(fib.ramified);
    REQUIRE(fib.points.size() == 1);
    CHECK(fib.points[0].w().is_zero());

    // b_3(1,0,0) = gamma + 2 is a nonsquare in F_9: empty fiber, flag set
    const auto& d3 = golden::x3();
    FieldPtr E = F9();
    Fiber fib3 = fiber(d3.surface, PlanePoint(E->one(), E->zero(), E->zero()));
    CHECK(fib3.points.empty());
    CHECK(fib3.needs_quadratic_extension);

    // |fiber| + 2 * flag == 2 when b(Q) != 0, and 1 when b(Q) = 0
    for (int64_t yi = 0; yi < 3; ++yi)
        for (int64_t zi = 0; zi < 3; ++zi) {
            PlanePoint Q(F->one(), F->element_at(yi), F->element_at(zi));
            Fiber fb = fiber(d1.surface, Q);
            FieldElement bq = d1.surface.branch().evaluate(Q.x(), Q.y(), Q.z());
            size_t expected = bq.is_zero() ? 1 : 2;
            CHECK(fb.points.size() + (fb.needs_quadratic_extension ? 2 : 0) == expected);
        }
}

TEST_CASE("points not on the surface are rejected") {
    const auto& d = golden::x1();
    FieldPtr F = F3();
    CHECK_THROWS_AS(d.surface.point(F->zero(), F->zero(), F->one(), F->one()),
                    PointNotOnSurface);
}

TEST_CASE("rational point counts") {
    // independent oracle: direct enumeration of all (x:y:z:w) representatives
    auto brute_count = [](const DelPezzo2& X) {
        FieldPtr F = X.field();
        int64_t count = 0;
        auto on_x = [&](const FieldElement& x, const FieldElement& y,
                        const FieldElement& z) {
            for (int64_t wi = 0; wi < F->q(); ++wi) {
                FieldElement w = F->element_at(wi);
                FieldElement lhs =
                    w * w + X.f().evaluate(x, y, z) * w - X.g().evaluate(x, y, z);
                if (lhs.is_zero()) ++count;
            }
        };
        for (int64_t a = 0; a < F->q(); ++a)
            for (int64_t b = 0; b < F->q(); ++b)
                on_x(F->one(), F->element_at(a), F->element_at(b));
        for (int64_t c = 0; c < F->q(); ++c) on_x(F->zero(), F->one(), F->element_at(c));
        on_x(F->zero(), F->zero(), F->one());
        return count;
    };

    for (const auto* s : golden::all()) {
        PointCount pc = rational_points(s->surface, 1);
        int64_t q = s->surface.field()->q();
        CHECK(pc.count >= 1);
        CHECK(pc.count % q == 1);  // #X(F_q) == 1 mod q
        CHECK(pc.count == brute_count(s->surface));
    }

    // counting over an extension agrees with the congruence as well
    PointCount pc2 = rational_points(golden::x1().surface, 2);
    CHECK(pc2.count % 9 == 1);

    CHECK_THROWS_AS(rational_points(golden::x3().surface, 3), EnumerationTooLarge);
}
