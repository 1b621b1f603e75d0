#include <doctest.h>

#include "dp2/rng.hpp"
#include "dp2/unipoly.hpp"

using namespace dp2;

namespace {

FieldPtr F3() { return FieldDescriptor::prime(3); }
FieldPtr F9() { return FieldDescriptor::f9(); }

UniPoly rand_poly(FieldPtr F, int deg, Rng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_element(F, rng));
    c.push_back(random_nonzero_element(F, rng));
    return UniPoly(F, std::move(c));
}

}  // namespace

TEST_CASE("divmod") {
    FieldPtr F = F3();
    Rng rng(1);
    for (int i = 0; i < 300; ++i) {
        UniPoly a = rand_poly(F, static_cast<int>(rng() % 8), rng);
        UniPoly b = rand_poly(F, static_cast<int>(rng() % 5), rng);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divmod(UniPoly::x(F), UniPoly::zero(F)), DivisionByZero);
}

TEST_CASE("gcd divides both and is monic") {
    Rng rng(2);
    for (FieldPtr F : {F3(), F9()}) {
        for (int i = 0; i < 200; ++i) {
            UniPoly a = rand_poly(F, static_cast<int>(rng() % 6), rng);
            UniPoly b = rand_poly(F, static_cast<int>(rng() % 6), rng);
            UniPoly g = gcd(a, b);
            CHECK(try_divide(a, g).has_value());
            CHECK(try_divide(b, g).has_value());
            if (!g.is_constant()) CHECK(g.lead().is_one());
        }
    }
}

TEST_CASE("squarefree decomposition reconstructs") {
    Rng rng(3);
    for (FieldPtr F : {F3(), F9()}) {
        for (int i = 0; i < 250; ++i) {
            // random product with designed multiplicities, p-th powers included
            UniPoly f = UniPoly::constant(random_nonzero_element(F, rng));
            int nf = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < nf; ++j) {
                UniPoly s = rand_poly(F, 1 + static_cast<int>(rng() % 2), rng);
                int m = 1 + static_cast<int>(rng() % 6);
                for (int t = 0; t < m; ++t) f = f * s;
            }
            SquarefreeDecomposition d = squarefree_decomposition(f);
            UniPoly back = UniPoly::constant(d.unit);
            for (const auto& [s, m] : d.factors) {
                CHECK(s.lead().is_one());
                // separable: gcd with the derivative is constant
                CHECK(gcd(s, s.derivative()).is_constant());
                for (int t = 0; t < m; ++t) back = back * s;
            }
            CHECK(back == f);
            // pairwise coprime
            for (size_t a = 0; a < d.factors.size(); ++a)
                for (size_t b = a + 1; b < d.factors.size(); ++b)
                    CHECK(gcd(d.factors[a].first, d.factors[b].first).is_constant());
        }
    }
}

TEST_CASE("squarefree decomposition handles pure p-th powers") {
    FieldPtr F = F3();
    // X^3 has identically-zero derivative
    UniPoly x3 = UniPoly::from_int_coeffs(F, {0, 0, 0, 1});
    SquarefreeDecomposition d = squarefree_decomposition(x3);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].first == UniPoly::x(F));
    CHECK(d.factors[0].second == 3);
    CHECK(d.unit.is_one());
}

TEST_CASE("distinct degree split") {
    FieldPtr F = F3();
    // (X^2 + 1) is irreducible over F_3; X (X - 1) are linear
    UniPoly f = UniPoly::from_int_coeffs(F, {1, 0, 1}) *
                UniPoly::from_int_coeffs(F, {0, 1}) *
                UniPoly::from_int_coeffs(F, {-1, 1});
    auto parts = distinct_degree_split(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first.degree() == 2);
    CHECK(parts[1].second == 2);
    CHECK(parts[1].first.degree() == 2);
}

TEST_CASE("roots in field") {
    FieldPtr F = F9();
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        // product of distinct linear factors
        std::vector<FieldElement> roots;
        UniPoly f = UniPoly::constant(random_nonzero_element(F, rng));
        int nr = 1 + static_cast<int>(rng() % 4);
        for (int j = 0; j < nr; ++j) {
            FieldElement r = random_element(F, rng);
            bool dup = false;
            for (const auto& x : roots) dup = dup || x == r;
            if (dup) continue;
            roots.push_back(r);
            f = f * UniPoly(F, {-r, F->one()});
        }
        auto found = roots_in_field(f);
        std::sort(roots.begin(), roots.end());
        REQUIRE(found.size() == roots.size());
        for (size_t j = 0; j < roots.size(); ++j) CHECK(found[j] == roots[j]);
    }
}

TEST_CASE("roots in a big field go through the splitting path") {
    FieldPtr F = F3()->extend(9);  // q = 19683 > exhaustive threshold
    std::vector<FieldElement> roots{F->element_at(5), F->element_at(1234),
                                    F->element_at(9999)};
    UniPoly f = UniPoly::constant(F->one());
    for (const auto& r : roots) f = f * UniPoly(F, {-r, F->one()});
    auto found = roots_in_field(f);
    std::sort(roots.begin(), roots.end());
    REQUIRE(found.size() == 3);
    for (size_t j = 0; j < 3; ++j) CHECK(found[j] == roots[j]);
}
