#include <doctest.h>

#include <set>

#include "dp2/field.hpp"
#include "dp2/rng.hpp"

using namespace dp2;

namespace {

FieldPtr F3() { return FieldDescriptor::prime(3); }
FieldPtr F9() { return FieldDescriptor::f9(); }

FieldElement gamma() { return F9()->generator(); }

}  // namespace

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(FieldDescriptor::prime(2), CharTwo);
    CHECK_THROWS_AS(FieldDescriptor::prime(9), InvalidField);
    CHECK_THROWS_AS(FieldDescriptor::prime(-5), InvalidField);
    // T^2 + 2T + 1 = (T + 1)^2 is reducible over F_3
    CHECK_THROWS_AS(FieldDescriptor::make(3, 2, {1, 2, 1}), InvalidField);
    // non-monic
    CHECK_THROWS_AS(FieldDescriptor::make(3, 2, {1, 0, 2}), InvalidField);
    CHECK(F9()->q() == 9);
    CHECK(F3()->q() == 3);
    CHECK(FieldDescriptor::make(5, 1, {0, 1})->q() == 5);
}

TEST_CASE("gamma satisfies gamma^2 = gamma + 1") {
    FieldElement g = gamma();
    CHECK(g * g == g + F9()->one());
}

TEST_CASE("multiplicative identity") {
    for (const auto& a : F9()->enumerate()) CHECK(a * F9()->one() == a);
}

TEST_CASE("division: 1/gamma = gamma + 2") {
    // brute-force oracle: the unique x with gamma * x = 1
    FieldElement g = gamma();
    FieldElement found = F9()->zero();
    int hits = 0;
    for (const auto& x : F9()->enumerate())
        if (g * x == F9()->one()) {
            found = x;
            ++hits;
        }
    CHECK(hits == 1);
    CHECK(found == F9()->element({2, 1}));
    CHECK(F9()->one() / g == found);
    CHECK_THROWS_AS(g / F9()->zero(), DivisionByZero);
}

TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS(F3()->one() + F9()->one(), FieldMismatch);
    // same arithmetic but separately described fields interoperate
    FieldPtr other = FieldDescriptor::make(3, 2, {2, 2, 1});
    CHECK(other->one() + F9()->one() == F9()->from_int(2));
}

TEST_CASE("frobenius") {
    FieldElement g = gamma();
    // oracle: cube by square-and-multiply
    FieldElement cube = g * g * g;
    CHECK(frobenius(g, 1) == cube);
    CHECK(frobenius(g, 1) == F9()->element({1, 2}));  // 2g + 1
    for (const auto& a : F9()->enumerate()) CHECK(frobenius(a, 2) == a);
    CHECK(frobenius(F3()->from_int(2), 1) == F3()->from_int(2));
    // additive and multiplicative on an exhaustive sample
    for (const auto& a : F9()->enumerate())
        for (const auto& b : F9()->enumerate()) {
            CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
            CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
        }
}

TEST_CASE("pth_root inverts frobenius") {
    for (const auto& a : F9()->enumerate()) {
        CHECK(frobenius(pth_root(a), 1) == a);
        CHECK(pth_root(frobenius(a, 1)) == a);
    }
}

TEST_CASE("squares in F_9") {
    // oracle: enumerate all squares
    std::set<int64_t> squares;
    for (const auto& a : F9()->enumerate()) squares.insert((a * a).lex_index());
    FieldElement g = gamma();
    CHECK(squares.count(g.lex_index()) == 0);
    CHECK(!is_square(g));
    CHECK(!is_square(g + F9()->from_int(2)));
    for (const auto& a : F9()->enumerate())
        CHECK(is_square(a) == (squares.count(a.lex_index()) > 0));
    CHECK(sqrt(F9()->zero()) == F9()->zero());
    CHECK_THROWS_AS(sqrt(g), NotASquare);
}

TEST_CASE("sqrt returns the lex-least root and squares back") {
    for (const auto& a : F9()->enumerate()) {
        if (!is_square(a)) continue;
        FieldElement s = sqrt(a);
        CHECK(s * s == a);
        CHECK(!(-s < s));
    }
    // nonsquare times square stays nonsquare (exhaustive, q = 9)
    FieldElement g = gamma();
    for (const auto& a : F9()->enumerate()) {
        if (a.is_zero()) continue;
        bool x = is_square(a), y = is_square(g * a);
        CHECK(x != y);
    }
}

TEST_CASE("enumeration") {
    auto e3 = F3()->enumerate();
    REQUIRE(e3.size() == 3);
    CHECK(e3[0] == F3()->from_int(0));
    CHECK(e3[1] == F3()->from_int(1));
    CHECK(e3[2] == F3()->from_int(2));
    CHECK(F9()->enumerate().size() == 9);
    // Wilson-style brute check: product of nonzero elements of F_3
    FieldElement prod = F3()->one();
    for (const auto& a : e3)
        if (!a.is_zero()) prod = prod * a;
    CHECK(prod == F3()->from_int(2));
    // lex order round trip
    for (int64_t i = 0; i < 9; ++i) CHECK(F9()->element_at(i).lex_index() == i);
}

TEST_CASE("extend and embed") {
    FieldPtr F81 = F9()->extend(2);
    CHECK(F81->q() == 81);
    CHECK(F81->base() == F9());

    // prime subfield embeds anywhere
    CHECK(embed(F3()->from_int(2), F9()) == F9()->from_int(2));
    CHECK(embed(F3()->from_int(2), F81) == F81->from_int(2));

    // embedding is a ring homomorphism (exhaustive on F_9)
    for (const auto& a : F9()->enumerate())
        for (const auto& b : F9()->enumerate()) {
            CHECK(embed(a * b, F81) == embed(a, F81) * embed(b, F81));
            CHECK(embed(a + b, F81) == embed(a, F81) + embed(b, F81));
        }

    // injectivity on F_9
    std::set<std::vector<int64_t>> images;
    for (const auto& a : F9()->enumerate()) {
        auto img = embed(a, F81);
        images.insert(std::vector<int64_t>(img.coeffs().begin(), img.coeffs().end()));
    }
    CHECK(images.size() == 9);

    // the minimal polynomial of gamma survives
    FieldElement img = embed(gamma(), F81);
    CHECK(img * img == img + F81->one());

    // no recorded embedding the other way around
    FieldPtr F27 = F3()->extend(3);
    CHECK_THROWS_AS(embed(F9()->generator(), F27), NoEmbeddingRecorded);

    // identity embedding
    CHECK(embed(gamma(), F9()) == gamma());
}

TEST_CASE("field axioms") {
    // exhaustive for q <= 9, randomized for q = 27 and 81
    for (FieldPtr F : {F3(), F9()}) {
        auto all = F->enumerate();
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
                for (const auto& c : all) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
    }
    FieldPtr F27 = F3()->extend(3);
    FieldPtr F81 = F9()->extend(2);
    Rng rng(20240811);
    for (FieldPtr F : {F27, F81}) {
        for (int i = 0; i < 1000; ++i) {
            FieldElement a = random_element(F, rng);
            FieldElement b = random_element(F, rng);
            FieldElement c = random_element(F, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK((a / b) * b == a);
            CHECK(frobenius(a, F->k()) == a);
        }
    }
}

TEST_CASE("tonelli-shanks path in a larger field") {
    // q = 3^10 = 59049 > 10^4 exercises the non-exhaustive square root
    FieldPtr F = FieldDescriptor::prime(3)->extend(10);
    REQUIRE(F->q() == 59049);
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        FieldElement a = random_element(F, rng);
        FieldElement sq = a * a;
        FieldElement s = sqrt(sq);
        CHECK(s * s == sq);
        CHECK(!(-s < s));
    }
}
