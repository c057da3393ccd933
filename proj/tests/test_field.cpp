#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bchlab/field.hpp"

using namespace bchlab;

TEST_CASE("prime power validation") {
    PrimePower p = PrimePower::make(3, 2);
    CHECK(p.q == 9);
    CHECK(PrimePower::from_q(27).p == 3);
    CHECK(PrimePower::from_q(27).e == 3);
    CHECK(PrimePower::from_q(7).e == 1);
    CHECK_THROWS_AS(PrimePower::make(2, 1), Error);
    CHECK_THROWS_AS(PrimePower::make(9, 1), Error);
    CHECK_THROWS_AS(PrimePower::from_q(15), Error);
}

TEST_CASE("canonical primitive polynomials") {
    // frozen from the canonical coefficient-order search
    CHECK(find_primitive_polynomial(3, 1) == std::vector<Sym>{1, 1});        // x + 1
    CHECK(find_primitive_polynomial(3, 2) == std::vector<Sym>{2, 1, 1});     // x^2 + x + 2
    CHECK(find_primitive_polynomial(3, 3) == std::vector<Sym>{1, 2, 0, 1});  // x^3 + 2x + 1
    CHECK(find_primitive_polynomial(5, 1) == std::vector<Sym>{2, 1});        // x + 2, root 3 of order 4
    CHECK(find_primitive_polynomial(5, 3) == std::vector<Sym>{2, 3, 0, 1});  // x^3 + 3x + 2
    CHECK(find_primitive_polynomial(7, 2) == std::vector<Sym>{3, 1, 1});
}

TEST_CASE("primitive polynomial budget") {
    Budget tiny;
    tiny.fieldTable = 100;
    CHECK_THROWS_AS(find_primitive_polynomial(3, 10, tiny), Error);
}

TEST_CASE("field of 9 elements") {
    auto F = ExtensionField::build(PrimePower::make(3), 2);
    CHECK(F->size() == 9);
    CHECK(F->alpha_order() == 8);
    FieldElement a = F->alpha();
    CHECK(F->pow(a, 8) == F->one());
    CHECK(F->pow(a, 4) != F->one());
    // x * x^{-1} = 1 for every nonzero x
    for (std::int64_t k = 0; k < 8; ++k) {
        FieldElement x = F->alpha_pow(k);
        CHECK(F->mul(x, F->inv(x)) == F->one());
        CHECK(F->inv(x) == F->alpha_pow(8 - k));
    }
    CHECK_THROWS_AS(F->inv(F->zero()), Error);
}

TEST_CASE("GF(27): alpha has exact order 26") {
    auto F = ExtensionField::build(PrimePower::make(3), 3);
    CHECK(F->size() == 27);
    CHECK(F->pow(F->alpha(), 26) == F->one());
    CHECK(F->pow(F->alpha(), 13) != F->one());
    for (std::int64_t d : {1, 2, 13}) CHECK(F->pow(F->alpha(), d) != F->one());
}

TEST_CASE("field axioms hold exhaustively in GF(25)") {
    auto F = ExtensionField::build(PrimePower::make(5), 2);
    std::vector<FieldElement> all{F->zero()};
    for (std::int64_t k = 0; k < 24; ++k) all.push_back(F->alpha_pow(k));
    for (const auto& x : all) {
        CHECK(F->add(x, F->neg(x)) == F->zero());
        CHECK(F->mul(x, F->one()) == x);
        for (const auto& y : all) {
            CHECK(F->add(x, y) == F->add(y, x));
            CHECK(F->mul(x, y) == F->mul(y, x));
            // distributivity against a fixed third element
            FieldElement z = F->alpha();
            CHECK(F->mul(z, F->add(x, y)) == F->add(F->mul(z, x), F->mul(z, y)));
        }
    }
    // nonzero x: x^(q^m - 1) = 1
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(F->pow(all[i], 24) == F->one());
}

TEST_CASE("mixing elements of different fields is rejected") {
    auto F = ExtensionField::build(PrimePower::make(3), 2);
    auto G = ExtensionField::build(PrimePower::make(3), 3);
    CHECK_THROWS_AS(F->add(F->one(), G->one()), Error);
}

TEST_CASE("trace to GF(3) from GF(9) and GF(27)") {
    auto F9 = ExtensionField::build(PrimePower::make(3), 2);
    // Tr(x) = x + x^3; Tr(1) = 2
    CHECK(F9->trace_to_subfield(F9->one(), 1) == F9->add(F9->one(), F9->one()));

    auto F27 = ExtensionField::build(PrimePower::make(3), 3);
    const Subfield& gf = F27->gf_q();
    // trace is balanced: each value of GF(3) hit exactly 9 times over all 27 elements
    std::vector<int> hits(3, 0);
    hits[gf.index_of(F27->trace_to_subfield(F27->zero(), 1))]++;
    for (std::int64_t k = 0; k < 26; ++k)
        hits[gf.index_of(F27->trace_to_subfield(F27->alpha_pow(k), 1))]++;
    CHECK(hits == std::vector<int>{9, 9, 9});
}

TEST_CASE("trace is GF(q)-linear and surjective (GF(81) over GF(3))") {
    auto F = ExtensionField::build(PrimePower::make(3), 4);
    const Subfield& gf = F->gf_q();
    bool hitNonzero = false;
    for (std::int64_t k = 0; k < 80; k += 7) {
        FieldElement x = F->alpha_pow(k);
        FieldElement y = F->alpha_pow(3 * k + 1);
        FieldElement lhs = F->trace_to_subfield(F->add(x, y), 1);
        FieldElement rhs = F->add(F->trace_to_subfield(x, 1), F->trace_to_subfield(y, 1));
        CHECK(lhs == rhs);
        // scaling by a subfield element
        FieldElement c = gf.lift(2);
        CHECK(F->trace_to_subfield(F->mul(c, x), 1) == F->mul(c, F->trace_to_subfield(x, 1)));
        if (!F->trace_to_subfield(x, 1).is_zero()) hitNonzero = true;
    }
    CHECK(hitNonzero);
}

TEST_CASE("trace transitivity through GF(81) -> GF(9) -> GF(3)") {
    auto F = ExtensionField::build(PrimePower::make(3, 2), 2);  // GF(81) over GF(9)
    for (std::int64_t k = 0; k < 80; ++k) {
        FieldElement x = F->alpha_pow(k);
        FieldElement direct = F->trace_to_subfield(x, 1);
        FieldElement inner = F->trace_to_subfield(x, 2);  // onto GF(9)
        // GF(9) -> GF(3) trace of the intermediate value: y + y^3
        FieldElement chained = F->add(inner, F->pow(inner, 3));
        CHECK(direct == chained);
        CHECK(F->in_subextension(inner, 1));
    }
}

TEST_CASE("designated subfield GF(9) inside GF(81)") {
    auto F = ExtensionField::build(PrimePower::make(3, 2), 2);
    CHECK(F->degree() == 4);
    CHECK(F->size() == 81);
    const Subfield& gf = F->gf_q();
    CHECK(gf.q() == 9);
    // subfield = {0} union {alpha^(10 j)}: closed under add, mul, inv
    for (Sym i = 0; i < 9; ++i) {
        FieldElement x = gf.lift(i);
        if (i) CHECK(gf.lift(gf.inv(i)) == F->inv(x));
        for (Sym j = 0; j < 9; ++j) {
            CHECK(gf.lift(gf.add(i, j)) == F->add(x, gf.lift(j)));
            CHECK(gf.lift(gf.mul(i, j)) == F->mul(x, gf.lift(j)));
        }
    }
    // every subfield element is alpha^(10j) or zero
    for (Sym i = 1; i < 9; ++i) CHECK(gf.lift(i).log() % 10 == 0);
    CHECK_THROWS_AS(gf.index_of(F->alpha()), Error);
}

TEST_CASE("subfield canonical labeling matches prime-field integers") {
    auto F = ExtensionField::build(PrimePower::make(7), 2);
    const Subfield& gf = F->gf_q();
    // index i corresponds to the integer i in GF(7): adding 1 walks 0,1,2,...
    Sym x = 0;
    for (int i = 0; i < 7; ++i) {
        CHECK(x == static_cast<Sym>(i));
        x = gf.add(x, 1);
    }
    CHECK(x == 0);
}

TEST_CASE("table budget enforced") {
    Budget tiny;
    tiny.fieldTable = 1000;
    CHECK_THROWS_AS(ExtensionField::build(PrimePower::make(3), 7, tiny), Error);
}
