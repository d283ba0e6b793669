#include <doctest.h>

#include <random>

#include "extfield.hpp"
#include "gf2k.hpp"

using namespace qf2;

namespace {

std::vector<ExtElem> all_elements(const ExtFieldPtr& fld) {
    std::vector<ExtElem> out;
    unsigned q = fld->base().q();
    int d = fld->ext_degree();
    std::vector<unsigned> digits(static_cast<size_t>(d), 0);
    for (;;) {
        std::vector<FieldElem> rep;
        for (unsigned v : digits) rep.push_back(fld->base().from_bits(v));
        out.emplace_back(fld, std::move(rep));
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

ExtFieldPtr f4_over_f2() {
    Gf2k f2(1);
    return ExtField::make(Poly(f2, {f2.one(), f2.one(), f2.one()}));  // x^2+x+1
}

}  // namespace

TEST_CASE("F4 arithmetic forced by the modulus") {
    Gf2k f4(2);
    FieldElem w = f4.from_bits(0b10);
    FieldElem w1 = f4.from_bits(0b11);
    CHECK(w * w == w1);       // w^2 = w+1
    CHECK(w.inv() == w1);     // w(w+1) = 1
    CHECK(w + w == f4.zero());  // characteristic 2
    CHECK((w * w1).is_one());
}

TEST_CASE("x^q = x and Frobenius is an automorphism") {
    for (int k : {1, 2, 3, 4}) {
        Gf2k f(k);
        for (const FieldElem& x : f.elements()) CHECK(x.pow(f.q()) == x);
    }
    std::mt19937_64 rng(11);
    for (int k : {2, 5, 8}) {
        Gf2k f(k);
        for (int i = 0; i < 50; ++i) {
            FieldElem a = f.from_bits(static_cast<unsigned>(rng() % f.q()));
            FieldElem b = f.from_bits(static_cast<unsigned>(rng() % f.q()));
            CHECK((a + b).square() == a.square() + b.square());
            CHECK((a * b).square() == a.square() * b.square());
        }
    }
}

TEST_CASE("sqrt inverts squaring, exhaustively") {
    SUBCASE("base fields up to q = 256") {
        for (int k = 1; k <= 8; ++k) {
            Gf2k f(k);
            for (const FieldElem& x : f.elements()) {
                CHECK(x.sqrt().square() == x);
                CHECK(x.square().sqrt() == x);
            }
        }
    }
    SUBCASE("spec values") {
        Gf2k f2(1), f4(2);
        CHECK(f2.zero().sqrt() == f2.zero());
        CHECK(f2.one().sqrt() == f2.one());
        FieldElem w = f4.from_bits(0b10);
        CHECK(w.sqrt() == f4.from_bits(0b11));  // (w+1)^2 = w
    }
    SUBCASE("extension field q^d <= 256") {
        ExtFieldPtr f16 = ExtField::make(Poly(Gf2k(2), {Gf2k(2).gen(), Gf2k(2).one(), Gf2k(2).one()}));
        REQUIRE(f16->abs_degree() == 4);
        std::vector<ExtElem> seen;
        for (const ExtElem& x : all_elements(f16)) {
            CHECK(x.sqrt().square() == x);
            seen.push_back(x.square());
        }
        // squaring is a bijection (perfectness)
        for (size_t i = 0; i < seen.size(); ++i)
            for (size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
    }
}

TEST_CASE("absolute trace") {
    Gf2k f2(1), f4(2);
    CHECK(f2.one().trace_bit() == 1);
    FieldElem w = f4.from_bits(0b10);
    CHECK(w.trace_bit() == 1);   // w + w^2 = 1
    CHECK(f4.one().trace_bit() == 0);

    SUBCASE("linearity and vanishing on wp-images") {
        std::mt19937_64 rng(5);
        for (int k : {1, 2, 3, 6}) {
            Gf2k f(k);
            for (int i = 0; i < 40; ++i) {
                FieldElem a = f.from_bits(static_cast<unsigned>(rng() % f.q()));
                FieldElem b = f.from_bits(static_cast<unsigned>(rng() % f.q()));
                CHECK((a + b).trace_bit() == (a.trace_bit() ^ b.trace_bit()));
                CHECK((a.square() + a).trace_bit() == 0);
            }
        }
    }
}

TEST_CASE("Artin-Schreier solving in the base field") {
    Gf2k f2(1), f4(2);
    CHECK(solve_artin_schreier(f2.zero()) == f2.zero());  // canonical smaller of {0, 1}
    CHECK(solve_artin_schreier(f4.one()) == f4.from_bits(0b10));  // w^2 + w = 1
    CHECK(!solve_artin_schreier(f2.one()).has_value());           // wp(F_2) = {0}

    for (int k = 1; k <= 6; ++k) {
        Gf2k f(k);
        for (const FieldElem& c : f.elements()) {
            auto y = solve_artin_schreier(c);
            CHECK(y.has_value() == (c.trace_bit() == 0));
            if (y) {
                CHECK(y->square() + *y == c);
                // canonical = lexicographically smaller of the two roots
                CHECK(y->bits() < (*y + f.one()).bits());
            }
        }
    }
}

TEST_CASE("extension fields: x^(q^d) = x, trace, Artin-Schreier") {
    ExtFieldPtr f4 = f4_over_f2();
    std::vector<ExtElem> elems = all_elements(f4);
    for (const ExtElem& x : elems) {
        CHECK(x.pow(4) == x);
        auto y = solve_artin_schreier(x);
        CHECK(y.has_value() == (x.trace_bit() == 0));
        if (y) {
            CHECK(y->square() + *y == x);
            CHECK(ExtElem::cmp(*y, *y + f4->one()) < 0);
        }
    }
    // relative trace lands in the base field and is F_q-linear after Frobenius
    Gf2k f4base(2);
    ExtFieldPtr f16 = ExtField::make(Poly(f4base, {f4base.gen(), f4base.one(), f4base.one()}));
    for (const ExtElem& x : all_elements(f16)) {
        FieldElem tr = x.trace_to_base();
        CHECK((x + x.frobenius_q()).rep()[0] == tr);
        CHECK(x.trace_bit() == tr.trace_bit());  // trace tower
    }
}

TEST_CASE("error paths") {
    Gf2k f2(1), f4(2);
    CHECK_THROWS_AS((void)f2.zero().inv(), Error);
    CHECK_THROWS_AS((void)(f2.one() + f4.one()), Error);
    CHECK_THROWS_AS(Gf2k(0), Error);
    CHECK_THROWS_AS(Gf2k(9), Error);
}
