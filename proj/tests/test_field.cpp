#include <catch2/catch_amalgamated.hpp>

#include "pairweight/field.hpp"

using pairweight::Field;

TEST_CASE("prime field construction") {
    Field f3 = Field::make(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.prime_field());
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 1, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("extension field modulus validation") {
    // x^2 + x + 1 has no root in GF(2), so it builds GF(4)
    Field f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
    CHECK(f4.q() == 4);
    // x^2 + 1 = (x+1)^2 over GF(2)
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 0, 1}), std::invalid_argument);
    // non-monic
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<int>{1, 0, 2}), std::invalid_argument);
    // wrong degree
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{1, 1, 1, 1}), std::invalid_argument);
    // no built-in default for q = 49
    CHECK_THROWS_AS(Field::make(7, 2), std::invalid_argument);
}

TEST_CASE("element arithmetic in GF(3) and GF(4)") {
    Field f3 = Field::make(3, 1);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.inv(2) == 2);
    CHECK(f3.inv(1) == 1);

    Field f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
    CHECK(f4.add(2, 3) == 1);  // x + (x+1) = 1
    CHECK(f4.mul(2, 2) == 3);  // x * x = x + 1
    CHECK(f4.inv(2) == 3);     // x * (x+1) = 1

    CHECK_THROWS_AS(f3.inv(0), std::domain_error);
    CHECK_THROWS_AS(f3.add(3, 0), std::out_of_range);
    CHECK_THROWS_AS(f4.mul(4, 0), std::out_of_range);
}

TEST_CASE("built-in moduli give valid fields") {
    for (long long q : {4, 8, 9, 16, 25, 27, 32}) {
        Field f = Field::from_order(q);
        CHECK(f.q() == q);
        CHECK(static_cast<int>(f.modulus().size()) == f.e() + 1);
        CHECK(f.modulus().back() == 1);
    }
    CHECK_THROWS_AS(Field::from_order(6), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_order(1), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for every built-in order") {
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 31, 32}) {
        Field f = Field::from_order(q);
        INFO("q = " << q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            // decode/encode round-trip
            CHECK(f.encode(f.decode(a)) == a);
        }
        bool ok = true;
        for (int a = 0; a < q && ok; ++a)
            for (int b = 0; b < q && ok; ++b) {
                ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (int c = 0; c < q && ok; ++c) {
                    ok = f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        CHECK(ok);
    }
}
