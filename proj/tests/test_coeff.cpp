#include <doctest.h>

#include "ordlift/field.hpp"
#include "ordlift/quad.hpp"
#include "ordlift/rat.hpp"

#include <random>

using namespace ordlift;

namespace {

// independent oracle: brute-force irreducibility of c0 + c1 x + x^2 over F_p
// by scanning for roots (degree 2: irreducible iff rootless)
bool quadratic_irreducible(long p, long c0, long c1) {
    for (long x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return false;
    return true;
}

} // namespace

TEST_CASE("field_make small fields") {
    Field F2 = field_make(2, 1);
    CHECK(F2.q() == 2);
    CHECK(F2.generator() == 1);
    CHECK(F2.add(1, 1) == 0);

    // the unique irreducible quadratic over F_2, by enumeration
    long found_c0 = -1, found_c1 = -1, count = 0;
    for (long c0 = 0; c0 < 2; ++c0)
        for (long c1 = 0; c1 < 2; ++c1)
            if (quadratic_irreducible(2, c0, c1)) {
                found_c0 = c0;
                found_c1 = c1;
                ++count;
            }
    CHECK(count == 1);
    Field F4 = field_make(2, 2);
    CHECK(F4.modulus()[0] == found_c0);
    CHECK(F4.modulus()[1] == found_c1);
    CHECK(F4.modulus()[2] == 1);

    // F_9: generator has order exactly 8, by brute-force powers
    Field F9 = field_make(3, 2);
    long g = F9.generator();
    long x = 1;
    long order = 0;
    for (long k = 1; k <= 9; ++k) {
        x = F9.mul(x, g);
        if (x == 1) { order = k; break; }
    }
    CHECK(order == 8);
    CHECK(F9.pow(g, 4) != 1);
    CHECK(F9.pow(g, 8) == 1);
}

TEST_CASE("field_make rejects bad input") {
    CHECK_THROWS(field_make(4, 1));
    CHECK_THROWS(field_make(2, 25)); // 2^25 > 2^20
}

TEST_CASE("dlog") {
    Field F4 = field_make(2, 2);
    CHECK(F4.dlog(1) == 0);
    CHECK(F4.dlog(F4.generator()) == 1);
    CHECK_THROWS(F4.dlog(0));

    // F_8: g^3 by repeated multiplication, then brute-force scan
    Field F8 = field_make(2, 3);
    long g = F8.generator();
    long g3 = F8.mul(F8.mul(g, g), g);
    long scan = -1, x = 1;
    for (long k = 0; k < 7; ++k) {
        if (x == g3) { scan = k; break; }
        x = F8.mul(x, g);
    }
    CHECK(scan == 3);
    CHECK(F8.dlog(g3) == 3);
}

TEST_CASE("dlog is additive on products") {
    for (auto [p, f] : {std::pair<long, long>{2, 3}, {3, 2}, {5, 1}}) {
        Field F = field_make(p, f);
        std::mt19937_64 rng(42);
        long m = F.order();
        for (int trial = 0; trial < 200; ++trial) {
            long a = 1 + (long)(rng() % (F.q() - 1));
            long b = 1 + (long)(rng() % (F.q() - 1));
            CHECK((F.dlog(a) + F.dlog(b)) % m == F.dlog(F.mul(a, b)));
        }
    }
}

TEST_CASE("rational valuation arithmetic") {
    CHECK(vp(Rat(8), 2) == 3);
    CHECK(vp(Rat(1) / 12, 2) == -2);
    CHECK(vp(Rat(0), 2) == VAL_INF);
    CHECK(p_integral(Rat(3) / 5, 5) == false);
    CHECK(p_integral(Rat(3) / 5, 2) == true);
    CHECK(mod_ppow(Rat(7) / 3, 2, 2) == 1); // 7/3 = 7 * 3^{-1} = 7*3 = 21 = 1 mod 4

    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) {
        long p = (t % 2) ? 2 : 3;
        Rat a = Rat((long)(rng() % 2000) - 1000) / Rat(1 + (long)(rng() % 50));
        Rat b = Rat((long)(rng() % 2000) - 1000) / Rat(1 + (long)(rng() % 50));
        if (a == 0 || b == 0) continue;
        CHECK(vp(a * b, p) == vp(a, p) + vp(b, p));
        if (p_integral(a, p) && p_integral(b, p)) {
            CHECK(p_integral(a + b, p));
            CHECK(p_integral(a * b, p));
        }
    }
}

TEST_CASE("quad elements") {
    // trace(pi) = 0
    QuadElem pi = QuadElem::pi(3, -1);
    CHECK(trace(pi) == 0);

    // p=3, d=-1: (1+pi)(1-pi) = 1 - d p = 4
    QuadElem one = QuadElem::one(3, -1);
    QuadElem prod = (one + pi) * (one - pi);
    CHECK(prod.a == 4);
    CHECK(prod.b == 0);

    // dval(3 + pi) = min(2*1, 2*0+1) = 1
    QuadElem x(3, 1, 3, -1);
    CHECK(dval(x) == 1);
    CHECK(dval(QuadElem(0, 0, 3, -1)) == VAL_INF);

    // mixed d parameters are rejected
    QuadElem other = QuadElem::pi(3, 2);
    CHECK_THROWS((void)(pi * other));

    // dval additive on products
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        auto rnd = [&]() {
            Rat num = Rat((long)(rng() % 200) - 100);
            return num / Rat(1 + (long)(rng() % 20));
        };
        QuadElem u(rnd(), rnd(), 3, -1), v(rnd(), rnd(), 3, -1);
        if (u.is_zero() || v.is_zero()) continue;
        CHECK(dval(u * v) == dval(u) + dval(v));
    }

    // inverse
    QuadElem y(Rat(2), Rat(1) / 3, 3, -1);
    QuadElem z = y * y.inverse();
    CHECK(z.a == 1);
    CHECK(z.b == 0);
}
