#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "pencils/gf.hpp"
#include "pencils/gf_ext.hpp"

using namespace pencils;

namespace {

// independent oracle for the canonical modulus: sieve out every monic
// product g*h with deg g, deg h >= 1, then take the smallest surviving
// monic of degree n by little-endian encoding
std::vector<Elem> sieve_smallest_irreducible(long p, int n) {
    auto encode_count = [&](int deg) {
        long c = 1;
        for (int i = 0; i < deg; ++i) c *= p;
        return c;
    };
    auto poly_of = [&](long enc, int deg) {
        std::vector<int> f(deg + 1);
        for (int i = 0; i < deg; ++i) {
            f[i] = static_cast<int>(enc % p);
            enc /= p;
        }
        f[deg] = 1;
        return f;
    };
    auto mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % static_cast<int>(p);
        return c;
    };
    std::set<std::vector<int>> composite;
    for (int dg = 1; dg < n; ++dg) {
        int dh = n - dg;
        for (long eg = 0; eg < encode_count(dg); ++eg)
            for (long eh = 0; eh < encode_count(dh); ++eh) composite.insert(mul(poly_of(eg, dg), poly_of(eh, dh)));
    }
    for (long enc = 0; enc < encode_count(n); ++enc) {
        auto f = poly_of(enc, n);
        if (!composite.count(f)) return std::vector<Elem>(f.begin(), f.end());
    }
    FAIL("no irreducible found");
    return {};
}

}  // namespace

TEST_CASE("field construction and canonical moduli") {
    SECTION("GF(2) prime field") {
        Field f(2, 1);
        REQUIRE(f.q() == 2);
        REQUIRE(f.add(1, 1) == 0);
    }
    SECTION("GF(9) modulus is x^2+1") {
        Field f(3, 2);
        REQUIRE(f.modulus() == sieve_smallest_irreducible(3, 2));
        REQUIRE(f.modulus() == std::vector<Elem>{1, 0, 1});
    }
    SECTION("GF(16) modulus is the smallest monic irreducible quartic") {
        Field f(2, 4);
        REQUIRE(f.modulus() == sieve_smallest_irreducible(2, 4));
        REQUIRE(f.modulus() == std::vector<Elem>{1, 1, 0, 0, 1});
    }
    SECTION("construction is deterministic") {
        Field a(2, 3), b(2, 3);
        REQUIRE(a.modulus() == b.modulus());
        REQUIRE(a.primitive_element() == b.primitive_element());
    }
    SECTION("rejects bad parameters") {
        REQUIRE_THROWS_AS(Field(4, 1), std::invalid_argument);   // not prime
        REQUIRE_THROWS_AS(Field(2, 11), std::invalid_argument);  // 2^11 > 1024
        REQUIRE_THROWS_AS(Field(2, 0), std::invalid_argument);
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, n] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 1}}) {
        Field f(p, n);
        const long q = f.q();
        CAPTURE(p, n);
        for (long a = 0; a < q; ++a) {
            for (long b = 0; b < q; ++b) {
                Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
                REQUIRE(f.add(x, y) == f.add(y, x));
                REQUIRE(f.mul(x, y) == f.mul(y, x));
                REQUIRE(f.sub(f.add(x, y), y) == x);
                for (long c = 0; c < q; ++c) {
                    Elem z = static_cast<Elem>(c);
                    REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
        for (long a = 1; a < q; ++a) {
            Elem x = static_cast<Elem>(a);
            REQUIRE(f.mul(x, f.inv(x)) == 1);
            REQUIRE(f.pow(x, q - 1) == 1);
        }
        REQUIRE_THROWS_AS(f.inv(0), std::domain_error);
    }
}

TEST_CASE("frobenius is a field automorphism") {
    for (auto [p, n] : {std::pair<long, int>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {7, 2}, {2, 6}}) {
        Field f(p, n);
        const long q = f.q();
        CAPTURE(p, n);
        for (long a = 0; a < q; ++a) {
            for (long b = 0; b < q; ++b) {
                Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
                REQUIRE(f.pow(f.add(x, y), p) == f.add(f.pow(x, p), f.pow(y, p)));
                REQUIRE(f.pow(f.mul(x, y), p) == f.mul(f.pow(x, p), f.pow(y, p)));
            }
        }
    }
}

TEST_CASE("subfield elements") {
    SECTION("prime subfield of GF(9)") {
        Field f(3, 2);
        REQUIRE(f.subfield_elements(1) == std::vector<Elem>{0, 1, 2});
    }
    SECTION("GF(4) inside GF(16)") {
        Field f(2, 4);
        auto sub = f.subfield_elements(2);
        REQUIRE(sub.size() == 4);
        // closed under add and mul
        for (Elem x : sub)
            for (Elem y : sub) {
                REQUIRE(std::count(sub.begin(), sub.end(), f.add(x, y)) == 1);
                REQUIRE(std::count(sub.begin(), sub.end(), f.mul(x, y)) == 1);
            }
    }
    SECTION("m = n gives the whole field") {
        Field f(2, 2);
        REQUIRE(f.subfield_elements(2).size() == 4);
    }
    SECTION("m must divide n") {
        Field f(2, 4);
        REQUIRE_THROWS_AS(f.subfield_elements(3), std::invalid_argument);
    }
}

TEST_CASE("primitive elements have full order") {
    SECTION("GF(2)") {
        Field f(2, 1);
        REQUIRE(f.primitive_element() == 1);
    }
    SECTION("GF(9)") {
        Field f(3, 2);
        Elem g = f.primitive_element();
        REQUIRE(f.pow(g, 4) != 1);
        REQUIRE(f.pow(g, 8) == 1);
    }
    SECTION("GF(7): smallest generator is 3") {
        Field f(7, 1);
        REQUIRE(f.primitive_element() == 3);
        std::set<Elem> powers;
        for (int e = 0; e < 6; ++e) powers.insert(f.pow(3, e));
        REQUIRE(powers.size() == 6);
    }
    SECTION("order is exactly q-1 on every small field") {
        for (auto [p, n] : {std::pair<long, int>{2, 4}, {3, 3}, {5, 2}, {13, 1}}) {
            Field f(p, n);
            Elem g = f.primitive_element();
            std::set<Elem> seen;
            Elem cur = 1;
            for (long i = 0; i < f.q() - 1; ++i) {
                seen.insert(cur);
                cur = f.mul(cur, g);
            }
            REQUIRE(cur == 1);
            REQUIRE(static_cast<long>(seen.size()) == f.q() - 1);
        }
    }
}

TEST_CASE("cubic extension towers") {
    SECTION("GF(2) -> GF(8) picks x^3+x+1") {
        Field f(2, 1);
        CubicExt ext(f);
        REQUIRE(ext.cubic_modulus() == std::array<Elem, 4>{1, 1, 0, 1});
        REQUIRE(ext.order() == 7);
    }
    SECTION("GF(4) -> GF(64), generator order 63") {
        Field f(2, 2);
        CubicExt ext(f);
        auto g = ext.generator();
        REQUIRE(ext.pow(g, 63) == CubicExt::one());
        REQUIRE(ext.pow(g, 21) != CubicExt::one());  // 63/3
        REQUIRE(ext.pow(g, 9) != CubicExt::one());   // 63/7
    }
    SECTION("GF(3) -> GF(27), generator order 26") {
        Field f(3, 1);
        CubicExt ext(f);
        auto g = ext.generator();
        REQUIRE(ext.pow(g, 26) == CubicExt::one());
        REQUIRE(ext.pow(g, 13) != CubicExt::one());
        REQUIRE(ext.pow(g, 2) != CubicExt::one());
    }
    SECTION("size bound enforced") {
        Field f(2, 8);  // q = 256 > 128
        REQUIRE_THROWS_AS(CubicExt(f), std::invalid_argument);
    }
    SECTION("projective classes g^i GF(q)* are pairwise distinct") {
        for (auto [p, n] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
            Field f(p, n);
            CubicExt ext(f);
            const long q = f.q();
            const long classes = q * q + q + 1;
            // normalize each triple so its last nonzero coordinate is 1 and compare
            std::set<std::array<Elem, 3>> seen;
            CubicExt::Triple cur = CubicExt::one();
            for (long i = 0; i < classes; ++i) {
                CubicExt::Triple t = cur;
                int lead = 0;
                while (t[lead] == 0) ++lead;
                Elem inv = f.inv(t[lead]);
                for (auto& c : t) c = f.mul(inv, c);
                REQUIRE(seen.insert(t).second);
                cur = ext.mul(cur, ext.generator());
            }
        }
    }
}
