#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pencils/constructions.hpp"
#include "pencils/gf.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"
#include "pencils/rng.hpp"

using namespace pencils;

namespace {

// random homogeneous DAG of the given degree: monomial sums wrapped in
// occasional products and powers
Poly random_expr(const Plane& plane, long degree, Rng& rng, int depth = 0) {
    if (depth < 2 && degree >= 2 && rng.below(3) == 0) {
        if (rng.coin()) {
            long d1 = 1 + static_cast<long>(rng.below(degree - 1));
            return Poly::product({random_expr(plane, d1, rng, depth + 1),
                                  random_expr(plane, degree - d1, rng, depth + 1)});
        }
        for (long k = degree; k >= 2; --k)
            if (degree % k == 0) return Poly::power(random_expr(plane, degree / k, rng, depth + 1), k);
    }
    return random_form(plane, degree, rng);
}

}  // namespace

TEST_CASE("evaluation of coordinate powers") {
    for (auto [p, n] : {std::pair<long, int>{3, 1}, {2, 2}}) {
        Field f(p, n);
        Plane plane(f);
        const long q = f.q();
        Poly zq = Poly::power(Poly::linear(f, 0, 0, 1), q - 1);
        REQUIRE(zq.eval(plane, plane.normalize_point(0, 1, 1)) == 1);
        REQUIRE(zq.eval(plane, plane.normalize_point(1, 1, 0)) == 0);
        REQUIRE(zq.degree() == q - 1);
    }
}

TEST_CASE("values of degree-divisible expressions are representative independent") {
    Field f(2, 2);
    Plane plane(f);
    Rng rng(11);
    const long q = f.q();
    for (int trial = 0; trial < 10; ++trial) {
        Poly e = random_expr(plane, q - 1, rng);
        REQUIRE(e.degree() % (q - 1) == 0);
        for (const auto& pt : plane.points()) {
            Elem base = e.eval_at(pt.c[0], pt.c[1], pt.c[2]);
            for (long l = 1; l < q; ++l) {
                Elem s = static_cast<Elem>(l);
                REQUIRE(e.eval_at(f.mul(s, pt.c[0]), f.mul(s, pt.c[1]), f.mul(s, pt.c[2])) == base);
            }
        }
    }
}

TEST_CASE("homogeneity: E(l v) = l^deg E(v)") {
    for (auto [p, n] : {std::pair<long, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        Field f(p, n);
        Plane plane(f);
        Rng rng(23);
        const long q = f.q();
        CAPTURE(p, n);
        for (int trial = 0; trial < 8; ++trial) {
            long degree = 1 + static_cast<long>(rng.below(5));
            Poly e = random_expr(plane, degree, rng);
            REQUIRE(e.degree() == degree);
            for (const auto& pt : plane.points()) {
                Elem base = e.eval_at(pt.c[0], pt.c[1], pt.c[2]);
                for (long l = 1; l < q; ++l) {
                    Elem s = static_cast<Elem>(l);
                    Elem scaled = e.eval_at(f.mul(s, pt.c[0]), f.mul(s, pt.c[1]), f.mul(s, pt.c[2]));
                    REQUIRE(scaled == f.mul(f.pow(s, degree), base));
                }
            }
        }
    }
}

TEST_CASE("zero testing") {
    Field f(5, 1);
    Plane plane(f);
    SECTION("linear form vanishes on its line") {
        Poly z = Poly::linear(f, 0, 0, 1);
        REQUIRE(z.is_zero_at(plane, plane.normalize_point(1, 0, 0)));
        int zeros = 0;
        for (const auto& pt : plane.points())
            if (z.is_zero_at(plane, pt)) ++zeros;
        REQUIRE(zeros == 6);  // a line has q+1 points
    }
    SECTION("nonzero scalar never vanishes") {
        Poly one = Poly::scalar(f, 1);
        for (const auto& pt : plane.points()) REQUIRE_FALSE(one.is_zero_at(plane, pt));
    }
}

TEST_CASE("linear combinations") {
    Field f(3, 1);
    Plane plane(f);
    Rng rng(5);
    Poly a = random_expr(plane, 2, rng);
    Poly b = random_expr(plane, 2, rng);
    SECTION("unit parameters reproduce the generators") {
        Poly lf = linear_combination(1, 0, a, b);
        Poly lg = linear_combination(0, 1, a, b);
        for (const auto& pt : plane.points()) {
            REQUIRE(lf.eval(plane, pt) == a.eval(plane, pt));
            REQUIRE(lg.eval(plane, pt) == b.eval(plane, pt));
        }
    }
    SECTION("evaluation is linear, exhaustively over GF(3)") {
        for (long s = 0; s < 3; ++s) {
            for (long t = 0; t < 3; ++t) {
                if (s == 0 && t == 0) continue;
                Poly combo = linear_combination(static_cast<Elem>(s), static_cast<Elem>(t), a, b);
                REQUIRE(combo.degree() == 2);
                for (const auto& pt : plane.points()) {
                    Elem expect = f.add(f.mul(static_cast<Elem>(s), a.eval(plane, pt)),
                                        f.mul(static_cast<Elem>(t), b.eval(plane, pt)));
                    REQUIRE(combo.eval(plane, pt) == expect);
                }
            }
        }
    }
    SECTION("guards") {
        REQUIRE_THROWS_AS(linear_combination(0, 0, a, b), std::invalid_argument);
        Poly cubic = random_expr(plane, 3, rng);
        REQUIRE_THROWS_AS(linear_combination(1, 1, a, cubic), std::invalid_argument);
    }
}

TEST_CASE("structural homogeneity is enforced") {
    Field f(3, 1);
    Poly x = Poly::linear(f, 1, 0, 0);
    Poly x2 = Poly::power(x, 2);
    REQUIRE_THROWS_AS(Poly::sum({x, x2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Poly::power(x, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(Poly::sum({}), std::invalid_argument);
    Field g(5, 1);
    REQUIRE_THROWS_AS(Poly::sum({x, Poly::linear(g, 1, 0, 0)}), std::invalid_argument);
}

TEST_CASE("product of all line forms vanishes everywhere") {
    for (auto [p, n, deg] : {std::tuple<long, int, long>{2, 1, 7}, {3, 1, 13}, {2, 2, 21}}) {
        Field f(p, n);
        Plane plane(f);
        Poly h = all_lines_product(plane);
        CAPTURE(p, n);
        REQUIRE(h.degree() == deg);
        for (const auto& pt : plane.points()) REQUIRE(h.is_zero_at(plane, pt));
    }
}

TEST_CASE("sparse expansion") {
    SECTION("(x+y)^2 over GF(2) loses the cross term") {
        Field f(2, 1);
        Poly e = Poly::power(Poly::linear(f, 1, 1, 0), 2);
        SparsePoly s = e.expand();
        REQUIRE(s.degree == 2);
        REQUIRE(s.terms == std::map<std::array<int, 3>, Elem>{{{2, 0, 0}, 1}, {{0, 2, 0}, 1}});
    }
    SECTION("expansion agrees with DAG evaluation") {
        for (auto [p, n] : {std::pair<long, int>{2, 1}, {3, 1}}) {
            Field f(p, n);
            Plane plane(f);
            Rng rng(99);
            for (int trial = 0; trial < 12; ++trial) {
                Poly e = random_expr(plane, 1 + static_cast<long>(rng.below(4)), rng);
                SparsePoly s = e.expand();
                for (const auto& [mono, coef] : s.terms) {
                    REQUIRE(coef != 0);
                    REQUIRE(mono[0] + mono[1] + mono[2] == s.degree);
                }
                for (const auto& pt : plane.points())
                    REQUIRE(s.eval(f, pt.c[0], pt.c[1], pt.c[2]) == e.eval(plane, pt));
            }
        }
    }
    SECTION("term guard refuses runaway expansions") {
        Field f(5, 1);
        std::vector<Poly> factors;
        for (int i = 0; i < 21; ++i)
            factors.push_back(Poly::linear(f, 1, static_cast<Elem>((2 * i + 1) % 5),
                                           static_cast<Elem>((3 * i + 2) % 5)));
        Poly generic = Poly::product(std::move(factors));  // degree-21 product
        REQUIRE_THROWS_AS(generic.expand(1000), term_guard_error);
        REQUIRE(generic.expand().degree == 21);  // default guard is ample
    }
    SECTION("the all-lines product over GF(4) expands to few terms") {
        Field f(2, 2);
        Plane plane(f);
        // the classical product of all linear forms is extremely sparse
        SparsePoly s = all_lines_product(plane).expand(100000);
        REQUIRE(s.degree == 21);
        REQUIRE(s.terms.size() == 6);
    }
    SECTION("expanded point indicators agree with their DAGs over GF(2)") {
        Field f(2, 1);
        Plane plane(f);
        for (const auto& q_pt : plane.points()) {
            Poly ind = indicator_poly(plane, q_pt);
            SparsePoly s = ind.expand();
            for (const auto& pt : plane.points())
                REQUIRE(s.eval(f, pt.c[0], pt.c[1], pt.c[2]) == ind.eval(plane, pt));
        }
    }
}

TEST_CASE("point functions") {
    Field f(2, 1);
    Plane plane(f);
    PointFunction pf = PointFunction::zero(plane);
    REQUIRE(pf.identically_zero());
    pf.at(3) = 1;
    REQUIRE_FALSE(pf.identically_zero());
    REQUIRE(pf.at(3) == 1);
}
