// rng.hpp -- seeded randomness for the experiment suites.
//
// All draws go through mt19937_64 (bit-exact across platforms by the
// standard) with rejection sampling for bounded values, so a seed fully
// determines every randomized experiment stream.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pencils/blocking.hpp"
#include "pencils/pencil.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"

namespace pencils {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, n), rejection sampled
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = eng_();
        while (v >= limit) v = eng_();
        return v % n;
    }

    bool coin() { return eng_() & 1; }

    Elem element(const Field& f) { return static_cast<Elem>(below(static_cast<std::uint64_t>(f.q()))); }

private:
    std::mt19937_64 eng_;
};

// uniform independent part label per point; empty parts are fine
inline Partition random_partition(const Plane& plane, Rng& rng) {
    Partition part;
    part.plane = &plane;
    part.parts.assign(plane.num_params(), PointSet(plane));
    for (size_t pi = 0; pi < plane.num_points(); ++pi)
        part.parts[rng.below(plane.num_params())].insert_index(pi);
    return part;
}

// each point kept with probability 1/2
inline PointSet random_point_set(const Plane& plane, Rng& rng) {
    PointSet s(plane);
    for (size_t pi = 0; pi < plane.num_points(); ++pi)
        if (rng.coin()) s.insert_index(pi);
    return s;
}

// random homogeneous form of degree d: a coefficient for each of the
// (d+1)(d+2)/2 monomials, redrawn until at least one is nonzero
inline Poly random_form(const Plane& plane, long d, Rng& rng) {
    const Field& f = plane.field();
    while (true) {
        std::vector<Poly> terms;
        for (long a = 0; a <= d; ++a) {
            for (long b = 0; b + a <= d; ++b) {
                long c = d - a - b;
                Elem coef = rng.element(f);
                if (coef == 0) continue;
                std::vector<Poly> factors;
                if (a > 0) factors.push_back(Poly::power(Poly::linear(f, 1, 0, 0), a));
                if (b > 0) factors.push_back(Poly::power(Poly::linear(f, 0, 1, 0), b));
                if (c > 0) factors.push_back(Poly::power(Poly::linear(f, 0, 0, 1), c));
                Poly mono = factors.empty() ? Poly::scalar(f, 1) : Poly::product(std::move(factors));
                terms.push_back(Poly::scalar_mul(coef, mono));
            }
        }
        if (!terms.empty()) return Poly::sum(std::move(terms));
    }
}

// seeded search for a degree-d pencil with F_q-point-free base locus;
// draws pairs until one passes the pencil invariants and the base check
inline Pencil random_base_point_free_pencil(const Plane& plane, long d, Rng& rng) {
    while (true) {
        Poly f = random_form(plane, d, rng);
        Poly g = random_form(plane, d, rng);
        try {
            Pencil pencil(plane, std::move(f), std::move(g));
            if (pencil.base_point_free()) return pencil;
        } catch (const std::invalid_argument&) {
            // dependent pair, redraw
        }
    }
}

}  // namespace pencils
