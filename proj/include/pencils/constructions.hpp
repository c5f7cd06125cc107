// constructions.hpp -- explicit pencils and partitions: point
// indicators, interpolation, partition/cover realization, the
// all-members-blocking pencil and the Baer-subplane extremal pencil.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencils/blocking.hpp"
#include "pencils/gf_ext.hpp"
#include "pencils/pencil.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"

namespace pencils {

struct zero_function_error : std::invalid_argument {
    explicit zero_function_error(const std::string& what) : std::invalid_argument(what) {}
};

struct construction_error : std::runtime_error {
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// the degree-3(q-1) indicator of Q: value 1 at Q, 0 at every other point
// of PG(2,q).  Built as w^{q-1} (w^{q-1} - L1^{q-1}) (w^{q-1} - L2^{q-1})
// where w is the coordinate at Q's last nonzero position and L1, L2 are
// the first two lines through Q in enumeration order.
inline Poly indicator_poly(const Plane& plane, const ProjPoint& q_pt) {
    const Field& f = plane.field();
    const long e = f.q() - 1;

    int wpos = 2;
    while (q_pt.c[wpos] == 0) --wpos;
    Poly w = Poly::linear(f, wpos == 0 ? 1 : 0, wpos == 1 ? 1 : 0, wpos == 2 ? 1 : 0);
    Poly wp = Poly::power(w, e);

    const auto& lis = plane.point_line_indices(plane.point_index(q_pt));
    auto line_factor = [&](std::uint32_t li) {
        const ProjLine& l = plane.lines()[li];
        Poly lp = Poly::power(Poly::linear(f, l.c[0], l.c[1], l.c[2]), e);
        return Poly::sum({wp, Poly::scalar_mul(f.neg(1), lp)});
    };
    return Poly::product({wp, line_factor(lis[0]), line_factor(lis[1])});
}

// R_f = sum of f(Q) * S_Q over Q in the domain, degree 3(q-1); agrees
// with f at every domain point and vanishes on the skipped set
inline Poly interpolate(const Plane& plane, const PointFunction& f, const PointSet* skip = nullptr) {
    std::vector<Poly> terms;
    for (size_t pi = 0; pi < plane.num_points(); ++pi) {
        if (skip && skip->contains_index(pi)) continue;
        Elem v = f.at(pi);
        if (v == 0) continue;
        terms.push_back(Poly::scalar_mul(v, indicator_poly(plane, plane.points()[pi])));
    }
    if (terms.empty())
        throw zero_function_error("interpolate: function is identically zero on its domain");
    return Poly::sum(std::move(terms));
}

// a nonzero form of degree 3(q-1) that vanishes at every point of
// PG(2,q): x^{q-1} y^{q-1} (x^{q-1} - y^{q-1}).  Stands in for the zero
// interpolant when a partition maps everything to one parameter.
inline Poly vanishing_form(const Plane& plane) {
    const Field& f = plane.field();
    const long e = f.q() - 1;
    Poly xp = Poly::power(Poly::linear(f, 1, 0, 0), e);
    Poly yp = Poly::power(Poly::linear(f, 0, 1, 0), e);
    return Poly::product({xp, yp, Poly::sum({xp, Poly::scalar_mul(f.neg(1), yp)})});
}

namespace detail {

// interpolants for the labeling functions f(P), g(P) = coordinates of
// the canonical parameter of P's part; label < 0 marks skipped points
inline std::pair<Poly, Poly> label_interpolants(const Plane& plane, const std::vector<int>& label,
                                                const PointSet* skip) {
    PointFunction fs = PointFunction::zero(plane);
    PointFunction gs = PointFunction::zero(plane);
    bool f_nonzero = false, g_nonzero = false;
    for (size_t pi = 0; pi < plane.num_points(); ++pi) {
        if (label[pi] < 0) continue;
        ProjParam a = plane.param_of_index(static_cast<size_t>(label[pi]));
        fs.at(pi) = a.c[0];
        gs.at(pi) = a.c[1];
        f_nonzero |= a.c[0] != 0;
        g_nonzero |= a.c[1] != 0;
    }
    Poly rf = f_nonzero ? interpolate(plane, fs, skip) : vanishing_form(plane);
    Poly rg = g_nonzero ? interpolate(plane, gs, skip) : vanishing_form(plane);
    return {std::move(rf), std::move(rg)};
}

}  // namespace detail

// a degree-3(q-1) pencil with F_q-point-free base locus inducing the
// given partition, part i on the member labeled by the i-th canonical
// parameter: F = -R_g, G = R_f
inline Pencil realize_partition(const Partition& partition) {
    partition.validate();
    const Plane& plane = *partition.plane;
    std::vector<int> label(plane.num_points(), -1);
    for (size_t i = 0; i < partition.parts.size(); ++i)
        for (std::uint32_t pi : partition.parts[i].indices()) label[pi] = static_cast<int>(i);
    auto [rf, rg] = detail::label_interpolants(plane, label, nullptr);
    return Pencil(plane, Poly::scalar_mul(plane.field().neg(1), rg), std::move(rf));
}

// q+1 sets covering PG(2,q) whose pairwise intersections all equal the
// common core B
struct CoverSpec {
    const Plane* plane = nullptr;
    std::vector<PointSet> parts;
    PointSet common;

    CoverSpec(const Plane& pl, std::vector<PointSet> pts)
        : plane(&pl), parts(std::move(pts)), common(pl) {
        if (parts.size() != pl.num_params())
            throw std::invalid_argument("CoverSpec: expected " + std::to_string(pl.num_params()) + " parts");
        PointSet inter(pl);
        for (size_t pi = 0; pi < pl.num_points(); ++pi) {
            bool in_all = true;
            for (const auto& part : parts)
                if (!part.contains_index(pi)) {
                    in_all = false;
                    break;
                }
            if (in_all) inter.insert_index(pi);
        }
        common = inter;
        validate();
    }

    void validate() const {
        const Plane& pl = *plane;
        std::vector<char> covered(pl.num_points(), 0);
        for (const auto& part : parts)
            for (std::uint32_t pi : part.indices()) covered[pi] = 1;
        for (char c : covered)
            if (!c) throw std::invalid_argument("CoverSpec: parts do not cover the plane");
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = i + 1; j < parts.size(); ++j) {
                for (size_t pi = 0; pi < pl.num_points(); ++pi) {
                    bool both = parts[i].contains_index(pi) && parts[j].contains_index(pi);
                    if (both != common.contains_index(pi))
                        throw std::invalid_argument("CoverSpec: U_i and U_j intersect outside the common core");
                }
            }
        }
    }
};

// a pencil whose i-th member has F_q-points exactly U_i; F and G vanish
// on the common core, so every F_q-point of the base locus lies in B
inline Pencil realize_cover(const CoverSpec& spec) {
    const Plane& plane = *spec.plane;
    std::vector<int> label(plane.num_points(), -1);
    for (size_t i = 0; i < spec.parts.size(); ++i) {
        for (std::uint32_t pi : spec.parts[i].indices()) {
            if (spec.common.contains_index(pi)) continue;
            label[pi] = static_cast<int>(i);
        }
    }
    auto [rf, rg] = detail::label_interpolants(plane, label, &spec.common);
    return Pencil(plane, Poly::scalar_mul(plane.field().neg(1), rg), std::move(rf));
}

// the pencil F = x^m H + y^{q^2+q+1+m}, G = x^m H + z^{q^2+q+1+m} with
// m = max(0, q-3) and H the product of all line forms: exactly one
// F_q-point [1:0:0] in the base locus, yet every member is blocking
inline Pencil example31_pencil(const Plane& plane) {
    const Field& f = plane.field();
    const long q = f.q();
    const long m = q > 3 ? q - 3 : 0;
    const long deg = q * q + q + 1 + m;
    if (std::gcd(q - 1, deg) != 1)
        throw construction_error("example31: gcd(q-1, degree) != 1");  // cannot happen, m forces it

    Poly h = all_lines_product(plane);
    auto arm = [&](Elem cy, Elem cz) {
        Poly diag = Poly::power(Poly::linear(f, 0, cy, cz), deg);
        if (m == 0) return Poly::sum({h, diag});
        Poly xm = Poly::power(Poly::linear(f, 1, 0, 0), m);
        return Poly::sum({Poly::product({xm, h}), diag});
    };
    Pencil pencil(plane, arm(1, 0), arm(0, 1));

    PointSet base = pencil.base_locus_points();
    if (base.size() != 1 || !base.contains(plane.normalize_point(1, 0, 0)))
        throw construction_error("example31: base locus is not exactly {[1:0:0]}");
    return pencil;
}

// partition of PG(2,q), q a square, into q - sqrt(q) + 1 Baer subplanes:
// points are identified with Z/(q^2+q+1) through powers of a generator
// of GF(q^3), and parts are the cosets of the subgroup of order
// q + sqrt(q) + 1.  Size, disjointness, blocking and the {1, sqrt(q)+1}
// line profile are all verified before returning.
inline std::vector<PointSet> baer_partition(const Plane& plane, long ext_max_q = CubicExt::kDefaultMaxQ) {
    const Field& f = plane.field();
    const long q = f.q();
    if (f.n() % 2 != 0)
        throw std::invalid_argument("baer_partition: q = " + std::to_string(q) + " is not a square");
    const long root = static_cast<long>(isqrt_floor(q));
    const long long n_pts = static_cast<long long>(q) * q + q + 1;
    const long coset_count = q - root + 1;   // index of the subgroup
    const long coset_size = q + root + 1;    // its order

    CubicExt ext(f, ext_max_q);
    std::vector<PointSet> parts(static_cast<size_t>(coset_count), PointSet(plane));
    std::vector<char> seen(plane.num_points(), 0);
    CubicExt::Triple cur = CubicExt::one();
    for (long long i = 0; i < n_pts; ++i) {
        ProjPoint pt = plane.normalize_point(cur[0], cur[1], cur[2]);
        size_t pi = plane.point_index(pt);
        if (seen[pi]) throw construction_error("baer_partition: generator powers do not enumerate the plane");
        seen[pi] = 1;
        parts[static_cast<size_t>(i % coset_count)].insert_index(pi);
        cur = ext.mul(cur, ext.generator());
    }

    for (const auto& part : parts) {
        if (part.size() != static_cast<size_t>(coset_size))
            throw construction_error("baer_partition: part size != q + sqrt(q) + 1");
        if (!is_blocking(part)) throw construction_error("baer_partition: part is not a blocking set");
        for (size_t li = 0; li < plane.num_points(); ++li) {
            size_t c = part.line_count(li);
            if (c != 1 && c != static_cast<size_t>(root) + 1)
                throw construction_error("baer_partition: line profile outside {1, sqrt(q)+1}");
        }
    }
    return parts;
}

// the sharp pencil for square q: realize the Baer partition padded with
// sqrt(q) empty parts; exactly sqrt(q) members are nonblocking
inline Pencil extremal_pencil(const Plane& plane, long ext_max_q = CubicExt::kDefaultMaxQ) {
    std::vector<PointSet> baer = baer_partition(plane, ext_max_q);
    Partition partition;
    partition.plane = &plane;
    partition.parts = std::move(baer);
    while (partition.parts.size() < plane.num_params()) partition.parts.emplace_back(plane);
    return realize_partition(partition);
}

}  // namespace pencils
