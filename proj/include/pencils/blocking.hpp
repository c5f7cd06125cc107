// blocking.hpp -- blocking-set classification and the size bounds.
//
// A point set is nonblocking when some line misses it, trivially
// blocking when it contains all q+1 points of some line (witnessed by
// the first such line in enumeration order), and nontrivially blocking
// otherwise.  All bound comparisons are exact: sqrt(q) is taken
// literally when q is a square and handled by squaring otherwise, so no
// verdict ever depends on floating point.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencils/plane.hpp"

namespace pencils {

inline long long isqrt_floor(long long v) {
    if (v < 0) throw std::invalid_argument("isqrt_floor: negative");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline long long isqrt_ceil(long long v) {
    long long r = isqrt_floor(v);
    return r * r == v ? r : r + 1;
}

inline bool is_square(long long v) {
    long long r = isqrt_floor(v);
    return r * r == v;
}

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

// |S| >= q + sqrt(q) + 1, exact:  (N - q - 1)^2 >= q with N >= q+1
inline bool meets_bruen_bound(long long n_points, long long q) {
    long long t = n_points - q - 1;
    return t >= 0 && t * t >= q;
}

// |S| > q + (q + sqrt(q))/d, exact:  (d(N-q) - q)^2 > q with d(N-q) > q
inline bool exceeds_lemma41_bound(long long n_points, long long q, long long d) {
    long long t = d * (n_points - q) - q;
    return t > 0 && t * t > q;
}

// smallest integer size a nontrivial blocking set can have: q + ceil(sqrt(q)) + 1
inline long long bruen_threshold(long long q) { return q + isqrt_ceil(q) + 1; }

// 3(p+1)/2, p prime
inline Rational blokhuis_threshold(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("blokhuis_threshold: p = " + std::to_string(p) + " not prime");
    return Rational(3 * (p + 1), 2);
}

// q + (q + sqrt(q))/d as an exact rational; requires square q
inline Rational lemma41_threshold(long long q, long long d) {
    if (d < 1) throw std::invalid_argument("lemma41_threshold: d must be >= 1");
    if (!is_square(q))
        throw std::invalid_argument("lemma41_threshold: q not a square; compare via exceeds_lemma41_bound");
    Rational frac(q + isqrt_floor(q), d);
    return Rational(q * frac.den + frac.num, frac.den);
}

class PointSet {
public:
    explicit PointSet(const Plane& plane) : plane_(&plane), mask_(plane.mask_words(), 0) {}

    PointSet(const Plane& plane, const std::vector<ProjPoint>& pts) : PointSet(plane) {
        for (const auto& p : pts) insert(p);
    }

    const Plane& plane() const { return *plane_; }
    size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains_index(size_t pi) const { return (mask_[pi / 64] >> (pi % 64)) & 1; }
    bool contains(const ProjPoint& p) const { return contains_index(plane_->point_index(p)); }

    void insert_index(size_t pi) {
        std::uint64_t bit = std::uint64_t{1} << (pi % 64);
        if (!(mask_[pi / 64] & bit)) {
            mask_[pi / 64] |= bit;
            ++count_;
        }
    }

    void insert(const ProjPoint& p) { insert_index(plane_->point_index(p)); }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count_);
        for (size_t pi = 0; pi < plane_->num_points(); ++pi)
            if (contains_index(pi)) out.push_back(static_cast<std::uint32_t>(pi));
        return out;
    }

    std::vector<ProjPoint> points() const {
        std::vector<ProjPoint> out;
        out.reserve(count_);
        for (std::uint32_t pi : indices()) out.push_back(plane_->points()[pi]);
        return out;
    }

    // |S restricted to line li|
    size_t line_count(size_t li) const {
        const std::uint64_t* lm = plane_->line_mask(li);
        size_t c = 0;
        for (size_t w = 0; w < mask_.size(); ++w) c += static_cast<size_t>(std::popcount(lm[w] & mask_[w]));
        return c;
    }

    bool meets_line(size_t li) const {
        const std::uint64_t* lm = plane_->line_mask(li);
        for (size_t w = 0; w < mask_.size(); ++w)
            if (lm[w] & mask_[w]) return true;
        return false;
    }

    bool is_subset_of(const PointSet& other) const {
        for (size_t w = 0; w < mask_.size(); ++w)
            if (mask_[w] & ~other.mask_[w]) return false;
        return true;
    }

    bool disjoint_from(const PointSet& other) const {
        for (size_t w = 0; w < mask_.size(); ++w)
            if (mask_[w] & other.mask_[w]) return false;
        return true;
    }

    bool operator==(const PointSet& other) const { return mask_ == other.mask_; }

private:
    const Plane* plane_;
    std::vector<std::uint64_t> mask_;
    size_t count_ = 0;
};

struct IncidenceProfile {
    long long n_points = 0;           // N = |S|
    std::vector<long long> t;         // t[i] = lines meeting S in exactly i points, i = 0..q+1

    long long sum() const { return std::accumulate(t.begin(), t.end(), 0LL); }

    long long weighted_sum() const {
        long long s = 0;
        for (size_t i = 0; i < t.size(); ++i) s += static_cast<long long>(i) * t[i];
        return s;
    }

    long long pair_sum() const {
        long long s = 0;
        for (size_t i = 2; i < t.size(); ++i) s += (static_cast<long long>(i) * (i - 1) / 2) * t[i];
        return s;
    }

    // the three double-counting identities; they hold for every subset of
    // PG(2,q), so a failure is an implementation bug
    bool identities_hold(long long q) const {
        return sum() == q * q + q + 1 && weighted_sum() == (q + 1) * n_points &&
               pair_sum() == n_points * (n_points - 1) / 2;
    }
};

inline IncidenceProfile incidence_profile(const PointSet& s) {
    const Plane& plane = s.plane();
    IncidenceProfile prof;
    prof.n_points = static_cast<long long>(s.size());
    prof.t.assign(plane.q() + 2, 0);
    for (size_t li = 0; li < plane.num_points(); ++li) ++prof.t[s.line_count(li)];
    return prof;
}

inline bool is_blocking(const PointSet& s) {
    const Plane& plane = s.plane();
    for (size_t li = 0; li < plane.num_points(); ++li)
        if (!s.meets_line(li)) return false;
    return true;
}

struct BlockingClass {
    enum class Kind { nonblocking, trivial, nontrivial };
    Kind kind = Kind::nonblocking;
    std::optional<std::uint32_t> witness_line;  // first fully contained line, trivial case only

    bool blocking() const { return kind != Kind::nonblocking; }

    std::string str() const {
        switch (kind) {
            case Kind::nonblocking: return "non";
            case Kind::trivial: return "trivial";
            case Kind::nontrivial: return "nontrivial";
        }
        return "?";
    }
};

inline BlockingClass classify(const PointSet& s) {
    const Plane& plane = s.plane();
    const size_t full = static_cast<size_t>(plane.q()) + 1;
    std::optional<std::uint32_t> first_full;
    for (size_t li = 0; li < plane.num_points(); ++li) {
        size_t c = s.line_count(li);
        if (c == 0) return BlockingClass{BlockingClass::Kind::nonblocking, std::nullopt};
        if (c == full && !first_full) first_full = static_cast<std::uint32_t>(li);
    }
    if (first_full) return BlockingClass{BlockingClass::Kind::trivial, first_full};
    return BlockingClass{BlockingClass::Kind::nontrivial, std::nullopt};
}

enum class BoundStatus { pass, fail, not_applicable };

inline const char* bound_status_str(BoundStatus s) {
    switch (s) {
        case BoundStatus::pass: return "pass";
        case BoundStatus::fail: return "fail";
        case BoundStatus::not_applicable: return "n/a";
    }
    return "?";
}

// theorem checks for a classified set; a fail marks an implementation
// bug, not a property of the input
struct SizeBoundReport {
    BlockingClass cls;
    long long n_points = 0;
    BoundStatus bruen = BoundStatus::not_applicable;      // |S| >= q + sqrt(q) + 1
    BoundStatus blokhuis = BoundStatus::not_applicable;   // |S| >= 3(p+1)/2, q = p prime
    BoundStatus lemma41 = BoundStatus::not_applicable;    // |S| > q + (q+sqrt(q))/d, degree-d curve sets

    bool ok() const { return bruen != BoundStatus::fail && blokhuis != BoundStatus::fail && lemma41 != BoundStatus::fail; }
};

// d = 0 means "not a curve point set", skipping the degree-sensitive bound
inline SizeBoundReport check_size_bounds(const PointSet& s, long long d = 0) {
    const Field& f = s.plane().field();
    const long long q = f.q();
    SizeBoundReport rep;
    rep.cls = classify(s);
    rep.n_points = static_cast<long long>(s.size());
    if (rep.cls.kind != BlockingClass::Kind::nontrivial) return rep;
    rep.bruen = meets_bruen_bound(rep.n_points, q) ? BoundStatus::pass : BoundStatus::fail;
    if (f.prime_field())
        rep.blokhuis = (2 * rep.n_points >= 3 * (q + 1)) ? BoundStatus::pass : BoundStatus::fail;
    if (d >= 1)
        rep.lemma41 = exceeds_lemma41_bound(rep.n_points, q, d) ? BoundStatus::pass : BoundStatus::fail;
    return rep;
}

}  // namespace pencils
