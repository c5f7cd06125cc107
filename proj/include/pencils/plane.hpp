// plane.hpp -- the projective plane PG(2,q) and its dual.
//
// Points and lines are homogeneous triples normalized so the leftmost
// nonzero coordinate is 1, giving one canonical representative per
// class.  Enumeration order is fixed: [1:y:z] by (y,z) encoding, then
// [0:1:z], then [0:0:1]; lines use the same order on their coefficient
// triples.  Incidence ax+by+cz = 0 is precomputed as a lines x points
// bitmap at construction.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pencils/gf.hpp"

namespace pencils {

struct ProjPoint {
    std::array<Elem, 3> c{0, 0, 0};
    auto operator<=>(const ProjPoint&) const = default;
};

struct ProjLine {
    std::array<Elem, 3> c{0, 0, 0};
    auto operator<=>(const ProjLine&) const = default;
};

// a point [s:t] of the parameter line P^1(F_q); canonical order is
// [1:t] by increasing t, then [0:1]
struct ProjParam {
    std::array<Elem, 2> c{0, 0};
    auto operator<=>(const ProjParam&) const = default;
};

class Plane {
public:
    static constexpr long kBitmapMaxQ = 128;

    explicit Plane(const Field& f) : field_(&f), q_(f.q()) {
        if (q_ > kBitmapMaxQ)
            throw std::invalid_argument("Plane: q exceeds the incidence-bitmap bound");
        const size_t n = num_points();
        points_.reserve(n);
        lines_.reserve(n);
        for (long y = 0; y < q_; ++y)
            for (long z = 0; z < q_; ++z)
                points_.push_back(ProjPoint{{1, static_cast<Elem>(y), static_cast<Elem>(z)}});
        for (long z = 0; z < q_; ++z) points_.push_back(ProjPoint{{0, 1, static_cast<Elem>(z)}});
        points_.push_back(ProjPoint{{0, 0, 1}});
        for (const auto& p : points_) lines_.push_back(ProjLine{p.c});

        mask_words_ = (n + 63) / 64;
        incidence_.assign(n * mask_words_, 0);
        line_points_.assign(n, {});
        point_lines_.assign(n, {});
        for (size_t li = 0; li < n; ++li) {
            for (size_t pi = 0; pi < n; ++pi) {
                if (dot(lines_[li].c, points_[pi].c) == 0) {
                    incidence_[li * mask_words_ + pi / 64] |= (std::uint64_t{1} << (pi % 64));
                    line_points_[li].push_back(static_cast<std::uint32_t>(pi));
                    point_lines_[pi].push_back(static_cast<std::uint32_t>(li));
                }
            }
        }
    }

    const Field& field() const { return *field_; }
    long q() const { return q_; }
    size_t num_points() const { return static_cast<size_t>(q_) * q_ + q_ + 1; }
    size_t num_params() const { return static_cast<size_t>(q_) + 1; }

    const std::vector<ProjPoint>& points() const { return points_; }
    const std::vector<ProjLine>& lines() const { return lines_; }

    ProjPoint normalize_point(Elem x, Elem y, Elem z) const {
        auto t = normalize_triple(x, y, z);
        return ProjPoint{t};
    }

    ProjLine normalize_line(Elem a, Elem b, Elem c) const {
        auto t = normalize_triple(a, b, c);
        return ProjLine{t};
    }

    size_t point_index(const ProjPoint& p) const { return triple_index(p.c); }
    size_t line_index(const ProjLine& l) const { return triple_index(l.c); }

    bool incident(const ProjLine& l, const ProjPoint& p) const { return dot(l.c, p.c) == 0; }

    bool incident_by_index(size_t li, size_t pi) const {
        return (incidence_[li * mask_words_ + pi / 64] >> (pi % 64)) & 1;
    }

    size_t mask_words() const { return mask_words_; }
    const std::uint64_t* line_mask(size_t li) const { return incidence_.data() + li * mask_words_; }

    const std::vector<std::uint32_t>& line_point_indices(size_t li) const { return line_points_[li]; }
    const std::vector<std::uint32_t>& point_line_indices(size_t pi) const { return point_lines_[pi]; }

    // the unique line through two distinct points (cross product)
    ProjLine line_through(const ProjPoint& p, const ProjPoint& r) const {
        if (p == r) throw std::invalid_argument("line_through: points coincide");
        const Field& f = *field_;
        Elem a = f.sub(f.mul(p.c[1], r.c[2]), f.mul(p.c[2], r.c[1]));
        Elem b = f.sub(f.mul(p.c[2], r.c[0]), f.mul(p.c[0], r.c[2]));
        Elem c = f.sub(f.mul(p.c[0], r.c[1]), f.mul(p.c[1], r.c[0]));
        return normalize_line(a, b, c);
    }

    // the q+1 lines through p, in global enumeration order
    std::vector<ProjLine> lines_through(const ProjPoint& p) const {
        std::vector<ProjLine> out;
        out.reserve(q_ + 1);
        for (std::uint32_t li : point_lines_[point_index(p)]) out.push_back(lines_[li]);
        return out;
    }

    ProjParam normalize_param(Elem s, Elem t) const {
        if (s == 0 && t == 0) throw std::invalid_argument("normalize_param: zero pair");
        if (s != 0) return ProjParam{{1, field_->div(t, s)}};
        return ProjParam{{0, 1}};
    }

    ProjParam param_of_index(size_t i) const {
        if (i < static_cast<size_t>(q_)) return ProjParam{{1, static_cast<Elem>(i)}};
        if (i == static_cast<size_t>(q_)) return ProjParam{{0, 1}};
        throw std::invalid_argument("param_of_index: index out of range");
    }

    size_t param_index(const ProjParam& a) const {
        if (a.c[0] == 1) return a.c[1];
        return static_cast<size_t>(q_);
    }

private:
    const Field* field_;
    long q_;
    std::vector<ProjPoint> points_;
    std::vector<ProjLine> lines_;
    std::vector<std::vector<std::uint32_t>> line_points_;
    std::vector<std::vector<std::uint32_t>> point_lines_;
    std::vector<std::uint64_t> incidence_;
    size_t mask_words_ = 0;

    Elem dot(const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) const {
        const Field& f = *field_;
        return f.add(f.mul(a[0], b[0]), f.add(f.mul(a[1], b[1]), f.mul(a[2], b[2])));
    }

    std::array<Elem, 3> normalize_triple(Elem x, Elem y, Elem z) const {
        field_->check_elem(x);
        field_->check_elem(y);
        field_->check_elem(z);
        std::array<Elem, 3> t{x, y, z};
        int lead = -1;
        for (int i = 0; i < 3; ++i) {
            if (t[i] != 0) {
                lead = i;
                break;
            }
        }
        if (lead < 0) throw std::invalid_argument("normalize: zero triple");
        Elem s = field_->inv(t[lead]);
        for (int i = 0; i < 3; ++i) t[i] = field_->mul(s, t[i]);
        return t;
    }

    size_t triple_index(const std::array<Elem, 3>& t) const {
        if (t[0] == 1) return static_cast<size_t>(t[1]) * q_ + t[2];
        if (t[0] == 0 && t[1] == 1) return static_cast<size_t>(q_) * q_ + t[2];
        if (t[0] == 0 && t[1] == 0 && t[2] == 1) return static_cast<size_t>(q_) * q_ + q_;
        throw std::invalid_argument("triple_index: not a normalized triple");
    }
};

}  // namespace pencils
