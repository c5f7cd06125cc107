// pencil.hpp -- pencils <F,G> of plane curves, their F_q-members,
// induced partitions and per-member blocking classification.
//
// A point P lies on the member C_{[s:t]} = {sF+tG=0} iff
// [s:t] = [-G(P):F(P)], so one evaluation of F and G per point assigns
// every point to its member (points of the F_q base locus lie on all
// members).  The construction evaluates both forms over the whole plane
// once and caches the assignment; everything else reads it.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pencils/blocking.hpp"
#include "pencils/plane.hpp"
#include "pencils/poly.hpp"

namespace pencils {

// q+1 labeled, pairwise disjoint point sets covering PG(2,q); part i is
// labeled by the i-th canonical parameter, empty parts allowed
struct Partition {
    const Plane* plane = nullptr;
    std::vector<PointSet> parts;

    void validate() const {
        if (!plane) throw std::invalid_argument("Partition: no plane");
        if (parts.size() != plane->num_params())
            throw std::invalid_argument("Partition: expected " + std::to_string(plane->num_params()) +
                                        " parts, got " + std::to_string(parts.size()));
        std::vector<char> seen(plane->num_points(), 0);
        for (const auto& part : parts) {
            for (std::uint32_t pi : part.indices()) {
                if (seen[pi]) throw std::invalid_argument("Partition: parts overlap");
                seen[pi] = 1;
            }
        }
        for (char c : seen)
            if (!c) throw std::invalid_argument("Partition: does not cover the plane");
    }

    bool operator==(const Partition& other) const { return parts == other.parts; }
};

class Pencil {
public:
    Pencil(const Plane& plane, Poly f, Poly g) : plane_(&plane), f_(std::move(f)), g_(std::move(g)) {
        if (!f_.field().same(plane.field()) || !g_.field().same(plane.field()))
            throw std::invalid_argument("Pencil: field mismatch");
        if (f_.degree() != g_.degree())
            throw std::invalid_argument("Pencil: degree mismatch " + std::to_string(f_.degree()) + " vs " +
                                        std::to_string(g_.degree()));
        if (f_.degree() < 1) throw std::invalid_argument("Pencil: degree must be >= 1");
        evaluate_and_check();
    }

    const Plane& plane() const { return *plane_; }
    const Poly& f() const { return f_; }
    const Poly& g() const { return g_; }
    long degree() const { return f_.degree(); }

    // member index of each point (param index), or -1 for base-locus points
    const std::vector<int>& assignment() const { return assignment_; }

    PointSet base_locus_points() const {
        PointSet out(*plane_);
        for (size_t pi = 0; pi < assignment_.size(); ++pi)
            if (assignment_[pi] < 0) out.insert_index(pi);
        return out;
    }

    size_t base_locus_size() const { return base_count_; }
    bool base_point_free() const { return base_count_ == 0; }

    Poly member(const ProjParam& param) const { return linear_combination(param.c[0], param.c[1], f_, g_); }

    // F_q-points of the member: the points bucketed to param, plus every
    // base-locus point (those lie on all members)
    PointSet member_points(const ProjParam& param) const {
        const int target = static_cast<int>(plane_->param_index(param));
        PointSet out(*plane_);
        for (size_t pi = 0; pi < assignment_.size(); ++pi)
            if (assignment_[pi] == target || assignment_[pi] < 0) out.insert_index(pi);
        return out;
    }

    // partition semantics require an F_q-point-free base locus
    Partition induced_partition() const {
        if (base_count_ > 0)
            throw std::invalid_argument("induced_partition: base locus has " + std::to_string(base_count_) +
                                        " F_q-points");
        Partition part;
        part.plane = plane_;
        part.parts.assign(plane_->num_params(), PointSet(*plane_));
        for (size_t pi = 0; pi < assignment_.size(); ++pi) part.parts[assignment_[pi]].insert_index(pi);
        return part;
    }

private:
    const Plane* plane_;
    Poly f_, g_;
    std::vector<int> assignment_;
    size_t base_count_ = 0;

    void evaluate_and_check() {
        const Field& fld = plane_->field();
        const auto& pts = plane_->points();
        std::vector<Elem> fv(pts.size()), gv(pts.size());
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            fv[pi] = f_.eval_at(pts[pi].c[0], pts[pi].c[1], pts[pi].c[2]);
            gv[pi] = g_.eval_at(pts[pi].c[0], pts[pi].c[1], pts[pi].c[2]);
        }

        // reject F = lambda*G as functions (lambda nonzero), and the fully
        // degenerate case where both vanish everywhere
        bool f_zero = true, g_zero = true, one_sided = false;
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            if (fv[pi] != 0) f_zero = false;
            if (gv[pi] != 0) g_zero = false;
            if ((fv[pi] == 0) != (gv[pi] == 0)) one_sided = true;
        }
        if (f_zero && g_zero)
            throw std::invalid_argument("Pencil: F and G both vanish on every F_q-point");
        if (!one_sided && !f_zero && !g_zero) {
            size_t pi0 = 0;
            while (gv[pi0] == 0) ++pi0;
            Elem lambda = fld.div(fv[pi0], gv[pi0]);
            bool proportional = true;
            for (size_t pi = 0; pi < pts.size(); ++pi) {
                if (fv[pi] != fld.mul(lambda, gv[pi])) {
                    proportional = false;
                    break;
                }
            }
            if (proportional)
                throw std::invalid_argument("Pencil: F and G are scalar multiples as functions on PG(2,q)");
        }

        assignment_.assign(pts.size(), -1);
        for (size_t pi = 0; pi < pts.size(); ++pi) {
            if (fv[pi] == 0 && gv[pi] == 0) {
                ++base_count_;
                continue;
            }
            ProjParam param = plane_->normalize_param(fld.neg(gv[pi]), fv[pi]);
            assignment_[pi] = static_cast<int>(plane_->param_index(param));
        }
    }
};

enum class CheckStatus { pass, fail, skipped };

inline const char* check_status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct CheckResult {
    CheckStatus status = CheckStatus::skipped;
    long long lhs = 0;
    long long rhs = 0;
    std::string note;

    bool failed() const { return status == CheckStatus::fail; }
};

struct MemberRecord {
    ProjParam param;
    std::uint32_t count = 0;  // F_q-points on the member
    BlockingClass cls;
};

struct PencilReport {
    long long q = 0;
    long long p = 0;
    int n = 0;
    long long degree = 0;
    long long base_locus_size = 0;
    std::vector<MemberRecord> members;
    long long m = 0;            // blocking members
    long long nonblocking = 0;  // q + 1 - m
};

inline PencilReport classify_pencil(const Pencil& pencil) {
    const Plane& plane = pencil.plane();
    PencilReport rep;
    rep.q = plane.q();
    rep.p = plane.field().p();
    rep.n = plane.field().n();
    rep.degree = pencil.degree();
    rep.base_locus_size = static_cast<long long>(pencil.base_locus_size());
    for (size_t i = 0; i < plane.num_params(); ++i) {
        ProjParam param = plane.param_of_index(i);
        PointSet pts = pencil.member_points(param);
        MemberRecord rec;
        rec.param = param;
        rec.count = static_cast<std::uint32_t>(pts.size());
        rec.cls = classify(pts);
        if (rec.cls.blocking()) ++rep.m;
        rep.members.push_back(rec);
    }
    rep.nonblocking = static_cast<long long>(plane.num_params()) - rep.m;
    return rep;
}

// nonblocking >= sqrt(q), squared comparison; needs an empty base locus
inline CheckResult check_prop32(const PencilReport& rep) {
    if (rep.base_locus_size != 0)
        throw std::invalid_argument("check_prop32: pencil has F_q-points in its base locus");
    CheckResult r;
    r.lhs = rep.nonblocking * rep.nonblocking;
    r.rhs = rep.q;
    r.status = r.lhs >= r.rhs ? CheckStatus::pass : CheckStatus::fail;
    r.note = "nonblocking^2 >= q";
    return r;
}

// nonblocking * (d+1) >= q + 1 for d <= q; skipped for d > q where only
// the averaging guarantee (>= 1 nonblocking) applies
inline CheckResult check_thm12(const PencilReport& rep) {
    if (rep.base_locus_size != 0)
        throw std::invalid_argument("check_thm12: pencil has F_q-points in its base locus");
    CheckResult r;
    if (rep.degree > rep.q) {
        r.status = CheckStatus::skipped;
        r.note = "d > q";
        return r;
    }
    r.lhs = rep.nonblocking * (rep.degree + 1);
    r.rhs = rep.q + 1;
    r.status = r.lhs >= r.rhs ? CheckStatus::pass : CheckStatus::fail;
    r.note = "nonblocking*(d+1) >= q+1";
    return r;
}

// 3 * nonblocking >= p + 1 when q = p is prime; skipped otherwise
inline CheckResult check_prime_bound(const PencilReport& rep) {
    if (rep.base_locus_size != 0)
        throw std::invalid_argument("check_prime_bound: pencil has F_q-points in its base locus");
    CheckResult r;
    if (rep.n != 1) {
        r.status = CheckStatus::skipped;
        r.note = "q not prime";
        return r;
    }
    r.lhs = 3 * rep.nonblocking;
    r.rhs = rep.p + 1;
    r.status = r.lhs >= r.rhs ? CheckStatus::pass : CheckStatus::fail;
    r.note = "3*nonblocking >= p+1";
    return r;
}

}  // namespace pencils
