// poly.hpp -- homogeneous trivariate polynomials over GF(q) as
// immutable expression DAGs.
//
// The DAG is the primary representation: the interpolation polynomials
// have q^2+q+1 summands of degree 3(q-1) and explode under expansion,
// but evaluate in one pass over the DAG.  Structural homogeneity is
// enforced at construction (a Sum rejects mixed degrees), so every
// expression satisfies E(l*v) = l^degree * E(v).  expand() produces the
// sparse monomial form when it fits under a term guard.

#pragma once

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pencils/gf.hpp"
#include "pencils/plane.hpp"

namespace pencils {

// thrown by expand() when the intermediate term count exceeds the guard;
// the caller should fall back to DAG evaluation
struct term_guard_error : std::runtime_error {
    explicit term_guard_error(const std::string& what) : std::runtime_error(what) {}
};

struct SparsePoly {
    long degree = 0;
    // exponent triple (a,b,c) with a+b+c = degree -> nonzero coefficient
    std::map<std::array<int, 3>, Elem> terms;

    bool operator==(const SparsePoly&) const = default;

    Elem eval(const Field& f, Elem x, Elem y, Elem z) const {
        Elem acc = 0;
        for (const auto& [e, coef] : terms) {
            Elem t = f.mul(coef, f.mul(f.pow(x, e[0]), f.mul(f.pow(y, e[1]), f.pow(z, e[2]))));
            acc = f.add(acc, t);
        }
        return acc;
    }
};

class Poly {
public:
    enum class Kind { scalar, linear, power, product, sum, scalar_mul };

    static Poly scalar(const Field& f, Elem v) {
        f.check_elem(v);
        auto n = std::make_shared<Node>(Node{Kind::scalar, &f, 0, {v, 0, 0}, 0, {}});
        return Poly(std::move(n));
    }

    static Poly linear(const Field& f, Elem a, Elem b, Elem c) {
        f.check_elem(a);
        f.check_elem(b);
        f.check_elem(c);
        auto n = std::make_shared<Node>(Node{Kind::linear, &f, 1, {a, b, c}, 0, {}});
        return Poly(std::move(n));
    }

    static Poly power(Poly base, long k) {
        if (k < 1) throw std::invalid_argument("Poly::power: exponent must be positive");
        const Field* f = base.n_->field;
        long deg = k * base.degree();
        auto n = std::make_shared<Node>(Node{Kind::power, f, deg, {0, 0, 0}, k, {std::move(base)}});
        return Poly(std::move(n));
    }

    static Poly product(std::vector<Poly> factors) {
        if (factors.empty()) throw std::invalid_argument("Poly::product: no factors");
        const Field* f = factors[0].n_->field;
        long deg = 0;
        for (const auto& c : factors) {
            require_same_field(*f, *c.n_->field);
            deg += c.degree();
        }
        auto n = std::make_shared<Node>(Node{Kind::product, f, deg, {0, 0, 0}, 0, std::move(factors)});
        return Poly(std::move(n));
    }

    static Poly sum(std::vector<Poly> terms) {
        if (terms.empty()) throw std::invalid_argument("Poly::sum: no terms");
        const Field* f = terms[0].n_->field;
        long deg = terms[0].degree();
        for (const auto& c : terms) {
            require_same_field(*f, *c.n_->field);
            if (c.degree() != deg)
                throw std::invalid_argument("Poly::sum: mixed degrees " + std::to_string(deg) + " and " +
                                            std::to_string(c.degree()));
        }
        auto n = std::make_shared<Node>(Node{Kind::sum, f, deg, {0, 0, 0}, 0, std::move(terms)});
        return Poly(std::move(n));
    }

    static Poly scalar_mul(Elem s, Poly child) {
        const Field* f = child.n_->field;
        f->check_elem(s);
        long deg = child.degree();
        auto n = std::make_shared<Node>(Node{Kind::scalar_mul, f, deg, {s, 0, 0}, 0, {std::move(child)}});
        return Poly(std::move(n));
    }

    const Field& field() const { return *n_->field; }
    long degree() const { return n_->degree; }
    Kind kind() const { return n_->kind; }
    const std::array<Elem, 3>& coeffs() const { return n_->coef; }
    long exponent() const { return n_->exponent; }
    const std::vector<Poly>& children() const { return n_->kids; }

    // evaluation at an arbitrary coordinate triple
    Elem eval_at(Elem x, Elem y, Elem z) const {
        const Field& f = *n_->field;
        switch (n_->kind) {
            case Kind::scalar:
                return n_->coef[0];
            case Kind::linear:
                return f.add(f.mul(n_->coef[0], x), f.add(f.mul(n_->coef[1], y), f.mul(n_->coef[2], z)));
            case Kind::power:
                return f.pow(n_->kids[0].eval_at(x, y, z), n_->exponent);
            case Kind::product: {
                Elem acc = 1;
                for (const auto& c : n_->kids) {
                    acc = f.mul(acc, c.eval_at(x, y, z));
                    if (acc == 0) return 0;
                }
                return acc;
            }
            case Kind::sum: {
                Elem acc = 0;
                for (const auto& c : n_->kids) acc = f.add(acc, c.eval_at(x, y, z));
                return acc;
            }
            case Kind::scalar_mul:
                return f.mul(n_->coef[0], n_->kids[0].eval_at(x, y, z));
        }
        throw std::logic_error("Poly::eval_at: bad node");
    }

    // evaluation at the canonical representative of a plane point; the
    // value is representative-independent exactly when degree = 0 mod q-1,
    // the zero/nonzero outcome always is
    Elem eval(const Plane& plane, const ProjPoint& p) const {
        require_same_field(*n_->field, plane.field());
        return eval_at(p.c[0], p.c[1], p.c[2]);
    }

    bool is_zero_at(const Plane& plane, const ProjPoint& p) const { return eval(plane, p) == 0; }

    // full sparse expansion; throws term_guard_error once the number of
    // monomial terms generated along the way exceeds term_guard
    SparsePoly expand(long term_guard = 1000000) const {
        long used = 0;
        SparsePoly out = expand_node(term_guard, used);
        out.degree = degree();
        return out;
    }

private:
    struct Node {
        Kind kind;
        const Field* field;
        long degree;
        std::array<Elem, 3> coef;  // scalar value / linear coefficients / scalar_mul factor
        long exponent;
        std::vector<Poly> kids;
    };

    std::shared_ptr<const Node> n_;

    explicit Poly(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    static void require_same_field(const Field& a, const Field& b) {
        if (!a.same(b)) throw std::invalid_argument("Poly: field mismatch");
    }

    static void guard_tick(long& used, long guard) {
        if (++used > guard)
            throw term_guard_error("expansion exceeds term guard of " + std::to_string(guard) + " monomials");
    }

    SparsePoly sp_mul(const SparsePoly& a, const SparsePoly& b, long guard, long& used) const {
        const Field& f = *n_->field;
        SparsePoly out;
        out.degree = a.degree + b.degree;
        for (const auto& [ea, ca] : a.terms) {
            for (const auto& [eb, cb] : b.terms) {
                guard_tick(used, guard);
                std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                Elem v = f.add(out.terms.count(e) ? out.terms[e] : 0, f.mul(ca, cb));
                if (v == 0)
                    out.terms.erase(e);
                else
                    out.terms[e] = v;
            }
        }
        return out;
    }

    SparsePoly expand_node(long guard, long& used) const {
        const Field& f = *n_->field;
        SparsePoly out;
        out.degree = n_->degree;
        switch (n_->kind) {
            case Kind::scalar:
                if (n_->coef[0] != 0) out.terms[{0, 0, 0}] = n_->coef[0];
                return out;
            case Kind::linear: {
                if (n_->coef[0] != 0) out.terms[{1, 0, 0}] = n_->coef[0];
                if (n_->coef[1] != 0) out.terms[{0, 1, 0}] = n_->coef[1];
                if (n_->coef[2] != 0) out.terms[{0, 0, 1}] = n_->coef[2];
                return out;
            }
            case Kind::power: {
                SparsePoly base = n_->kids[0].expand_node(guard, used);
                SparsePoly acc;
                acc.terms[{0, 0, 0}] = 1;
                long e = n_->exponent;
                while (e > 0) {
                    if (e & 1) acc = sp_mul(acc, base, guard, used);
                    e >>= 1;
                    if (e > 0) base = sp_mul(base, base, guard, used);
                }
                acc.degree = n_->degree;
                return acc;
            }
            case Kind::product: {
                SparsePoly acc;
                acc.terms[{0, 0, 0}] = 1;
                for (const auto& c : n_->kids) acc = sp_mul(acc, c.expand_node(guard, used), guard, used);
                acc.degree = n_->degree;
                return acc;
            }
            case Kind::sum: {
                for (const auto& c : n_->kids) {
                    SparsePoly t = c.expand_node(guard, used);
                    for (const auto& [e, coef] : t.terms) {
                        guard_tick(used, guard);
                        Elem v = f.add(out.terms.count(e) ? out.terms[e] : 0, coef);
                        if (v == 0)
                            out.terms.erase(e);
                        else
                            out.terms[e] = v;
                    }
                }
                return out;
            }
            case Kind::scalar_mul: {
                SparsePoly t = n_->kids[0].expand_node(guard, used);
                for (const auto& [e, coef] : t.terms) {
                    Elem v = f.mul(n_->coef[0], coef);
                    if (v != 0) out.terms[e] = v;
                }
                return out;
            }
        }
        throw std::logic_error("Poly::expand: bad node");
    }
};

// sF + tG, defined when the degrees agree and (s,t) != (0,0)
inline Poly linear_combination(Elem s, Elem t, const Poly& f, const Poly& g) {
    if (f.degree() != g.degree())
        throw std::invalid_argument("linear_combination: degree mismatch " + std::to_string(f.degree()) +
                                    " vs " + std::to_string(g.degree()));
    if (s == 0 && t == 0) throw std::invalid_argument("linear_combination: both scalars zero");
    return Poly::sum({Poly::scalar_mul(s, f), Poly::scalar_mul(t, g)});
}

// product of the linear forms of all q^2+q+1 lines; degree q^2+q+1 and
// vanishes at every point of PG(2,q)
inline Poly all_lines_product(const Plane& plane) {
    std::vector<Poly> factors;
    factors.reserve(plane.lines().size());
    for (const auto& l : plane.lines()) factors.push_back(Poly::linear(plane.field(), l.c[0], l.c[1], l.c[2]));
    return Poly::product(std::move(factors));
}

// a total map PG(2,q) -> F_q, stored by point index
struct PointFunction {
    std::vector<Elem> values;

    static PointFunction zero(const Plane& plane) { return PointFunction{std::vector<Elem>(plane.num_points(), 0)}; }

    Elem at(size_t point_index) const { return values.at(point_index); }
    Elem& at(size_t point_index) { return values.at(point_index); }

    bool identically_zero() const {
        for (Elem v : values)
            if (v != 0) return false;
        return true;
    }
};

}  // namespace pencils
