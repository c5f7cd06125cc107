// gf_ext.hpp -- the cubic tower GF(q) < GF(q^3).
//
// Elements of GF(q^3) are coefficient triples (c0, c1, c2) over the base
// field with respect to the basis {1, b, b^2}, b a root of the canonical
// cubic modulus.  The modulus is the monic irreducible cubic over GF(q)
// with the smallest base-q encoding; a cubic over GF(q) is irreducible
// iff it has no root in GF(q).  The stored generator has verified
// multiplicative order q^3 - 1.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "pencils/gf.hpp"

namespace pencils {

class CubicExt {
public:
    using Triple = std::array<Elem, 3>;

    static constexpr long kDefaultMaxQ = 128;

    explicit CubicExt(const Field& base, long max_q = kDefaultMaxQ) : base_(&base) {
        const long q = base.q();
        if (q > max_q)
            throw std::invalid_argument("CubicExt: base field size exceeds bound " + std::to_string(max_q));
        order_ = static_cast<long long>(q) * q * q - 1;
        find_modulus();
        // beta^3 = -(m0 + m1 b + m2 b^2)
        beta3_ = {base.neg(modulus_[0]), base.neg(modulus_[1]), base.neg(modulus_[2])};
        find_generator();
    }

    const Field& base() const { return *base_; }
    long long order() const { return order_; }  // q^3 - 1
    const std::array<Elem, 4>& cubic_modulus() const { return modulus_with_lead_; }
    Triple generator() const { return gen_; }

    static Triple one() { return {1, 0, 0}; }
    static bool is_zero(const Triple& t) { return t[0] == 0 && t[1] == 0 && t[2] == 0; }

    Triple add(const Triple& x, const Triple& y) const {
        return {base_->add(x[0], y[0]), base_->add(x[1], y[1]), base_->add(x[2], y[2])};
    }

    Triple scale(Elem s, const Triple& x) const {
        return {base_->mul(s, x[0]), base_->mul(s, x[1]), base_->mul(s, x[2])};
    }

    // x * b, reduced by the modulus
    Triple mul_by_beta(const Triple& x) const {
        Triple shifted = {0, x[0], x[1]};
        return add(shifted, scale(x[2], beta3_));
    }

    Triple mul(const Triple& x, const Triple& y) const {
        Triple t1 = y;
        Triple t2 = mul_by_beta(t1);
        Triple t3 = mul_by_beta(t2);
        return add(add(scale(x[0], t1), scale(x[1], t2)), scale(x[2], t3));
    }

    Triple pow(Triple x, long long e) const {
        Triple r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

private:
    const Field* base_;
    long long order_ = 0;
    Triple modulus_ = {0, 0, 0};  // non-leading coefficients (c0, c1, c2)
    std::array<Elem, 4> modulus_with_lead_ = {0, 0, 0, 1};
    Triple beta3_ = {0, 0, 0};
    Triple gen_ = {0, 0, 0};

    void find_modulus() {
        const long q = base_->q();
        for (long long enc = 0; enc < static_cast<long long>(q) * q * q; ++enc) {
            Triple c = {static_cast<Elem>(enc % q), static_cast<Elem>((enc / q) % q),
                        static_cast<Elem>((enc / q / q) % q)};
            bool has_root = false;
            for (long x = 0; x < q && !has_root; ++x) {
                Elem xe = static_cast<Elem>(x);
                // x^3 + c2 x^2 + c1 x + c0
                Elem v = base_->add(base_->pow(xe, 3),
                                    base_->add(base_->mul(c[2], base_->mul(xe, xe)),
                                               base_->add(base_->mul(c[1], xe), c[0])));
                has_root = (v == 0);
            }
            if (!has_root) {
                modulus_ = c;
                modulus_with_lead_ = {c[0], c[1], c[2], 1};
                return;
            }
        }
        throw std::logic_error("CubicExt: no irreducible cubic found");  // unreachable
    }

    void find_generator() {
        const long q = base_->q();
        const auto factors = prime_factors(order_);
        for (long long enc = 2; enc <= order_; ++enc) {
            Triple x = {static_cast<Elem>(enc % q), static_cast<Elem>((enc / q) % q),
                        static_cast<Elem>((enc / q / q) % q)};
            bool ok = true;
            for (long long r : factors) {
                if (pow(x, order_ / r) == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                if (pow(x, order_) != one()) throw std::logic_error("CubicExt: order check failed");
                gen_ = x;
                return;
            }
        }
        throw std::logic_error("CubicExt: no generator found");  // unreachable
    }
};

}  // namespace pencils
