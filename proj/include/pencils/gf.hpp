// gf.hpp -- exact arithmetic in GF(p^n) for small q.
//
// Elements are encoded as integers in [0, q): the coefficient vector
// (c_0, ..., c_{n-1}) of c_0 + c_1*a + ... + c_{n-1}*a^{n-1} packed
// little-endian in base p.  The modulus is the monic irreducible of the
// requested degree with the smallest such encoding, so two fields built
// from the same (p, n) are identical.  Multiplicative structure is
// table-driven: a primitive element is found at construction and exp/log
// tables give O(1) mul, inv and pow.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pencils {

using Elem = std::uint16_t;

inline bool is_prime(long m) {
    if (m < 2) return false;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// distinct prime factors, trial division
inline std::vector<long long> prime_factors(long long m) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

class Field {
public:
    static constexpr long kDefaultMaxQ = 1024;

    Field(long p, int n, long max_q = kDefaultMaxQ) : p_(p), n_(n) {
        if (!is_prime(p)) throw std::invalid_argument("Field: p = " + std::to_string(p) + " is not prime");
        if (n < 1) throw std::invalid_argument("Field: extension degree must be >= 1");
        long q = 1;
        for (int i = 0; i < n; ++i) {
            q *= p;
            if (q > max_q)
                throw std::invalid_argument("Field: p^n exceeds size bound " + std::to_string(max_q));
        }
        q_ = q;
        if (n_ == 1) {
            modulus_ = {0, 1};  // x; unused, arithmetic is plain mod p
        } else {
            modulus_ = smallest_irreducible();
        }
        build_tables();
    }

    long p() const { return p_; }
    int n() const { return n_; }
    long q() const { return q_; }
    bool prime_field() const { return n_ == 1; }
    // monic degree-n coefficient vector over GF(p), little-endian
    const std::vector<Elem>& modulus() const { return modulus_; }

    bool same(const Field& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    void check_elem(Elem x) const {
        if (x >= q_) throw std::invalid_argument("Field: encoding " + std::to_string(x) + " out of range");
    }

    Elem add(Elem x, Elem y) const { return add_[static_cast<size_t>(x) * q_ + y]; }
    Elem neg(Elem x) const { return neg_[x]; }
    Elem sub(Elem x, Elem y) const { return add(x, neg_[y]); }

    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) return 0;
        return exp_[(log_[x] + log_[y]) % (q_ - 1)];
    }

    Elem inv(Elem x) const {
        if (x == 0) throw std::domain_error("Field: inverse of zero");
        return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
    }

    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    Elem pow(Elem x, long long e) const {
        if (e < 0) throw std::invalid_argument("Field: negative exponent");
        if (x == 0) return e == 0 ? 1 : 0;
        return exp_[static_cast<size_t>(log_[x]) * (e % (q_ - 1)) % (q_ - 1)];
    }

    // g with multiplicative order exactly q-1, smallest encoding
    Elem primitive_element() const { return gen_; }

    // the p^m-element subfield { x : x^{p^m} = x }, m | n
    std::vector<Elem> subfield_elements(int m) const {
        if (m < 1 || n_ % m != 0)
            throw std::invalid_argument("subfield_elements: " + std::to_string(m) + " does not divide " +
                                        std::to_string(n_));
        long long pm = 1;
        for (int i = 0; i < m; ++i) pm *= p_;
        std::vector<Elem> out;
        for (long x = 0; x < q_; ++x)
            if (pow(static_cast<Elem>(x), pm) == x) out.push_back(static_cast<Elem>(x));
        return out;
    }

    // digits of the encoding, little-endian base p
    std::vector<Elem> coeffs(Elem x) const {
        std::vector<Elem> c(n_);
        long v = x;
        for (int i = 0; i < n_; ++i) {
            c[i] = static_cast<Elem>(v % p_);
            v /= p_;
        }
        return c;
    }

private:
    long p_;
    int n_;
    long q_ = 0;
    std::vector<Elem> modulus_;
    Elem gen_ = 0;
    std::vector<Elem> add_, neg_, exp_, log_;

    // --- construction-time polynomial arithmetic over GF(p) ---

    // remainder of a mod b, both little-endian coefficient vectors, b monic
    static std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, long p) {
        int db = static_cast<int>(b.size()) - 1;
        while (static_cast<int>(a.size()) - 1 >= db) {
            int da = static_cast<int>(a.size()) - 1;
            int lead = a[da];
            if (lead != 0) {
                for (int i = 0; i <= db; ++i) {
                    long v = a[da - db + i] - static_cast<long>(lead) * b[i];
                    a[da - db + i] = static_cast<int>(((v % p) + p) % p);
                }
            }
            a.pop_back();
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    static bool poly_is_irreducible(const std::vector<int>& f, long p) {
        int deg = static_cast<int>(f.size()) - 1;
        // trial division by every monic polynomial of degree 1..deg/2
        for (int d = 1; 2 * d <= deg; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long enc = 0; enc < count; ++enc) {
                std::vector<int> g(d + 1);
                long v = enc;
                for (int i = 0; i < d; ++i) {
                    g[i] = static_cast<int>(v % p);
                    v /= p;
                }
                g[d] = 1;
                if (poly_rem(f, g, p).empty()) return false;
            }
        }
        return true;
    }

    std::vector<Elem> smallest_irreducible() const {
        long count = 1;
        for (int i = 0; i < n_; ++i) count *= p_;
        for (long enc = 0; enc < count; ++enc) {
            std::vector<int> f(n_ + 1);
            long v = enc;
            for (int i = 0; i < n_; ++i) {
                f[i] = static_cast<int>(v % p_);
                v /= p_;
            }
            f[n_] = 1;
            if (poly_is_irreducible(f, p_)) {
                std::vector<Elem> out(f.begin(), f.end());
                return out;
            }
        }
        throw std::logic_error("Field: no irreducible modulus found");  // unreachable
    }

    Elem add_slow(Elem x, Elem y) const {
        long vx = x, vy = y, out = 0, base = 1;
        for (int i = 0; i < n_; ++i) {
            out += ((vx % p_ + vy % p_) % p_) * base;
            vx /= p_;
            vy /= p_;
            base *= p_;
        }
        return static_cast<Elem>(out);
    }

    Elem mul_slow(Elem x, Elem y) const {
        if (n_ == 1) return static_cast<Elem>((static_cast<long>(x) * y) % p_);
        std::vector<long> a(n_), b(n_), c(2 * n_ - 1, 0);
        long vx = x, vy = y;
        for (int i = 0; i < n_; ++i) {
            a[i] = vx % p_;
            b[i] = vy % p_;
            vx /= p_;
            vy /= p_;
        }
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        // reduce degrees 2n-2 .. n via x^k = x^{k-n} * (x^n mod f)
        for (int k = 2 * n_ - 2; k >= n_; --k) {
            long lead = c[k];
            if (lead == 0) continue;
            c[k] = 0;
            for (int i = 0; i < n_; ++i) {
                long v = c[k - n_ + i] - lead * modulus_[i];
                c[k - n_ + i] = ((v % p_) + p_) % p_;
            }
        }
        long out = 0, base = 1;
        for (int i = 0; i < n_; ++i) {
            out += c[i] * base;
            base *= p_;
        }
        return static_cast<Elem>(out);
    }

    Elem pow_slow(Elem x, long long e) const {
        Elem r = 1, b = x;
        while (e > 0) {
            if (e & 1) r = mul_slow(r, b);
            b = mul_slow(b, b);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        const size_t q = static_cast<size_t>(q_);
        add_.resize(q * q);
        neg_.resize(q);
        for (size_t x = 0; x < q; ++x)
            for (size_t y = 0; y < q; ++y)
                add_[x * q + y] = add_slow(static_cast<Elem>(x), static_cast<Elem>(y));
        for (size_t x = 0; x < q; ++x) {
            Elem v = static_cast<Elem>(x);
            // -x: (p-1) * x summed, i.e. the additive inverse digit-wise
            long vx = v, out = 0, base = 1;
            for (int i = 0; i < n_; ++i) {
                out += ((p_ - vx % p_) % p_) * base;
                vx /= p_;
                base *= p_;
            }
            neg_[x] = static_cast<Elem>(out);
        }

        // primitive element: smallest encoding with order q-1
        const auto factors = prime_factors(q_ - 1);
        for (long g = 1; g < q_; ++g) {
            bool ok = true;
            for (long long r : factors) {
                if (pow_slow(static_cast<Elem>(g), (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                gen_ = static_cast<Elem>(g);
                break;
            }
        }
        if (gen_ == 0) throw std::logic_error("Field: no primitive element found");  // unreachable

        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        Elem cur = 1;
        for (long i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            log_[cur] = static_cast<Elem>(i);
            cur = mul_slow(cur, gen_);
        }
        if (cur != 1) throw std::logic_error("Field: generator order mismatch");
    }
};

}  // namespace pencils
