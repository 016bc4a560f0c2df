#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairweight/errors.hpp"

namespace pairweight {

namespace detail {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as little-endian coefficient vectors.
inline void poly_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    // b must be nonzero; returns a mod b.
    while (a.size() >= b.size() && !a.empty()) {
        // leading coefficient quotient
        int lb = b.back();
        int inv_lb = 1;
        for (int x = 1; x < p; ++x)
            if (lb * x % p == 1) { inv_lb = x; break; }
        int coef = static_cast<int>(static_cast<long long>(a.back()) * inv_lb % p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            long long v = a[shift + i] - static_cast<long long>(coef) * b[i];
            a[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        poly_trim(a);
    }
    return a;
}

}  // namespace detail

// Arithmetic in GF(q), q = p^e, on dense integer element codes. The code
// sum(a_i * p^i) stands for the residue class of the polynomial
// sum(a_i * x^i) in F_p[x]/(modulus). Prime fields (e = 1) skip the
// polynomial layer entirely. No tables: operations decode, compute and
// re-encode, which is plenty at the element counts this library targets.
class Field {
public:
    // Builds GF(p^e). For e > 1 the modulus is the coefficient vector
    // (constant term first) of a monic irreducible polynomial of degree e
    // over F_p; when omitted, a fixed built-in modulus is used for
    // q in {4, 8, 9, 16, 25, 27, 32}.
    static Field make(long long p, int e, std::optional<std::vector<int>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
        if (e < 1) throw std::invalid_argument("field: extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            if (q > (1LL << 20)) throw std::invalid_argument("field: order too large (max 2^20)");
        }
        Field f;
        f.p_ = p;
        f.e_ = e;
        f.q_ = q;
        if (e == 1) {
            if (modulus) throw std::invalid_argument("field: modulus given for a prime field");
            return f;
        }
        if (!modulus) {
            auto def = builtin_modulus(q);
            if (!def) throw std::invalid_argument("field: no built-in modulus for q = " + std::to_string(q));
            modulus = std::move(def);
        }
        f.modulus_ = std::move(*modulus);
        f.validate_modulus();
        return f;
    }

    // Convenience for parsers: q given directly, factored as p^e.
    static Field from_order(long long q, std::optional<std::vector<int>> modulus = std::nullopt) {
        if (q < 2) throw std::invalid_argument("field: order must be >= 2");
        long long p = q;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) { p = d; break; }
        int e = 0;
        long long t = q;
        while (t > 1) {
            if (t % p != 0) throw std::invalid_argument("field: q = " + std::to_string(q) + " is not a prime power");
            t /= p;
            ++e;
        }
        return make(p, e, std::move(modulus));
    }

    long long p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    bool prime_field() const { return e_ == 1; }

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

    bool in_range(long long a) const { return 0 <= a && a < q_; }

    int add(int a, int b) const {
        check(a);
        check(b);
        if (e_ == 1) return static_cast<int>((a + static_cast<long long>(b)) % p_);
        int out = 0;
        long long mult = 1;
        long long x = a, y = b;
        for (int i = 0; i < e_; ++i) {
            out += static_cast<int>((x % p_ + y % p_) % p_ * mult);
            x /= p_;
            y /= p_;
            mult *= p_;
        }
        return out;
    }

    int neg(int a) const {
        check(a);
        if (e_ == 1) return static_cast<int>((p_ - a) % p_);
        int out = 0;
        long long mult = 1;
        long long x = a;
        for (int i = 0; i < e_; ++i) {
            out += static_cast<int>((p_ - x % p_) % p_ * mult);
            x /= p_;
            mult *= p_;
        }
        return out;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        check(a);
        check(b);
        if (e_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
        std::vector<int> da = decode(a), db = decode(b);
        std::vector<long long> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j) prod[i + j] += static_cast<long long>(da[i]) * db[j];
        // reduce with x^e = -(m_0 + m_1 x + ... + m_{e-1} x^{e-1})
        for (int i = 2 * e_ - 2; i >= e_; --i) {
            long long c = prod[i] % p_;
            prod[i] = 0;
            if (c == 0) continue;
            for (int j = 0; j < e_; ++j) prod[i - e_ + j] -= c * modulus_[j];
        }
        std::vector<int> out(e_);
        for (int i = 0; i < e_; ++i) out[i] = static_cast<int>(((prod[i] % p_) + p_) % p_);
        return encode(out);
    }

    // Multiplicative inverse. Prime fields use a^(p-2); extension fields run
    // the extended Euclidean algorithm on the coefficient polynomials.
    int inv(int a) const {
        check(a);
        if (a == 0) throw std::domain_error("field: inverse of zero");
        if (e_ == 1) return pow_mod(a, p_ - 2);
        std::vector<int> r0 = modulus_, r1 = decode(a);
        detail::poly_trim(r1);
        std::vector<int> t0, t1 = {1};
        while (!r1.empty()) {
            auto [quot, rem] = poly_divmod(r0, r1);
            std::vector<int> t2 = poly_sub(t0, poly_mul(quot, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 is a nonzero constant gcd; scale t0 by its inverse.
        int scale = pow_mod(r0[0], p_ - 2);
        std::vector<int> out(e_, 0);
        for (size_t i = 0; i < t0.size(); ++i)
            out[i] = static_cast<int>(static_cast<long long>(t0[i]) * scale % p_);
        int b = encode(out);
        if (mul(a, b) != 1) throw consistency_fault("field: inverse self-check failed");
        return b;
    }

    std::vector<int> decode(int a) const {
        check(a);
        std::vector<int> digits(e_);
        long long x = a;
        for (int i = 0; i < e_; ++i) {
            digits[i] = static_cast<int>(x % p_);
            x /= p_;
        }
        return digits;
    }

    int encode(const std::vector<int>& digits) const {
        if (static_cast<int>(digits.size()) != e_) throw std::invalid_argument("field: bad digit count");
        long long out = 0, mult = 1;
        for (int i = 0; i < e_; ++i) {
            if (digits[i] < 0 || digits[i] >= p_) throw std::invalid_argument("field: digit out of range");
            out += digits[i] * mult;
            mult *= p_;
        }
        return static_cast<int>(out);
    }

    std::string name() const {
        return "GF(" + std::to_string(q_) + ")";
    }

    static std::optional<std::vector<int>> builtin_modulus(long long q) {
        switch (q) {
            case 4: return std::vector<int>{1, 1, 1};           // x^2 + x + 1
            case 8: return std::vector<int>{1, 1, 0, 1};        // x^3 + x + 1
            case 9: return std::vector<int>{1, 0, 1};           // x^2 + 1
            case 16: return std::vector<int>{1, 1, 0, 0, 1};    // x^4 + x + 1
            case 25: return std::vector<int>{2, 0, 1};          // x^2 + 2
            case 27: return std::vector<int>{1, 2, 0, 1};       // x^3 + 2x + 1
            case 32: return std::vector<int>{1, 0, 1, 0, 0, 1}; // x^5 + x^2 + 1
            default: return std::nullopt;
        }
    }

private:
    void check(int a) const {
        if (!in_range(a))
            throw std::out_of_range("field: element code " + std::to_string(a) + " out of range for " + name());
    }

    int pow_mod(long long base, long long exp) const {
        long long result = 1 % p_;
        base %= p_;
        while (exp > 0) {
            if (exp & 1) result = result * base % p_;
            base = base * base % p_;
            exp >>= 1;
        }
        return static_cast<int>(result);
    }

    std::pair<std::vector<int>, std::vector<int>> poly_divmod(std::vector<int> a,
                                                              const std::vector<int>& b) const {
        std::vector<int> quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        int inv_lb = pow_mod(b.back(), p_ - 2);
        while (a.size() >= b.size() && !a.empty()) {
            int coef = static_cast<int>(static_cast<long long>(a.back()) * inv_lb % p_);
            size_t shift = a.size() - b.size();
            quot[shift] = coef;
            for (size_t i = 0; i < b.size(); ++i) {
                long long v = a[shift + i] - static_cast<long long>(coef) * b[i];
                a[shift + i] = static_cast<int>(((v % p_) + p_) % p_);
            }
            detail::poly_trim(a);
        }
        return {std::move(quot), std::move(a)};
    }

    std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b) const {
        if (a.empty() || b.empty()) return {};
        std::vector<long long> prod(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) prod[i + j] += static_cast<long long>(a[i]) * b[j];
        std::vector<int> out(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) out[i] = static_cast<int>(((prod[i] % p_) + p_) % p_);
        detail::poly_trim(out);
        return out;
    }

    std::vector<int> poly_sub(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> out(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < out.size(); ++i) {
            long long av = i < a.size() ? a[i] : 0;
            long long bv = i < b.size() ? b[i] : 0;
            out[i] = static_cast<int>((((av - bv) % p_) + p_) % p_);
        }
        detail::poly_trim(out);
        return out;
    }

    void validate_modulus() const {
        if (static_cast<int>(modulus_.size()) != e_ + 1)
            throw std::invalid_argument("field: modulus must have degree e");
        for (int c : modulus_)
            if (c < 0 || c >= p_) throw std::invalid_argument("field: modulus coefficient out of range");
        if (modulus_.back() != 1) throw std::invalid_argument("field: modulus must be monic");
        // Irreducibility by trial division: a reducible polynomial of degree e
        // has a monic factor of degree at most e/2.
        for (int d = 1; 2 * d <= e_; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (long long idx = 0; idx < count; ++idx) {
                std::vector<int> g(d + 1, 0);
                long long t = idx;
                for (int i = 0; i < d; ++i) {
                    g[i] = static_cast<int>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                if (detail::poly_rem(modulus_, g, static_cast<int>(p_)).empty())
                    throw std::invalid_argument("field: modulus is reducible");
            }
        }
    }

    long long p_ = 2;
    int e_ = 1;
    long long q_ = 2;
    std::vector<int> modulus_;  // empty for prime fields
};

}  // namespace pairweight
