// Exact rational arithmetic on top of GMP's mpq layer.
//
// Invariants: always reduced to lowest terms, denominator > 0 (both are
// maintained by mpq_canonicalize and preserved by every mpq_* operation).
// No floating point anywhere; everything downstream relies on exactness.
#pragma once

#include <gmp.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ohtsuki {

class Rational {
public:
    Rational() { mpq_init(q_); }

    Rational(long n) {
        mpq_init(q_);
        mpq_set_si(q_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        mpq_init(q_);
        mpq_set_si(q_, num, den);
        mpq_canonicalize(q_);
    }

    // Accepts "p", "p/q" and an optional leading sign, base 10.
    explicit Rational(std::string_view s) {
        mpq_init(q_);
        std::string buf(s);
        if (buf.empty() || mpq_set_str(q_, buf.c_str(), 10) != 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: cannot parse '" + buf + "'");
        }
        if (mpz_sgn(mpq_denref(q_)) == 0) {
            mpq_clear(q_);
            throw std::invalid_argument("Rational: zero denominator in '" + buf + "'");
        }
        mpq_canonicalize(q_);
    }

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    static Rational from_factorial(unsigned long n) {
        Rational r;
        mpz_fac_ui(mpq_numref(r.q_), n);
        return r;
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        Rational r;
        mpz_bin_uiui(mpq_numref(r.q_), n, k);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(q_, q_, o.q_);
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_, b.q_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return mpq_cmp(a.q_, b.q_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
            return Rational(0);
        }
        Rational base = e > 0 ? *this : Rational(1) / *this;
        unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                                : static_cast<unsigned long>(-e);
        Rational r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
        return r;
    }

    // True iff the value is an integer multiple of m.
    bool divisible_by(long m) const {
        if (!is_integer()) return false;
        if (m == 0) return is_zero();
        return mpz_divisible_ui_p(mpq_numref(q_), static_cast<unsigned long>(m < 0 ? -m : m)) != 0;
    }

    // Prime factors of the denominator, sorted ascending (trial division;
    // the denominators met here are small by the divisibility theorems).
    std::vector<unsigned long> denominator_prime_factors() const {
        std::vector<unsigned long> out;
        mpz_t d;
        mpz_init_set(d, mpq_denref(q_));
        for (unsigned long p = 2; mpz_cmp_ui(d, 1) > 0; p += (p == 2 ? 1 : 2)) {
            if (mpz_divisible_ui_p(d, p)) {
                out.push_back(p);
                while (mpz_divisible_ui_p(d, p)) mpz_divexact_ui(d, d, p);
            }
            if (p > 2 && mpz_cmp_ui(d, p * p) < 0 && mpz_cmp_ui(d, 1) > 0) {
                out.push_back(mpz_get_ui(d));
                break;
            }
        }
        mpz_clear(d);
        return out;
    }

    // Value mod r for odd prime r; requires gcd(denominator, r) = 1.
    unsigned long mod(unsigned long r) const {
        mpz_t num, den, inv, rr, res;
        mpz_inits(num, den, inv, rr, res, nullptr);
        mpz_set_ui(rr, r);
        mpz_mod(num, mpq_numref(q_), rr);
        mpz_mod(den, mpq_denref(q_), rr);
        if (mpz_invert(inv, den, rr) == 0) {
            mpz_clears(num, den, inv, rr, res, nullptr);
            throw std::domain_error("Rational: denominator not invertible mod r");
        }
        mpz_mul(res, num, inv);
        mpz_mod(res, res, rr);
        unsigned long v = mpz_get_ui(res);
        mpz_clears(num, den, inv, rr, res, nullptr);
        return v;
    }

    long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        if (!mpz_fits_slong_p(mpq_numref(q_)))
            throw std::overflow_error("Rational: integer too large for long");
        return mpz_get_si(mpq_numref(q_));
    }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpq_t q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }

}  // namespace ohtsuki
