// Laurent polynomials with half-integer exponents and exact rational
// coefficients.  Exponents are stored as integer counts of half-units, so
// t^(k/2) is representable exactly with no radical type.  The same container
// serves every polynomial variable in the library (t, A, z, x); which
// variable is meant, and whether half-steps are in use, is up to the caller.
//
// Invariant: no zero coefficient is ever stored.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ohtsuki/rational.hpp"

namespace ohtsuki {

class HalfLaurent {
public:
    // exponent in half-units -> coefficient
    using Map = std::map<std::int64_t, Rational>;

    HalfLaurent() = default;

    static HalfLaurent constant(Rational c) {
        HalfLaurent p;
        p.set(0, std::move(c));
        return p;
    }
    static HalfLaurent one() { return constant(Rational(1)); }

    // c * t^(half/2)
    static HalfLaurent monomial(Rational c, std::int64_t half) {
        HalfLaurent p;
        p.set(half, std::move(c));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const Map& terms() const { return c_; }

    Rational coeff(std::int64_t half) const {
        auto it = c_.find(half);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void set(std::int64_t half, Rational v) {
        if (v.is_zero())
            c_.erase(half);
        else
            c_[half] = std::move(v);
    }

    void add_term(std::int64_t half, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = c_.emplace(half, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    std::int64_t min_exponent() const {
        if (c_.empty()) throw std::domain_error("HalfLaurent: zero polynomial has no exponents");
        return c_.begin()->first;
    }
    std::int64_t max_exponent() const {
        if (c_.empty()) throw std::domain_error("HalfLaurent: zero polynomial has no exponents");
        return c_.rbegin()->first;
    }

    friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (const auto& [e, v] : b.c_) r.add_term(e, v);
        return r;
    }
    friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r = a;
        for (const auto& [e, v] : b.c_) r.add_term(e, -v);
        return r;
    }
    HalfLaurent operator-() const {
        HalfLaurent r;
        for (const auto& [e, v] : c_) r.c_.emplace(e, -v);
        return r;
    }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
        HalfLaurent r;
        for (const auto& [ea, va] : a.c_)
            for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }
    HalfLaurent& operator+=(const HalfLaurent& o) {
        for (const auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    HalfLaurent& operator-=(const HalfLaurent& o) {
        for (const auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

    friend HalfLaurent operator*(const Rational& s, const HalfLaurent& p) {
        HalfLaurent r;
        if (s.is_zero()) return r;
        for (const auto& [e, v] : p.c_) r.c_.emplace(e, s * v);
        return r;
    }

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    // multiply by t^(half/2)
    HalfLaurent shifted(std::int64_t half) const {
        HalfLaurent r;
        for (const auto& [e, v] : c_) r.c_.emplace(e + half, v);
        return r;
    }

    // t -> t^{-1}
    HalfLaurent inverted_variable() const {
        HalfLaurent r;
        for (const auto& [e, v] : c_) r.c_.emplace(-e, v);
        return r;
    }

    HalfLaurent pow(unsigned n) const {
        HalfLaurent r = one();
        HalfLaurent base = *this;
        while (n) {
            if (n & 1) r *= base;
            base *= base;
            n >>= 1;
        }
        return r;
    }

    // substitute t -> value of another polynomial (used for F_{i,l}(t^{1/2}+t^{-1/2});
    // requires all exponents of *this to be integral, i.e. even half-counts).
    HalfLaurent substitute(const HalfLaurent& x) const {
        HalfLaurent r;
        for (const auto& [e, v] : c_) {
            if (e % 2 != 0) throw std::domain_error("HalfLaurent: substitute needs integer exponents");
            std::int64_t k = e / 2;
            if (k < 0) throw std::domain_error("HalfLaurent: substitute needs nonnegative exponents");
            r += v * x.pow(static_cast<unsigned>(k));
        }
        return r;
    }

    // formal d/dx, for integer-exponent polynomials (exponents in full units)
    HalfLaurent derivative() const {
        HalfLaurent r;
        for (const auto& [e, v] : c_) {
            if (e % 2 != 0) throw std::domain_error("HalfLaurent: derivative needs integer exponents");
            if (e == 0) continue;
            r.c_.emplace(e - 2, Rational(e / 2) * v);
        }
        return r;
    }

    // value at t = 1 (sum of coefficients)
    Rational eval_at_one() const {
        Rational s(0);
        for (const auto& [e, v] : c_) s += v;
        return s;
    }

    // Exact polynomial division; throws if the division is not exact.
    // If q*den = num then min(q) = min(num) - min(den); a quotient term
    // below that bound proves inexactness and stops the loop.
    friend HalfLaurent exact_div(HalfLaurent num, const HalfLaurent& den) {
        if (den.is_zero()) throw std::domain_error("HalfLaurent: division by zero polynomial");
        if (num.is_zero()) return HalfLaurent();
        HalfLaurent q;
        const std::int64_t dtop = den.max_exponent();
        const Rational dlead = den.coeff(dtop);
        const std::int64_t sh_min = num.min_exponent() - den.min_exponent();
        while (!num.is_zero()) {
            std::int64_t sh = num.max_exponent() - dtop;
            if (sh < sh_min) throw std::domain_error("HalfLaurent: inexact division");
            Rational f = num.coeff(num.max_exponent()) / dlead;
            q.add_term(sh, f);
            for (const auto& [e, v] : den.c_) num.add_term(e + sh, -(f * v));
        }
        return q;
    }

    // Human/JSON-friendly form: map from exponent string ("3", "-1/2") to
    // coefficient string ("p/q").  Deterministic (ascending exponent).
    std::map<std::string, std::string> exponent_map() const {
        std::map<std::string, std::string> out;
        for (const auto& [e, v] : c_) out.emplace(half_exponent_str(e), v.str());
        return out;
    }

    static std::string half_exponent_str(std::int64_t half) {
        if (half % 2 == 0) return std::to_string(half / 2);
        return std::to_string(half) + "/2";
    }

    // Compact single-line rendering, ascending exponents: "c*t^e + ..."
    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [e, v] : c_) {
            if (!out.empty()) out += " + ";
            out += v.str();
            if (e != 0) out += "*" + var + "^" + half_exponent_str(e);
        }
        return out;
    }

private:
    Map c_;
};

}  // namespace ohtsuki
