#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "sml/errors.hpp"

namespace sml {

/// Exact rational number. Always canonical: lowest terms, positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rat(long num, long den) {
        if (den == 0) throw ParseError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "p/q" or a bare integer "p".
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                mpq_class q(mpz_class(s), 1);
                return Rat(std::move(q));
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw ParseError("rational with zero denominator: " + s);
            mpq_class q(num, den);
            return Rat(std::move(q));
        } catch (const std::invalid_argument&) {
            throw ParseError("not a rational: \"" + s + "\"");
        }
    }

    const mpq_class& raw() const { return q_; }
    mpq_class& raw() { return q_; }

    int sgn() const { return ::sgn(q_); }
    bool is_zero() const { return sgn() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Numerator as long; only valid for values that fit.
    long num_long() const { return mpz_get_si(q_.get_num_mpz_t()); }
    long den_long() const { return mpz_get_si(q_.get_den_mpz_t()); }

    double to_double() const { return q_.get_d(); }

    /// Canonical text form, always with an explicit denominator: "p/q".
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

inline Rat abs(const Rat& a) { return a.sgn() < 0 ? -a : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// 2^e for e in Z (negative exponents give exact dyadic fractions).
inline Rat pow2(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rat(mpq_class(p, 1)) : Rat(mpq_class(1, p));
}

/// Exact rational extended with +infinity. Infinity absorbs addition and
/// dominates every finite value in comparisons.
class RatX {
public:
    RatX() : inf_(false), r_(0) {}
    RatX(Rat r) : inf_(false), r_(std::move(r)) {} // NOLINT
    RatX(long n) : inf_(false), r_(n) {}           // NOLINT
    static RatX inf() {
        RatX x;
        x.inf_ = true;
        return x;
    }

    bool is_inf() const { return inf_; }
    bool is_finite() const { return !inf_; }
    const Rat& finite() const {
        if (inf_) throw Error("infinite value where a finite one is required");
        return r_;
    }
    bool is_integer() const { return !inf_ && r_.is_integer(); }
    bool is_zero() const { return !inf_ && r_.is_zero(); }

    std::string str() const { return inf_ ? "inf" : r_.str(); }

    /// "p/q", "p", or "inf".
    static RatX from_string(const std::string& s) {
        if (s == "inf") return inf();
        return RatX(Rat::from_string(s));
    }

    friend RatX operator+(const RatX& a, const RatX& b) {
        if (a.inf_ || b.inf_) return inf();
        return RatX(a.r_ + b.r_);
    }
    friend bool operator==(const RatX& a, const RatX& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.r_ == b.r_;
    }
    friend bool operator!=(const RatX& a, const RatX& b) { return !(a == b); }
    friend bool operator<(const RatX& a, const RatX& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.r_ < b.r_;
    }
    friend bool operator<=(const RatX& a, const RatX& b) { return !(b < a); }
    friend bool operator>(const RatX& a, const RatX& b) { return b < a; }
    friend bool operator>=(const RatX& a, const RatX& b) { return !(a < b); }

private:
    bool inf_;
    Rat r_;
};

} // namespace sml
