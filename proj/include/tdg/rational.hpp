#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace tdg {

// Exact rational scalar. Canonical form is maintained at all times:
// denominator > 0 and gcd(|numerator|, denominator) == 1.
// All utility values, distance factors and potential values in the engine
// are Rationals; comparisons are exact, nothing is ever rounded.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(long long n);
    Rational(long long num, long long den);  // throws std::domain_error if den == 0

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // Parses "p" or "p/q" in base 10. Throws std::invalid_argument on junk,
    // std::domain_error on zero denominator.
    static Rational from_string(const std::string& s);

    Rational operator+(const Rational& o) const {
        Rational r;
        mpq_add(r.q_, q_, o.q_);
        return r;
    }
    Rational operator-(const Rational& o) const {
        Rational r;
        mpq_sub(r.q_, q_, o.q_);
        return r;
    }
    Rational operator*(const Rational& o) const {
        Rational r;
        mpq_mul(r.q_, q_, o.q_);
        return r;
    }
    Rational operator/(const Rational& o) const;  // throws std::domain_error on /0
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
    Rational& operator/=(const Rational& o);

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    std::strong_ordering operator<=>(const Rational& o) const {
        int c = mpq_cmp(q_, o.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool positive() const { return sign() > 0; }
    bool negative() const { return sign() < 0; }

    // "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const;
    std::string num_str() const;
    std::string den_str() const;

    bool fits_int64() const;
    long long num_int64() const;  // only valid when fits_int64()
    long long den_int64() const;

private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tdg
