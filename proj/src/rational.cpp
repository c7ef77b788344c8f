#include "tdg/rational.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace tdg {

Rational::Rational(long long n) {
    mpq_init(q_);
    mpz_set_si(mpq_numref(q_), n);
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    mpq_init(q_);
    mpz_set_si(mpq_numref(q_), num);
    mpz_set_si(mpq_denref(q_), den);
    if (den < 0) {
        mpz_neg(mpq_numref(q_), mpq_numref(q_));
        mpz_neg(mpq_denref(q_), mpq_denref(q_));
    }
    mpq_canonicalize(q_);
}

Rational Rational::from_string(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.q_, s.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0)
        throw std::domain_error("rational: zero denominator");
    if (mpz_sgn(mpq_denref(r.q_)) < 0) {
        mpz_neg(mpq_numref(r.q_), mpq_numref(r.q_));
        mpz_neg(mpq_denref(r.q_), mpq_denref(r.q_));
    }
    mpq_canonicalize(r.q_);
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    Rational r;
    mpq_div(r.q_, q_, o.q_);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
}

namespace {
std::string take_gmp_string(char* p) {
    std::string s(p);
    std::free(p);
    return s;
}
}  // namespace

std::string Rational::str() const {
    return take_gmp_string(mpq_get_str(nullptr, 10, q_));
}

std::string Rational::num_str() const {
    return take_gmp_string(mpz_get_str(nullptr, 10, mpq_numref(q_)));
}

std::string Rational::den_str() const {
    return take_gmp_string(mpz_get_str(nullptr, 10, mpq_denref(q_)));
}

bool Rational::fits_int64() const {
    return mpz_fits_slong_p(mpq_numref(q_)) && mpz_fits_slong_p(mpq_denref(q_));
}

long long Rational::num_int64() const { return mpz_get_si(mpq_numref(q_)); }
long long Rational::den_int64() const { return mpz_get_si(mpq_denref(q_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tdg
