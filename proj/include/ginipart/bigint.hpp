#ifndef GINIPART_BIGINT_HPP
#define GINIPART_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace ginipart {

// Arbitrary-precision integer. All counting statistics in this library are
// exact; GMP supplies the arithmetic behind this alias.
using BigInt = mpz_class;

BigInt binomial(const BigInt& n, unsigned long k);
BigInt factorial(unsigned long n);

// Exact rational with canonical form: den > 0, gcd(num, den) = 1.
class BigRational {
public:
    BigRational() : value_(0) {}
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const BigInt& num) : value_(num) {}
    BigRational(long num, long den);
    explicit BigRational(long num) : value_(num) {}

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    BigRational operator+(const BigRational& o) const { return BigRational(value_ + o.value_); }
    BigRational operator-(const BigRational& o) const { return BigRational(value_ - o.value_); }
    BigRational operator*(const BigRational& o) const { return BigRational(value_ * o.value_); }
    BigRational operator/(const BigRational& o) const;
    BigRational operator-() const { return BigRational(-value_); }
    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }

    bool operator==(const BigRational& o) const { return value_ == o.value_; }
    bool operator!=(const BigRational& o) const { return value_ != o.value_; }
    bool operator<(const BigRational& o) const { return value_ < o.value_; }
    bool operator<=(const BigRational& o) const { return value_ <= o.value_; }
    bool operator>(const BigRational& o) const { return value_ > o.value_; }
    bool operator>=(const BigRational& o) const { return value_ >= o.value_; }

    // "num/den" ("num" alone when den = 1).
    std::string to_string() const;

    // Fixed-point decimal with the given number of fractional digits,
    // rounded half to even. Exact formatting, no floating point involved.
    std::string to_decimal(unsigned digits) const;

private:
    explicit BigRational(const mpq_class& v) : value_(v) {}
    mpq_class value_;
};

}  // namespace ginipart

#endif
