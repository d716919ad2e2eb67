#ifndef GINIPART_INT_POLYNOMIAL_HPP
#define GINIPART_INT_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ginipart/bigint.hpp"

namespace ginipart {

// Dense univariate polynomial over arbitrary-precision integers. The
// indeterminate is written t or q depending on context; index = exponent.
// Canonical form stores no trailing zero coefficient, so the zero polynomial
// has an empty coefficient vector and no degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(const BigInt& c);
    // c * t^k
    static IntPolynomial monomial(const BigInt& c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is "none", not -1: the downstream
    // representation-theoretic convention treats it as -infinity.
    std::optional<std::size_t> degree() const;
    const BigInt& coefficient(std::size_t k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    BigInt leading_coefficient() const;
    BigInt max_coefficient() const;

    void add_term(const BigInt& c, std::size_t k);

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return coeffs_ != o.coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    // Human-readable form with descending exponents, e.g. "t^4 + t^3 + t^2".
    std::string pretty(const std::string& var = "t") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

}  // namespace ginipart

#endif
