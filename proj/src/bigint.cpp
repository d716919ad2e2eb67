#include "ginipart/bigint.hpp"

#include <stdexcept>

namespace ginipart {

BigInt binomial(const BigInt& n, unsigned long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    BigInt result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
    return result;
}

BigInt factorial(unsigned long n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.value_ == 0) throw std::invalid_argument("BigRational: division by zero");
    return BigRational(mpq_class(value_ / o.value_));
}

std::string BigRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string BigRational::to_decimal(unsigned digits) const {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt num = value_.get_num() * scale;
    const BigInt den = value_.get_den();

    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // r is in [0, den); round half to even on the discarded fraction r/den.
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;

    const bool negative = q < 0;
    BigInt whole, frac;
    mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), q.get_mpz_t(), scale.get_mpz_t());
    if (negative && frac != 0) {
        // fdiv floors toward -inf; re-express as sign + magnitude.
        whole += 1;
        frac = scale - frac;
    }
    std::string head = whole.get_str();
    if (negative && whole == 0) head = "-0";
    if (digits == 0) return head;
    std::string tail = frac.get_str();
    if (tail.size() < digits) tail.insert(0, digits - tail.size(), '0');
    return head + "." + tail;
}

}  // namespace ginipart
