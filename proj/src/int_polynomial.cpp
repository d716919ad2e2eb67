#include "ginipart/int_polynomial.hpp"

#include <stdexcept>

namespace ginipart {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) {
    return monomial(c, 0);
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
    IntPolynomial p;
    p.add_term(c, k);
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const BigInt& IntPolynomial::coefficient(std::size_t k) const {
    if (k >= coeffs_.size()) return kZero;
    return coeffs_[k];
}

BigInt IntPolynomial::leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("leading_coefficient of zero polynomial");
    return coeffs_.back();
}

BigInt IntPolynomial::max_coefficient() const {
    BigInt best = 0;
    for (const auto& c : coeffs_)
        if (c > best) best = c;
    return best;
}

void IntPolynomial::add_term(const BigInt& c, std::size_t k) {
    if (c == 0) return;
    if (k >= coeffs_.size()) coeffs_.resize(k + 1, 0);
    coeffs_[k] += c;
    trim();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    r += o;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    IntPolynomial r = *this;
    if (o.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    IntPolynomial r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::pretty(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        const bool unit = (mag == 1);
        if (!unit || k == 0) out += mag.get_str();
        if (k > 0) {
            if (!unit) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace ginipart
