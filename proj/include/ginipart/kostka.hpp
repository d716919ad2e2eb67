#ifndef GINIPART_KOSTKA_HPP
#define GINIPART_KOSTKA_HPP

#include "ginipart/int_polynomial.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

// Number of semistandard tableaux of the given shape and weight.
BigInt kostka_number(const Partition& shape, const Partition& weight);

// Kostka-Foulkes polynomial: sum of t^charge(T) over SSYT(shape, weight).
// Zero polynomial when the shape does not dominate the weight; otherwise
// monic of degree b(weight) - b(shape).
IntPolynomial kostka_foulkes(const Partition& shape, const Partition& weight);

}  // namespace ginipart

#endif
