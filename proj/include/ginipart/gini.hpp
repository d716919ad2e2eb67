#ifndef GINIPART_GINI_HPP
#define GINIPART_GINI_HPP

#include <vector>

#include "ginipart/bigint.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

// Second elementary symmetric polynomial of the parts, via the closed form
// C(n,2) - sum C(lam_i, 2) with n the total.
BigInt e2(const Partition& lam);

// b(lam) = sum (i-1) * lam_i over the length-pad_to zero-padded view.
// Padding never changes the value; a partition longer than pad_to is an error.
BigInt b_stat(const Partition& lam, long pad_to);

// Discrete Gini index g(lam) = C(n,2) - b(lam), n = lam.total().
BigInt gini(const Partition& lam);

// Generalized index g_{nk,n}(lam) = b((k^n)) - b(lam) for lam a partition of
// n*k with at most n parts. Restricts to gini when k = 1.
BigInt gini_nk(const Partition& lam, long n, long k);

// g(lam) / C(n,2), exact, in [0,1]. Requires n >= 2.
BigRational normalized_gini(const Partition& lam);

// Breakpoints of the Lorenz step curve together with the line of equality
// y = k*ceil(x). Step heights are the reversed parts of the padded partition,
// so lorenz_y accumulates from the poorest up.
struct LorenzPoint {
    long x;
    BigInt equality_y;
    BigInt lorenz_y;
};

struct LorenzSample {
    long population;  // n
    long total;       // n*k
    std::vector<LorenzPoint> points;  // x = 0..n

    // Sum of unit-width gaps; equals gini_nk exactly.
    BigInt gap_area() const;
};

LorenzSample lorenz_points(const Partition& lam, long n, long k);

}  // namespace ginipart

#endif
