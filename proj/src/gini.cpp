#include "ginipart/gini.hpp"

#include <stdexcept>

namespace ginipart {

BigInt e2(const Partition& lam) {
    BigInt acc = binomial(BigInt(lam.total()), 2);
    for (long p : lam.parts()) acc -= binomial(BigInt(p), 2);
    return acc;
}

BigInt b_stat(const Partition& lam, long pad_to) {
    if (pad_to < 1) throw std::invalid_argument("b_stat: pad_to must be positive");
    if (static_cast<long>(lam.length()) > pad_to)
        throw std::invalid_argument("b_stat: partition has more than pad_to parts");
    BigInt acc = 0;
    const auto& parts = lam.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        acc += BigInt(static_cast<long>(i)) * parts[i];
    return acc;
}

BigInt gini(const Partition& lam) {
    const long n = lam.total();
    if (n == 0) return 0;
    return binomial(BigInt(n), 2) - b_stat(lam, n);
}

BigInt gini_nk(const Partition& lam, long n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("gini_nk: n and k must be positive");
    if (lam.total() != n * k)
        throw std::invalid_argument("gini_nk: partition total must equal n*k");
    if (static_cast<long>(lam.length()) > n)
        throw std::invalid_argument("gini_nk: partition has more than n parts");
    // b((k^n)) = k * C(n,2)
    const BigInt b_flat = BigInt(k) * binomial(BigInt(n), 2);
    return b_flat - b_stat(lam, n);
}

BigRational normalized_gini(const Partition& lam) {
    const long n = lam.total();
    if (n < 2) throw std::domain_error("normalized_gini: requires total >= 2");
    return BigRational(gini(lam), binomial(BigInt(n), 2));
}

BigInt LorenzSample::gap_area() const {
    BigInt acc = 0;
    for (const auto& pt : points) acc += pt.equality_y - pt.lorenz_y;
    return acc;
}

LorenzSample lorenz_points(const Partition& lam, long n, long k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lorenz_points: n and k must be positive");
    if (lam.total() != n * k)
        throw std::invalid_argument("lorenz_points: partition total must equal n*k");
    if (static_cast<long>(lam.length()) > n)
        throw std::invalid_argument("lorenz_points: partition has more than n parts");

    LorenzSample sample;
    sample.population = n;
    sample.total = n * k;
    sample.points.reserve(static_cast<std::size_t>(n) + 1);
    BigInt cum = 0;
    sample.points.push_back({0, BigInt(0), BigInt(0)});
    for (long j = 1; j <= n; ++j) {
        cum += lam.part(static_cast<std::size_t>(n - j));  // poorest first
        sample.points.push_back({j, BigInt(k) * j, cum});
    }
    return sample;
}

}  // namespace ginipart
