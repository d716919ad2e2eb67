#include "ginipart/kostka.hpp"

#include <stdexcept>

#include "ginipart/tableau.hpp"

namespace ginipart {

BigInt kostka_number(const Partition& shape, const Partition& weight) {
    if (shape.total() != weight.total())
        throw std::invalid_argument("kostka_number: shape and weight totals differ");
    BigInt count = 0;
    std::vector<long> counts(weight.parts().begin(), weight.parts().end());
    for_each_ssyt(shape, counts, [&](const Tableau&) { ++count; });
    return count;
}

IntPolynomial kostka_foulkes(const Partition& shape, const Partition& weight) {
    if (shape.total() != weight.total())
        throw std::invalid_argument("kostka_foulkes: shape and weight totals differ");
    IntPolynomial poly;
    std::vector<long> counts(weight.parts().begin(), weight.parts().end());
    for_each_ssyt(shape, counts, [&](const Tableau& t) {
        poly.add_term(1, static_cast<std::size_t>(charge_tableau(t)));
    });
    return poly;
}

}  // namespace ginipart
