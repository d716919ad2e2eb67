#ifndef GINIPART_TABLEAU_HPP
#define GINIPART_TABLEAU_HPP

#include <functional>
#include <vector>

#include "ginipart/bigint.hpp"
#include "ginipart/partition.hpp"

namespace ginipart {

// Filling of a Young diagram; row i holds shape.parts()[i] entries.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // Occurrence count of each letter 1..max entry.
    std::vector<long> weight() const;
    bool is_semistandard() const;
    bool is_standard() const;

    bool operator==(const Tableau& o) const { return rows == o.rows; }
};

struct Word {
    std::vector<int> letters;
};

// All semistandard tableaux of the given shape and weight, lexicographic by
// concatenated rows. Empty when no filling exists. Totals must agree.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& weight);

// Visitor form; used where materializing the list is wasteful.
void for_each_ssyt(const Partition& shape, const std::vector<long>& letter_counts,
                   const std::function<void(const Tableau&)>& visit);

// All semistandard tableaux with entries <= max_entry, any weight.
void for_each_ssyt_bounded_entries(const Partition& shape, int max_entry,
                                   const std::function<void(const Tableau&)>& visit);

// All standard tableaux of the shape (weight (1^n)).
std::vector<Tableau> enumerate_standard(const Partition& shape);

// Product of hook lengths over all boxes.
BigInt hook_product(const Partition& shape);

// n! / hook_product; equals the number of standard tableaux.
BigInt standard_count(const Partition& shape);

// Right to left within each row, rows top to bottom.
Word reading_word(const Tableau& t);

// Lascoux-Schutzenberger charge of a word whose letter multiplicities form a
// partition. Standard subwords are extracted by the cyclic first-occurrence
// scan; each subword contributes the sum of its wrap-around counts.
long charge(const Word& w);
long charge_tableau(const Tableau& t);

}  // namespace ginipart

#endif
