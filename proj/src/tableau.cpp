#include "ginipart/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginipart {

std::vector<long> Tableau::weight() const {
    std::vector<long> counts;
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1) throw std::invalid_argument("Tableau: entries must be positive");
            if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
            ++counts[static_cast<std::size_t>(v) - 1];
        }
    return counts;
}

bool Tableau::is_semistandard() const {
    if (rows.size() != shape.length()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<long>(rows[i].size()) != shape.part(i)) return false;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] < 1) return false;
            if (j > 0 && rows[i][j] < rows[i][j - 1]) return false;            // weak in rows
            if (i > 0 && j < rows[i - 1].size() && rows[i][j] <= rows[i - 1][j])
                return false;                                                  // strict in columns
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    for (long c : weight())
        if (c != 1) return false;
    return true;
}

namespace {

struct SsytSearch {
    const Partition* shape;
    int max_entry;
    std::vector<long> remaining;  // per letter, or empty for unconstrained
    Tableau work;
    const std::function<void(const Tableau&)>* visit;

    void fill(std::size_t row, std::size_t col) {
        if (row == shape->length()) {
            (*visit)(work);
            return;
        }
        const std::size_t row_len = static_cast<std::size_t>(shape->part(row));
        std::size_t next_row = row, next_col = col + 1;
        if (next_col == row_len) {
            next_row = row + 1;
            next_col = 0;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, work.rows[row][col - 1]);
        if (row > 0 && col < work.rows[row - 1].size())
            lo = std::max(lo, work.rows[row - 1][col] + 1);
        // One column has at most max_entry boxes with strictly increasing
        // entries, so entry >= row+1 always; this prunes tall shapes early.
        lo = std::max(lo, static_cast<int>(row) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            if (!remaining.empty()) {
                long& left = remaining[static_cast<std::size_t>(v) - 1];
                if (left == 0) continue;
                --left;
                work.rows[row].push_back(v);
                fill(next_row, next_col);
                work.rows[row].pop_back();
                ++left;
            } else {
                work.rows[row].push_back(v);
                fill(next_row, next_col);
                work.rows[row].pop_back();
            }
        }
    }
};

}  // namespace

void for_each_ssyt(const Partition& shape, const std::vector<long>& letter_counts,
                   const std::function<void(const Tableau&)>& visit) {
    long total = 0;
    for (long c : letter_counts) {
        if (c < 0) throw std::invalid_argument("for_each_ssyt: negative letter count");
        total += c;
    }
    if (total != shape.total())
        throw std::invalid_argument("for_each_ssyt: shape and weight totals differ");
    if (shape.empty()) {
        visit(Tableau{shape, {}});
        return;
    }
    SsytSearch s;
    s.shape = &shape;
    s.max_entry = static_cast<int>(letter_counts.size());
    s.remaining = letter_counts;
    s.work.shape = shape;
    s.work.rows.assign(shape.length(), {});
    for (auto& row : s.work.rows) row.reserve(static_cast<std::size_t>(shape.part(0)));
    s.visit = &visit;
    s.fill(0, 0);
}

void for_each_ssyt_bounded_entries(const Partition& shape, int max_entry,
                                   const std::function<void(const Tableau&)>& visit) {
    if (max_entry < 0) throw std::invalid_argument("for_each_ssyt_bounded_entries: negative bound");
    if (shape.empty()) {
        visit(Tableau{shape, {}});
        return;
    }
    SsytSearch s;
    s.shape = &shape;
    s.max_entry = max_entry;
    s.work.shape = shape;
    s.work.rows.assign(shape.length(), {});
    s.visit = &visit;
    s.fill(0, 0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& weight) {
    if (shape.total() != weight.total())
        throw std::invalid_argument("enumerate_ssyt: shape and weight totals differ");
    std::vector<long> counts(weight.parts().begin(), weight.parts().end());
    std::vector<Tableau> out;
    for_each_ssyt(shape, counts, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_standard(const Partition& shape) {
    std::vector<long> counts(static_cast<std::size_t>(shape.total()), 1);
    std::vector<Tableau> out;
    for_each_ssyt(shape, counts, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

BigInt hook_product(const Partition& shape) {
    const Partition conj = conjugate(shape);
    BigInt acc = 1;
    for (std::size_t i = 0; i < shape.length(); ++i)
        for (long j = 0; j < shape.part(i); ++j) {
            const long arm = shape.part(i) - j - 1;
            const long leg = conj.part(static_cast<std::size_t>(j)) - static_cast<long>(i) - 1;
            acc *= arm + leg + 1;
        }
    return acc;
}

BigInt standard_count(const Partition& shape) {
    if (shape.empty()) return 1;
    const BigInt hooks = hook_product(shape);
    BigInt f = factorial(static_cast<unsigned long>(shape.total()));
    if (!mpz_divisible_p(f.get_mpz_t(), hooks.get_mpz_t()))
        throw std::logic_error("standard_count: hook product does not divide n!");
    return f / hooks;
}

Word reading_word(const Tableau& t) {
    Word w;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.letters.push_back(*it);
    return w;
}

namespace {

// Charge of a standard word (a permutation of 1..m): the letter 1 gets
// subscript 0, and each next letter's subscript grows by one exactly when the
// scan has to wrap to reach it.
long standard_word_charge(const std::vector<int>& word) {
    const int m = static_cast<int>(word.size());
    std::vector<std::size_t> pos(static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < word.size(); ++i) pos[static_cast<std::size_t>(word[i])] = i;
    long total = 0, subscript = 0;
    for (int v = 2; v <= m; ++v) {
        if (pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v - 1)]) ++subscript;
        total += subscript;
    }
    return total;
}

}  // namespace

long charge(const Word& w) {
    // Multiplicities must form a partition (weakly decreasing counts of
    // 1..max); this guarantees every cyclic scan below finds its letter.
    std::vector<long> counts;
    for (int v : w.letters) {
        if (v < 1) throw std::invalid_argument("charge: letters must be positive");
        if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
        ++counts[static_cast<std::size_t>(v) - 1];
    }
    for (std::size_t i = 0; i + 1 < counts.size(); ++i)
        if (counts[i] < counts[i + 1])
            throw std::invalid_argument("charge: letter multiplicities are not a partition");

    std::vector<int> rest = w.letters;
    long total = 0;
    while (!rest.empty()) {
        const int max_letter = *std::max_element(rest.begin(), rest.end());
        std::vector<char> taken(rest.size(), 0);
        // Leftmost 1, then cyclically the first occurrence of each next letter.
        std::size_t cur = 0;
        while (rest[cur] != 1) ++cur;
        taken[cur] = 1;
        for (int v = 2; v <= max_letter; ++v) {
            std::size_t idx = rest.size();
            for (std::size_t i = cur + 1; i < rest.size(); ++i)
                if (!taken[i] && rest[i] == v) {
                    idx = i;
                    break;
                }
            if (idx == rest.size())
                for (std::size_t i = 0; i < cur; ++i)
                    if (!taken[i] && rest[i] == v) {
                        idx = i;
                        break;
                    }
            if (idx == rest.size())
                throw std::logic_error("charge: scan failed to find a letter");
            taken[idx] = 1;
            cur = idx;
        }
        std::vector<int> subword, leftover;
        for (std::size_t i = 0; i < rest.size(); ++i)
            (taken[i] ? subword : leftover).push_back(rest[i]);
        total += standard_word_charge(subword);
        rest = std::move(leftover);
    }
    return total;
}

long charge_tableau(const Tableau& t) {
    return charge(reading_word(t));
}

}  // namespace ginipart
