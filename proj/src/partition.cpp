#include "ginipart/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginipart {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        total_ += parts_[i];
    }
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return Partition();
    std::vector<long> cols(static_cast<std::size_t>(lam.parts()[0]), 0);
    for (long p : lam.parts())
        for (long j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool dominates(const Partition& lam, const Partition& mu) {
    if (lam.total() != mu.total())
        throw std::invalid_argument("dominates: partitions of different totals");
    const std::size_t len = std::max(lam.length(), mu.length());
    long a = 0, b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += lam.part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

bool covers(const Partition& lam, const Partition& mu) {
    if (lam.total() != mu.total())
        throw std::invalid_argument("covers: partitions of different totals");
    // lam must equal mu except for one box moved from row k to row i < k.
    const std::size_t len = std::max(lam.length(), mu.length());
    std::size_t i = len, k = len;
    for (std::size_t r = 0; r < len; ++r) {
        const long d = lam.part(r) - mu.part(r);
        if (d == 0) continue;
        if (d == 1 && i == len)
            i = r;
        else if (d == -1 && i != len && k == len)
            k = r;
        else
            return false;
    }
    if (i == len || k == len) return false;
    return k == i + 1 || mu.part(i) == mu.part(k);
}

namespace {

void emit_partitions(long remaining, long max_part, long parts_left,
                     std::vector<long>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (parts_left == 0) return;
    for (long p = std::min(max_part, remaining); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, parts_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    return enumerate_partitions_bounded(n, n == 0 ? 1 : n);
}

std::vector<Partition> enumerate_partitions_bounded(long total, long max_parts) {
    if (total < 0) throw std::invalid_argument("enumerate_partitions_bounded: negative total");
    if (max_parts < 1) throw std::invalid_argument("enumerate_partitions_bounded: max_parts < 1");
    std::vector<Partition> out;
    std::vector<long> prefix;
    emit_partitions(total, total, max_parts, prefix, out);
    return out;
}

std::vector<BigInt> partition_count_table(long n) {
    if (n < 0) throw std::invalid_argument("partition_count_table: negative n");
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (long m = 1; m <= n; ++m) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const BigInt term1 = p[static_cast<std::size_t>(m - g1)];
            const BigInt term2 = (g2 <= m) ? p[static_cast<std::size_t>(m - g2)] : BigInt(0);
            if (k % 2 == 1)
                acc += term1 + term2;
            else
                acc -= term1 + term2;
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

BigInt partition_count(long n) {
    return partition_count_table(n).back();
}

}  // namespace ginipart
