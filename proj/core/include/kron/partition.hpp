#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kron/errors.hpp"

namespace kron {

/* An integer partition: a weakly decreasing sequence of positive parts.
 * Immutable value type; the empty partition (of 0) is first class.
 * Text form: comma-separated parts, "3,3,3"; the empty partition is "-".
 */
class partition {
  public:
    partition() = default;
    explicit partition(std::vector<int> parts);

    static partition parse(std::string_view text);
    std::string str() const;

    int sum() const { return sum_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // 0-based part access; rows past the end read as 0.
    int operator[](int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    friend bool operator==(const partition&, const partition&) = default;

  private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// A (possibly zero-containing, non-monotone) sequence of nonnegative entries.
// Used for tableau content/type vectors, never as a shape.
struct composition {
    std::vector<int> entries;

    friend bool operator==(const composition&, const composition&) = default;
};

// Transpose of the Young diagram: result[j] = #{ i : p[i] >= j+1 }.
partition conjugate(const partition& p);

// Containment of Young diagrams: inner fits inside outer row by row.
bool contains(const partition& outer, const partition& inner);

// (m^t): t rows of length m.
partition make_rectangle(int m, int t);

// (n-d, 1^d). Throws query_error unless 0 <= d <= n-1.
partition make_hook(int n, int d);

// Insert an extra part m and re-sort: nu becomes nu-tilde.
partition add_row_sorted(const partition& nu, int m);

// All partitions of n meeting the optional bounds, in reverse-lexicographic
// order: (n) first, (1^n) last. Deterministic; n = 0 yields only {}.
std::vector<partition> partitions_of(int n,
                                     std::optional<int> max_length = std::nullopt,
                                     std::optional<int> max_part = std::nullopt);

// Centralizer order z_mu = prod_k k^{m_k} m_k! over part multiplicities m_k.
long long z_of(const partition& mu);

long long factorial(int n);

// Listing order used everywhere partitions are iterated or serialized:
// a precedes b iff a is lexicographically larger part-by-part (missing = 0).
// Matches the partitions_of enumeration order.
struct partition_listing_order {
    bool operator()(const partition& a, const partition& b) const {
        const int len = std::max(a.length(), b.length());
        for (int i = 0; i < len; ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

}  // namespace kron
