#include "kron/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kron {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw structural_error("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw structural_error("partition parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

partition partition::parse(std::string_view text) {
    if (text == "-" || text.empty()) return partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw query_error("cannot parse partition part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return partition(std::move(parts));
}

std::string partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

partition conjugate(const partition& p) {
    std::vector<int> cols(static_cast<size_t>(p[0]), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) ++cols[static_cast<size_t>(j)];
    return partition(std::move(cols));
}

bool contains(const partition& outer, const partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (outer[i] < inner[i]) return false;
    return true;
}

partition make_rectangle(int m, int t) {
    if (m < 1 || t < 1) throw query_error("rectangle needs m >= 1 and t >= 1");
    return partition(std::vector<int>(static_cast<size_t>(t), m));
}

partition make_hook(int n, int d) {
    if (n < 1 || d < 0 || d >= n)
        throw query_error("hook (n-d,1^d) needs 0 <= d <= n-1");
    std::vector<int> parts;
    parts.reserve(static_cast<size_t>(d) + 1);
    parts.push_back(n - d);
    parts.insert(parts.end(), static_cast<size_t>(d), 1);
    return partition(std::move(parts));
}

partition add_row_sorted(const partition& nu, int m) {
    if (m < 1) throw query_error("added row length must be positive");
    std::vector<int> parts = nu.parts();
    parts.insert(std::upper_bound(parts.begin(), parts.end(), m,
                                  [](int a, int b) { return a > b; }),
                 m);
    return partition(std::move(parts));
}

namespace {

void emit_partitions(int n, int max_len, int max_part, std::vector<int>& stack,
                     std::vector<partition>& out) {
    if (n == 0) {
        out.push_back(partition(stack));
        return;
    }
    if (max_len == 0) return;
    int hi = std::min(n, max_part);
    // Largest next part first gives reverse-lexicographic output order.
    for (int k = hi; k >= 1; --k) {
        if (static_cast<long long>(k) * max_len < n) break;
        stack.push_back(k);
        emit_partitions(n - k, max_len - 1, k, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<partition> partitions_of(int n, std::optional<int> max_length,
                                     std::optional<int> max_part) {
    if (n < 0) throw query_error("partitions_of needs n >= 0");
    std::vector<partition> out;
    std::vector<int> stack;
    emit_partitions(n, max_length.value_or(n), std::min(max_part.value_or(n), n),
                    stack, out);
    if (n == 0) out.assign(1, partition{});
    return out;
}

long long z_of(const partition& mu) {
    // k^{m_k} m_k! = prod_{j=1..m_k} (k*j), taken over runs of equal parts.
    long long z = 1;
    int i = 0;
    while (i < mu.length()) {
        const int k = mu[i];
        int mult = 0;
        while (i < mu.length() && mu[i] == k) {
            ++mult;
            ++i;
        }
        for (int j = 1; j <= mult; ++j) z *= static_cast<long long>(k) * j;
    }
    return z;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace kron
