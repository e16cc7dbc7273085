#pragma once

// Test-only helpers: fixture loading plus brute-force reference
// implementations, kept independent of the library code paths they check.

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kron/blasiak.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

#ifndef KRON_FIXTURES_DIR
#define KRON_FIXTURES_DIR "fixtures"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(KRON_FIXTURES_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline kron::colored_tableau fixture_tableau(const std::string& name,
                                             kron::order tag) {
    return kron::parse_tableau(fixture_text(name), tag);
}

// Standard Young tableaux counted by direct placement of 1..n into row ends.
inline long long count_syt(const kron::partition& shape) {
    std::vector<int> rows(static_cast<size_t>(shape.length()), 0);
    const int n = shape.sum();
    std::function<long long(int)> place = [&](int done) -> long long {
        if (done == n) return 1;
        long long total = 0;
        for (int r = 0; r < shape.length(); ++r) {
            if (rows[static_cast<size_t>(r)] < shape[r] &&
                (r == 0 || rows[static_cast<size_t>(r)] <
                               rows[static_cast<size_t>(r - 1)])) {
                ++rows[static_cast<size_t>(r)];
                total += place(done + 1);
                --rows[static_cast<size_t>(r)];
            }
        }
        return total;
    };
    return place(0);
}

// p(0..n_max) by the pentagonal-number recurrence.
inline std::vector<long long> partition_counts(int n_max) {
    std::vector<long long> p(static_cast<size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n)
                p[static_cast<size_t>(n)] += sign * p[static_cast<size_t>(n - g2)];
        }
    }
    return p;
}

// Every straight tableau of the shape over letter values 1..max_value that is
// semistandard for the tag. Brute force, no content restrictions.
inline void for_each_ssyt(
    const kron::partition& shape, kron::order tag, int max_value,
    const std::function<void(const kron::colored_tableau&)>& visit) {
    kron::colored_tableau work;
    work.outer = shape;
    work.tag = tag;
    for (int r = 0; r < shape.length(); ++r)
        work.rows.emplace_back(static_cast<size_t>(shape[r]), kron::colored_letter{});

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == shape.length()) {
            visit(work);
            return;
        }
        if (c == shape[r]) {
            fill(r + 1, 0);
            return;
        }
        for (int v = 1; v <= max_value; ++v) {
            for (bool bar : {true, false}) {
                const kron::colored_letter x{v, bar};
                if (c > 0) {
                    const kron::colored_letter& left = work.at(r, c - 1);
                    if (left == x ? x.barred : left.key(tag) > x.key(tag)) continue;
                }
                if (r > 0) {
                    const kron::colored_letter& up = work.at(r - 1, c);
                    if (up == x ? !x.barred : up.key(tag) > x.key(tag)) continue;
                }
                work.at(r, c) = x;
                fill(r, c + 1);
            }
        }
    };
    fill(0, 0);
}

/* Slow reference for enumerate_yamanouchi: enumerate natural-order
 * semistandard fillings directly and run the full Yamanouchi test on each
 * completed one. No pruning beyond semistandardness.
 */
inline std::vector<kron::colored_tableau> naive_yamanouchi(
    const kron::partition& nu, const kron::partition& lambda, int d,
    bool require_sw_unbarred) {
    std::vector<kron::colored_tableau> out;
    const int t = lambda.length();
    for_each_ssyt(nu, kron::order::natural, t,
                  [&](const kron::colored_tableau& candidate) {
                      const auto profile = kron::content_profile(candidate);
                      if (profile.total_color != d) return;
                      if (static_cast<int>(profile.content.entries.size()) != t)
                          return;
                      for (int v = 0; v < t; ++v)
                          if (profile.content.entries[static_cast<size_t>(v)] !=
                              lambda[v])
                              return;
                      if (!kron::is_yamanouchi(candidate)) return;
                      if (require_sw_unbarred &&
                          !kron::sw_corner_unbarred(candidate))
                          return;
                      out.push_back(candidate);
                  });
    return out;
}

}  // namespace testutil
