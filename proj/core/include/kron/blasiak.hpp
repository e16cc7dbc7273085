#pragma once

#include <map>
#include <vector>

#include "kron/partition.hpp"
#include "kron/tableau.hpp"

namespace kron {

struct coefficient_query {
    partition lambda;  // tableau content
    int d = 0;         // total color; equals the hook leg length
    partition nu;      // tableau shape
};

// A Kronecker product decomposition: shape -> strictly positive multiplicity.
struct schur_expansion {
    int n = 0;
    std::map<partition, long long, partition_listing_order> terms;

    long long coefficient(const partition& nu) const {
        auto it = terms.find(nu);
        return it == terms.end() ? 0 : it->second;
    }
    friend bool operator==(const schur_expansion&, const schur_expansion&) = default;
};

/* All Yamanouchi small-bar semistandard tableaux of the given shape, content
 * and total color, in a deterministic order. Enumeration backtracks cell by
 * cell in row-major order; the ballot condition on the composite's reading
 * word is checked row by row (completed rows contribute a fixed prefix of the
 * word, so a failed prefix prunes the whole subtree).
 */
std::vector<colored_tableau> enumerate_yamanouchi_small_bar(const partition& nu,
                                                            const partition& lambda,
                                                            int d);

/* The natural-order Yamanouchi tableaux of the given shape, content and total
 * color (the conversions of the small-bar set), optionally restricted to
 * those whose SW corner is unbarred. Ordered lexicographically by the
 * row-major letter sequence under the natural order.
 */
std::vector<colored_tableau> enumerate_yamanouchi(const partition& nu,
                                                  const partition& lambda, int d,
                                                  bool require_sw_unbarred);

/* g(lambda, (n-d,1^d), nu): the number of natural-order Yamanouchi colored
 * tableaux of shape nu, content lambda and total color d whose SW corner
 * holds an unbarred letter.
 */
long long hook_kronecker(const coefficient_query& q);

// Full decomposition of the product of the hook (mt-d,1^d) with the rectangle
// (m^t). Shapes are evaluated in parallel; the result order is deterministic.
schur_expansion decompose_hook_rect(int m, int t, int d);

}  // namespace kron
