#pragma once

#include <string>
#include <vector>

#include "kron/blasiak.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

namespace kron {

/* Per-tableau record of the structural facts that hold for Yamanouchi
 * tableaux of rectangular content: the shape of the barred block, the gap
 * w = t - d, the largest absent barred value j (0 when every value occurs),
 * and any failed checks by name. Valid inputs produce no violations.
 */
struct structural_diagnostics {
    partition eta;
    int w = 0;
    int j = 0;
    std::vector<std::string> violations;
};

struct stability_pair {
    partition nu;        // shape in the base expansion
    partition nu_tilde;  // the same shape with an extra row of length m
    long long g_t = 0;
    long long g_t1 = 0;
};

/* Side-by-side comparison of the decompositions at t and t+1 under the
 * row-insertion matching. Stability holds iff no coefficient mismatches and
 * no lifted shape outside the image of the base support.
 */
struct stability_report {
    int m = 0, d = 0, t = 0;
    schur_expansion base;    // at (m^t)
    schur_expansion lifted;  // at (m^{t+1})
    std::vector<stability_pair> pairs;
    std::vector<stability_pair> coefficient_mismatches;
    std::vector<partition> unmatched_in_lifted;
    bool bound_satisfied = false;  // t >= d+2
    std::string verdict;           // "stable" | "unstable" | "conjectural"

    bool stable() const {
        return coefficient_mismatches.empty() && unmatched_in_lifted.empty();
    }
};

/* The row-insertion lift on Yamanouchi small-bar tableaux of content (m^t)
 * and total color d, defined for w = t - d >= 1:
 *   (i)   every barred letter gains 1;
 *   (ii)  the first ell(eta)+w-1 unbarred rows stay;
 *   (iii) a row of length m is inserted after row ell(eta)+w-1; for w >= 2
 *         each entry is one more than the entry above it, for w = 1 the row
 *         is the forced filling (letter i appears xi_{i-1} - xi_i times,
 *         where xi is the content of the unbarred part of the barred rows
 *         and xi_0 = m);
 *   (iv)  every letter below the new row gains 1.
 * The result has content (m^{t+1}) and the same total color.
 */
colored_tableau phi(const colored_tableau& t_small, int m, int d);

// Inverse of phi: requires the gap of the input to be at least 2; deletes the
// forced row of length m and undoes the letter shifts. A missing deletable
// row is an internal error (the theory guarantees it exists).
colored_tableau phi_inverse(const colored_tableau& t_small, int m, int d);

// The natural-order conjugate of phi: convert to the small-bar order, apply
// phi, convert back. Defined for gap w >= 2; preserves the bar status of the
// SW corner.
colored_tableau psi(const colored_tableau& t_natural, int m, int d);

/* Runs every structural check on a natural-order tableau of content (m^t)
 * and total color d:
 *   - the composite's reverse reading word is a lattice permutation;
 *   - each barred row is t~, t-1~, ... read right to left;
 *   - the reversed content of the barred block is the conjugate of eta;
 *   - every barred value is at least ell(eta)+w          (needs w >= 1);
 *   - j >= ell(eta)+w-1                                  (needs w >= 1);
 *   - rows ell(eta)+1 .. ell(eta)+w-1 have length m      (needs w >= 2);
 *   - those rows carry the forced filling                (needs w >= 2).
 * Wrong content, color or a non-semistandard filling is a domain error;
 * failed checks are reported, not thrown.
 */
structural_diagnostics diagnose(const colored_tableau& t_natural, int m, int t,
                                int d);

/* Decomposes at (m,t,d) and (m,t+1,d) and matches every base shape nu to the
 * shape with one more row of length m. Below the bound t >= d+2 the report is
 * informational and never an error; at t = d+1 the verdict is "conjectural"
 * whatever the findings.
 */
stability_report verify_stability(int m, int d, int t);

// verify_stability at the conjectural edge t = d+1.
stability_report probe_w1(int m, int d);

}  // namespace kron
