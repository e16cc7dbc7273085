#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

// Which total order on the colored alphabet a tableau is semistandard for.
//   natural:   1~ < 1 < 2~ < 2 < ...
//   small bar: 1~ < 2~ < ... < 1 < 2 < ...
enum class order { natural, small_bar };

struct colored_letter {
    int value = 0;
    bool barred = false;

    // Rank of the letter in the natural order (1~ -> 1, 1 -> 2, 2~ -> 3, ...).
    int natural_key() const { return 2 * value - (barred ? 1 : 0); }
    // Rank in the small bar order; every barred letter precedes every unbarred.
    int small_bar_key() const { return barred ? value : value + (1 << 20); }
    int key(order o) const {
        return o == order::natural ? natural_key() : small_bar_key();
    }

    std::string str() const;                      // "3" or "3~"
    static colored_letter parse(std::string_view tok);

    friend bool operator==(const colored_letter&, const colored_letter&) = default;
};

inline colored_letter barred(int v) { return {v, true}; }
inline colored_letter unbarred(int v) { return {v, false}; }

/* A filling of a (possibly skew) shape outer/inner with colored letters.
 * rows[i] holds the cells of row i for columns inner[i] .. outer[i]-1
 * (0-based). The tag records which order the filling claims to respect.
 */
struct colored_tableau {
    partition outer;
    partition inner;  // empty for straight shapes
    std::vector<std::vector<colored_letter>> rows;
    order tag = order::natural;

    int n_rows() const { return outer.length(); }
    bool straight() const { return inner.empty(); }
    int cell_count() const { return outer.sum() - inner.sum(); }
    const colored_letter& at(int r, int c) const {
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner[r])];
    }
    colored_letter& at(int r, int c) {
        return rows[static_cast<size_t>(r)][static_cast<size_t>(c - inner[r])];
    }
    // True when the skew shape has a cell at (row r, absolute column c).
    bool has_cell(int r, int c) const {
        return r >= 0 && r < n_rows() && c >= inner[r] && c < outer[r];
    }

    friend bool operator==(const colored_tableau&, const colored_tableau&) = default;
};

// Simple straight-shape constructor from rows of letters.
colored_tableau make_tableau(std::vector<std::vector<colored_letter>> rows, order tag);

// Shape/filling consistency. Throws structural_error when rows do not match
// the declared shapes or the shapes are not nested partitions.
void validate_structure(const colored_tableau& t);

struct content_profile_t {
    composition content;   // content[i-1] counts letters of value i, barred or not
    int total_color = 0;   // number of barred cells

    friend bool operator==(const content_profile_t&, const content_profile_t&) = default;
};

/* Semistandard for the tagged order: rows weakly increase with repeats allowed
 * only for unbarred letters, columns weakly increase with repeats allowed only
 * for barred letters.
 */
bool is_semistandard(const colored_tableau& t);

content_profile_t content_profile(const colored_tableau& t);

/* The barred letters of a small-bar semistandard straight tableau occupy a
 * top-left partition region; returns that subtableau (its shape is eta).
 * Throws invalid_order_error when the barred cells are not such a region.
 */
colored_tableau barred_subtableau(const colored_tableau& t_small);

/* The composite tableau: the unbarred skew part of t_small shifted right by
 * ell(eta), with the transpose of the barred part (bars dropped) placed
 * corner-to-corner beneath it. All letters of the result are unbarred.
 */
colored_tableau build_composite(const colored_tableau& t_small);

// Rows top to bottom, each read right to left. Requires unbarred letters only.
std::vector<int> reverse_reading_word(const colored_tableau& t);

// Ballot condition: every prefix has count(i) >= count(i+1) for all i >= 1.
bool is_lattice(const std::vector<int>& word);

/* A natural-order semistandard straight tableau is Yamanouchi when the
 * reverse reading word of the composite of its small-bar conversion is a
 * lattice permutation.
 */
bool is_yamanouchi(const colored_tableau& t_natural);

// True iff the first cell of the last row holds an unbarred letter.
// Throws structural_error on an empty tableau.
bool sw_corner_unbarred(const colored_tableau& t);

/* Text form: one row per line, cells space-separated, barred letters suffixed
 * with "~"; absent (inner) cells of a skew shape rendered as ".".
 */
std::string format_tableau(const colored_tableau& t);
colored_tableau parse_tableau(std::string_view text, order tag);

}  // namespace kron
