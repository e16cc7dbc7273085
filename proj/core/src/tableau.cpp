#include "kron/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kron/conversion.hpp"

namespace kron {

std::string colored_letter::str() const {
    std::string s = std::to_string(value);
    if (barred) s += '~';
    return s;
}

colored_letter colored_letter::parse(std::string_view tok) {
    bool bar = false;
    if (!tok.empty() && tok.back() == '~') {
        bar = true;
        tok.remove_suffix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 1)
        throw structural_error("cannot parse letter '" + std::string(tok) + "'");
    return {value, bar};
}

colored_tableau make_tableau(std::vector<std::vector<colored_letter>> rows, order tag) {
    std::vector<int> widths;
    widths.reserve(rows.size());
    for (const auto& row : rows) widths.push_back(static_cast<int>(row.size()));
    colored_tableau t;
    t.outer = partition(std::move(widths));
    t.rows = std::move(rows);
    t.tag = tag;
    validate_structure(t);
    return t;
}

void validate_structure(const colored_tableau& t) {
    if (!contains(t.outer, t.inner))
        throw structural_error("inner shape not contained in outer shape");
    if (static_cast<int>(t.rows.size()) != t.outer.length())
        throw structural_error("row count does not match outer shape");
    for (int r = 0; r < t.n_rows(); ++r) {
        if (static_cast<int>(t.rows[static_cast<size_t>(r)].size()) !=
            t.outer[r] - t.inner[r])
            throw structural_error("row width does not match shape");
    }
}

bool is_semistandard(const colored_tableau& t) {
    validate_structure(t);
    for (int r = 0; r < t.n_rows(); ++r) {
        for (int c = t.inner[r]; c < t.outer[r]; ++c) {
            const colored_letter& x = t.at(r, c);
            if (c > t.inner[r]) {
                const colored_letter& left = t.at(r, c - 1);
                // Row repeats are allowed only for unbarred letters.
                if (left == x) {
                    if (x.barred) return false;
                } else if (left.key(t.tag) > x.key(t.tag)) {
                    return false;
                }
            }
            if (t.has_cell(r - 1, c)) {
                const colored_letter& up = t.at(r - 1, c);
                // Column repeats are allowed only for barred letters.
                if (up == x) {
                    if (!x.barred) return false;
                } else if (up.key(t.tag) > x.key(t.tag)) {
                    return false;
                }
            }
        }
    }
    return true;
}

content_profile_t content_profile(const colored_tableau& t) {
    content_profile_t p;
    int max_value = 0;
    for (const auto& row : t.rows)
        for (const auto& cell : row) max_value = std::max(max_value, cell.value);
    p.content.entries.assign(static_cast<size_t>(max_value), 0);
    for (const auto& row : t.rows) {
        for (const auto& cell : row) {
            ++p.content.entries[static_cast<size_t>(cell.value - 1)];
            if (cell.barred) ++p.total_color;
        }
    }
    return p;
}

colored_tableau barred_subtableau(const colored_tableau& t_small) {
    if (!t_small.straight())
        throw structural_error("barred subtableau needs a straight shape");
    std::vector<std::vector<colored_letter>> rows;
    for (int r = 0; r < t_small.n_rows(); ++r) {
        int width = 0;
        for (int c = 0; c < t_small.outer[r]; ++c) {
            if (t_small.at(r, c).barred) {
                if (c != width)
                    throw invalid_order_error(
                        "barred cells are not left-justified; tableau is not "
                        "small-bar semistandard");
                ++width;
            }
        }
        if (r > 0 && width > static_cast<int>(rows.back().size()))
            throw invalid_order_error(
                "barred cells do not form a top-left partition region");
        if (width == 0) break;
        auto& row = rows.emplace_back();
        for (int c = 0; c < width; ++c) row.push_back(t_small.at(r, c));
    }
    // Rows below the first bar-free row must be bar-free as well.
    for (int r = static_cast<int>(rows.size()); r < t_small.n_rows(); ++r)
        for (int c = 0; c < t_small.outer[r]; ++c)
            if (t_small.at(r, c).barred)
                throw invalid_order_error(
                    "barred cells do not form a top-left partition region");
    return make_tableau(std::move(rows), order::small_bar);
}

colored_tableau build_composite(const colored_tableau& t_small) {
    if (!t_small.straight())
        throw structural_error("composite needs a straight shape");
    const colored_tableau tb = barred_subtableau(t_small);
    const partition eta = tb.outer;
    const int shift = eta.length();  // width of the transposed barred block

    colored_tableau result;
    result.tag = order::natural;
    std::vector<int> outer_parts, inner_parts;

    // Unbarred skew part, shifted right so the blocks touch corner to corner.
    for (int r = 0; r < t_small.n_rows(); ++r) {
        outer_parts.push_back(shift + t_small.outer[r]);
        inner_parts.push_back(shift + eta[r]);
        auto& row = result.rows.emplace_back();
        for (int c = eta[r]; c < t_small.outer[r]; ++c) {
            colored_letter cell = t_small.at(r, c);
            cell.barred = false;
            row.push_back(cell);
        }
    }
    // Transpose of the barred part, bars removed.
    const partition eta_conj = conjugate(eta);
    for (int k = 0; k < eta[0]; ++k) {
        outer_parts.push_back(eta_conj[k]);
        auto& row = result.rows.emplace_back();
        for (int i = 0; i < eta_conj[k]; ++i)
            row.push_back(unbarred(tb.at(i, k).value));
    }

    while (!inner_parts.empty() && inner_parts.back() == 0) inner_parts.pop_back();
    result.outer = partition(std::move(outer_parts));
    result.inner = partition(std::move(inner_parts));
    validate_structure(result);
    return result;
}

std::vector<int> reverse_reading_word(const colored_tableau& t) {
    std::vector<int> word;
    word.reserve(static_cast<size_t>(t.cell_count()));
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            if (it->barred)
                throw structural_error("reading word is defined on unbarred fillings");
            word.push_back(it->value);
        }
    return word;
}

bool is_lattice(const std::vector<int>& word) {
    int max_value = 0;
    for (int v : word) max_value = std::max(max_value, v);
    std::vector<int> count(static_cast<size_t>(max_value) + 1, 0);
    for (int v : word) {
        ++count[static_cast<size_t>(v)];
        if (v > 1 && count[static_cast<size_t>(v)] > count[static_cast<size_t>(v - 1)])
            return false;
    }
    return true;
}

bool is_yamanouchi(const colored_tableau& t_natural) {
    const auto [t_small, trace] = to_small_bar(t_natural);
    return is_lattice(reverse_reading_word(build_composite(t_small)));
}

bool sw_corner_unbarred(const colored_tableau& t) {
    if (t.n_rows() == 0) throw structural_error("empty tableau has no SW corner");
    if (!t.straight()) throw structural_error("SW corner needs a straight shape");
    return !t.at(t.n_rows() - 1, 0).barred;
}

std::string format_tableau(const colored_tableau& t) {
    std::string out;
    for (int r = 0; r < t.n_rows(); ++r) {
        for (int c = 0; c < t.outer[r]; ++c) {
            if (c) out += ' ';
            out += c < t.inner[r] ? "." : t.at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

colored_tableau parse_tableau(std::string_view text, order tag) {
    colored_tableau t;
    t.tag = tag;
    std::vector<int> outer_parts, inner_parts;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::string tok;
        int inner = 0, width = 0;
        auto& row = t.rows.emplace_back();
        while (cells >> tok) {
            if (tok == ".") {
                if (width > inner)
                    throw structural_error("inner cell after a filled cell");
                ++inner;
                ++width;
            } else {
                row.push_back(colored_letter::parse(tok));
                ++width;
            }
        }
        outer_parts.push_back(width);
        inner_parts.push_back(inner);
    }
    while (!inner_parts.empty() && inner_parts.back() == 0) inner_parts.pop_back();
    t.outer = partition(std::move(outer_parts));
    t.inner = partition(std::move(inner_parts));
    validate_structure(t);
    return t;
}

}  // namespace kron
