#include "kron/conversion.hpp"

#include <algorithm>

namespace kron {

namespace {

struct cell_ref {
    int r = -1, c = -1;
    bool found() const { return r >= 0; }
};

int max_letter_value(const colored_tableau& t) {
    int m = 0;
    for (const auto& row : t.rows)
        for (const auto& cell : row) m = std::max(m, cell.value);
    return m;
}

// Lowest (to_natural) or highest (to_small_bar) unprocessed cell holding v~.
cell_ref find_occurrence(const colored_tableau& t,
                         const std::vector<std::vector<bool>>& done, int v,
                         bool lowest) {
    cell_ref best;
    for (int r = 0; r < t.n_rows(); ++r) {
        for (int c = 0; c < t.outer[r]; ++c) {
            const colored_letter& x = t.at(r, c);
            if (x.barred && x.value == v &&
                !done[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
                if (!best.found() || (lowest ? r > best.r : r < best.r))
                    best = {r, c};
            }
        }
    }
    return best;
}

// One slide of the barred letter at (r, c). dir = +1 moves south-east
// (small bar -> natural), dir = -1 moves north-west. Returns the final cell.
cell_ref slide(colored_tableau& t, int r, int c, int dir) {
    const int v = t.at(r, c).value;
    auto eligible = [&](int rr, int cc) {
        if (!t.has_cell(rr, cc)) return false;
        const colored_letter& x = t.at(rr, cc);
        return !x.barred && x.value < v;
    };
    for (;;) {
        const int vr = r + dir, hc = c + dir;  // vertical and horizontal targets
        const bool can_v = eligible(vr, c);
        const bool can_h = eligible(r, hc);
        if (!can_v && !can_h) return {r, c};
        bool vertical;
        if (can_v && can_h) {
            // SE slides pair with the smaller neighbor, NW with the larger;
            // ties resolve to the vertical exchange in both directions.
            const int a = t.at(vr, c).value, b = t.at(r, hc).value;
            vertical = dir > 0 ? a <= b : a >= b;
        } else {
            vertical = can_v;
        }
        if (vertical) {
            std::swap(t.at(r, c), t.at(vr, c));
            r = vr;
        } else {
            std::swap(t.at(r, c), t.at(r, hc));
            c = hc;
        }
    }
}

std::pair<colored_tableau, conversion_trace> convert(const colored_tableau& input,
                                                     order target) {
    const order source =
        target == order::natural ? order::small_bar : order::natural;
    if (input.tag != source)
        throw invalid_order_error("conversion input carries the wrong order tag");
    if (!input.straight())
        throw structural_error("conversion is defined on straight shapes");
    if (!is_semistandard(input))
        throw invalid_order_error("conversion input is not semistandard");

    conversion_trace trace;
    trace.snapshots.push_back(input);

    colored_tableau work = input;
    work.tag = target;
    std::vector<std::vector<bool>> done;
    for (const auto& row : work.rows)
        done.emplace_back(row.size(), false);

    const int dir = target == order::natural ? +1 : -1;
    const int top = max_letter_value(work);
    // Descending values for SE conversion, ascending for the reverse.
    for (int k = 0; k < top; ++k) {
        const int v = dir > 0 ? top - k : k + 1;
        for (;;) {
            cell_ref at = find_occurrence(work, done, v, /*lowest=*/dir > 0);
            if (!at.found()) break;
            cell_ref end = slide(work, at.r, at.c, dir);
            done[static_cast<size_t>(end.r)][static_cast<size_t>(end.c)] = true;
            if (end.r != at.r || end.c != at.c) {
                trace.snapshots.push_back(work);
                trace.moved.push_back(barred(v));
            }
        }
    }

    if (!is_semistandard(work))
        throw conversion_error("slide rule produced a non-semistandard tableau",
                               std::move(trace));
    return {work, std::move(trace)};
}

}  // namespace

std::pair<colored_tableau, conversion_trace> to_natural(const colored_tableau& t_small) {
    return convert(t_small, order::natural);
}

std::pair<colored_tableau, conversion_trace> to_small_bar(const colored_tableau& t_natural) {
    return convert(t_natural, order::small_bar);
}

std::string format_trace(const conversion_trace& trace) {
    std::string out;
    for (size_t i = 0; i < trace.snapshots.size(); ++i) {
        if (i)
            out += "-- step " + std::to_string(i) + ": moved " +
                   trace.moved[i - 1].str() + "\n";
        out += format_tableau(trace.snapshots[i]);
    }
    return out;
}

}  // namespace kron
