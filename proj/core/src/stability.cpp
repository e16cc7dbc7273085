#include "kron/stability.hpp"

#include <algorithm>

#include "kron/conversion.hpp"

namespace kron {

namespace {

// Number of rows of rectangular content (m^t); throws domain_error when the
// profile is not exactly t copies of m with the requested total color.
int rectangle_rows(const colored_tableau& t, int m, int d) {
    const content_profile_t profile = content_profile(t);
    for (int entry : profile.content.entries)
        if (entry != m) throw domain_error("content is not rectangular (m^t)");
    if (profile.total_color != d)
        throw domain_error("total color does not match d");
    return static_cast<int>(profile.content.entries.size());
}

// Full membership test for the small-bar Yamanouchi family of content (m^t),
// color d. Returns t.
int validate_small_bar_member(const colored_tableau& ts, int m, int d) {
    if (ts.tag != order::small_bar)
        throw domain_error("expected a small-bar tableau");
    if (!ts.straight()) throw domain_error("expected a straight shape");
    if (!is_semistandard(ts))
        throw domain_error("tableau is not small-bar semistandard");
    const int t = rectangle_rows(ts, m, d);
    if (!is_lattice(reverse_reading_word(build_composite(ts))))
        throw domain_error("tableau is not Yamanouchi");
    return t;
}

// Content of the unbarred part of the first rows rows, as counts of 1..top.
std::vector<int> unbarred_content(const colored_tableau& ts, int rows, int top) {
    std::vector<int> xi(static_cast<size_t>(top) + 1, 0);
    for (int r = 0; r < rows && r < ts.n_rows(); ++r) {
        for (int c = 0; c < ts.outer[r]; ++c) {
            const colored_letter& x = ts.at(r, c);
            if (!x.barred && x.value <= top) ++xi[static_cast<size_t>(x.value)];
        }
    }
    return xi;
}

// The forced row of length m that follows the barred rows: letter i appears
// xi_{i-1} - xi_i times for i = 1 .. ell(eta)+1, with xi_0 = m.
std::vector<colored_letter> forced_row(const std::vector<int>& xi, int ell_eta,
                                       int m) {
    std::vector<colored_letter> row;
    int prev = m;
    for (int v = 1; v <= ell_eta + 1; ++v) {
        const int cur = v <= ell_eta ? xi[static_cast<size_t>(v)] : 0;
        if (cur > prev)
            throw internal_error("forced-row counts are not weakly decreasing");
        row.insert(row.end(), static_cast<size_t>(prev - cur), unbarred(v));
        prev = cur;
    }
    if (static_cast<int>(row.size()) != m)
        throw internal_error("forced row does not have length m");
    return row;
}

}  // namespace

colored_tableau phi(const colored_tableau& t_small, int m, int d) {
    const int t = validate_small_bar_member(t_small, m, d);
    const int w = t - d;
    if (w < 1) throw domain_error("phi needs gap w = t - d >= 1");
    const partition eta = barred_subtableau(t_small).outer;
    const int ell = eta.length();

    auto rows = t_small.rows;
    for (int r = 0; r < ell; ++r)
        for (int c = 0; c < eta[r]; ++c)
            ++rows[static_cast<size_t>(r)][static_cast<size_t>(c)].value;

    const int insert_at = ell + w - 1;
    if (insert_at > static_cast<int>(rows.size()))
        throw internal_error("tableau has fewer rows than the insertion point");
    std::vector<colored_letter> fresh;
    if (w >= 2) {
        const auto& above = rows[static_cast<size_t>(insert_at - 1)];
        if (static_cast<int>(above.size()) != m)
            throw internal_error("row above the insertion point is not of length m");
        fresh = above;
        for (auto& cell : fresh) ++cell.value;
    } else {
        fresh = forced_row(unbarred_content(t_small, ell, t), ell, m);
    }
    for (size_t r = static_cast<size_t>(insert_at); r < rows.size(); ++r)
        for (auto& cell : rows[r]) ++cell.value;
    rows.insert(rows.begin() + insert_at, std::move(fresh));

    colored_tableau lifted = make_tableau(std::move(rows), order::small_bar);
    if (validate_small_bar_member(lifted, m, d) != t + 1)
        throw internal_error("phi image has the wrong content");
    return lifted;
}

colored_tableau phi_inverse(const colored_tableau& t_small, int m, int d) {
    const int t_in = validate_small_bar_member(t_small, m, d);
    if (t_in - d < 2)
        throw domain_error("phi_inverse needs gap w+1 = t - d >= 2");
    const int w = t_in - d - 1;
    const partition eta = barred_subtableau(t_small).outer;
    const int ell = eta.length();

    const int drop = ell + w - 1;  // 0-based index of the inserted row
    if (drop >= t_small.n_rows() || t_small.outer[drop] != m)
        throw internal_error(
            "no deletable row of length m where the lifted-row theorem places it");
    for (int c = 0; c < m; ++c)
        if (t_small.at(drop, c).barred)
            throw internal_error("deletable row is not unbarred");

    auto rows = t_small.rows;
    for (int r = 0; r < ell; ++r) {
        for (int c = 0; c < eta[r]; ++c) {
            auto& cell = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (cell.value < 2)
                throw internal_error("barred letter cannot be decreased");
            --cell.value;
        }
    }
    rows.erase(rows.begin() + drop);
    for (size_t r = static_cast<size_t>(drop); r < rows.size(); ++r) {
        for (auto& cell : rows[r]) {
            if (cell.value < 2)
                throw internal_error("letter below the deleted row cannot be decreased");
            --cell.value;
        }
    }

    colored_tableau lowered = make_tableau(std::move(rows), order::small_bar);
    if (validate_small_bar_member(lowered, m, d) != t_in - 1)
        throw internal_error("phi_inverse image has the wrong content");
    return lowered;
}

colored_tableau psi(const colored_tableau& t_natural, int m, int d) {
    if (t_natural.tag != order::natural)
        throw domain_error("psi expects a natural-order tableau");
    if (!t_natural.straight() || !is_semistandard(t_natural))
        throw domain_error("psi expects a semistandard straight tableau");
    const int t = rectangle_rows(t_natural, m, d);
    if (t - d < 2) throw domain_error("psi needs gap w = t - d >= 2");
    return to_natural(phi(to_small_bar(t_natural).first, m, d)).first;
}

structural_diagnostics diagnose(const colored_tableau& t_natural, int m, int t,
                                int d) {
    if (t_natural.tag != order::natural)
        throw domain_error("diagnose expects a natural-order tableau");
    if (!t_natural.straight() || !is_semistandard(t_natural))
        throw domain_error("diagnose expects a semistandard straight tableau");
    if (rectangle_rows(t_natural, m, d) != t)
        throw domain_error("content is not (m^t) for the given t");

    structural_diagnostics diag;
    diag.w = t - d;
    const colored_tableau ts = to_small_bar(t_natural).first;
    const colored_tableau tb = barred_subtableau(ts);
    diag.eta = tb.outer;
    const int ell = diag.eta.length();

    std::vector<bool> present(static_cast<size_t>(t) + 1, false);
    int min_barred = t + 1;
    for (const auto& row : tb.rows)
        for (const auto& cell : row) {
            if (cell.value <= t) present[static_cast<size_t>(cell.value)] = true;
            min_barred = std::min(min_barred, cell.value);
        }
    diag.j = 0;
    for (int v = t; v >= 1; --v)
        if (!present[static_cast<size_t>(v)]) {
            diag.j = v;
            break;
        }

    auto flag = [&](const std::string& name) { diag.violations.push_back(name); };

    if (!is_lattice(reverse_reading_word(build_composite(ts))))
        flag("yamanouchi: composite reading word is not a lattice permutation");

    // Each barred row reads t~, t-1~, ... from the right.
    for (int r = 0; r < ell; ++r)
        for (int c = 0; c < diag.eta[r]; ++c)
            if (tb.at(r, c).value != t - diag.eta[r] + c + 1) {
                flag("barred-rows-determined: row " + std::to_string(r + 1) +
                     " is not filled by consecutive top values");
                break;
            }

    // Reversed content of the barred block equals the conjugate of eta.
    {
        std::vector<int> reversed;
        for (int v = t; v >= 1; --v) {
            int count = 0;
            for (const auto& row : tb.rows)
                for (const auto& cell : row)
                    if (cell.value == v) ++count;
            reversed.push_back(count);
        }
        while (!reversed.empty() && reversed.back() == 0) reversed.pop_back();
        if (reversed != conjugate(diag.eta).parts())
            flag("barred-content-conjugate: reversed barred content is not eta'");
    }

    if (diag.w >= 1) {
        if (ell > 0 && min_barred < ell + diag.w)
            flag("barred-minimum: a barred value is below ell(eta)+w");
        if (diag.j >= 1 && diag.j < ell + diag.w - 1)
            flag("absent-value-bound: j < ell(eta)+w-1");
    }
    if (diag.w >= 2) {
        for (int p = 1; p <= diag.w - 1; ++p)
            if (t_natural.outer[ell + p - 1] != m) {
                flag("row-length-m: row ell(eta)+" + std::to_string(p) +
                     " does not have length m");
            }
        // Rows ell+1 .. ell+w-1 of the small-bar tableau carry the forced filling.
        const std::vector<int> xi = unbarred_content(ts, ell, t);
        bool spill = false;
        for (int v = ell + 1; v <= t && !spill; ++v)
            if (xi[static_cast<size_t>(v)] > 0) spill = true;
        std::vector<colored_letter> expect;
        bool forced_ok = !spill;
        if (forced_ok) {
            try {
                expect = forced_row(xi, ell, m);
            } catch (const internal_error&) {
                forced_ok = false;
            }
        }
        for (int k = 1; k <= diag.w - 1; ++k) {
            const int r = ell + k - 1;
            if (!forced_ok || r >= ts.n_rows() ||
                ts.rows[static_cast<size_t>(r)] != expect) {
                flag("determined-rows: row ell(eta)+" + std::to_string(k) +
                     " differs from the forced filling");
            }
            for (auto& cell : expect) ++cell.value;
        }
    }
    return diag;
}

stability_report verify_stability(int m, int d, int t) {
    stability_report report;
    report.m = m;
    report.d = d;
    report.t = t;
    report.base = decompose_hook_rect(m, t, d);
    report.lifted = decompose_hook_rect(m, t + 1, d);
    report.bound_satisfied = t >= d + 2;

    std::vector<partition> image;
    for (const auto& [nu, g] : report.base.terms) {
        stability_pair pair;
        pair.nu = nu;
        pair.nu_tilde = add_row_sorted(nu, m);
        pair.g_t = g;
        pair.g_t1 = report.lifted.coefficient(pair.nu_tilde);
        if (pair.g_t != pair.g_t1) report.coefficient_mismatches.push_back(pair);
        image.push_back(pair.nu_tilde);
        report.pairs.push_back(std::move(pair));
    }
    for (const auto& [gamma, g] : report.lifted.terms)
        if (std::find(image.begin(), image.end(), gamma) == image.end())
            report.unmatched_in_lifted.push_back(gamma);

    if (t == d + 1)
        report.verdict = "conjectural";
    else
        report.verdict = report.stable() ? "stable" : "unstable";
    return report;
}

stability_report probe_w1(int m, int d) { return verify_stability(m, d, d + 1); }

}  // namespace kron
