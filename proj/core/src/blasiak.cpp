#include "kron/blasiak.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "kron/conversion.hpp"

namespace kron {

namespace {

/* Backtracking enumerator for the small-bar side. Semistandardness is
 * enforced incrementally per cell; the ballot condition is enforced after
 * each completed row on the prefix of the composite's reverse reading word
 * (the row's unbarred letters read right to left), and on the transposed
 * barred block once the filling is complete.
 */
class small_bar_enumerator {
  public:
    small_bar_enumerator(const partition& nu, const partition& lambda, int d)
        : nu_(nu), d_(d), t_(lambda.length()) {
        remaining_ = lambda.parts();
        work_.outer = nu;
        work_.tag = order::small_bar;
        for (int r = 0; r < nu.length(); ++r)
            work_.rows.emplace_back(static_cast<size_t>(nu[r]),
                                    colored_letter{});
        ballot_.assign(static_cast<size_t>(t_) + 1, 0);
    }

    std::vector<colored_tableau> run() {
        barred_left_ = d_;
        fill(0, 0);
        return std::move(found_);
    }

  private:
    void fill(int r, int c) {
        if (r == nu_.length()) {
            complete();
            return;
        }
        if (c == nu_[r]) {
            int applied = 0;
            if (extend_ballot_with_row(r, applied))
                fill(r + 1, 0);
            retract_ballot(r, applied);
            return;
        }
        const colored_letter* left = c > 0 ? &work_.at(r, c - 1) : nullptr;
        const colored_letter* up = r > 0 ? &work_.at(r - 1, c) : nullptr;

        // Barred candidates: the letter strictly dominates a barred left
        // neighbor and weakly dominates a barred upper neighbor; unbarred
        // neighbors rule barred letters out entirely.
        if (barred_left_ > 0 && (!left || left->barred) && (!up || up->barred)) {
            int lo = 1;
            if (left) lo = std::max(lo, left->value + 1);
            if (up) lo = std::max(lo, up->value);
            for (int v = lo; v <= t_; ++v) {
                if (remaining_[static_cast<size_t>(v - 1)] == 0) continue;
                place(r, c, {v, true});
                fill(r, c + 1);
                unplace(r, c);
            }
        }
        // Unbarred candidates: weak along the row, strict down the column;
        // barred neighbors impose no lower bound.
        {
            int lo = 1;
            if (left && !left->barred) lo = std::max(lo, left->value);
            if (up && !up->barred) lo = std::max(lo, up->value + 1);
            for (int v = lo; v <= t_; ++v) {
                if (remaining_[static_cast<size_t>(v - 1)] == 0) continue;
                place(r, c, {v, false});
                fill(r, c + 1);
                unplace(r, c);
            }
        }
    }

    void place(int r, int c, colored_letter x) {
        work_.at(r, c) = x;
        --remaining_[static_cast<size_t>(x.value - 1)];
        if (x.barred) --barred_left_;
    }

    void unplace(int r, int c) {
        const colored_letter x = work_.at(r, c);
        ++remaining_[static_cast<size_t>(x.value - 1)];
        if (x.barred) ++barred_left_;
    }

    // Feed row r's unbarred letters, right to left, into the ballot counters.
    // On failure the increments already applied are kept (count in `applied`)
    // and the caller retracts them.
    bool extend_ballot_with_row(int r, int& applied) {
        const auto& row = work_.rows[static_cast<size_t>(r)];
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            if (it->barred) break;  // barred prefix is not part of the word
            if (!bump(it->value)) return false;
            ++applied;
        }
        return true;
    }

    void retract_ballot(int r, int applied) {
        const auto& row = work_.rows[static_cast<size_t>(r)];
        for (auto it = row.rbegin(); applied > 0; ++it, --applied)
            --ballot_[static_cast<size_t>(it->value)];
    }

    bool bump(int v) {
        ++ballot_[static_cast<size_t>(v)];
        if (v == 1 ||
            ballot_[static_cast<size_t>(v)] <= ballot_[static_cast<size_t>(v - 1)])
            return true;
        --ballot_[static_cast<size_t>(v)];
        return false;
    }

    // All rows placed: require the exact total color, then run the ballot over
    // the transposed barred block (columns read bottom to top, left to right).
    void complete() {
        if (barred_left_ != 0) return;
        std::vector<int> eta;
        for (int r = 0; r < nu_.length(); ++r) {
            int width = 0;
            while (width < nu_[r] && work_.at(r, width).barred) ++width;
            if (width == 0) break;
            eta.push_back(width);
        }
        std::vector<int> applied;
        bool ok = true;
        const int columns = eta.empty() ? 0 : eta[0];
        for (int k = 0; k < columns && ok; ++k) {
            int depth = 0;
            while (depth < static_cast<int>(eta.size()) && eta[static_cast<size_t>(depth)] > k)
                ++depth;
            for (int i = depth - 1; i >= 0; --i) {
                const int v = work_.at(i, k).value;
                if (!bump(v)) {
                    ok = false;
                    break;
                }
                applied.push_back(v);
            }
        }
        if (ok) found_.push_back(work_);
        for (int v : applied) --ballot_[static_cast<size_t>(v)];
    }

    partition nu_;
    int d_;
    int t_;
    std::vector<int> remaining_;
    int barred_left_ = 0;
    std::vector<int> ballot_;
    colored_tableau work_;
    std::vector<colored_tableau> found_;
};

std::vector<int> letter_keys(const colored_tableau& t, order o) {
    std::vector<int> keys;
    keys.reserve(static_cast<size_t>(t.cell_count()));
    for (const auto& row : t.rows)
        for (const auto& cell : row) keys.push_back(cell.key(o));
    return keys;
}

void sort_by_letter_sequence(std::vector<colored_tableau>& ts, order o) {
    std::sort(ts.begin(), ts.end(),
              [o](const colored_tableau& a, const colored_tableau& b) {
                  if (a.outer != b.outer) {
                      return partition_listing_order{}(a.outer, b.outer);
                  }
                  return letter_keys(a, o) < letter_keys(b, o);
              });
}

void check_query(const partition& nu, const partition& lambda, int d) {
    if (nu.sum() != lambda.sum())
        throw query_error("shape and content must have equal size");
    if (d < 0) throw query_error("total color must be nonnegative");
}

}  // namespace

std::vector<colored_tableau> enumerate_yamanouchi_small_bar(const partition& nu,
                                                            const partition& lambda,
                                                            int d) {
    check_query(nu, lambda, d);
    auto ts = small_bar_enumerator(nu, lambda, d).run();
    sort_by_letter_sequence(ts, order::small_bar);
    return ts;
}

std::vector<colored_tableau> enumerate_yamanouchi(const partition& nu,
                                                  const partition& lambda, int d,
                                                  bool require_sw_unbarred) {
    check_query(nu, lambda, d);
    std::vector<colored_tableau> out;
    for (const auto& t_small : small_bar_enumerator(nu, lambda, d).run()) {
        colored_tableau t_natural = to_natural(t_small).first;
        if (require_sw_unbarred && !sw_corner_unbarred(t_natural)) continue;
        out.push_back(std::move(t_natural));
    }
    sort_by_letter_sequence(out, order::natural);
    return out;
}

long long hook_kronecker(const coefficient_query& q) {
    const int n = q.nu.sum();
    if (q.lambda.sum() != n)
        throw query_error("g(lambda, hook, nu) needs |lambda| = |nu|");
    if (q.d < 0 || q.d > n - 1)
        throw query_error("hook leg d must satisfy 0 <= d <= n-1");
    long long count = 0;
    for (const auto& t_small :
         small_bar_enumerator(q.nu, q.lambda, q.d).run()) {
        if (sw_corner_unbarred(to_natural(t_small).first)) ++count;
    }
    return count;
}

schur_expansion decompose_hook_rect(int m, int t, int d) {
    if (m < 1 || t < 1) throw query_error("rectangle needs m >= 1 and t >= 1");
    const int n = m * t;
    if (d < 0 || d > n - 1)
        throw query_error("hook leg d must satisfy 0 <= d <= mt-1");

    const partition lambda = make_rectangle(m, t);
    const std::vector<partition> shapes = partitions_of(n);
    std::vector<long long> counts(shapes.size(), 0);

    const unsigned workers =
        std::min<unsigned>(std::thread::hardware_concurrency(),
                           static_cast<unsigned>(shapes.size()));
    if (workers > 1) {
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back([&] {
                try {
                    for (size_t k = next++; k < shapes.size(); k = next++)
                        counts[k] = hook_kronecker({lambda, d, shapes[k]});
                } catch (...) {
                    std::scoped_lock lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    } else {
        for (size_t k = 0; k < shapes.size(); ++k)
            counts[k] = hook_kronecker({lambda, d, shapes[k]});
    }

    schur_expansion expansion;
    expansion.n = n;
    for (size_t k = 0; k < shapes.size(); ++k)
        if (counts[k] > 0) expansion.terms.emplace(shapes[k], counts[k]);
    return expansion;
}

}  // namespace kron
