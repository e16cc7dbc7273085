#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "kron/partition.hpp"

namespace kron {

/* Memo table for character values, keyed by (shape, cycle type). Safe for
 * concurrent read/insert; every writer computes the same value for a key, so
 * last-writer-wins is harmless. Optionally persisted as a text file with one
 * "shape|cycle_type|value" line per entry, rewritten atomically.
 */
class character_cache {
  public:
    using key = std::pair<std::vector<int>, std::vector<int>>;

    std::optional<long long> lookup(const key& k) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(k);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const key& k, long long value) {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(k, value);
    }

    size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

    // A missing file is not an error; malformed lines are.
    void load(const std::string& path);
    // Writes to a temporary file in the same directory, then renames over.
    void save(const std::string& path) const;

  private:
    mutable std::shared_mutex mutex_;
    std::map<key, long long> table_;
};

/* The irreducible character of the symmetric group: chi^shape evaluated on
 * the class of the given cycle type, by the border-strip recursion
 *   chi^shape(rho) = sum over removable strips of size rho_1 of
 *                    (-1)^height * chi^{shape minus strip}(rho minus rho_1),
 * consuming the largest cycle first. Exact integer arithmetic throughout.
 */
long long character(const partition& shape, const partition& cycle_type,
                    character_cache& cache);

/* g(lambda, mu, nu) as the class-weighted character sum
 * sum over rho of z_rho^{-1} chi^lambda(rho) chi^mu(rho) chi^nu(rho),
 * accumulated over the integers and divided at the end. A non-integral or
 * negative total is reported as an internal error.
 */
long long kronecker_oracle(const partition& lambda, const partition& mu,
                           const partition& nu, character_cache& cache);

// chi^shape(1^n) = number of standard Young tableaux of the shape.
long long dimension(const partition& shape, character_cache& cache);

}  // namespace kron
