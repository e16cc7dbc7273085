#include "kron/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace kron {

namespace {

// First-column hook lengths ("beta numbers"): distinct values
// shape[i] + (L-1-i). Border strips of size k removable from the shape
// correspond to the b with b >= k and b - k not itself a beta number.
std::vector<int> beta_numbers(const partition& shape) {
    const int len = shape.length();
    std::vector<int> b(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        b[static_cast<size_t>(i)] = shape[i] + (len - 1 - i);
    return b;
}

partition shape_from_betas(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    const int len = static_cast<int>(b.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int part = b[static_cast<size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return partition(std::move(parts));
}

long long character_rec(const partition& shape, const partition& cycle,
                        character_cache& cache) {
    if (shape.empty()) return 1;
    const character_cache::key key{shape.parts(), cycle.parts()};
    if (auto hit = cache.lookup(key)) return *hit;

    const int k = cycle[0];
    const partition rest(
        std::vector<int>(cycle.parts().begin() + 1, cycle.parts().end()));

    const std::vector<int> betas = beta_numbers(shape);
    long long total = 0;
    for (size_t i = 0; i < betas.size(); ++i) {
        const int lowered = betas[i] - k;
        if (lowered < 0) continue;
        if (std::find(betas.begin(), betas.end(), lowered) != betas.end())
            continue;
        // Height = rows spanned minus one = betas strictly between the two.
        int height = 0;
        for (int b : betas)
            if (lowered < b && b < betas[i]) ++height;
        std::vector<int> next = betas;
        next[i] = lowered;
        const long long sub = character_rec(shape_from_betas(std::move(next)),
                                            rest, cache);
        total += (height % 2 == 0) ? sub : -sub;
    }
    cache.insert(key, total);
    return total;
}

}  // namespace

long long character(const partition& shape, const partition& cycle_type,
                    character_cache& cache) {
    if (shape.sum() != cycle_type.sum())
        throw query_error("character needs |shape| = |cycle type|");
    return character_rec(shape, cycle_type, cache);
}

long long kronecker_oracle(const partition& lambda, const partition& mu,
                           const partition& nu, character_cache& cache) {
    const int n = lambda.sum();
    if (mu.sum() != n || nu.sum() != n)
        throw query_error("kronecker_oracle needs three partitions of equal size");
    const long long n_fact = factorial(n);
    __int128 total = 0;
    for (const partition& rho : partitions_of(n)) {
        const long long class_size = n_fact / z_of(rho);
        total += static_cast<__int128>(class_size) *
                 character_rec(lambda, rho, cache) *
                 character_rec(mu, rho, cache) * character_rec(nu, rho, cache);
    }
    if (total < 0 || total % n_fact != 0)
        throw internal_error("character sum is not a nonnegative multiple of n!");
    return static_cast<long long>(total / n_fact);
}

long long dimension(const partition& shape, character_cache& cache) {
    const int n = shape.sum();
    return character_rec(shape,
                         partition(std::vector<int>(static_cast<size_t>(n), 1)),
                         cache);
}

void character_cache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const size_t p1 = line.find('|');
        const size_t p2 = line.find('|', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos)
            throw query_error("malformed cache line: " + line);
        const partition shape = partition::parse(line.substr(0, p1));
        const partition cycle = partition::parse(line.substr(p1 + 1, p2 - p1 - 1));
        insert({shape.parts(), cycle.parts()}, std::stoll(line.substr(p2 + 1)));
    }
}

void character_cache::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw query_error("cannot write cache file " + tmp);
        std::shared_lock lock(mutex_);
        for (const auto& [key, value] : table_) {
            out << partition(key.first).str() << '|' << partition(key.second).str()
                << '|' << value << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace kron
