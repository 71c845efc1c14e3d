#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dyntc/lazy_intmat.hpp"

namespace dyntc {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);
// Random prime in [2^61, 2^62), deterministic for a given seed.
uint64_t random_prime_61(uint64_t seed);

// Fully dynamic reachability on a DAG by counting distinct paths modulo a
// prime. M[x,y] holds the path count (the empty path puts 1 on the
// diagonal); an edge insertion or deletion is one rank-1 update of M.
// "Yes" answers are always correct; a "no" is wrong only when a true path
// count vanishes mod p.
class DagCounter {
public:
    struct Options {
        double epsilon = 0.5;
        uint64_t seed = 1;
        std::optional<uint64_t> prime; // override for tests (e.g. p = 2)
    };

    explicit DagCounter(int n);
    DagCounter(int n, Options opts);

    void insert_edge(int x, int y);
    void delete_edge(int x, int y);
    int query(int x, int y) const;

    int dim() const { return n_; }
    uint64_t prime() const { return p_; }
    bool has_edge(int x, int y) const;
    int64_t path_count_mod_p(int x, int y) const { return m_.lookup(x, y); }

private:
    void check_index(int v) const;
    // Returns a path y ~> x as a vertex list if one exists, else empty.
    std::vector<int> find_path(int from, int to) const;

    int n_;
    uint64_t p_;
    std::vector<std::vector<int>> adj_;
    LazyIntMatrix m_;
};

} // namespace dyntc
