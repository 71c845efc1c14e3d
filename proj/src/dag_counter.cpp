#include "dyntc/dag_counter.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dyntc {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // These witnesses decide primality for all n < 3.3 * 10^24.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t random_prime_61(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(uint64_t{1} << 61, (uint64_t{1} << 62) - 1);
    for (;;) {
        uint64_t cand = dist(rng) | 1;
        if (is_prime_u64(cand)) return cand;
    }
}

DagCounter::DagCounter(int n) : DagCounter(n, Options()) {}

DagCounter::DagCounter(int n, Options opts)
    : n_(n),
      p_(opts.prime ? *opts.prime : random_prime_61(opts.seed)),
      adj_(n),
      m_(n, opts.epsilon, p_) {
    if (n < 1) throw dimension_error("DagCounter: dimension must be >= 1");
    if (opts.prime && !is_prime_u64(*opts.prime))
        throw dimension_error("DagCounter: supplied modulus is not prime");
    IntMatrix ident(n);
    for (int v = 0; v < n; ++v) ident.at(v, v) = 1; // the empty path
    m_.init(ident);
}

void DagCounter::check_index(int v) const {
    if (v < 0 || v >= n_) throw index_error("DagCounter: vertex out of range");
}

bool DagCounter::has_edge(int x, int y) const {
    return std::find(adj_[x].begin(), adj_[x].end(), y) != adj_[x].end();
}

std::vector<int> DagCounter::find_path(int from, int to) const {
    std::vector<int> parent(n_, -1);
    std::vector<int> stack{from};
    std::vector<char> seen(n_, 0);
    seen[from] = 1;
    if (from == to) return {from};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            parent[w] = u;
            if (w == to) {
                std::vector<int> path{to};
                for (int v = to; v != from; v = parent[v]) path.push_back(parent[v]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            stack.push_back(w);
        }
    }
    return {};
}

void DagCounter::insert_edge(int x, int y) {
    check_index(x);
    check_index(y);
    if (x == y) throw cycle_error("insert_edge: self loop");
    if (has_edge(x, y)) throw edge_error("insert_edge: edge already present");
    std::vector<int> back = find_path(y, x);
    if (!back.empty()) {
        std::ostringstream msg;
        msg << "insert_edge(" << x << "," << y << ") closes a cycle via";
        for (int v : back) msg << ' ' << v;
        throw cycle_error(msg.str());
    }
    std::vector<int64_t> j(n_), i(n_);
    for (int z = 0; z < n_; ++z) {
        j[z] = m_.lookup(z, x); // paths z ~> x
        i[z] = m_.lookup(y, z); // paths y ~> z
    }
    adj_[x].push_back(y);
    m_.update(j, i);
}

void DagCounter::delete_edge(int x, int y) {
    check_index(x);
    check_index(y);
    auto it = std::find(adj_[x].begin(), adj_[x].end(), y);
    if (it == adj_[x].end()) throw edge_error("delete_edge: edge not present");
    adj_[x].erase(it);
    std::vector<int64_t> j(n_), i(n_);
    for (int z = 0; z < n_; ++z) {
        // Acyclicity keeps paths into x and out of y free of the edge (x,y),
        // so the counts gathered here are the same before or after unlinking.
        j[z] = -m_.lookup(z, x);
        i[z] = m_.lookup(y, z);
    }
    m_.update(j, i);
}

int DagCounter::query(int x, int y) const {
    check_index(x);
    check_index(y);
    return m_.lookup(x, y) != 0 ? 1 : 0;
}

} // namespace dyntc
