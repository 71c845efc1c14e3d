#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dyntc/bitmat.hpp"

namespace dyntc {

// Integer matrix represented as M = Lazy + BufJ<t> * BufI<t>: rank-1 updates
// are logged into the buffers and folded into Lazy by one rectangular
// multiply every ceil(n^epsilon) updates, so a lookup scans at most
// ceil(n^epsilon) buffered outer products.
//
// With a modulus set, all arithmetic is done mod p and stored reduced to
// [0, p); without one, arithmetic wraps in 64 bits.
class LazyIntMatrix {
public:
    LazyIntMatrix(int n, double epsilon, std::optional<uint64_t> modulus = std::nullopt);

    void init(const IntMatrix& x);
    void update(std::span<const int64_t> j, std::span<const int64_t> i);
    int64_t lookup(int x, int y) const;

    int dim() const { return n_; }
    int capacity() const { return cap_; }
    int buffered() const { return t_; }
    std::optional<uint64_t> modulus() const { return mod_; }

private:
    int64_t reduce(int64_t v) const;
    int64_t mul(int64_t a, int64_t b) const;
    int64_t add(int64_t a, int64_t b) const;
    void reconstruct();

    int n_;
    int cap_;
    int t_ = 0;
    std::optional<uint64_t> mod_;
    std::vector<int64_t> lazy_; // n x n
    std::vector<int64_t> bufj_; // n x cap, column-major by update slot
    std::vector<int64_t> bufi_; // cap x n
};

} // namespace dyntc
