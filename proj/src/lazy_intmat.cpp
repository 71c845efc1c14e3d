#include "dyntc/lazy_intmat.hpp"

#include <cmath>

namespace dyntc {

LazyIntMatrix::LazyIntMatrix(int n, double epsilon, std::optional<uint64_t> modulus)
    : n_(n), mod_(modulus) {
    if (n < 1) throw dimension_error("LazyIntMatrix: dimension must be >= 1");
    if (epsilon < 0.0 || epsilon > 1.0)
        throw dimension_error("LazyIntMatrix: epsilon must be in [0,1]");
    if (mod_ && *mod_ < 2) throw dimension_error("LazyIntMatrix: modulus must be >= 2");
    cap_ = std::max(1, static_cast<int>(std::ceil(std::pow(n, epsilon))));
    if (cap_ > n) cap_ = n;
    lazy_.assign(static_cast<size_t>(n) * n, 0);
    bufj_.assign(static_cast<size_t>(n) * cap_, 0);
    bufi_.assign(static_cast<size_t>(cap_) * n, 0);
}

int64_t LazyIntMatrix::reduce(int64_t v) const {
    if (!mod_) return v;
    const int64_t p = static_cast<int64_t>(*mod_);
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

int64_t LazyIntMatrix::mul(int64_t a, int64_t b) const {
    if (!mod_) return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
    return static_cast<int64_t>(
        static_cast<__uint128_t>(static_cast<uint64_t>(a)) * static_cast<uint64_t>(b) % *mod_);
}

int64_t LazyIntMatrix::add(int64_t a, int64_t b) const {
    if (!mod_) return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
    const int64_t p = static_cast<int64_t>(*mod_);
    int64_t r = a + b; // both in [0,p), p < 2^63
    return r >= p ? r - p : r;
}

void LazyIntMatrix::init(const IntMatrix& x) {
    if (x.dim() != n_) throw dimension_error("LazyIntMatrix init: dimension mismatch");
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) lazy_[static_cast<size_t>(r) * n_ + c] = reduce(x.at(r, c));
    t_ = 0; // pending buffers discarded
}

void LazyIntMatrix::reconstruct() {
#pragma omp parallel for schedule(static) if (n_ >= 256)
    for (int r = 0; r < n_; ++r) {
        int64_t* dst = lazy_.data() + static_cast<size_t>(r) * n_;
        for (int s = 0; s < t_; ++s) {
            const int64_t jv = bufj_[static_cast<size_t>(r) * cap_ + s];
            if (jv == 0) continue;
            const int64_t* iv = bufi_.data() + static_cast<size_t>(s) * n_;
            for (int c = 0; c < n_; ++c) dst[c] = add(dst[c], mul(jv, iv[c]));
        }
    }
    t_ = 0;
}

void LazyIntMatrix::update(std::span<const int64_t> j, std::span<const int64_t> i) {
    if (static_cast<int>(j.size()) != n_ || static_cast<int>(i.size()) != n_)
        throw dimension_error("LazyIntMatrix update: vector length mismatch");
    if (t_ == cap_) reconstruct();
    for (int r = 0; r < n_; ++r) bufj_[static_cast<size_t>(r) * cap_ + t_] = reduce(j[r]);
    for (int c = 0; c < n_; ++c) bufi_[static_cast<size_t>(t_) * n_ + c] = reduce(i[c]);
    ++t_;
}

int64_t LazyIntMatrix::lookup(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_)
        throw index_error("LazyIntMatrix lookup: index out of range");
    int64_t v = lazy_[static_cast<size_t>(x) * n_ + y];
    for (int s = 0; s < t_; ++s)
        v = add(v, mul(bufj_[static_cast<size_t>(x) * cap_ + s],
                       bufi_[static_cast<size_t>(s) * n_ + y]));
    return v;
}

} // namespace dyntc
