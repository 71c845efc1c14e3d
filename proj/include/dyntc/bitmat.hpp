#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyntc/errors.hpp"

namespace dyntc {

// Dense square Boolean matrix, one bit per entry, rows packed into 64-bit
// words. Indices are 0-based throughout the library; the 1-based convention
// of the graph API applies only at the CLI/trace boundary.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(int n);
    static BoolMatrix identity(int n);

    int dim() const { return n_; }
    int words_per_row() const { return wpr_; }

    bool get(int x, int y) const {
        return (bits_[static_cast<size_t>(x) * wpr_ + (y >> 6)] >> (y & 63)) & 1u;
    }
    void set(int x, int y) {
        bits_[static_cast<size_t>(x) * wpr_ + (y >> 6)] |= (uint64_t{1} << (y & 63));
    }
    void clear(int x, int y) {
        bits_[static_cast<size_t>(x) * wpr_ + (y >> 6)] &= ~(uint64_t{1} << (y & 63));
    }
    void assign(int x, int y, bool v) { v ? set(x, y) : clear(x, y); }

    uint64_t* row(int x) { return bits_.data() + static_cast<size_t>(x) * wpr_; }
    const uint64_t* row(int x) const { return bits_.data() + static_cast<size_t>(x) * wpr_; }

    void fill_zero();
    void set_diagonal();

    // Entrywise OR / AND NOT (unchecked); the checked variants live in
    // kernels.hpp under the module's add/sub names.
    BoolMatrix& operator|=(const BoolMatrix& o);
    BoolMatrix& operator&=(const BoolMatrix& o);
    void subtract(const BoolMatrix& o); // this &= ~o

    bool operator==(const BoolMatrix& o) const;
    bool subset_of(const BoolMatrix& o) const;
    bool none() const;
    bool any() const { return !none(); }
    int popcount() const;
    int row_popcount(int x) const;

    BoolMatrix transposed() const;
    BoolMatrix padded(int m) const;          // top-left copy, zero elsewhere
    BoolMatrix shrunk(int m) const;          // top-left m x m corner
    BoolMatrix submatrix(int r0, int c0, int m) const;
    void place(const BoolMatrix& src, int r0, int c0);

    // Invoke f(y) for every set bit y in row x.
    template <typename F>
    void for_each_in_row(int x, F&& f) const {
        const uint64_t* r = row(x);
        for (int w = 0; w < wpr_; ++w) {
            uint64_t m = r[w];
            while (m) {
                int b = __builtin_ctzll(m);
                f((w << 6) | b);
                m &= m - 1;
            }
        }
    }
    // Invoke f(x, y) for every set bit.
    template <typename F>
    void for_each(F&& f) const {
        for (int x = 0; x < n_; ++x)
            for_each_in_row(x, [&](int y) { f(x, y); });
    }

private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<uint64_t> bits_;
};

// Dense square matrix of 64-bit integers (witness counters, path counts).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), v_(static_cast<size_t>(n) * n, 0) {}

    int dim() const { return n_; }
    int64_t& at(int x, int y) { return v_[static_cast<size_t>(x) * n_ + y]; }
    int64_t at(int x, int y) const { return v_[static_cast<size_t>(x) * n_ + y]; }
    int64_t* row(int x) { return v_.data() + static_cast<size_t>(x) * n_; }
    const int64_t* row(int x) const { return v_.data() + static_cast<size_t>(x) * n_; }
    void fill(int64_t v) { std::fill(v_.begin(), v_.end(), v); }
    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && v_ == o.v_; }

private:
    int n_ = 0;
    std::vector<int64_t> v_;
};

// Fixture text format: first line `n`, then n lines of n characters in {0,1}.
BoolMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const BoolMatrix& m);
BoolMatrix parse_matrix_text(const std::string& s);
std::string format_matrix_text(const BoolMatrix& m);

int next_pow2(int n);

} // namespace dyntc
