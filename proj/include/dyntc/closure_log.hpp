#pragma once

#include <vector>

#include "dyntc/poly.hpp"

namespace dyntc {

// Fully dynamic Kleene closure through log2(n) levels, level k holding the
// degree-3 polynomial P_k = P_{k-1} + P_{k-1}^2 + P_{k-1}^3. A centered set
// feeds each level a lazy_set of the level below plus row/column reveals at
// the center; the one-side error of the inner lookups cancels at the top, so
// I + P_log2(n) is the exact closure after every init/set/reset.
//
// Each of the six occurrences of P_{k-1} in a level (term shapes V*I*I,
// V*V*I, V*V*V) is a distinct polynomial variable fed identical updates.
class LogClosure {
public:
    explicit LogClosure(int n);

    void init_star(const BoolMatrix& y);
    void set_star(int i, const BoolMatrix& dx);
    void reset_star(const BoolMatrix& dx);
    int lookup_star(int x, int y) const;

    int dim() const { return n_; }
    const BoolMatrix& input() const { return x_; }
    BoolMatrix closure_matrix() const; // I + top level, at original size

private:
    void check_index(int i) const;
    // (term, position) of the six variable occurrences.
    static constexpr int kOcc[6][2] = {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};

    int n_;      // original dimension
    int padded_; // next power of two
    int levels_;
    BoolMatrix x_;
    std::vector<PolyK> p_;
};

} // namespace dyntc
