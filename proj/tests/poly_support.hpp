#pragma once

// Mirror of a polynomial's variables maintained by definition, used to
// recompute the exact value P and the error-bound matrix M alongside the
// lazy structures under test.
//
// M is the sum of value changes over non-lazy operations. Because a reset
// leaves the structure as if the reset entries were never set, the
// accumulation runs over that rewritten history; concretely, an entry
// belongs to M exactly when its earliest surviving witness chain was
// completed by a non-lazy operation. The mirror therefore records, per
// variable entry, the flip time and kind of the operation that set it, and
// derives M by a minimax scan over witness chains.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "dyntc/bitmat.hpp"
#include "dyntc/kernels.hpp"
#include "oracles.hpp"

namespace poly_support {

using dyntc::BoolMatrix;

struct PolyMirror {
    static constexpr int64_t kAbsent = std::numeric_limits<int64_t>::max();

    int n, h, k;
    int64_t time = 0;
    std::vector<BoolMatrix> vars;        // h*k values
    std::vector<dyntc::IntMatrix> flips; // flip time per entry, 0 = absent
    std::vector<char> lazy_op;           // op kind by time, 1 = lazy
    BoolMatrix value;                    // exact P for the current variables
    BoolMatrix m;                        // error bound recomputed per op

    PolyMirror(int n, int h, int k)
        : n(n), h(h), k(k), vars(static_cast<size_t>(h) * k, BoolMatrix(n)),
          flips(static_cast<size_t>(h) * k, dyntc::IntMatrix(n)), lazy_op(1, 0),
          value(n), m(n) {}

    BoolMatrix& var(int a, int pos) { return vars[static_cast<size_t>(a) * k + pos]; }
    dyntc::IntMatrix& flip(int a, int pos) { return flips[static_cast<size_t>(a) * k + pos]; }

    BoolMatrix exact() const {
        BoolMatrix acc(n);
        for (int a = 0; a < h; ++a) {
            std::vector<const BoolMatrix*> term;
            for (int pos = 0; pos < k; ++pos)
                term.push_back(&vars[static_cast<size_t>(a) * k + pos]);
            acc |= oracles::chain_product(term);
        }
        return acc;
    }

    // Earliest completion time of a witness chain per entry, one term.
    std::vector<int64_t> completion_times(int a) const {
        auto cost = [&](int pos, int x, int y) -> int64_t {
            int64_t f = flips[static_cast<size_t>(a) * k + pos].at(x, y);
            return f == 0 ? kAbsent : f;
        };
        std::vector<int64_t> cur(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) cur[static_cast<size_t>(x) * n + y] = cost(0, x, y);
        for (int pos = 1; pos < k; ++pos) {
            std::vector<int64_t> next(static_cast<size_t>(n) * n, kAbsent);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    int64_t left = cur[static_cast<size_t>(x) * n + y];
                    if (left == kAbsent) continue;
                    for (int z = 0; z < n; ++z) {
                        int64_t right = cost(pos, y, z);
                        if (right == kAbsent) continue;
                        int64_t t = std::max(left, right);
                        int64_t& slot = next[static_cast<size_t>(x) * n + z];
                        if (t < slot) slot = t;
                    }
                }
            cur = std::move(next);
        }
        return cur;
    }

    void recompute() {
        value = exact();
        std::vector<int64_t> best(static_cast<size_t>(n) * n, kAbsent);
        for (int a = 0; a < h; ++a) {
            std::vector<int64_t> ct = completion_times(a);
            for (size_t i = 0; i < best.size(); ++i) best[i] = std::min(best[i], ct[i]);
        }
        m.fill_zero();
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z) {
                int64_t t = best[static_cast<size_t>(x) * n + z];
                if (t != kAbsent && !lazy_op[static_cast<size_t>(t)]) m.set(x, z);
            }
    }

    void stamp(int a, int pos, const BoolMatrix& newly) {
        newly.for_each([&](int x, int y) {
            if (!var(a, pos).get(x, y)) {
                var(a, pos).set(x, y);
                flip(a, pos).at(x, y) = time;
            }
        });
    }

    void begin_op(bool lazy) {
        ++time;
        lazy_op.push_back(lazy ? 1 : 0);
    }

    void apply_init(const std::vector<BoolMatrix>& vals) {
        begin_op(false);
        for (int a = 0; a < h; ++a)
            for (int pos = 0; pos < k; ++pos) {
                var(a, pos) = BoolMatrix(n);
                flip(a, pos).fill(0);
                stamp(a, pos, vals[static_cast<size_t>(a) * k + pos]);
            }
        recompute();
    }
    void apply_set_row(int i, const BoolMatrix& dx, int a, int pos) {
        begin_op(false);
        stamp(a, pos, dyntc::row_slab(dx, i));
        recompute();
    }
    void apply_set_col(int i, const BoolMatrix& dx, int a, int pos) {
        begin_op(false);
        stamp(a, pos, dyntc::col_slab(dx, i));
        recompute();
    }
    void apply_lazy_set(const BoolMatrix& dx, int a, int pos) {
        begin_op(true);
        stamp(a, pos, dx);
        recompute();
    }
    void apply_reset(const BoolMatrix& dx, int a, int pos) {
        begin_op(false);
        dx.for_each([&](int x, int y) {
            var(a, pos).clear(x, y);
            flip(a, pos).at(x, y) = 0;
        });
        recompute();
    }
};

} // namespace poly_support
