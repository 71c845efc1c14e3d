#include "dyntc/poly.hpp"

#include <algorithm>

#include "dyntc/audit.hpp"
#include "dyntc/kernels.hpp"
#include "dyntc/work.hpp"

namespace dyntc {

PolyDeg2::PolyDeg2(int n, int h)
    : n_(n),
      h_(h),
      var_(2 * h, BoolMatrix(n)),
      varT_(2 * h, BoolMatrix(n)),
      prod_(h, IntMatrix(n)),
      s_(n),
      y_(n),
      flip_(2 * h, IntMatrix(n)),
      lastrow_(2 * h, std::vector<int64_t>(n, 0)),
      lastcol_(2 * h, std::vector<int64_t>(n, 0)),
      rprev_(2 * h),
      rnext_(2 * h),
      rhead_(2 * h, 0) {
    if (n < 1) throw dimension_error("PolyDeg2: dimension must be >= 1");
    if (h < 1) throw dimension_error("PolyDeg2: need at least one term");
    for (int v = 0; v < 2 * h; ++v) {
        rprev_[v].resize(n);
        rnext_[v].resize(n);
        for (int i = 0; i < n; ++i) {
            rprev_[v][i] = i - 1;
            rnext_[v][i] = i + 1 < n ? i + 1 : -1;
        }
        rhead_[v] = 0;
    }
}

void PolyDeg2::check_var(int v) const {
    if (v < 0 || v >= 2 * h_) throw index_error("PolyDeg2: variable id out of range");
}

void PolyDeg2::check_index(int i) const {
    if (i < 0 || i >= n_) throw index_error("PolyDeg2: row/col index out of range");
}

bool PolyDeg2::pred(int a, int x, int y, int z) const {
    const int v1 = 2 * a, v2 = 2 * a + 1;
    const int64_t f = std::max(flip_[v1].at(x, y), flip_[v2].at(y, z));
    const int64_t r = std::max(std::max(lastrow_[v1][x], lastcol_[v1][y]),
                               std::max(lastrow_[v2][y], lastcol_[v2][z]));
    return f <= r;
}

void PolyDeg2::bump(int a, int x, int z) {
    if (++prod_[a].at(x, z) == 1) {
        if (++s_.at(x, z) == 1) y_.set(x, z);
    }
}

void PolyDeg2::drop(int a, int x, int z) {
    if (--prod_[a].at(x, z) == 0) {
        if (--s_.at(x, z) == 0) y_.clear(x, z);
    }
}

void PolyDeg2::absorb(int v, const BoolMatrix& newly) {
    var_[v] |= newly;
    newly.for_each([&](int x, int y) {
        varT_[v].set(y, x);
        flip_[v].at(x, y) = time_;
    });
}

void PolyDeg2::touch(int v, int i) {
    if (rhead_[v] == i) return;
    auto& prev = rprev_[v];
    auto& next = rnext_[v];
    if (prev[i] >= 0) next[prev[i]] = next[i];
    if (next[i] >= 0) prev[next[i]] = prev[i];
    prev[i] = -1;
    next[i] = rhead_[v];
    if (rhead_[v] >= 0) prev[rhead_[v]] = i;
    rhead_[v] = i;
}

void PolyDeg2::init(const std::vector<const BoolMatrix*>& vals) {
    if (static_cast<int>(vals.size()) != 2 * h_)
        throw dimension_error("PolyDeg2 init: wrong number of variables");
    for (const BoolMatrix* m : vals)
        if (m->dim() != n_) throw dimension_error("PolyDeg2 init: dimension mismatch");
    ++time_;
    for (int v = 0; v < 2 * h_; ++v) {
        var_[v] = *vals[v];
        varT_[v] = var_[v].transposed();
        flip_[v].fill(0);
        var_[v].for_each([&](int x, int y) { flip_[v].at(x, y) = time_; });
        std::fill(lastrow_[v].begin(), lastrow_[v].end(), time_);
        std::fill(lastcol_[v].begin(), lastcol_[v].end(), time_);
    }
    s_.fill(0);
    y_.fill_zero();
    for (int a = 0; a < h_; ++a) {
        prod_[a] = int_product(var_[2 * a], var_[2 * a + 1]);
        for (int x = 0; x < n_; ++x)
            for (int z = 0; z < n_; ++z)
                if (prod_[a].at(x, z) > 0) {
                    if (++s_.at(x, z) == 1) y_.set(x, z);
                }
    }
}

void PolyDeg2::set_row(int i, const BoolMatrix& dx, int v) {
    check_var(v);
    check_index(i);
    if (dx.dim() != n_) throw dimension_error("PolyDeg2 set_row: dimension mismatch");
    ++time_;
    const int a = v / 2;
    BoolMatrix newly = row_slab(dx, i);
    newly.subtract(var_[v]);
    absorb(v, newly);
    const BoolMatrix& x1 = var_[2 * a];
    const BoolMatrix& x2 = var_[2 * a + 1];
    if (v % 2 == 0) {
        // triples (i, x, y) with X1[i,x] = 1 and X2[x,y] = 1
        x1.for_each_in_row(i, [&](int x) {
            x2.for_each_in_row(x, [&](int y) {
                work::add();
                if (!pred(a, i, x, y)) bump(a, i, y);
            });
        });
    } else {
        // triples (x, i, z) with X1[x,i] = 1 and X2[i,z] = 1
        varT_[2 * a].for_each_in_row(i, [&](int x) {
            x2.for_each_in_row(i, [&](int z) {
                work::add();
                if (!pred(a, x, i, z)) bump(a, x, z);
            });
        });
    }
    lastrow_[v][i] = time_;
    touch(v, i);
}

void PolyDeg2::set_col(int i, const BoolMatrix& dx, int v) {
    check_var(v);
    check_index(i);
    if (dx.dim() != n_) throw dimension_error("PolyDeg2 set_col: dimension mismatch");
    ++time_;
    const int a = v / 2;
    BoolMatrix newly = col_slab(dx, i);
    newly.subtract(var_[v]);
    absorb(v, newly);
    const BoolMatrix& x1 = var_[2 * a];
    const BoolMatrix& x2 = var_[2 * a + 1];
    if (v % 2 == 0) {
        // triples (x, i, y) with X1[x,i] = 1 and X2[i,y] = 1
        varT_[2 * a].for_each_in_row(i, [&](int x) {
            x2.for_each_in_row(i, [&](int y) {
                work::add();
                if (!pred(a, x, i, y)) bump(a, x, y);
            });
        });
    } else {
        // triples (x, y, i) with X1[x,y] = 1 and X2[y,i] = 1
        varT_[2 * a + 1].for_each_in_row(i, [&](int y) {
            varT_[2 * a].for_each_in_row(y, [&](int x) {
                work::add();
                if (!pred(a, x, y, i)) bump(a, x, i);
            });
        });
    }
    lastcol_[v][i] = time_;
    touch(v, i);
}

void PolyDeg2::lazy_set(const BoolMatrix& dx, int v) {
    check_var(v);
    if (dx.dim() != n_) throw dimension_error("PolyDeg2 lazy_set: dimension mismatch");
    ++time_;
    BoolMatrix newly = dx;
    newly.subtract(var_[v]);
    absorb(v, newly);
    // No other object in the structure changes.
}

void PolyDeg2::reset(const BoolMatrix& dx, int v, ResetPolicy policy) {
    check_var(v);
    if (dx.dim() != n_) throw dimension_error("PolyDeg2 reset: dimension mismatch");
    ++time_;
    BoolMatrix eff = dx;
    if (policy == ResetPolicy::strict) {
        if (!dx.subset_of(var_[v]))
            throw subset_error("PolyDeg2 reset: delta not contained in variable");
    } else {
        eff &= var_[v];
    }
    const int a = v / 2;
    const int v1 = 2 * a, v2 = 2 * a + 1;
    if (v % 2 == 0) {
        eff.for_each([&](int x, int y) {
            const int64_t f = flip_[v1].at(x, y);
            // A stale 1 survives only if planted by lazy_set and untouched by
            // any later operation covering it; then counted witnesses all sit
            // behind a fresher column stamp on the right factor and the
            // move-to-front list yields exactly those columns.
            if (std::max(std::max(lastrow_[v1][x], lastcol_[v1][y]), lastrow_[v2][y]) >= f) {
                var_[v2].for_each_in_row(y, [&](int z) {
                    work::add();
                    if (pred(a, x, y, z)) drop(a, x, z);
                });
            } else {
                for (int32_t z = rhead_[v2]; z >= 0; z = rnext_[v2][z]) {
                    if (std::max(lastrow_[v2][z], lastcol_[v2][z]) < f) break;
                    work::add();
                    if (var_[v2].get(y, z) && pred(a, x, y, z)) drop(a, x, z);
                }
            }
        });
    } else {
        eff.for_each([&](int y, int z) {
            const int64_t f = flip_[v2].at(y, z);
            if (std::max(std::max(lastrow_[v2][y], lastcol_[v2][z]), lastcol_[v1][y]) >= f) {
                varT_[v1].for_each_in_row(y, [&](int x) {
                    work::add();
                    if (pred(a, x, y, z)) drop(a, x, z);
                });
            } else {
                for (int32_t x = rhead_[v1]; x >= 0; x = rnext_[v1][x]) {
                    if (std::max(lastrow_[v1][x], lastcol_[v1][x]) < f) break;
                    work::add();
                    if (var_[v1].get(x, y) && pred(a, x, y, z)) drop(a, x, z);
                }
            }
        });
    }
    var_[v].subtract(eff);
    eff.for_each([&](int x, int y) {
        varT_[v].clear(y, x);
        flip_[v].at(x, y) = 0;
    });
}

int64_t PolyDeg2::phi(int a) const {
    int64_t sum = 0;
    for (int x = 0; x < n_; ++x)
        for (int z = 0; z < n_; ++z) sum += prod_.at(a).at(x, z);
    return sum;
}

// ---------------------------------------------------------------------------

PolyK::PolyK(int n, int h, int k)
    : n_(n),
      h_(h),
      k_(k),
      ident_(BoolMatrix::identity(n)),
      zero_(n),
      lref_(static_cast<size_t>(h) * (k + 1), ChainRef{-1, 0}),
      rref_(static_cast<size_t>(h) * (k + 1), ChainRef{-1, 0}),
      y_(n, h * (k + 1)) {
    if (k < 2) throw dimension_error("PolyK: degree must be >= 2");
    if (h < 1) throw dimension_error("PolyK: need at least one term");
    int off = 0;
    for (int a = 0; a < h; ++a) {
        for (int b = 0; b <= k; ++b) {
            if (b >= 1) lref_[a * (k + 1) + b] = ChainRef{off, b}, off += b;
            if (b <= k - 1) rref_[a * (k + 1) + b] = ChainRef{off, k - b}, off += k - b;
        }
    }
    chain_.reserve(off);
    for (int c = 0; c < off; ++c) chain_.emplace_back(n, 1);
}

PolyDeg2& PolyK::lchain(int a, int b, int j) { return chain_[lref_[a * (k_ + 1) + b].base + j]; }
PolyDeg2& PolyK::rchain(int a, int b, int j) { return chain_[rref_[a * (k_ + 1) + b].base + j]; }

const BoolMatrix& PolyK::ltop_value(int a, int b) const {
    if (b == 0) return ident_;
    const ChainRef& ref = lref_[a * (k_ + 1) + b];
    return chain_[ref.base + ref.len - 1].lookup();
}

const BoolMatrix& PolyK::rtop_value(int a, int b) const {
    if (b == k_) return ident_;
    const ChainRef& ref = rref_[a * (k_ + 1) + b];
    return chain_[ref.base + ref.len - 1].lookup();
}

bool PolyK::check_invariants(std::string* diag) const {
    for (const PolyDeg2& inst : chain_)
        if (!check_witness_invariant(inst, diag)) return false;
    return check_witness_invariant(y_, diag);
}

const BoolMatrix& PolyK::variable(int a, int pos) const {
    const ChainRef& ref = lref_[a * (k_ + 1) + pos + 1];
    return chain_[ref.base].variable(0);
}

void PolyK::check_args(int a, int pos) const {
    if (a < 0 || a >= h_ || pos < 0 || pos >= k_)
        throw index_error("PolyK: variable id out of range");
}

void PolyK::init(const std::vector<const BoolMatrix*>& vals) {
    if (static_cast<int>(vals.size()) != h_ * k_)
        throw dimension_error("PolyK init: wrong number of variables");
    for (const BoolMatrix* m : vals)
        if (m->dim() != n_) throw dimension_error("PolyK init: dimension mismatch");
    std::vector<const BoolMatrix*> ypairs;
    ypairs.reserve(2 * h_ * (k_ + 1));
    for (int a = 0; a < h_; ++a) {
        for (int b = 0; b <= k_; ++b) {
            if (b >= 1) {
                lchain(a, b, 0).init({vals[a * k_ + b - 1], &ident_});
                for (int j = 1; j < b; ++j)
                    lchain(a, b, j).init({vals[a * k_ + b - 1 - j], &lchain(a, b, j - 1).lookup()});
            }
            if (b <= k_ - 1) {
                rchain(a, b, 0).init({&ident_, vals[a * k_ + b]});
                for (int j = 1; j < k_ - b; ++j)
                    rchain(a, b, j).init({&rchain(a, b, j - 1).lookup(), vals[a * k_ + b + j]});
            }
        }
    }
    for (int a = 0; a < h_; ++a)
        for (int b = 0; b <= k_; ++b) {
            ypairs.push_back(&ltop_value(a, b));
            ypairs.push_back(&rtop_value(a, b));
        }
    y_.init(ypairs);
}

void PolyK::set_col(int i, const BoolMatrix& dx, int a, int pos) {
    check_args(a, pos);
    const int b = pos + 1; // pivot whose prefix ends with this variable
    // Real delta climbs the prefix chain along column i.
    lchain(a, b, 0).set_col(i, dx, 0);
    for (int j = 1; j < b; ++j) lchain(a, b, j).set_col(i, lchain(a, b, j - 1).lookup(), 1);
    // Suffix chain carries no variable change; stamping row i reveals any 1s
    // planted by earlier lazy_set calls.
    if (b <= k_ - 1) {
        rchain(a, b, 0).set_row(i, zero_, 1);
        for (int j = 1; j < k_ - b; ++j)
            rchain(a, b, j).set_row(i, rchain(a, b, j - 1).lookup(), 0);
    }
    const int t = a * (k_ + 1) + b;
    y_.set_col(i, ltop_value(a, b), 2 * t);
    y_.set_row(i, rtop_value(a, b), 2 * t + 1);
    // Every other occurrence of the variable learns the slab lazily.
    const BoolMatrix slab = col_slab(dx, i);
    for (int u = b + 1; u <= k_; ++u) lchain(a, u, u - 1 - pos).lazy_set(slab, 0);
    for (int u = 0; u <= pos; ++u) rchain(a, u, pos - u).lazy_set(slab, 1);
}

void PolyK::set_row(int i, const BoolMatrix& dx, int a, int pos) {
    check_args(a, pos);
    const int b = pos; // pivot whose suffix starts with this variable
    rchain(a, b, 0).set_row(i, dx, 1);
    for (int j = 1; j < k_ - b; ++j)
        rchain(a, b, j).set_row(i, rchain(a, b, j - 1).lookup(), 0);
    if (b >= 1) {
        lchain(a, b, 0).set_col(i, zero_, 0);
        for (int j = 1; j < b; ++j) lchain(a, b, j).set_col(i, lchain(a, b, j - 1).lookup(), 1);
    }
    const int t = a * (k_ + 1) + b;
    y_.set_row(i, rtop_value(a, b), 2 * t + 1);
    y_.set_col(i, ltop_value(a, b), 2 * t);
    const BoolMatrix slab = row_slab(dx, i);
    for (int u = pos + 1; u <= k_; ++u) lchain(a, u, u - 1 - pos).lazy_set(slab, 0);
    for (int u = 0; u <= pos - 1; ++u) rchain(a, u, pos - u).lazy_set(slab, 1);
}

void PolyK::lazy_set(const BoolMatrix& dx, int a, int pos) {
    check_args(a, pos);
    for (int u = pos + 1; u <= k_; ++u) lchain(a, u, u - 1 - pos).lazy_set(dx, 0);
    for (int u = 0; u <= pos; ++u) rchain(a, u, pos - u).lazy_set(dx, 1);
}

void PolyK::reset(const BoolMatrix& dx, int a, int pos, ResetPolicy policy) {
    check_args(a, pos);
    BoolMatrix eff = dx;
    if (policy == ResetPolicy::strict) {
        if (!dx.subset_of(variable(a, pos)))
            throw subset_error("PolyK reset: delta not contained in variable");
    } else {
        eff &= variable(a, pos);
    }
    if (eff.none()) return;
    // Per pivot, reset the instance holding this variable, then feed the
    // lookup differences up the chain and finally into Y.
    for (int u = pos + 1; u <= k_; ++u) {
        BoolMatrix cur = eff;
        int j = u - 1 - pos;
        for (; j < u; ++j) {
            if (cur.none()) break;
            BoolMatrix before = lchain(a, u, j).lookup();
            lchain(a, u, j).reset(cur, j == u - 1 - pos ? 0 : 1);
            before.subtract(lchain(a, u, j).lookup());
            cur = std::move(before);
        }
        if (!cur.none()) y_.reset(cur, 2 * (a * (k_ + 1) + u));
    }
    for (int u = 0; u <= pos; ++u) {
        BoolMatrix cur = eff;
        int j = pos - u;
        for (; j < k_ - u; ++j) {
            if (cur.none()) break;
            BoolMatrix before = rchain(a, u, j).lookup();
            rchain(a, u, j).reset(cur, j == pos - u ? 1 : 0);
            before.subtract(rchain(a, u, j).lookup());
            cur = std::move(before);
        }
        if (!cur.none()) y_.reset(cur, 2 * (a * (k_ + 1) + u) + 1);
    }
}

} // namespace dyntc
