#include "dyntc/closure_log.hpp"

#include "dyntc/kernels.hpp"

namespace dyntc {

LogClosure::LogClosure(int n) : n_(n), padded_(next_pow2(std::max(1, n))), x_(padded_) {
    if (n < 1) throw dimension_error("LogClosure: dimension must be >= 1");
    levels_ = 0;
    while ((1 << levels_) < padded_) ++levels_;
    p_.reserve(levels_);
    for (int k = 0; k < levels_; ++k) p_.emplace_back(padded_, 3, 3);
}

void LogClosure::check_index(int i) const {
    if (i < 0 || i >= n_) throw index_error("LogClosure: index out of range");
}

void LogClosure::init_star(const BoolMatrix& y) {
    if (y.dim() != n_) throw dimension_error("LogClosure init_star: dimension mismatch");
    x_ = y.padded(padded_);
    const BoolMatrix ident = BoolMatrix::identity(padded_);
    const BoolMatrix* cur = &x_;
    for (int k = 0; k < levels_; ++k) {
        p_[k].init({cur, &ident, &ident, cur, cur, &ident, cur, cur, cur});
        cur = &p_[k].lookup();
    }
}

void LogClosure::set_star(int i, const BoolMatrix& dx) {
    check_index(i);
    if (dx.dim() != n_) throw dimension_error("LogClosure set_star: dimension mismatch");
    BoolMatrix padded = dx.padded(padded_);
    BoolMatrix dy = bool_add(row_slab(padded, i), col_slab(padded, i));
    x_ |= dy;
    for (int k = 0; k < levels_; ++k) {
        for (auto [a, pos] : kOcc) p_[k].lazy_set(dy, a, pos);
        for (auto [a, pos] : kOcc) p_[k].set_row(i, dy, a, pos);
        for (auto [a, pos] : kOcc) p_[k].set_col(i, dy, a, pos);
        // Re-inserting 1s already present is idempotent, so the whole current
        // level value serves as the next level's update matrix.
        dy = p_[k].lookup();
    }
}

void LogClosure::reset_star(const BoolMatrix& dx) {
    if (dx.dim() != n_) throw dimension_error("LogClosure reset_star: dimension mismatch");
    BoolMatrix dy = dx.padded(padded_);
    if (!dy.subset_of(x_)) throw subset_error("LogClosure reset_star: delta not in X");
    x_.subtract(dy);
    for (int k = 0; k < levels_; ++k) {
        BoolMatrix before = p_[k].lookup();
        for (auto [a, pos] : kOcc) p_[k].reset(dy, a, pos);
        // The maintained level only loses 1s here; checked, not assumed.
        if (!p_[k].lookup().subset_of(before))
            throw subset_error("LogClosure reset_star: level gained entries during reset");
        before.subtract(p_[k].lookup());
        dy = std::move(before);
    }
}

int LogClosure::lookup_star(int x, int y) const {
    check_index(x);
    check_index(y);
    if (x == y) return 1;
    if (levels_ == 0) return 0;
    return p_.back().lookup_bit(x, y) ? 1 : 0;
}

BoolMatrix LogClosure::closure_matrix() const {
    BoolMatrix out = levels_ == 0 ? BoolMatrix(padded_) : p_.back().lookup();
    out.set_diagonal();
    return out.shrunk(n_);
}

} // namespace dyntc
