#include "dyntc/kernels.hpp"

#include <cstring>

#include "dyntc/work.hpp"

namespace dyntc {

namespace {

void check_same_dim(const BoolMatrix& a, const BoolMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw dimension_error(what);
}

void check_index(const BoolMatrix& x, int i, const char* what) {
    if (i < 0 || i >= x.dim()) throw index_error(what);
}

} // namespace

uint64_t& work::counter() {
    thread_local uint64_t c = 0;
    return c;
}

BoolMatrix bool_mul(const BoolMatrix& x, const BoolMatrix& y) {
    check_same_dim(x, y, "bool_mul: dimension mismatch");
    const int n = x.dim();
    const int w = x.words_per_row();
    BoolMatrix out(n);
#pragma omp parallel for schedule(static) if (n >= 128)
    for (int r = 0; r < n; ++r) {
        uint64_t* dst = out.row(r);
        x.for_each_in_row(r, [&](int k) {
            const uint64_t* src = y.row(k);
            for (int j = 0; j < w; ++j) dst[j] |= src[j];
        });
    }
    return out;
}

BoolMatrix bool_add(const BoolMatrix& x, const BoolMatrix& y) {
    check_same_dim(x, y, "bool_add: dimension mismatch");
    BoolMatrix out = x;
    out |= y;
    return out;
}

BoolMatrix bool_sub(const BoolMatrix& x, const BoolMatrix& dx) {
    check_same_dim(x, dx, "bool_sub: dimension mismatch");
    if (!dx.subset_of(x)) throw subset_error("bool_sub: dx not contained in x");
    BoolMatrix out = x;
    out.subtract(dx);
    return out;
}

BoolMatrix row_slab(const BoolMatrix& x, int i) {
    check_index(x, i, "row_slab: index out of range");
    BoolMatrix out(x.dim());
    std::memcpy(out.row(i), x.row(i), sizeof(uint64_t) * x.words_per_row());
    return out;
}

BoolMatrix col_slab(const BoolMatrix& x, int i) {
    check_index(x, i, "col_slab: index out of range");
    const int n = x.dim();
    BoolMatrix out(n);
    for (int r = 0; r < n; ++r)
        if (x.get(r, i)) out.set(r, i);
    return out;
}

BoolMatrix closure_oracle(const BoolMatrix& x) {
    const int n = x.dim();
    const int w = x.words_per_row();
    BoolMatrix c = x;
    c.set_diagonal();
    std::vector<uint64_t> pivot(w);
    for (int k = 0; k < n; ++k) {
        std::memcpy(pivot.data(), c.row(k), sizeof(uint64_t) * w);
#pragma omp parallel for schedule(static) if (n >= 256)
        for (int r = 0; r < n; ++r) {
            if (r == k || !c.get(r, k)) continue;
            uint64_t* dst = c.row(r);
            for (int j = 0; j < w; ++j) dst[j] |= pivot[j];
        }
    }
    return c;
}

namespace {

// Recursive 2x2-block closure; n is a power of two.
BoolMatrix munro_rec(const BoolMatrix& x) {
    const int n = x.dim();
    if (n == 1) {
        BoolMatrix r(1);
        r.set(0, 0);
        return r;
    }
    const int m = n / 2;
    BoolMatrix a = x.submatrix(0, 0, m), b = x.submatrix(0, m, m);
    BoolMatrix c = x.submatrix(m, 0, m), d = x.submatrix(m, m, m);

    BoolMatrix ds = munro_rec(d);
    BoolMatrix bds = bool_mul(b, ds);
    BoolMatrix e = munro_rec(bool_add(a, bool_mul(bds, c)));
    BoolMatrix f = bool_mul(e, bds);
    BoolMatrix dsc = bool_mul(ds, c);
    BoolMatrix g = bool_mul(dsc, e);
    BoolMatrix h = bool_add(ds, bool_mul(g, bds));

    BoolMatrix out(n);
    out.place(e, 0, 0);
    out.place(f, 0, m);
    out.place(g, m, 0);
    out.place(h, m, m);
    return out;
}

// Recursive closure through the twelve-polynomial split with three
// sub-closures P, E1, H2 and squared occurrences.
BoolMatrix munro_tandem_rec(const BoolMatrix& x) {
    const int n = x.dim();
    if (n == 1) {
        BoolMatrix r(1);
        r.set(0, 0);
        return r;
    }
    const int m = n / 2;
    BoolMatrix a = x.submatrix(0, 0, m), b = x.submatrix(0, m, m);
    BoolMatrix c = x.submatrix(m, 0, m), d = x.submatrix(m, m, m);

    BoolMatrix p = munro_tandem_rec(d);
    BoolMatrix p2 = bool_mul(p, p);
    BoolMatrix q = bool_add(a, bool_mul(bool_mul(b, p2), c));
    BoolMatrix e1 = munro_tandem_rec(q);
    BoolMatrix e1sq = bool_mul(e1, e1);
    BoolMatrix r = bool_add(d, bool_mul(bool_mul(c, e1sq), b));
    BoolMatrix h2 = munro_tandem_rec(r);
    BoolMatrix h2sq = bool_mul(h2, h2);

    BoolMatrix f1 = bool_mul(bool_mul(e1sq, b), p);
    BoolMatrix g1 = bool_mul(bool_mul(p, c), e1sq);
    BoolMatrix h1 = bool_mul(g1, bool_mul(b, p));
    BoolMatrix e2 = bool_mul(bool_mul(e1, b), bool_mul(h2sq, bool_mul(c, e1)));
    BoolMatrix f2 = bool_mul(bool_mul(e1, b), h2sq);
    BoolMatrix g2 = bool_mul(h2sq, bool_mul(c, e1));

    BoolMatrix out(n);
    out.place(bool_add(e1, e2), 0, 0);
    out.place(bool_add(f1, f2), 0, m);
    out.place(bool_add(g1, g2), m, 0);
    out.place(bool_add(h1, h2), m, m);
    return out;
}

} // namespace

BoolMatrix closure_munro(const BoolMatrix& x) {
    const int n = x.dim();
    const int p = next_pow2(n);
    if (p == n) return munro_rec(x);
    return munro_rec(x.padded(p)).shrunk(n);
}

BoolMatrix closure_munro_tandem(const BoolMatrix& x) {
    const int n = x.dim();
    const int p = next_pow2(n);
    if (p == n) return munro_tandem_rec(x);
    return munro_tandem_rec(x.padded(p)).shrunk(n);
}

IntMatrix int_product(const BoolMatrix& x, const BoolMatrix& y) {
    check_same_dim(x, y, "int_product: dimension mismatch");
    const int n = x.dim();
    const int w = x.words_per_row();
    const BoolMatrix yt = y.transposed();
    IntMatrix out(n);
#pragma omp parallel for schedule(static) if (n >= 128)
    for (int r = 0; r < n; ++r) {
        const uint64_t* xr = x.row(r);
        int64_t* dst = out.row(r);
        for (int z = 0; z < n; ++z) {
            const uint64_t* yz = yt.row(z);
            int64_t acc = 0;
            for (int j = 0; j < w; ++j) acc += __builtin_popcountll(xr[j] & yz[j]);
            dst[z] = acc;
        }
    }
    return out;
}

namespace serial {

BoolMatrix bool_mul(const BoolMatrix& x, const BoolMatrix& y) {
    check_same_dim(x, y, "serial::bool_mul: dimension mismatch");
    const int n = x.dim();
    BoolMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (x.get(i, k))
                for (int j = 0; j < n; ++j)
                    if (y.get(k, j)) out.set(i, j);
    return out;
}

BoolMatrix closure(const BoolMatrix& x) {
    const int n = x.dim();
    BoolMatrix c = x;
    c.set_diagonal();
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (c.get(i, k))
                for (int j = 0; j < n; ++j)
                    if (c.get(k, j)) c.set(i, j);
    return c;
}

IntMatrix int_product(const BoolMatrix& x, const BoolMatrix& y) {
    check_same_dim(x, y, "serial::int_product: dimension mismatch");
    const int n = x.dim();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (x.get(i, k))
                for (int j = 0; j < n; ++j)
                    if (y.get(k, j)) ++out.at(i, j);
    return out;
}

} // namespace serial

} // namespace dyntc
