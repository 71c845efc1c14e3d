#include "dyntc/closure_divcon.hpp"

#include "dyntc/audit.hpp"
#include "dyntc/kernels.hpp"

namespace dyntc {

namespace {

struct Occ {
    int a;
    int pos;
};

// Variable occurrence tables, positions within each polynomial's terms.
// Q = A + B P P C
constexpr Occ kQA[] = {{0, 0}};
constexpr Occ kQB[] = {{1, 0}};
constexpr Occ kQP[] = {{1, 1}, {1, 2}};
constexpr Occ kQC[] = {{1, 3}};
// R = D + C E1 E1 B
constexpr Occ kRD[] = {{0, 0}};
constexpr Occ kRC[] = {{1, 0}};
constexpr Occ kRE1[] = {{1, 1}, {1, 2}};
constexpr Occ kRB[] = {{1, 3}};
// F1 = E1 E1 B P
constexpr Occ kF1E1[] = {{0, 0}, {0, 1}};
constexpr Occ kF1B[] = {{0, 2}};
constexpr Occ kF1P[] = {{0, 3}};
// G1 = P C E1 E1
constexpr Occ kG1P[] = {{0, 0}};
constexpr Occ kG1C[] = {{0, 1}};
constexpr Occ kG1E1[] = {{0, 2}, {0, 3}};
// H1 = P C E1 E1 B P
constexpr Occ kH1P[] = {{0, 0}, {0, 5}};
constexpr Occ kH1C[] = {{0, 1}};
constexpr Occ kH1E1[] = {{0, 2}, {0, 3}};
constexpr Occ kH1B[] = {{0, 4}};
// E2 = E1 B H2 H2 C E1
constexpr Occ kE2E1[] = {{0, 0}, {0, 5}};
constexpr Occ kE2B[] = {{0, 1}};
constexpr Occ kE2H2[] = {{0, 2}, {0, 3}};
constexpr Occ kE2C[] = {{0, 4}};
// F2 = E1 B H2 H2
constexpr Occ kF2E1[] = {{0, 0}};
constexpr Occ kF2B[] = {{0, 1}};
constexpr Occ kF2H2[] = {{0, 2}, {0, 3}};
// G2 = H2 H2 C E1
constexpr Occ kG2H2[] = {{0, 0}, {0, 1}};
constexpr Occ kG2C[] = {{0, 2}};
constexpr Occ kG2E1[] = {{0, 3}};

template <size_t N>
void set_occ(PolyK& p, int i, const BoolMatrix& d, const Occ (&occs)[N]) {
    for (const Occ& o : occs) {
        p.set_row(i, d, o.a, o.pos);
        p.set_col(i, d, o.a, o.pos);
    }
}

template <size_t N>
void lazy_occ(PolyK& p, const BoolMatrix& d, const Occ (&occs)[N]) {
    if (d.none()) return;
    for (const Occ& o : occs) p.lazy_set(d, o.a, o.pos);
}

template <size_t N>
void reset_occ(PolyK& p, const BoolMatrix& d, const Occ (&occs)[N]) {
    for (const Occ& o : occs) p.reset(d, o.a, o.pos, ResetPolicy::clip);
}

} // namespace

DivConClosure::DivConClosure(int n)
    : n_(n), s_(next_pow2(std::max(1, n))), x_(s_), y_(s_), ident_(BoolMatrix::identity(s_)) {
    if (n < 1) throw dimension_error("DivConClosure: dimension must be >= 1");
    build();
}

DivConClosure::DivConClosure(ChildTag, int pow2n)
    : n_(pow2n), s_(pow2n), x_(s_), y_(s_), ident_(BoolMatrix::identity(s_)) {
    build();
}

void DivConClosure::build() {
    if (s_ == 1) {
        y_.set(0, 0); // 0* = 1* = [1]
        return;
    }
    const int m = s_ / 2;
    p_ = std::unique_ptr<DivConClosure>(new DivConClosure(ChildTag{}, m));
    e1_ = std::unique_ptr<DivConClosure>(new DivConClosure(ChildTag{}, m));
    h2_ = std::unique_ptr<DivConClosure>(new DivConClosure(ChildTag{}, m));
    q_ = std::make_unique<PolyK>(m, 2, 4);
    r_ = std::make_unique<PolyK>(m, 2, 4);
    f1_ = std::make_unique<PolyK>(m, 1, 4);
    g1_ = std::make_unique<PolyK>(m, 1, 4);
    h1_ = std::make_unique<PolyK>(m, 1, 6);
    e2_ = std::make_unique<PolyK>(m, 1, 6);
    f2_ = std::make_unique<PolyK>(m, 1, 4);
    g2_ = std::make_unique<PolyK>(m, 1, 4);
    esum_ = std::make_unique<PolyDeg2>(m, 2);
    fsum_ = std::make_unique<PolyDeg2>(m, 2);
    gsum_ = std::make_unique<PolyDeg2>(m, 2);
    hsum_ = std::make_unique<PolyDeg2>(m, 2);
    prev_p_ = prev_q_ = prev_e1_ = prev_r_ = prev_h2_ = BoolMatrix(m);
}

BoolMatrix DivConClosure::block(const BoolMatrix& mat, int which) const {
    const int m = s_ / 2;
    switch (which) {
        case 0: return mat.submatrix(0, 0, m);
        case 1: return mat.submatrix(0, m, m);
        case 2: return mat.submatrix(m, 0, m);
        default: return mat.submatrix(m, m, m);
    }
}

BoolMatrix DivConClosure::grow_delta(const BoolMatrix& cur, const BoolMatrix& prev) const {
    BoolMatrix d = cur;
    d.subtract(prev);
    return d;
}

BoolMatrix DivConClosure::shrink_delta(const BoolMatrix& prev, const BoolMatrix& cur) const {
    BoolMatrix d = prev;
    d.subtract(cur);
    return d;
}

void DivConClosure::rebuild_sum(PolyDeg2& sum, const BoolMatrix& first, const BoolMatrix& second) {
    const int m = s_ / 2;
    const BoolMatrix ident = BoolMatrix::identity(m);
    sum.init({&first, &ident, &second, &ident});
}

void DivConClosure::reset_sum(PolyDeg2& sum, const BoolMatrix& first, const BoolMatrix& second) {
    BoolMatrix d0 = sum.variable(0);
    d0.subtract(first);
    if (!d0.none()) sum.reset(d0, 0);
    BoolMatrix d2 = sum.variable(2);
    d2.subtract(second);
    if (!d2.none()) sum.reset(d2, 2);
}

void DivConClosure::refresh_y() {
    const int m = s_ / 2;
    y_.place(esum_->lookup(), 0, 0);
    y_.place(fsum_->lookup(), 0, m);
    y_.place(gsum_->lookup(), m, 0);
    y_.place(hsum_->lookup(), m, m);
}

void DivConClosure::refresh_caches() {
    prev_p_ = p_->y_;
    prev_q_ = q_->lookup();
    prev_e1_ = e1_->y_;
    prev_r_ = r_->lookup();
    prev_h2_ = h2_->y_;
}

void DivConClosure::insert_bulk_raw(const BoolMatrix& d) {
    BoolMatrix fresh = d;
    fresh.subtract(x_);
    while (!fresh.none()) {
        std::vector<int> row_cnt(s_, 0), col_cnt(s_, 0);
        fresh.for_each([&](int a, int b) {
            ++row_cnt[a];
            ++col_cnt[b];
        });
        int best = 0, best_cover = -1;
        for (int v = 0; v < s_; ++v) {
            int cover = row_cnt[v] + col_cnt[v] - (fresh.get(v, v) ? 1 : 0);
            if (cover > best_cover) {
                best_cover = cover;
                best = v;
            }
        }
        set_star_raw(best, fresh);
        fresh.subtract(x_);
    }
}

void DivConClosure::init_star(const BoolMatrix& z) {
    if (z.dim() != n_) throw dimension_error("DivConClosure init_star: dimension mismatch");
    x_ = z.padded(s_);
    if (s_ == 1) return; // y_ stays [1]
    const BoolMatrix a = block(x_, 0), b = block(x_, 1), c = block(x_, 2), d = block(x_, 3);
    const BoolMatrix half_ident = BoolMatrix::identity(s_ / 2);

    p_->init_star(d);
    const BoolMatrix& pv = p_->y_;
    q_->init({&a, &half_ident, &half_ident, &half_ident, &b, &pv, &pv, &c});
    e1_->init_star(q_->lookup());
    const BoolMatrix& e1v = e1_->y_;
    r_->init({&d, &half_ident, &half_ident, &half_ident, &c, &e1v, &e1v, &b});
    h2_->init_star(r_->lookup());
    const BoolMatrix& h2v = h2_->y_;

    f1_->init({&e1v, &e1v, &b, &pv});
    g1_->init({&pv, &c, &e1v, &e1v});
    h1_->init({&pv, &c, &e1v, &e1v, &b, &pv});
    e2_->init({&e1v, &b, &h2v, &h2v, &c, &e1v});
    f2_->init({&e1v, &b, &h2v, &h2v});
    g2_->init({&h2v, &h2v, &c, &e1v});

    rebuild_sum(*esum_, e1v, e2_->lookup());
    rebuild_sum(*fsum_, f1_->lookup(), f2_->lookup());
    rebuild_sum(*gsum_, g1_->lookup(), g2_->lookup());
    rebuild_sum(*hsum_, h1_->lookup(), h2v);
    refresh_y();
    refresh_caches();
}

void DivConClosure::set_star(int i, const BoolMatrix& dx) {
    if (i < 0 || i >= n_) throw index_error("DivConClosure set_star: index out of range");
    if (dx.dim() != n_) throw dimension_error("DivConClosure set_star: dimension mismatch");
    set_star_raw(i, dx.padded(s_));
}

void DivConClosure::set_star_raw(int i, const BoolMatrix& dx) {
    BoolMatrix slab = bool_add(row_slab(dx, i), col_slab(dx, i));
    x_ |= slab;
    if (s_ == 1) return;
    const int m = s_ / 2;
    const bool low = i < m;
    const int c = low ? i : i - m; // block-local center
    const BoolMatrix zero(m);
    const BoolMatrix da = low ? block(slab, 0) : zero;
    const BoolMatrix db = block(slab, 1);
    const BoolMatrix dc = block(slab, 2);
    const BoolMatrix dd = low ? zero : block(slab, 3);

    // One pass along the dependency order P, Q, E1, R, H2, then the block
    // polynomials. Every produced growth is pushed to its consumers: logged
    // in full (off-center parts stay latent until an op stamps their cross)
    // and stamped at the center, where the squared occurrences pick up the
    // split of any new witness path at its first and last block crossing.
    if (!low) p_->set_star_raw(c, dd);
    const BoolMatrix dp = grow_delta(p_->y_, prev_p_);

    lazy_occ(*q_, dp, kQP);
    set_occ(*q_, c, da, kQA);
    set_occ(*q_, c, db, kQB);
    set_occ(*q_, c, dp, kQP);
    set_occ(*q_, c, dc, kQC);
    const BoolMatrix dq = grow_delta(q_->lookup(), prev_q_);

    // The centered part of the growth goes through the child's own centered
    // op; composite growth (paths threaded through this node's center have
    // no common center in the child's space) is decomposed into centered
    // sets covering the remaining entries.
    if (low) e1_->set_star_raw(c, dq);
    e1_->insert_bulk_raw(dq);
    const BoolMatrix de1 = grow_delta(e1_->y_, prev_e1_);

    lazy_occ(*r_, de1, kRE1);
    set_occ(*r_, c, dd, kRD);
    set_occ(*r_, c, dc, kRC);
    set_occ(*r_, c, de1, kRE1);
    set_occ(*r_, c, db, kRB);
    const BoolMatrix dr = grow_delta(r_->lookup(), prev_r_);

    if (!low) h2_->set_star_raw(c, dr);
    h2_->insert_bulk_raw(dr);
    const BoolMatrix dh2 = grow_delta(h2_->y_, prev_h2_);

    lazy_occ(*f1_, de1, kF1E1);
    lazy_occ(*f1_, dp, kF1P);
    set_occ(*f1_, c, de1, kF1E1);
    set_occ(*f1_, c, db, kF1B);
    set_occ(*f1_, c, dp, kF1P);

    lazy_occ(*g1_, dp, kG1P);
    lazy_occ(*g1_, de1, kG1E1);
    set_occ(*g1_, c, dp, kG1P);
    set_occ(*g1_, c, dc, kG1C);
    set_occ(*g1_, c, de1, kG1E1);

    lazy_occ(*h1_, dp, kH1P);
    lazy_occ(*h1_, de1, kH1E1);
    set_occ(*h1_, c, dp, kH1P);
    set_occ(*h1_, c, dc, kH1C);
    set_occ(*h1_, c, de1, kH1E1);
    set_occ(*h1_, c, db, kH1B);

    lazy_occ(*e2_, de1, kE2E1);
    lazy_occ(*e2_, dh2, kE2H2);
    set_occ(*e2_, c, de1, kE2E1);
    set_occ(*e2_, c, db, kE2B);
    set_occ(*e2_, c, dh2, kE2H2);
    set_occ(*e2_, c, dc, kE2C);

    lazy_occ(*f2_, de1, kF2E1);
    lazy_occ(*f2_, dh2, kF2H2);
    set_occ(*f2_, c, de1, kF2E1);
    set_occ(*f2_, c, db, kF2B);
    set_occ(*f2_, c, dh2, kF2H2);

    lazy_occ(*g2_, dh2, kG2H2);
    lazy_occ(*g2_, de1, kG2E1);
    set_occ(*g2_, c, dh2, kG2H2);
    set_occ(*g2_, c, dc, kG2C);
    set_occ(*g2_, c, de1, kG2E1);

    rebuild_sum(*esum_, e1_->y_, e2_->lookup());
    rebuild_sum(*fsum_, f1_->lookup(), f2_->lookup());
    rebuild_sum(*gsum_, g1_->lookup(), g2_->lookup());
    rebuild_sum(*hsum_, h1_->lookup(), h2_->y_);
    refresh_y();
    refresh_caches();
}

void DivConClosure::lazy_set_star(const BoolMatrix& dx) {
    if (dx.dim() != n_) throw dimension_error("DivConClosure lazy_set_star: dimension mismatch");
    lazy_set_star_raw(dx.padded(s_));
}

void DivConClosure::lazy_set_star_raw(const BoolMatrix& dx) {
    x_ |= dx;
    if (s_ == 1) return;
    const BoolMatrix da = block(dx, 0), db = block(dx, 1), dc = block(dx, 2), dd = block(dx, 3);
    lazy_occ(*q_, da, kQA);
    lazy_occ(*q_, db, kQB);
    lazy_occ(*q_, dc, kQC);
    lazy_occ(*r_, db, kRB);
    lazy_occ(*r_, dc, kRC);
    lazy_occ(*r_, dd, kRD);
    lazy_occ(*f1_, db, kF1B);
    lazy_occ(*g1_, dc, kG1C);
    lazy_occ(*h1_, dc, kH1C);
    lazy_occ(*h1_, db, kH1B);
    lazy_occ(*e2_, db, kE2B);
    lazy_occ(*e2_, dc, kE2C);
    lazy_occ(*f2_, db, kF2B);
    lazy_occ(*g2_, dc, kG2C);
    p_->lazy_set_star_raw(dd);
    // Maintained values stay put; the logged 1s surface at later eager ops.
}

void DivConClosure::reset_star(const BoolMatrix& dx) {
    if (dx.dim() != n_) throw dimension_error("DivConClosure reset_star: dimension mismatch");
    BoolMatrix padded = dx.padded(s_);
    if (!padded.subset_of(x_)) throw subset_error("DivConClosure reset_star: delta not in X");
    reset_star_raw(padded);
}

void DivConClosure::reset_star_raw(const BoolMatrix& dx) {
    BoolMatrix eff = dx;
    eff &= x_;
    x_.subtract(eff);
    if (s_ == 1) return;
    const BoolMatrix da = block(eff, 0), db = block(eff, 1), dc = block(eff, 2),
                     dd = block(eff, 3);

    p_->reset_star_raw(dd);
    const BoolMatrix dp = shrink_delta(prev_p_, p_->y_);
    reset_occ(*q_, da, kQA);
    reset_occ(*q_, db, kQB);
    reset_occ(*q_, dp, kQP);
    reset_occ(*q_, dc, kQC);
    e1_->reset_star_raw(shrink_delta(prev_q_, q_->lookup()));
    const BoolMatrix de1 = shrink_delta(prev_e1_, e1_->y_);
    reset_occ(*r_, dd, kRD);
    reset_occ(*r_, dc, kRC);
    reset_occ(*r_, de1, kRE1);
    reset_occ(*r_, db, kRB);
    h2_->reset_star_raw(shrink_delta(prev_r_, r_->lookup()));
    const BoolMatrix dh2 = shrink_delta(prev_h2_, h2_->y_);
    reset_occ(*f1_, de1, kF1E1);
    reset_occ(*f1_, db, kF1B);
    reset_occ(*f1_, dp, kF1P);
    reset_occ(*g1_, dp, kG1P);
    reset_occ(*g1_, dc, kG1C);
    reset_occ(*g1_, de1, kG1E1);
    reset_occ(*h1_, dp, kH1P);
    reset_occ(*h1_, dc, kH1C);
    reset_occ(*h1_, de1, kH1E1);
    reset_occ(*h1_, db, kH1B);
    reset_occ(*e2_, de1, kE2E1);
    reset_occ(*e2_, db, kE2B);
    reset_occ(*e2_, dh2, kE2H2);
    reset_occ(*e2_, dc, kE2C);
    reset_occ(*f2_, de1, kF2E1);
    reset_occ(*f2_, db, kF2B);
    reset_occ(*f2_, dh2, kF2H2);
    reset_occ(*g2_, dh2, kG2H2);
    reset_occ(*g2_, dc, kG2C);
    reset_occ(*g2_, de1, kG2E1);

    reset_sum(*esum_, e1_->y_, e2_->lookup());
    reset_sum(*fsum_, f1_->lookup(), f2_->lookup());
    reset_sum(*gsum_, g1_->lookup(), g2_->lookup());
    reset_sum(*hsum_, h1_->lookup(), h2_->y_);
    refresh_y();
    refresh_caches();
}

bool DivConClosure::check_invariants(std::string* diag) const {
    if (s_ == 1) return true;
    for (const PolyK* p : {q_.get(), r_.get(), f1_.get(), g1_.get(), h1_.get(), e2_.get(),
                           f2_.get(), g2_.get()})
        if (!p->check_invariants(diag)) return false;
    for (const PolyDeg2* p : {esum_.get(), fsum_.get(), gsum_.get(), hsum_.get()})
        if (!check_witness_invariant(*p, diag)) return false;
    return p_->check_invariants(diag) && e1_->check_invariants(diag) &&
           h2_->check_invariants(diag);
}

int DivConClosure::lookup_star(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_)
        throw index_error("DivConClosure lookup_star: index out of range");
    return y_.get(x, y) ? 1 : 0;
}

// Both predicates are stated relative to x: composing the delta's slabs
// with x may reproduce entries x already has, but must produce nothing
// genuinely new, and together with x the three slab products must account
// for every delta entry. This is the form the squaring argument consumes.
bool is_i_transitive(const BoolMatrix& dx, int i, const BoolMatrix& x) {
    const BoolMatrix ir = row_slab(dx, i);
    const BoolMatrix jc = col_slab(dx, i);
    BoolMatrix lhs = bool_mul(ir, x);
    lhs.subtract(x);
    if (!lhs.subset_of(ir)) return false;
    BoolMatrix rhs = bool_mul(x, jc);
    rhs.subtract(x);
    return rhs.subset_of(jc);
}

bool is_i_complete(const BoolMatrix& dx, int i, const BoolMatrix& x) {
    const BoolMatrix ir = row_slab(dx, i);
    const BoolMatrix jc = col_slab(dx, i);
    BoolMatrix span = bool_mul(jc, ir);
    span |= bool_mul(x, ir);
    span |= bool_mul(jc, x);
    BoolMatrix extra = span;
    extra.subtract(x);
    if (!extra.subset_of(dx)) return false;
    return dx.subset_of(span);
}

std::pair<bool, bool> delta_props_check(const BoolMatrix& x, const BoolMatrix& dx, int i) {
    const BoolMatrix xs = closure_oracle(x);
    BoolMatrix dstar = closure_oracle(bool_add(x, dx));
    dstar.subtract(xs);
    return {is_i_transitive(dstar, i, xs), is_i_complete(dstar, i, xs)};
}

} // namespace dyntc
