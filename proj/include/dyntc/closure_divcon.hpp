#pragma once

#include <memory>
#include <string>
#include <utility>

#include "dyntc/poly.hpp"

namespace dyntc {

// Fully dynamic Kleene closure by recursive 2x2-block decomposition.
//
// A node of size s keeps the twelve polynomials of the split closure
// (Q = A+BP^2C, R = D+CE1^2B, F1 = E1^2BP, G1 = PCE1^2, H1 = PCE1^2BP,
// E2 = E1BH2^2CE1, F2 = E1BH2^2, G2 = H2^2CE1 and the degree-1 sums
// E,F,G,H) over s/2-sized blocks, plus three recursive closures
// P = D*, E1 = Q*, H2 = R*. A centered set fully updates one of the two
// closure halves and lazily logs into the other; their sum stays exact,
// so queries are a single read of the maintained Y.
//
// Every occurrence of P, E1, H2 in the polynomials appears squared; that is
// what lets their non-centered closure deltas be fed as row/column slabs.
class DivConClosure {
public:
    explicit DivConClosure(int n);

    void init_star(const BoolMatrix& z);
    void set_star(int i, const BoolMatrix& dx);
    void lazy_set_star(const BoolMatrix& dx);
    void reset_star(const BoolMatrix& dx);
    int lookup_star(int x, int y) const;

    int dim() const { return n_; }
    const BoolMatrix& input() const { return x_; }
    BoolMatrix input_matrix() const { return x_.shrunk(n_); }
    BoolMatrix maintained_matrix() const { return y_.shrunk(n_); }
    BoolMatrix closure_matrix() const { return maintained_matrix(); }
    // Deep re-derivation of every polynomial's counters in the tree.
    bool check_invariants(std::string* diag = nullptr) const;

private:
    struct ChildTag {};
    DivConClosure(ChildTag, int pow2n);
    void build();

    // Internal entry points over the padded power-of-two space.
    void set_star_raw(int i, const BoolMatrix& dx);
    void lazy_set_star_raw(const BoolMatrix& dx);
    void reset_star_raw(const BoolMatrix& dx);

    BoolMatrix block(const BoolMatrix& m, int which) const; // 0=A 1=B 2=C 3=D
    BoolMatrix grow_delta(const BoolMatrix& cur, const BoolMatrix& prev) const;
    BoolMatrix shrink_delta(const BoolMatrix& prev, const BoolMatrix& cur) const;
    void rebuild_sum(PolyDeg2& sum, const BoolMatrix& first, const BoolMatrix& second);
    void reset_sum(PolyDeg2& sum, const BoolMatrix& first, const BoolMatrix& second);
    void refresh_y();
    void refresh_caches();

    int n_;    // external dimension
    int s_;    // padded power-of-two size of this node
    BoolMatrix x_, y_;
    BoolMatrix ident_;

    std::unique_ptr<DivConClosure> p_, e1_, h2_; // P = D*, E1 = Q*, H2 = R*
    std::unique_ptr<PolyK> q_, r_, f1_, g1_, h1_, e2_, f2_, g2_;
    std::unique_ptr<PolyDeg2> esum_, fsum_, gsum_, hsum_;
    BoolMatrix prev_p_, prev_q_, prev_e1_, prev_r_, prev_h2_;
    // Applies an arbitrary edge-set insertion as a sequence of centered
    // sets, greedily grouping the fresh entries by the cross that covers
    // the most of them.
    void insert_bulk_raw(const BoolMatrix& d);
};

// Test-support predicates from the update-delta lemmas.
bool is_i_transitive(const BoolMatrix& dx, int i, const BoolMatrix& x);
bool is_i_complete(const BoolMatrix& dx, int i, const BoolMatrix& x);
// For dx i-centered: is (X+dx)* - X* i-transitive and i-complete wrt X*?
std::pair<bool, bool> delta_props_check(const BoolMatrix& x, const BoolMatrix& dx, int i);

} // namespace dyntc
