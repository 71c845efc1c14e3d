#pragma once

#include <cstdint>
#include <vector>

#include "dyntc/bitmat.hpp"

namespace dyntc {

enum class ResetPolicy {
    strict, // delta must be contained in the variable, else subset_error
    clip    // silently ignore delta entries the variable does not hold
};

// Lazy reevaluation of P = sum_a X1^a * X2^a over Boolean matrices.
//
// Maintains per-term witness counters Prod_a and the aggregate S so that the
// binarized S is a value Y with M <= Y <= P: lookups never report a spurious
// 1, may under-report 1s deferred by lazy_set, and track every change made
// by the non-lazy operations. Witness membership is decided by the timestamp
// predicate comparing the last 0->1 flips of the two entries against the last
// row/column operations covering them.
//
// Variables are indexed v in [0, 2h): even v is the left factor of term v/2,
// odd v the right factor.
class PolyDeg2 {
public:
    PolyDeg2(int n, int h);

    void init(const std::vector<const BoolMatrix*>& vals); // 2h matrices
    void set_row(int i, const BoolMatrix& dx, int v);
    void set_col(int i, const BoolMatrix& dx, int v);
    void lazy_set(const BoolMatrix& dx, int v);
    void reset(const BoolMatrix& dx, int v, ResetPolicy policy = ResetPolicy::strict);

    const BoolMatrix& lookup() const { return y_; }
    bool lookup_bit(int x, int y) const { return y_.get(x, y); }

    int dim() const { return n_; }
    int terms() const { return h_; }
    int64_t time() const { return time_; }

    // Introspection for invariant audits and tests.
    const BoolMatrix& variable(int v) const { return var_.at(v); }
    const IntMatrix& prod(int a) const { return prod_.at(a); }
    const IntMatrix& aggregate() const { return s_; }
    int64_t last_flip(int v, int x, int y) const { return flip_.at(v).at(x, y); }
    int64_t last_row(int v, int i) const { return lastrow_.at(v).at(i); }
    int64_t last_col(int v, int i) const { return lastcol_.at(v).at(i); }
    int64_t phi(int a) const;
    bool witness_counted(int a, int x, int y, int z) const { return pred(a, x, y, z); }

private:
    void check_var(int v) const;
    void check_index(int i) const;
    bool pred(int a, int x, int y, int z) const; // the timestamp predicate
    void bump(int a, int x, int z);
    void drop(int a, int x, int z);
    void absorb(int v, const BoolMatrix& newly); // OR new bits in, stamp flips
    void touch(int v, int i);                    // move i to recency front

    int n_;
    int h_;
    int64_t time_ = 0;
    std::vector<BoolMatrix> var_;  // 2h copies
    std::vector<BoolMatrix> varT_; // transposes, for column iteration
    std::vector<IntMatrix> prod_;  // h witness counters
    IntMatrix s_;                  // S[x,y] = |{a : Prod_a[x,y] > 0}|
    BoolMatrix y_;                 // binarized S
    std::vector<IntMatrix> flip_;  // last 0->1 flip per entry, 0 = undefined
    std::vector<std::vector<int64_t>> lastrow_, lastcol_;
    // Recency list per variable: indices ordered by most recent
    // init/set_row/set_col touch, array-linked for O(1) move-to-front.
    std::vector<std::vector<int32_t>> rprev_, rnext_;
    std::vector<int32_t> rhead_;
};

// Degree-k polynomial P = sum_a X_0^a ... X_{k-1}^a maintained through the
// equivalent degree-2 form: per term and split point b, prefix chains
// L_{b,j} and suffix chains R_{b,j} of single products, plus one top
// instance Y over all h*(k+1) split products. Requires k >= 2; degree-1
// polynomials are a PolyDeg2 with the right factor pinned to I.
class PolyK {
public:
    PolyK(int n, int h, int k);

    void init(const std::vector<const BoolMatrix*>& vals); // h*k matrices
    void set_row(int i, const BoolMatrix& dx, int a, int pos);
    void set_col(int i, const BoolMatrix& dx, int a, int pos);
    void lazy_set(const BoolMatrix& dx, int a, int pos);
    void reset(const BoolMatrix& dx, int a, int pos, ResetPolicy policy = ResetPolicy::strict);

    const BoolMatrix& lookup() const { return y_.lookup(); }
    bool lookup_bit(int x, int y) const { return y_.lookup_bit(x, y); }

    int dim() const { return n_; }
    int terms() const { return h_; }
    int degree() const { return k_; }

    const BoolMatrix& variable(int a, int pos) const;
    const PolyDeg2& top() const { return y_; }
    // Re-derives every chain instance's counters from the definition.
    bool check_invariants(std::string* diag = nullptr) const;

private:
    struct ChainRef {
        int base;  // offset into chain_
        int len;   // chain length
    };
    PolyDeg2& lchain(int a, int b, int j);
    PolyDeg2& rchain(int a, int b, int j);
    const BoolMatrix& ltop_value(int a, int b) const;
    const BoolMatrix& rtop_value(int a, int b) const;
    void check_args(int a, int pos) const;

    int n_, h_, k_;
    BoolMatrix ident_, zero_;
    std::vector<PolyDeg2> chain_;
    std::vector<ChainRef> lref_, rref_; // indexed a*(k+1)+b
    PolyDeg2 y_;
};

} // namespace dyntc
