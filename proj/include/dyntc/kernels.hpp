#pragma once

#include "dyntc/bitmat.hpp"

namespace dyntc {

// Dense Boolean kernels. The hot paths are word-parallel and OpenMP-parallel
// over rows; dyntc::serial holds straightforward scalar versions kept as
// reference implementations for tests and the kernel benchmark.

// result[x,z] = OR_y (X[x,y] AND Y[y,z])
BoolMatrix bool_mul(const BoolMatrix& x, const BoolMatrix& y);

// Entrywise OR.
BoolMatrix bool_add(const BoolMatrix& x, const BoolMatrix& y);

// Entrywise AND NOT; requires dx subset of x.
BoolMatrix bool_sub(const BoolMatrix& x, const BoolMatrix& dx);

// Keep only row i / column i of x.
BoolMatrix row_slab(const BoolMatrix& x, int i);
BoolMatrix col_slab(const BoolMatrix& x, int i);

// Reflexive-transitive closure by Floyd-Warshall-style iteration over
// bit-packed rows. Reference closure used as oracle by every other module.
BoolMatrix closure_oracle(const BoolMatrix& x);

// Kleene closure by divide and conquer on 2x2 block partitions
// (E = (A + B D* C)*, F = E B D*, G = D* C E, H = D* + D* C E B D*).
// Pads to a power of two internally.
BoolMatrix closure_munro(const BoolMatrix& x);

// Same closure through the twelve-polynomial split used by the dynamic
// structure (P = D*, E1 = (A+BP^2C)*, H2 = (D+CE1^2B)*, E = E1+E2, ...).
// Exposed as a second entry point for cross-checking.
BoolMatrix closure_munro_tandem(const BoolMatrix& x);

// Witness counts: out[x,z] = |{y : X[x,y] = 1 and Y[y,z] = 1}| computed by
// word-AND + popcount against a transposed right factor.
IntMatrix int_product(const BoolMatrix& x, const BoolMatrix& y);

namespace serial {

BoolMatrix bool_mul(const BoolMatrix& x, const BoolMatrix& y);
BoolMatrix closure(const BoolMatrix& x);
IntMatrix int_product(const BoolMatrix& x, const BoolMatrix& y);

} // namespace serial

} // namespace dyntc
