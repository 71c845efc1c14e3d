#pragma once

#include <cstdint>
#include <string>

#include "dyntc/poly.hpp"

namespace dyntc {

// Definition-level checkers, kept independent of the maintained counters so
// they can re-verify them. Used by the harness audit verb and the tests.

// Brute-force witness count for term a of a degree-2 polynomial: the number
// of y with X1[x,y] = 1, X2[y,z] = 1 and the timestamp predicate true.
int64_t witness_count_bruteforce(const PolyDeg2& p, int a, int x, int z);

// Re-derives every Prod_a entry and the aggregate from the definition.
bool check_witness_invariant(const PolyDeg2& p, std::string* diag = nullptr);

struct AuditReport {
    int sequences = 0;
    int operations = 0;
    int failures = 0;
    std::string first_failure;
};

// Random degree-2 polynomial workload with the witness invariant re-checked
// every `stride` operations.
AuditReport audit_poly(int n, int h, int length, int sequences, uint64_t seed, int stride);

// Random lazy integer matrix workload checked entrywise against an eagerly
// updated dense mirror every `stride` operations.
AuditReport audit_intmat(int n, double epsilon, bool with_modulus, int length, int sequences,
                         uint64_t seed, int stride);

} // namespace dyntc
