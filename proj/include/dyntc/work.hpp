#pragma once

#include <cstdint>

namespace dyntc::work {

// Thread-local tally of inner-loop triple visits performed by the dynamic
// polynomial machinery. The benchmark harness snapshots it around each
// operation; it is the artifact's proxy for amortized time bounds.
uint64_t& counter();

inline void add(uint64_t k = 1) { counter() += k; }
inline uint64_t read() { return counter(); }
inline void reset() { counter() = 0; }

} // namespace dyntc::work
