#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dyntc/trace.hpp"

namespace dyntc {

// One executed trace operation.
struct BenchRecord {
    Backend backend;
    int n;
    int op_index;
    OpKind kind;
    uint64_t work_units;
    uint64_t ns;
    int result; // query result, -1 otherwise
};

struct Mismatch {
    int op_index;
    int x, y; // 1-based pair
    int got, want;
};

struct ReplayOptions {
    bool check = false;    // compare every QUERY against the oracle
    int sweep_stride = 0;  // >0: all-pairs sweep vs oracle every k ops
    DynGraph::Options graph;
};

struct ReplayResult {
    std::vector<BenchRecord> records;
    std::optional<Mismatch> mismatch; // present => replay aborted there
};

// Executes a trace on one backend; with checking on, a shadow oracle_naive
// instance replays alongside and the first disagreement aborts the run.
ReplayResult replay_trace(const Trace& trace, Backend backend, const ReplayOptions& opts = ReplayOptions());

std::string csv_header();
std::string csv_line(const BenchRecord& r);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct TrendPoint {
    int n;
    double mean_update_units; // INIT/INSERT/DELETE ops
    double mean_reset_units;  // DELETE ops only
};

// Mean instrumented work per update for one (backend, profile) at each n.
std::vector<TrendPoint> measure_trend(Backend backend, Profile profile,
                                      const std::vector<int>& sizes, int length, uint64_t seed);

} // namespace dyntc
