#include "dyntc/replay.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "dyntc/work.hpp"

namespace dyntc {

namespace {

void apply_op(DynGraph& g, const TraceOp& op, int* query_result) {
    switch (op.kind) {
        case OpKind::init: g.init(op.edges); break;
        case OpKind::insert: g.insert(op.center, op.edges); break;
        case OpKind::remove: g.remove(op.edges); break;
        case OpKind::query: *query_result = g.query(op.qx, op.qy); break;
    }
}

} // namespace

ReplayResult replay_trace(const Trace& trace, Backend backend, const ReplayOptions& opts) {
    ReplayResult out;
    DynGraph g(trace.n, backend, opts.graph);
    std::optional<DynGraph> shadow;
    const bool checking = opts.check || opts.sweep_stride > 0;
    if (checking && backend != Backend::oracle_naive)
        shadow.emplace(trace.n, Backend::oracle_naive);

    int idx = 0;
    for (const TraceOp& op : trace.ops) {
        int result = -1;
        const uint64_t w0 = work::read();
        const auto t0 = std::chrono::steady_clock::now();
        apply_op(g, op, &result);
        const auto t1 = std::chrono::steady_clock::now();
        out.records.push_back(BenchRecord{
            backend, trace.n, idx, op.kind, work::read() - w0,
            static_cast<uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()),
            result});
        if (shadow) {
            int unused = -1;
            apply_op(*shadow, op, &unused);
            if (opts.check && op.kind == OpKind::query) {
                int want = shadow->query(op.qx, op.qy);
                if (result != want) {
                    out.mismatch = Mismatch{idx, op.qx, op.qy, result, want};
                    return out;
                }
            }
            if (opts.sweep_stride > 0 && (idx + 1) % opts.sweep_stride == 0) {
                for (int x = 1; x <= trace.n; ++x)
                    for (int y = 1; y <= trace.n; ++y) {
                        int got = g.query(x, y);
                        int want = shadow->query(x, y);
                        if (got != want) {
                            out.mismatch = Mismatch{idx, x, y, got, want};
                            return out;
                        }
                    }
            }
        }
        ++idx;
    }
    return out;
}

std::string csv_header() { return "backend,n,op_index,kind,work_units,ns,result"; }

std::string csv_line(const BenchRecord& r) {
    std::ostringstream s;
    s << backend_name(r.backend) << ',' << r.n << ',' << r.op_index << ','
      << op_kind_name(r.kind) << ',' << r.work_units << ',' << r.ns << ',' << r.result;
    return s.str();
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t m = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        double lx = std::log(xs[i]);
        double ly = std::log(std::max(ys[i], 1e-9));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0) return 0.0;
    return (m * sxy - sx * sy) / denom;
}

std::vector<TrendPoint> measure_trend(Backend backend, Profile profile,
                                      const std::vector<int>& sizes, int length, uint64_t seed) {
    std::vector<TrendPoint> points;
    for (int n : sizes) {
        Trace t = generate_trace(n, length < 0 ? n : length, profile, seed + n);
        ReplayResult rr = replay_trace(t, backend);
        uint64_t update_units = 0, reset_units = 0;
        int updates = 0, resets = 0;
        for (const BenchRecord& r : rr.records) {
            if (r.kind == OpKind::query) continue;
            update_units += r.work_units;
            ++updates;
            if (r.kind == OpKind::remove) {
                reset_units += r.work_units;
                ++resets;
            }
        }
        points.push_back(TrendPoint{
            n, updates ? static_cast<double>(update_units) / updates : 0.0,
            resets ? static_cast<double>(reset_units) / resets : 0.0});
    }
    return points;
}

} // namespace dyntc
