#include "dyntc/trace.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace dyntc {

const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::init: return "INIT";
        case OpKind::insert: return "INSERT";
        case OpKind::remove: return "DELETE";
        case OpKind::query: return "QUERY";
    }
    return "?";
}

const char* profile_name(Profile p) {
    switch (p) {
        case Profile::mixed: return "mixed";
        case Profile::incremental: return "incremental";
        case Profile::decremental: return "decremental";
        case Profile::dag_mixed: return "dag-mixed";
    }
    return "?";
}

bool profile_from_name(const std::string& s, Profile& out) {
    if (s == "mixed") out = Profile::mixed;
    else if (s == "incremental") out = Profile::incremental;
    else if (s == "decremental") out = Profile::decremental;
    else if (s == "dag-mixed" || s == "dag_mixed") out = Profile::dag_mixed;
    else return false;
    return true;
}

namespace {

std::vector<Edge> read_edges(std::istringstream& ls, int n, const std::string& line) {
    int k = 0;
    if (!(ls >> k) || k < 0) throw trace_error("trace: bad edge count in: " + line);
    std::vector<Edge> edges;
    edges.reserve(k);
    for (int j = 0; j < k; ++j) {
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw trace_error("trace: truncated edge list in: " + line);
        if (u < 1 || u > n || v < 1 || v > n)
            throw trace_error("trace: vertex out of range in: " + line);
        edges.push_back({u, v});
    }
    return edges;
}

} // namespace

Trace parse_trace(std::istream& in) {
    Trace t;
    std::string line;
    bool have_n = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string verb;
        if (!(ls >> verb)) continue;
        if (verb == "N") {
            if (!(ls >> t.n) || t.n < 1) throw trace_error("trace: bad N line");
            have_n = true;
            continue;
        }
        if (!have_n) throw trace_error("trace: missing N header");
        TraceOp op;
        if (verb == "INIT") {
            op.kind = OpKind::init;
            op.edges = read_edges(ls, t.n, line);
        } else if (verb == "INSERT") {
            op.kind = OpKind::insert;
            if (!(ls >> op.center) || op.center < 1 || op.center > t.n)
                throw trace_error("trace: bad INSERT center in: " + line);
            op.edges = read_edges(ls, t.n, line);
        } else if (verb == "DELETE") {
            op.kind = OpKind::remove;
            op.edges = read_edges(ls, t.n, line);
        } else if (verb == "QUERY") {
            op.kind = OpKind::query;
            if (!(ls >> op.qx >> op.qy)) throw trace_error("trace: bad QUERY in: " + line);
            if (op.qx < 1 || op.qx > t.n || op.qy < 1 || op.qy > t.n)
                throw trace_error("trace: QUERY vertex out of range in: " + line);
        } else {
            throw trace_error("trace: unknown verb: " + verb);
        }
        t.ops.push_back(std::move(op));
    }
    if (!have_n) throw trace_error("trace: empty input");
    return t;
}

Trace parse_trace_string(const std::string& s) {
    std::istringstream in(s);
    return parse_trace(in);
}

void write_trace(std::ostream& out, const Trace& t) {
    out << "N " << t.n << '\n';
    for (const TraceOp& op : t.ops) {
        switch (op.kind) {
            case OpKind::init:
                out << "INIT " << op.edges.size();
                for (const Edge& e : op.edges) out << ' ' << e.u << ' ' << e.v;
                out << '\n';
                break;
            case OpKind::insert:
                out << "INSERT " << op.center << ' ' << op.edges.size();
                for (const Edge& e : op.edges) out << ' ' << e.u << ' ' << e.v;
                out << '\n';
                break;
            case OpKind::remove:
                out << "DELETE " << op.edges.size();
                for (const Edge& e : op.edges) out << ' ' << e.u << ' ' << e.v;
                out << '\n';
                break;
            case OpKind::query:
                out << "QUERY " << op.qx << ' ' << op.qy << '\n';
                break;
        }
    }
}

std::string format_trace(const Trace& t) {
    std::ostringstream out;
    write_trace(out, t);
    return out.str();
}

namespace {

// Mutable edge-set mirror used while generating.
struct EdgePool {
    explicit EdgePool(int n) : n(n), present(static_cast<size_t>(n) * n, 0) {}
    int n;
    std::vector<char> present;
    std::vector<Edge> live;
    bool has(int u, int v) const { return present[static_cast<size_t>(u - 1) * n + v - 1]; }
    void add(int u, int v) {
        if (has(u, v)) return;
        present[static_cast<size_t>(u - 1) * n + v - 1] = 1;
        live.push_back({u, v});
    }
    void drop_at(size_t idx) {
        Edge e = live[idx];
        present[static_cast<size_t>(e.u - 1) * n + e.v - 1] = 0;
        live[idx] = live.back();
        live.pop_back();
    }
};

} // namespace

Trace generate_trace(int n, int length, Profile profile, uint64_t seed) {
    if (n < 1) throw trace_error("generate_trace: n must be >= 1");
    if (length < 0) throw trace_error("generate_trace: negative length");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> vtx(1, n);
    auto coin = [&](double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
    };

    // dag-mixed hides a random topological order and only inserts forward.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> rank(n + 1, 0);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    auto forward = [&](int u, int v) { return rank[u] < rank[v]; };

    Trace t;
    t.n = n;
    EdgePool pool(n);

    // Initial edge set: empty for incremental, dense for decremental (the
    // O(n)-amortized deletion regime needs about n^2 resets to drain one
    // init), supercritical otherwise so updates touch real closure mass.
    TraceOp init;
    init.kind = OpKind::init;
    double init_density;
    switch (profile) {
        case Profile::incremental: init_density = 0.0; break;
        case Profile::decremental: init_density = 0.25; break;
        default: init_density = 4.0 / n; break;
    }
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            if (profile == Profile::dag_mixed && !forward(u, v)) continue;
            if (coin(init_density)) {
                pool.add(u, v);
                init.edges.push_back({u, v});
            }
        }
    t.ops.push_back(std::move(init));

    for (int step = 0; step < length; ++step) {
        double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        bool do_query = r < 0.3;
        bool do_insert;
        switch (profile) {
            case Profile::incremental: do_insert = true; break;
            case Profile::decremental: do_insert = false; break;
            default: do_insert = r < 0.65; break;
        }
        if (!do_query && !do_insert && pool.live.empty()) do_query = true;
        if (do_query) {
            TraceOp op;
            op.kind = OpKind::query;
            op.qx = vtx(rng);
            op.qy = vtx(rng);
            t.ops.push_back(std::move(op));
        } else if (do_insert) {
            TraceOp op;
            op.kind = OpKind::insert;
            op.center = vtx(rng);
            int want = 1 + static_cast<int>(rng() % 3);
            for (int tries = 0; tries < 4 * want; ++tries) {
                int u = op.center, v = vtx(rng);
                if (rng() & 1) std::swap(u, v);
                if (u == v || pool.has(u, v)) continue;
                if (profile == Profile::dag_mixed && !forward(u, v)) continue;
                bool dup = false;
                for (const Edge& e : op.edges)
                    if (e.u == u && e.v == v) dup = true;
                if (dup) continue;
                op.edges.push_back({u, v});
                if (static_cast<int>(op.edges.size()) == want) break;
            }
            for (const Edge& e : op.edges) pool.add(e.u, e.v);
            t.ops.push_back(std::move(op));
        } else {
            TraceOp op;
            op.kind = OpKind::remove;
            int want = 1 + static_cast<int>(rng() % 3);
            for (int j = 0; j < want && !pool.live.empty(); ++j) {
                size_t idx = rng() % pool.live.size();
                op.edges.push_back(pool.live[idx]);
                pool.drop_at(idx);
            }
            t.ops.push_back(std::move(op));
        }
    }
    return t;
}

} // namespace dyntc
