#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dyntc/bitmat.hpp"
#include "dyntc/closure_divcon.hpp"
#include "dyntc/closure_log.hpp"
#include "dyntc/dag_counter.hpp"

namespace dyntc {

enum class Backend { oracle_naive, log, divcon, dag_counting };

const char* backend_name(Backend b);
std::optional<Backend> backend_from_name(const std::string& name);

struct Edge {
    int u; // 1-based, as in traces and the CLI
    int v;
};

// User-facing dynamic graph: init with an edge set, v-centered insertions,
// arbitrary deletions, reachability queries. Vertices are 1-based here;
// the backends are 0-based.
class DynGraph {
public:
    struct Options {
        double epsilon = 0.5;    // dag_counting lookup/update trade-off
        uint64_t seed = 1;       // dag_counting prime selection
        std::optional<uint64_t> prime; // dag_counting prime override
    };

    DynGraph(int n, Backend backend);
    DynGraph(int n, Backend backend, Options opts);

    void init(const std::vector<Edge>& edges);
    void insert(int v, const std::vector<Edge>& edges);
    void remove(const std::vector<Edge>& edges); // the Delete operation
    int query(int x, int y) const;

    int dim() const { return n_; }
    Backend backend() const { return backend_; }
    const BoolMatrix& edges() const { return edges_; }

private:
    void check_vertex(int v) const;
    BoolMatrix delta_from(const std::vector<Edge>& edges) const;

    int n_;
    Backend backend_;
    Options opts_;
    BoolMatrix edges_; // current edge set, 0-based mirror
    // backend state (exactly one is live)
    std::unique_ptr<LogClosure> log_;
    std::unique_ptr<DivConClosure> divcon_;
    std::unique_ptr<DagCounter> dag_;
    BoolMatrix oracle_closure_; // oracle_naive: closure recomputed per update
};

} // namespace dyntc
