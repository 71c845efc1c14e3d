#include "dyntc/graph.hpp"

#include "dyntc/kernels.hpp"

namespace dyntc {

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::oracle_naive: return "oracle";
        case Backend::log: return "log";
        case Backend::divcon: return "divcon";
        case Backend::dag_counting: return "dag";
    }
    return "?";
}

std::optional<Backend> backend_from_name(const std::string& name) {
    if (name == "oracle" || name == "oracle_naive") return Backend::oracle_naive;
    if (name == "log") return Backend::log;
    if (name == "divcon") return Backend::divcon;
    if (name == "dag" || name == "dag_counting") return Backend::dag_counting;
    return std::nullopt;
}

DynGraph::DynGraph(int n, Backend backend) : DynGraph(n, backend, Options()) {}

DynGraph::DynGraph(int n, Backend backend, Options opts)
    : n_(n), backend_(backend), opts_(opts), edges_(n), oracle_closure_(n) {
    if (n < 1) throw dimension_error("DynGraph: need at least one vertex");
    switch (backend_) {
        case Backend::oracle_naive:
            oracle_closure_ = closure_oracle(edges_);
            break;
        case Backend::log:
            log_ = std::make_unique<LogClosure>(n);
            log_->init_star(edges_);
            break;
        case Backend::divcon:
            divcon_ = std::make_unique<DivConClosure>(n);
            divcon_->init_star(edges_);
            break;
        case Backend::dag_counting:
            dag_ = std::make_unique<DagCounter>(
                n, DagCounter::Options{opts_.epsilon, opts_.seed, opts_.prime});
            break;
    }
}

void DynGraph::check_vertex(int v) const {
    if (v < 1 || v > n_) throw index_error("DynGraph: vertex out of range");
}

BoolMatrix DynGraph::delta_from(const std::vector<Edge>& edges) const {
    BoolMatrix d(n_);
    for (const Edge& e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        d.set(e.u - 1, e.v - 1);
    }
    return d;
}

void DynGraph::init(const std::vector<Edge>& edges) {
    BoolMatrix a = delta_from(edges);
    edges_ = a;
    switch (backend_) {
        case Backend::oracle_naive:
            oracle_closure_ = closure_oracle(edges_);
            break;
        case Backend::log:
            log_->init_star(edges_);
            break;
        case Backend::divcon:
            divcon_->init_star(edges_);
            break;
        case Backend::dag_counting: {
            // Restart the counter and replay the edge set one insert at a
            // time; any prefix of an acyclic set is acyclic.
            dag_ = std::make_unique<DagCounter>(
                n_, DagCounter::Options{opts_.epsilon, opts_.seed, opts_.prime});
            edges_.for_each([&](int x, int y) { dag_->insert_edge(x, y); });
            break;
        }
    }
}

void DynGraph::insert(int v, const std::vector<Edge>& edges) {
    check_vertex(v);
    for (const Edge& e : edges)
        if (e.u != v && e.v != v)
            throw edge_error("DynGraph insert: edge not incident to center vertex");
    BoolMatrix d = delta_from(edges);
    switch (backend_) {
        case Backend::oracle_naive:
            edges_ |= d;
            oracle_closure_ = closure_oracle(edges_);
            break;
        case Backend::log:
            edges_ |= d;
            log_->set_star(v - 1, d);
            break;
        case Backend::divcon:
            edges_ |= d;
            divcon_->set_star(v - 1, d);
            break;
        case Backend::dag_counting:
            d.for_each([&](int x, int y) {
                if (!edges_.get(x, y)) {
                    dag_->insert_edge(x, y);
                    edges_.set(x, y);
                }
            });
            break;
    }
}

void DynGraph::remove(const std::vector<Edge>& edges) {
    BoolMatrix d = delta_from(edges);
    if (!d.subset_of(edges_)) throw subset_error("DynGraph remove: edge not present");
    switch (backend_) {
        case Backend::oracle_naive:
            edges_.subtract(d);
            oracle_closure_ = closure_oracle(edges_);
            break;
        case Backend::log:
            edges_.subtract(d);
            log_->reset_star(d);
            break;
        case Backend::divcon:
            edges_.subtract(d);
            divcon_->reset_star(d);
            break;
        case Backend::dag_counting:
            d.for_each([&](int x, int y) {
                dag_->delete_edge(x, y);
                edges_.clear(x, y);
            });
            break;
    }
}

int DynGraph::query(int x, int y) const {
    check_vertex(x);
    check_vertex(y);
    switch (backend_) {
        case Backend::oracle_naive:
            return oracle_closure_.get(x - 1, y - 1) ? 1 : 0;
        case Backend::log:
            return log_->lookup_star(x - 1, y - 1);
        case Backend::divcon:
            return divcon_->lookup_star(x - 1, y - 1);
        case Backend::dag_counting:
            return dag_->query(x - 1, y - 1);
    }
    return 0;
}

} // namespace dyntc
