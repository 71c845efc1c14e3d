// Workload generation, trace replay with oracle cross-checking, benchmark
// reporting, and invariant audits for the dynamic closure library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dyntc/audit.hpp"
#include "dyntc/replay.hpp"
#include "dyntc/trace.hpp"

using namespace dyntc;

namespace {

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

Trace load_trace(const std::string& path) {
    if (path.empty() || path == "-") return parse_trace(std::cin);
    std::ifstream in(path);
    if (!in) throw trace_error("cannot open trace file: " + path);
    return parse_trace(in);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw trace_error("cannot open output file: " + path);
    return file;
}

struct BackendArgs {
    std::string backend = "divcon";
    double epsilon = 0.5;
    uint64_t seed = 1;
    uint64_t prime = 0;

    Backend parse() const {
        auto b = backend_from_name(backend);
        if (!b) throw CLI::ValidationError("--backend", "unknown backend: " + backend);
        return *b;
    }
    DynGraph::Options options() const {
        DynGraph::Options o;
        o.epsilon = epsilon;
        o.seed = seed;
        if (prime) o.prime = prime;
        return o;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fully dynamic transitive closure harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a deterministic workload trace");
    int gen_n = 16, gen_len = 100;
    std::string gen_profile = "mixed", gen_out;
    uint64_t gen_seed = 1;
    gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--len", gen_len, "operation count after INIT");
    gen->add_option("--profile", gen_profile, "mixed|incremental|decremental|dag-mixed");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // replay
    auto* replay = app.add_subcommand("replay", "execute a trace on a backend");
    std::string rep_trace, rep_out;
    BackendArgs rep_backend;
    bool rep_check = false;
    int rep_stride = 0;
    replay->add_option("--trace", rep_trace, "trace file (default stdin)");
    replay->add_option("--backend", rep_backend.backend, "oracle|log|divcon|dag");
    replay->add_flag("--check", rep_check, "verify every QUERY against the oracle");
    replay->add_option("--sweep-stride", rep_stride,
                       "all-pairs oracle sweep every k operations (0 = off)");
    replay->add_option("--epsilon", rep_backend.epsilon, "dag backend buffering exponent");
    replay->add_option("--seed", rep_backend.seed, "dag backend prime seed");
    replay->add_option("--prime", rep_backend.prime, "dag backend prime override");
    replay->add_option("--out", rep_out, "CSV output (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "per-op statistics and scaling trends");
    std::string bench_sizes = "32,64,128,256", bench_profile = "mixed",
                bench_backends = "divcon", bench_out;
    int bench_reps = 1, bench_len = -1;
    uint64_t bench_seed = 1;
    bench->add_option("--n", bench_sizes, "comma-separated sizes");
    bench->add_option("--profile", bench_profile, "workload profile");
    bench->add_option("--backends", bench_backends, "comma-separated backends");
    bench->add_option("--reps", bench_reps, "repetitions per size")->check(CLI::PositiveNumber);
    bench->add_option("--len", bench_len, "trace length (-1: n for mixed, n^2/4 decremental)");
    bench->add_option("--seed", bench_seed, "workload seed");
    bench->add_option("--out", bench_out, "per-op CSV output (default stdout)");

    // audit
    auto* audit = app.add_subcommand("audit", "re-verify maintained counters by definition");
    std::string audit_kind = "poly";
    int audit_n = 8, audit_h = 2, audit_len = 100, audit_seqs = 10, audit_stride = 1;
    uint64_t audit_seed = 1;
    double audit_eps = 0.5;
    bool audit_mod = false;
    audit->add_option("--kind", audit_kind, "poly|intmat");
    audit->add_option("--n", audit_n, "dimension");
    audit->add_option("--terms", audit_h, "terms (poly)");
    audit->add_option("--len", audit_len, "operations per sequence");
    audit->add_option("--sequences", audit_seqs, "number of sequences");
    audit->add_option("--stride", audit_stride, "check every k operations");
    audit->add_option("--seed", audit_seed, "seed");
    audit->add_option("--epsilon", audit_eps, "buffering exponent (intmat)");
    audit->add_flag("--modulus", audit_mod, "use a random 61-bit prime modulus (intmat)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Profile prof;
            if (!profile_from_name(gen_profile, prof))
                throw trace_error("unknown profile: " + gen_profile);
            std::ofstream file;
            std::ostream& out = open_out(file, gen_out);
            write_trace(out, generate_trace(gen_n, gen_len, prof, gen_seed));
            return 0;
        }

        if (*replay) {
            Trace t = load_trace(rep_trace);
            ReplayOptions opts;
            opts.check = rep_check;
            opts.sweep_stride = rep_stride;
            opts.graph = rep_backend.options();
            ReplayResult rr = replay_trace(t, rep_backend.parse(), opts);
            if (rr.mismatch) {
                const Mismatch& m = *rr.mismatch;
                std::cout << "MISMATCH op=" << m.op_index << " x=" << m.x << " y=" << m.y
                          << " got=" << m.got << " want=" << m.want << "\n";
                return 1;
            }
            std::ofstream file;
            std::ostream& out = open_out(file, rep_out);
            out << csv_header() << '\n';
            for (const BenchRecord& r : rr.records) out << csv_line(r) << '\n';
            return 0;
        }

        if (*bench) {
            Profile prof;
            if (!profile_from_name(bench_profile, prof))
                throw trace_error("unknown profile: " + bench_profile);
            std::vector<int> sizes = parse_sizes(bench_sizes);
            std::ofstream file;
            std::ostream& out = open_out(file, bench_out);
            out << csv_header() << '\n';
            std::stringstream aggregate;
            for (const std::string& name : [&] {
                     std::vector<std::string> v;
                     std::stringstream ss(bench_backends);
                     std::string item;
                     while (std::getline(ss, item, ','))
                         if (!item.empty()) v.push_back(item);
                     return v;
                 }()) {
                auto b = backend_from_name(name);
                if (!b) throw trace_error("unknown backend: " + name);
                std::vector<double> xs, yu, yr;
                for (int n : sizes) {
                    int len = bench_len;
                    if (len < 0) len = (prof == Profile::decremental) ? n * n / 4 : n;
                    uint64_t update_units = 0, reset_units = 0, update_ns = 0;
                    int updates = 0, resets = 0;
                    for (int rep = 0; rep < bench_reps; ++rep) {
                        Trace t = generate_trace(n, len, prof, bench_seed + rep * 1000 + n);
                        ReplayResult rr = replay_trace(t, *b);
                        for (const BenchRecord& r : rr.records) {
                            out << csv_line(r) << '\n';
                            if (r.kind == OpKind::query) continue;
                            update_units += r.work_units;
                            update_ns += r.ns;
                            ++updates;
                            if (r.kind == OpKind::remove) {
                                reset_units += r.work_units;
                                ++resets;
                            }
                        }
                    }
                    double mu = updates ? double(update_units) / updates : 0;
                    double mr = resets ? double(reset_units) / resets : 0;
                    aggregate << "# " << name << " n=" << n << " updates=" << updates
                              << " mean_update_units=" << mu << " mean_reset_units=" << mr
                              << " mean_update_ns=" << (updates ? update_ns / updates : 0)
                              << '\n';
                    xs.push_back(n);
                    yu.push_back(std::max(1.0, mu));
                    yr.push_back(std::max(1.0, mr));
                }
                if (xs.size() > 1) {
                    aggregate << "# " << name << " update_units_slope=" << loglog_slope(xs, yu)
                              << " reset_units_slope=" << loglog_slope(xs, yr) << '\n';
                }
            }
            out << aggregate.str();
            return 0;
        }

        if (*audit) {
            AuditReport rep;
            if (audit_kind == "poly") {
                rep = audit_poly(audit_n, audit_h, audit_len, audit_seqs, audit_seed,
                                 audit_stride);
            } else if (audit_kind == "intmat") {
                rep = audit_intmat(audit_n, audit_eps, audit_mod, audit_len, audit_seqs,
                                   audit_seed, audit_stride);
            } else {
                throw trace_error("unknown audit kind: " + audit_kind);
            }
            if (rep.failures) {
                std::cout << "AUDIT-FAIL " << rep.first_failure << "\n";
                return 1;
            }
            std::cout << "audit ok: " << rep.sequences << " sequences, " << rep.operations
                      << " operations\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cout << "ERROR " << e.what() << "\n";
        return 2;
    }
    return 0;
}
