#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dyntc/graph.hpp"

namespace dyntc {

enum class OpKind { init, insert, remove, query };

const char* op_kind_name(OpKind k);

// One line of a trace: INIT/INSERT/DELETE carry edge lists, QUERY a pair.
struct TraceOp {
    OpKind kind;
    int center = 0;          // INSERT only
    std::vector<Edge> edges; // INIT/INSERT/DELETE
    int qx = 0, qy = 0;      // QUERY
};

struct Trace {
    int n = 0;
    std::vector<TraceOp> ops;
};

// Line-oriented text format:
//   N <n>
//   INIT <k> u1 v1 ... uk vk
//   INSERT <v> <k> u1 v1 ... uk vk
//   DELETE <k> u1 v1 ... uk vk
//   QUERY <u> <v>
// '#' starts a comment. Vertices are 1-based.
Trace parse_trace(std::istream& in);
Trace parse_trace_string(const std::string& s);
void write_trace(std::ostream& out, const Trace& t);
std::string format_trace(const Trace& t);

enum class Profile { mixed, incremental, decremental, dag_mixed };
const char* profile_name(Profile p);
bool profile_from_name(const std::string& s, Profile& out);

// Deterministic workload generation: same (n, length, profile, seed) yields
// a byte-identical trace. Every trace starts with one INIT line; dag-mixed
// traces only ever insert edges forward along a hidden vertex order, so no
// prefix creates a cycle.
Trace generate_trace(int n, int length, Profile profile, uint64_t seed);

} // namespace dyntc
