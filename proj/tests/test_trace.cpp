#include <doctest.h>

#include "dyntc/replay.hpp"
#include "dyntc/trace.hpp"
#include "oracles.hpp"

using namespace dyntc;

TEST_CASE("trace text round trips") {
    Trace t = generate_trace(8, 40, Profile::mixed, 5);
    Trace back = parse_trace_string(format_trace(t));
    CHECK(back.n == t.n);
    REQUIRE(back.ops.size() == t.ops.size());
    CHECK(format_trace(back) == format_trace(t));
}

TEST_CASE("same seed gives byte-identical traces") {
    for (Profile p :
         {Profile::mixed, Profile::incremental, Profile::decremental, Profile::dag_mixed}) {
        CHECK(format_trace(generate_trace(12, 50, p, 7)) ==
              format_trace(generate_trace(12, 50, p, 7)));
    }
    CHECK(format_trace(generate_trace(12, 50, Profile::mixed, 7)) !=
          format_trace(generate_trace(12, 50, Profile::mixed, 8)));
}

TEST_CASE("zero-length trace is just the INIT line") {
    Trace t = generate_trace(8, 0, Profile::mixed, 3);
    REQUIRE(t.ops.size() == 1);
    CHECK(t.ops[0].kind == OpKind::init);
}

TEST_CASE("parser flags malformed input") {
    CHECK_THROWS_AS(parse_trace_string("INIT 1 1 2\n"), trace_error);        // missing N
    CHECK_THROWS_AS(parse_trace_string("N 4\nINIT 2 1 2\n"), trace_error);   // short list
    CHECK_THROWS_AS(parse_trace_string("N 4\nQUERY 1 9\n"), trace_error);    // range
    CHECK_THROWS_AS(parse_trace_string("N 4\nFROB 1 2\n"), trace_error);     // verb
    Trace ok = parse_trace_string("N 4 # four vertices\nINSERT 2 1 2 3\n# note\nQUERY 1 3\n");
    CHECK(ok.n == 4);
    REQUIRE(ok.ops.size() == 2);
    CHECK(ok.ops[0].center == 2);
}

TEST_CASE("decremental traces never insert") {
    Trace t = generate_trace(10, 60, Profile::decremental, 9);
    for (size_t i = 1; i < t.ops.size(); ++i) CHECK(t.ops[i].kind != OpKind::insert);
}

TEST_CASE("incremental traces never delete") {
    Trace t = generate_trace(10, 60, Profile::incremental, 9);
    CHECK(t.ops[0].edges.empty());
    for (const TraceOp& op : t.ops) CHECK(op.kind != OpKind::remove);
}

TEST_CASE("dag-mixed traces stay acyclic at every prefix") {
    Trace t = generate_trace(14, 120, Profile::dag_mixed, 11);
    BoolMatrix edges(t.n);
    for (const TraceOp& op : t.ops) {
        switch (op.kind) {
            case OpKind::init:
                edges = BoolMatrix(t.n);
                [[fallthrough]];
            case OpKind::insert:
                for (const Edge& e : op.edges) edges.set(e.u - 1, e.v - 1);
                break;
            case OpKind::remove:
                for (const Edge& e : op.edges) edges.clear(e.u - 1, e.v - 1);
                break;
            case OpKind::query:
                break;
        }
        CHECK(oracles::is_acyclic(edges));
    }
}

TEST_CASE("replay on the oracle backend never mismatches") {
    Trace t = generate_trace(10, 50, Profile::mixed, 13);
    ReplayOptions opts;
    opts.check = true;
    opts.sweep_stride = 1;
    ReplayResult rr = replay_trace(t, Backend::oracle_naive, opts);
    CHECK_FALSE(rr.mismatch.has_value());
    CHECK(rr.records.size() == t.ops.size());
}

TEST_CASE("replay with checking agrees across backends") {
    Trace t = generate_trace(10, 60, Profile::mixed, 17);
    ReplayOptions opts;
    opts.check = true;
    opts.sweep_stride = 5;
    for (Backend b : {Backend::log, Backend::divcon}) {
        ReplayResult rr = replay_trace(t, b, opts);
        INFO(backend_name(b));
        CHECK_FALSE(rr.mismatch.has_value());
    }
    Trace dag = generate_trace(10, 60, Profile::dag_mixed, 17);
    ReplayResult rr = replay_trace(dag, Backend::dag_counting, opts);
    CHECK_FALSE(rr.mismatch.has_value());
}

TEST_CASE("bench records carry work units and kinds") {
    Trace t = generate_trace(8, 30, Profile::mixed, 19);
    ReplayResult rr = replay_trace(t, Backend::divcon);
    CHECK(csv_header() == "backend,n,op_index,kind,work_units,ns,result");
    bool some_update_work = false;
    for (size_t i = 0; i < rr.records.size(); ++i) {
        const BenchRecord& r = rr.records[i];
        CHECK(r.op_index == static_cast<int>(i));
        if (r.kind != OpKind::query && r.work_units > 0) some_update_work = true;
        if (r.kind == OpKind::query) CHECK(r.result >= 0);
        std::string line = csv_line(r);
        CHECK(line.find("divcon,8,") == 0);
    }
    CHECK(some_update_work);
}

TEST_CASE("loglog slope recovers exponents") {
    CHECK(loglog_slope({32, 64, 128}, {32. * 32, 64. * 64, 128. * 128}) == doctest::Approx(2.0));
    CHECK(loglog_slope({32, 64, 128}, {32, 64, 128}) == doctest::Approx(1.0));
}
