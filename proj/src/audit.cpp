#include "dyntc/audit.hpp"

#include <random>
#include <sstream>

#include "dyntc/dag_counter.hpp"
#include "dyntc/kernels.hpp"
#include "dyntc/lazy_intmat.hpp"

namespace dyntc {

int64_t witness_count_bruteforce(const PolyDeg2& p, int a, int x, int z) {
    const int n = p.dim();
    const BoolMatrix& x1 = p.variable(2 * a);
    const BoolMatrix& x2 = p.variable(2 * a + 1);
    int64_t count = 0;
    for (int y = 0; y < n; ++y)
        if (x1.get(x, y) && x2.get(y, z) && p.witness_counted(a, x, y, z)) ++count;
    return count;
}

bool check_witness_invariant(const PolyDeg2& p, std::string* diag) {
    const int n = p.dim();
    for (int a = 0; a < p.terms(); ++a) {
        int64_t phi = 0;
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z) {
                const int64_t want = witness_count_bruteforce(p, a, x, z);
                const int64_t got = p.prod(a).at(x, z);
                phi += got;
                if (got != want) {
                    if (diag) {
                        std::ostringstream s;
                        s << "Prod[" << a << "][" << x << "," << z << "] = " << got
                          << ", brute force says " << want;
                        *diag = s.str();
                    }
                    return false;
                }
            }
        if (phi > static_cast<int64_t>(n) * n * n) {
            if (diag) *diag = "potential exceeds n^3";
            return false;
        }
    }
    // Aggregate and lookup consistency.
    for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z) {
            int64_t s = 0;
            for (int a = 0; a < p.terms(); ++a)
                if (p.prod(a).at(x, z) > 0) ++s;
            if (s != p.aggregate().at(x, z) || (s > 0) != p.lookup_bit(x, z)) {
                if (diag) *diag = "aggregate out of sync with counters";
                return false;
            }
        }
    return true;
}

namespace {

BoolMatrix random_matrix(int n, double density, std::mt19937_64& rng) {
    BoolMatrix m(n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (u(rng) < density) m.set(x, y);
    return m;
}

} // namespace

AuditReport audit_poly(int n, int h, int length, int sequences, uint64_t seed, int stride) {
    AuditReport rep;
    if (stride < 1) stride = 1;
    for (int s = 0; s < sequences; ++s) {
        std::mt19937_64 rng(seed + s);
        std::uniform_int_distribution<int> var(0, 2 * h - 1);
        std::uniform_int_distribution<int> idx(0, n - 1);
        std::uniform_int_distribution<int> opd(0, 5);
        PolyDeg2 p(n, h);
        std::vector<const BoolMatrix*> init;
        std::vector<BoolMatrix> vals;
        for (int v = 0; v < 2 * h; ++v) vals.push_back(random_matrix(n, 1.5 / n, rng));
        for (const BoolMatrix& m : vals) init.push_back(&m);
        p.init(init);
        ++rep.sequences;
        for (int op = 0; op < length; ++op) {
            const int v = var(rng);
            switch (opd(rng)) {
                case 0: p.set_row(idx(rng), random_matrix(n, 2.0 / n, rng), v); break;
                case 1: p.set_col(idx(rng), random_matrix(n, 2.0 / n, rng), v); break;
                case 2: p.lazy_set(random_matrix(n, 1.0 / n, rng), v); break;
                case 3: {
                    BoolMatrix d = random_matrix(n, 0.5, rng);
                    d &= p.variable(v);
                    p.reset(d, v);
                    break;
                }
                default: (void)p.lookup(); break;
            }
            ++rep.operations;
            if (op % stride == 0) {
                std::string diag;
                if (!check_witness_invariant(p, &diag)) {
                    ++rep.failures;
                    if (rep.first_failure.empty()) {
                        std::ostringstream msg;
                        msg << "poly seq " << s << " op " << op << ": " << diag;
                        rep.first_failure = msg.str();
                    }
                    break;
                }
            }
        }
    }
    return rep;
}

AuditReport audit_intmat(int n, double epsilon, bool with_modulus, int length, int sequences,
                         uint64_t seed, int stride) {
    AuditReport rep;
    if (stride < 1) stride = 1;
    for (int s = 0; s < sequences; ++s) {
        std::mt19937_64 rng(seed + s);
        std::optional<uint64_t> mod;
        if (with_modulus) mod = random_prime_61(seed + s);
        LazyIntMatrix m(n, epsilon, mod);
        std::vector<int64_t> mirror(static_cast<size_t>(n) * n, 0);
        auto reduce = [&](int64_t v) {
            if (!mod) return v;
            int64_t p = static_cast<int64_t>(*mod);
            int64_t r = v % p;
            return r < 0 ? r + p : r;
        };
        auto mulw = [&](int64_t a, int64_t b) -> int64_t {
            if (!mod)
                return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
            return static_cast<int64_t>(static_cast<__uint128_t>(static_cast<uint64_t>(reduce(a))) *
                                        static_cast<uint64_t>(reduce(b)) % *mod);
        };
        auto addw = [&](int64_t a, int64_t b) -> int64_t {
            if (!mod)
                return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
            int64_t r = a + b;
            int64_t p = static_cast<int64_t>(*mod);
            return r >= p ? r - p : r;
        };
        std::uniform_int_distribution<int64_t> val(-4, 4);
        ++rep.sequences;
        for (int op = 0; op < length; ++op) {
            std::vector<int64_t> j(n), i(n);
            for (int z = 0; z < n; ++z) {
                j[z] = val(rng);
                i[z] = val(rng);
            }
            m.update(j, i);
            for (int r2 = 0; r2 < n; ++r2)
                for (int c = 0; c < n; ++c) {
                    int64_t& cell = mirror[static_cast<size_t>(r2) * n + c];
                    cell = addw(cell, mulw(j[r2], i[c]));
                }
            ++rep.operations;
            if (op % stride == 0) {
                bool ok = m.buffered() <= m.capacity();
                for (int r2 = 0; ok && r2 < n; ++r2)
                    for (int c = 0; ok && c < n; ++c)
                        if (m.lookup(r2, c) != reduce(mirror[static_cast<size_t>(r2) * n + c]))
                            ok = false;
                if (!ok) {
                    ++rep.failures;
                    if (rep.first_failure.empty()) {
                        std::ostringstream msg;
                        msg << "intmat seq " << s << " op " << op << ": mirror disagreement";
                        rep.first_failure = msg.str();
                    }
                    break;
                }
            }
        }
    }
    return rep;
}

} // namespace dyntc
