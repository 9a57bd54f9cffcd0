#include "lpa/pipeline.hpp"

#include <numeric>
#include <stdexcept>

#include "lpa/checked.hpp"
#include "lpa/intlat.hpp"

namespace lpa {

IntMatrix phi(const IntMatrix& m, const IntMatrix& a) {
    if (!m.is_square() || !a.is_square() || m.rows() != a.rows()) {
        throw std::invalid_argument("phi requires square matrices of equal size");
    }
    return m * a + IntMatrix::identity(m.rows()) - m;
}

IntMatrix elementary_matrix(std::size_t p, std::size_t s, std::size_t t, long long k) {
    if (s == t) throw std::invalid_argument("elementary matrix requires s != t");
    if (s >= p || t >= p) throw std::invalid_argument("elementary matrix index out of range");
    if (k < 1) throw std::invalid_argument("elementary matrix requires k >= 1");
    IntMatrix m = IntMatrix::identity(p);
    m(s, t) = k;
    return m;
}

EuclidResult euclid_s_matrix(long long a, long long b) {
    if (!(a > b && b > 1)) {
        throw std::invalid_argument("euclid_s_matrix requires a > b > 1");
    }
    if (std::gcd(a, b) != 1) {
        throw std::invalid_argument("euclid_s_matrix requires gcd(a, b) = 1");
    }
    EuclidResult r;
    r.a = a;
    r.b = b;

    long long prev = a;
    long long cur = b;
    while (cur != 1) {
        r.quotients.push_back(prev / cur);
        long long rem = prev % cur;
        prev = cur;
        cur = rem;
    }
    // appended nonstandard step: r_{m-1} = k_m * 1 + 1
    r.quotients.push_back(prev - 1);

    IntMatrix s = IntMatrix::identity(3);
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        // odd steps multiply by a lower elementary matrix, even by an upper
        std::size_t row = (i % 2 == 0) ? 1 : 0;
        std::size_t col = (i % 2 == 0) ? 0 : 1;
        s = elementary_matrix(3, row, col, r.quotients[i]) * s;
    }
    r.s_matrix = s;
    r.x1 = s(0, 0);
    r.y1 = s(0, 1);
    r.x2 = s(1, 0);
    r.y2 = s(1, 1);

    auto check = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("euclid invariant failed: ") + what);
    };
    check(checked_sub(checked_mul(r.x1, b), checked_mul(r.y1, a)) == 1, "x1*b - y1*a = 1");
    check(checked_sub(checked_mul(r.x2, b), checked_mul(r.y2, a)) == -1, "x2*b - y2*a = -1");
    check(checked_add(r.x1, r.x2) == a, "x1 + x2 = a");
    check(checked_add(r.y1, r.y2) == b, "y1 + y2 = b");
    check(r.x1 - r.y1 >= 1, "x1 - y1 >= 1");
    check(r.x2 - r.y2 >= 0, "x2 - y2 >= 0");
    check(determinant(s) == 1, "det(S) = 1");
    return r;
}

namespace {

// Accumulates moves applied to a running graph so every recorded step names
// vertices of the graph it is replayed against.
struct StepRecorder {
    MultiGraph graph;
    std::vector<MoveStep> steps;

    explicit StepRecorder(MultiGraph g) : graph(std::move(g)) {}

    // names by value: callers often pass strings owned by the graph that the
    // move replaces
    void shift(std::string v, std::string w, long long times = 1) {
        for (long long i = 0; i < times; ++i) {
            graph = apply_shift(graph, v, w);
            steps.push_back(MoveStep::shift(v, w));
        }
    }

    void unshift(std::string v, std::string w, long long times = 1) {
        for (long long i = 0; i < times; ++i) {
            graph = apply_unshift(graph, v, w);
            steps.push_back(MoveStep::unshift(v, w));
        }
    }

    void outsplit(const PartitionSpec& spec) {
        graph = apply_outsplit(graph, spec);
        steps.push_back(MoveStep::outsplit(spec));
    }

    void amalgamate(const std::vector<std::string>& group) {
        graph = apply_amalgamate(graph, group);
        steps.push_back(MoveStep::amalgamate(group));
    }

    std::vector<long long> unit_class(const std::string& vertex, long long count) const {
        std::vector<long long> cls(graph.size(), 0);
        cls[graph.index_checked(vertex)] = count;
        return cls;
    }
};

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_identity(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("pipeline identity failed: " + what);
}

// One stabilization round: R_n^{K} to R_n^{K-(n-1)} where K = l + n and
// l = K - n is the surviving tail width (l = 0 collapses to the rose).
void stabilize_round(StepRecorder& rec, std::string& rose, std::string& tail, long long n,
                     long long l) {
    std::string tail2 = tail;
    std::string new_tail;
    if (l >= 1) {
        PartitionSpec spec;
        spec.vertex = tail;
        spec.classes = {rec.unit_class(rose, l), rec.unit_class(rose, n - 1)};
        rec.outsplit(spec);
        new_tail = tail + "#1";
        tail2 = tail + "#2";
    }
    rec.shift(rose, tail2);
    rec.unshift(tail2, rose, n - 1);
    if (l >= 1) rec.unshift(new_tail, rose, l);
    rec.amalgamate({rose, tail2});
    tail = new_tail;
}

void stabilize_rounds(StepRecorder& rec, std::string& rose, std::string& tail, long long n,
                      long long k, long long t) {
    for (long long round = t; round >= 1; --round) {
        long long l = (k - 1) + (round - 1) * (n - 1);
        stabilize_round(rec, rose, tail, n, l);
    }
}

// R_n^k down to R_n for k | n: l-fold shift, (k-1)-fold unshift, amalgamate.
void divides_steps(StepRecorder& rec, const std::string& rose, const std::string& tail,
                   long long n, long long k) {
    long long l = n / k;
    rec.shift(rose, tail, l);
    rec.unshift(tail, rose, k - 1);
    rec.amalgamate({rose, tail});
}

// The ten-step route from R_n^d to R_n for d >= 3, d <= n-2, n mod d >= 2.
void ten_step(StepRecorder& rec, const std::string& rose, const std::string& tail, long long n,
              long long d) {
    long long t = n / d;
    long long r = n % d;
    check_identity(r >= 2 && d >= 3 && t >= 1, "ten-step dispatch preconditions");

    // Step 1: t-fold shift onto the rose.
    rec.shift(rose, tail, t);

    // Step 2: split the tail's d-1 edges into classes of 1 and d-2.
    PartitionSpec spec;
    spec.vertex = tail;
    spec.classes = {rec.unit_class(rose, 1), rec.unit_class(rose, d - 2)};
    rec.outsplit(spec);
    std::string p = tail + "#1";
    std::string q = tail + "#2";

    // Step 3: one more shift through the singleton part.
    rec.shift(rose, p);

    std::size_t ri = rec.graph.index_checked(rose);
    std::size_t pi = rec.graph.index_checked(p);
    std::size_t qi = rec.graph.index_checked(q);
    check_identity(ri == 0 && pi == 1 && qi == 2, "coordinate order matches the 3x3 S-matrix");
    IntMatrix a_snapshot = rec.graph.adjacency();

    // Step 4: realize phi over the Euclid S-matrix as unshift bundles.
    EuclidResult e = euclid_s_matrix(d, d - r + 1);
    for (std::size_t i = 0; i < e.quotients.size(); ++i) {
        if (i % 2 == 0) {
            rec.unshift(p, rose, e.quotients[i]);
        } else {
            rec.unshift(rose, p, e.quotients[i]);
        }
        check_identity(rec.graph.adjacency().all_nonnegative(), "nonnegativity after phi bundle");
    }
    // coordinate order (rose, p, q) matches the 3x3 S-matrix rows
    check_identity(rec.graph.adjacency() == phi(e.s_matrix, a_snapshot),
                   "endpoint of phi bundles equals phi_S(A)");

    // Step 5: drain the third vertex back into the first two.
    const IntMatrix b = rec.graph.adjacency();
    rec.shift(rose, q, e.x1 - e.y1);
    rec.shift(p, q, e.x2 - e.y2);

    long long n1 = checked_sub(checked_mul(e.x1, t + 1), e.y1);
    long long n2 = checked_add(checked_sub(checked_mul(e.x2, t + 1), e.y2), 1);
    {
        long long c1 = e.x1 - e.y1;
        long long c2 = e.x2 - e.y2;
        check_identity(b(ri, ri) - c1 * b(qi, ri) == n1, "b11 - c1*b31 = n1");
        check_identity(b(ri, pi) - c1 * b(qi, pi) == n1, "b12 - c1*b32 = n1");
        check_identity(b(ri, qi) - c1 * b(qi, qi) + c1 == n1, "b13 - c1*b33 + c1 = n1");
        check_identity(b(pi, ri) - c2 * b(qi, ri) == n2, "b21 - c2*b31 = n2");
        check_identity(b(pi, pi) - c2 * b(qi, pi) == n2, "b22 - c2*b32 = n2");
        check_identity(b(pi, qi) - c2 * b(qi, qi) + c2 == n2 - 1, "b23 - c2*b33 + c2 = n2 - 1");
    }

    // Step 6: n1 + n2 = n, then absorb one bundle back.
    check_identity(checked_add(n1, n2) == n, "n1 + n2 = n");
    rec.unshift(p, rose);

    // Step 7.
    rec.shift(p, q);

    // Step 8: the second and third vertices now have equal in-columns.
    rec.amalgamate({p, q});

    // Step 9.
    rec.shift(p, rose);

    // Step 10: collapse to the rose.
    rec.amalgamate({rose, p});
    check_identity(rec.graph.size() == 1 && rec.graph.mult(0, 0) == n, "endpoint is the rose");
}

}  // namespace

MoveCertificate phi_shift_cert(const MultiGraph& g, const std::string& s, const std::string& t,
                               long long k) {
    require(k >= 1, "phi_shift_cert requires k >= 1");
    std::size_t si = g.index_checked(s);
    std::size_t ti = g.index_checked(t);
    require(si != ti, "phi_shift_cert requires distinct vertices");
    require(g.mult(ti, ti) >= 1, "phi_shift_cert requires a loop at " + t);
    require(g.mult(si, ti) >= 1, "phi_shift_cert requires an edge " + s + " -> " + t);
    require(analyze(g).condition_L, "phi_shift_cert requires Condition (L)");

    StepRecorder rec(g);
    rec.unshift(s, t, k);
    check_identity(rec.graph.adjacency() ==
                       phi(elementary_matrix(g.size(), si, ti, k), g.adjacency()),
                   "phi_shift_cert endpoint equals phi_K(A)");
    return MoveCertificate{g, std::move(rec.steps), std::move(rec.graph)};
}

MoveCertificate cert_open_tails(long long n, long long k) {
    require(n >= 2, "cert_open_tails requires n >= 2");
    require(k >= 1, "cert_open_tails requires k >= 1");
    MultiGraph source = builtin("R_n_k", n, k);
    MultiGraph target = builtin("B_n_k", n, k);
    if (k == 1) return MoveCertificate{source, {}, target};

    StepRecorder rec(source);
    PartitionSpec spec;
    spec.vertex = "v2";
    for (long long i = 0; i < k - 1; ++i) spec.classes.push_back(rec.unit_class("v1", 1));
    rec.outsplit(spec);
    // chain the tails into an oriented line, one shift at a time
    for (long long i = 1; i <= k - 2; ++i) {
        rec.shift("v2#" + std::to_string(i), "v2#" + std::to_string(i + 1));
    }
    return MoveCertificate{std::move(source), std::move(rec.steps), std::move(target)};
}

MoveCertificate cert_stabilize(long long n, long long k, long long t) {
    require(n >= 2, "cert_stabilize requires n >= 2");
    require(k >= 1, "cert_stabilize requires k >= 1");
    require(t >= 0, "cert_stabilize requires t >= 0");
    MultiGraph source = builtin("R_n_k", n, k + t * (n - 1));
    MultiGraph target = builtin("R_n_k", n, k);
    if (t == 0) return MoveCertificate{source, {}, target};

    StepRecorder rec(source);
    std::string rose = "v1";
    std::string tail = "v2";
    stabilize_rounds(rec, rose, tail, n, k, t);
    return MoveCertificate{std::move(source), std::move(rec.steps), std::move(target)};
}

MoveCertificate cert_divides(long long n, long long k) {
    require(n >= 2 && k >= 2, "cert_divides requires n >= 2 and k >= 2");
    require(n % k == 0, "cert_divides requires k to divide n");
    MultiGraph source = builtin("R_n_k", n, k);
    MultiGraph target = builtin("R_n", n);

    StepRecorder rec(source);
    divides_steps(rec, "v1", "v2", n, k);
    return MoveCertificate{std::move(source), std::move(rec.steps), std::move(target)};
}

MoveCertificate cert_fish(long long n, long long d) {
    require(n >= 2, "cert_fish requires n >= 2");
    require(d >= 1, "cert_fish requires d >= 1");
    require(std::gcd(d, n - 1) == 1, "cert_fish requires gcd(d, n-1) = 1");

    MultiGraph source = builtin("R_n_k", n, d);
    MultiGraph target = builtin("R_n", n);
    if (d == 1) return MoveCertificate{source, {}, target};

    StepRecorder rec(source);
    std::string rose = "v1";
    std::string tail = "v2";

    // reduce d below n-1 via stabilization rounds
    long long m = n - 1;
    long long dr = (d - 1) % m + 1;
    long long t = (d - dr) / m;
    if (t >= 1) stabilize_rounds(rec, rose, tail, n, dr, t);

    if (dr == 1) {
        // stabilization already collapsed to the rose
    } else if (n % dr == 0) {
        divides_steps(rec, rose, tail, n, dr);
    } else {
        check_identity(n % dr != 1, "remainder 1 is excluded by the gcd hypothesis");
        ten_step(rec, rose, tail, n, dr);
    }
    return MoveCertificate{std::move(source), std::move(rec.steps), std::move(target)};
}

std::pair<MultiGraph, MoveCertificate> cert_remove_sources(const MultiGraph& g) {
    PropertyReport props = analyze(g);
    require(props.purely_infinite_simple,
            "cert_remove_sources requires a purely infinite simple graph");
    require(props.condition_sing, "cert_remove_sources requires a parallel-edge-free graph");

    StepRecorder rec(g);
    for (;;) {
        const MultiGraph& cur = rec.graph;
        std::size_t n = cur.size();

        std::vector<bool> on_cycle(n, false);
        for (const auto& c : cycles(cur)) {
            for (const auto& name : c) on_cycle[cur.index_checked(name)] = true;
        }
        // reachability closure, for locating cycle edges below
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> stack{s};
            reach[s][s] = true;
            while (!stack.empty()) {
                std::size_t u = stack.back();
                stack.pop_back();
                for (std::size_t v = 0; v < n; ++v) {
                    if (cur.mult(u, v) != 0 && !reach[s][v]) {
                        reach[s][v] = true;
                        stack.push_back(v);
                    }
                }
            }
        }

        // first layer of the tree part: vertices off every cycle with an edge into one
        std::vector<std::size_t> layer;
        bool tree_nonempty = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (on_cycle[v]) continue;
            tree_nonempty = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (cur.mult(v, c) != 0 && on_cycle[c]) {
                    layer.push_back(v);
                    break;
                }
            }
        }
        if (!tree_nonempty) break;
        if (layer.empty()) {
            throw std::invalid_argument(
                "cert_remove_sources: tree part has no edge into a cycle");
        }

        // Hook one layer vertex onto a cycle: find a cycle edge y -> c with
        // an edge v -> c present, then shift at (y, v).
        bool moved = false;
        for (std::size_t v : layer) {
            for (std::size_t c = 0; c < n && !moved; ++c) {
                if (cur.mult(v, c) == 0 || !on_cycle[c]) continue;
                for (std::size_t y = 0; y < n && !moved; ++y) {
                    if (cur.mult(y, c) == 0 || !on_cycle[y] || !reach[c][y]) continue;
                    if (cur.mult(y, v) != 0) continue;  // keep the graph parallel-edge free
                    if (!shift_applicable(cur, cur.name(y), cur.name(v))) continue;
                    rec.shift(cur.name(y), cur.name(v));
                    moved = true;
                }
            }
            if (moved) break;
        }
        if (!moved) {
            throw std::invalid_argument(
                "cert_remove_sources: no applicable shift for the current source layer");
        }
    }

    MoveCertificate cert{g, std::move(rec.steps), rec.graph};
    return {std::move(rec.graph), std::move(cert)};
}

std::pair<MultiGraph, MoveCertificate> cert_expand(const MultiGraph& g, long long n) {
    PropertyReport props = analyze(g);
    require(props.purely_infinite_simple, "cert_expand requires a purely infinite simple graph");
    long long edge_count = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        edge_count = checked_add(edge_count, g.out_degree(i));
    }
    require(n >= edge_count, "cert_expand requires n >= edge count (" +
                                 std::to_string(edge_count) + ")");

    StepRecorder rec(g);
    for (const MoveStep& step : maximal_outsplit_steps(g)) {
        rec.graph = apply_step(rec.graph, step);
        rec.steps.push_back(step);
    }

    // binary splits until the vertex count reaches n
    while (static_cast<long long>(rec.graph.size()) < n) {
        std::size_t v = rec.graph.size();
        for (std::size_t i = 0; i < rec.graph.size(); ++i) {
            if (rec.graph.out_degree(i) >= 2) {
                v = i;
                break;
            }
        }
        check_identity(v < rec.graph.size(), "expansion needs a vertex of out-degree >= 2");
        std::size_t first = 0;
        while (rec.graph.mult(v, first) == 0) ++first;
        PartitionSpec spec;
        spec.vertex = rec.graph.name(v);
        std::vector<long long> rest(rec.graph.size(), 0);
        for (std::size_t u = 0; u < rec.graph.size(); ++u) rest[u] = rec.graph.mult(v, u);
        rest[first] -= 1;
        spec.classes = {rec.unit_class(rec.graph.name(first), 1), rest};
        rec.outsplit(spec);
    }

    MoveCertificate cert{g, std::move(rec.steps), rec.graph};
    return {std::move(rec.graph), std::move(cert)};
}

}  // namespace lpa
