#include "lpa/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace lpa {

namespace {

constexpr std::size_t kCanonicalCap = 8;

IntMatrix permuted(const IntMatrix& a, const std::vector<std::size_t>& perm) {
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) b(i, j) = a(perm[i], perm[j]);
    }
    return b;
}

}  // namespace

IntMatrix canonical_form(const MultiGraph& g) {
    if (g.size() > kCanonicalCap) {
        throw std::invalid_argument("canonical_form capped at " +
                                    std::to_string(kCanonicalCap) + " vertices");
    }
    std::vector<std::size_t> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    IntMatrix best = g.adjacency();
    while (std::next_permutation(perm.begin(), perm.end())) {
        IntMatrix cand = permuted(g.adjacency(), perm);
        if (cand < best) best = cand;
    }
    return best;
}

bool graph_iso(const MultiGraph& a, const MultiGraph& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<IntMatrix> enumerate_chunk(long long n, unsigned long long from,
                                       unsigned long long to) {
    std::size_t sz = static_cast<std::size_t>(n);
    std::vector<IntMatrix> found;
    for (unsigned long long bits = from; bits < to; ++bits) {
        IntMatrix a(sz, sz, 0);
        for (std::size_t k = 0; k < sz * sz; ++k) {
            if ((bits >> k) & 1ULL) a(k / sz, k % sz) = 1;
        }
        MultiGraph g = from_incidence(a);
        PropertyReport r = analyze(g);
        if (r.purely_infinite_simple && r.condition_sing) {
            found.push_back(canonical_form(g));
        }
    }
    return found;
}

}  // namespace

std::vector<MultiGraph> enumerate_pis_sing(long long n, bool parallel) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("enumerate_pis_sing capped at 1..4 vertices");
    }
    unsigned long long total = 1ULL << (n * n);

    std::vector<IntMatrix> canon;
    if (parallel && total > 1024) {
        unsigned nthreads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::vector<IntMatrix>> parts(nthreads);
        std::vector<std::thread> workers;
        unsigned long long chunk = (total + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            unsigned long long from = t * chunk;
            unsigned long long to = std::min(total, from + chunk);
            workers.emplace_back([&, t, from, to] { parts[t] = enumerate_chunk(n, from, to); });
        }
        for (auto& w : workers) w.join();
        for (auto& p : parts) canon.insert(canon.end(), p.begin(), p.end());
    } else {
        canon = enumerate_chunk(n, 0, total);
    }

    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

    std::vector<MultiGraph> out;
    out.reserve(canon.size());
    for (const auto& m : canon) out.push_back(from_incidence(m));
    return out;
}

ClassificationTable classify(const std::vector<MultiGraph>& graphs, long long torsion_cap) {
    struct Bucket {
        PointedK0 k0;
        std::vector<std::pair<IntMatrix, MultiGraph>> members;
    };
    std::vector<Bucket> buckets;
    for (const auto& g : graphs) {
        PointedK0 k0 = k0_data(g);
        IntMatrix canon = canonical_form(g);
        bool placed = false;
        for (auto& b : buckets) {
            if (pointed_iso(b.k0, k0, torsion_cap)) {
                b.members.emplace_back(std::move(canon), g);
                placed = true;
                break;
            }
        }
        if (!placed) buckets.push_back({std::move(k0), {{std::move(canon), g}}});
    }
    for (auto& b : buckets) {
        std::sort(b.members.begin(), b.members.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    std::sort(buckets.begin(), buckets.end(), [](const Bucket& x, const Bucket& y) {
        if (x.k0.group.free_rank != y.k0.group.free_rank) {
            return x.k0.group.free_rank < y.k0.group.free_rank;
        }
        if (x.k0.group.invariant_factors != y.k0.group.invariant_factors) {
            return x.k0.group.invariant_factors < y.k0.group.invariant_factors;
        }
        return x.members.front().first < y.members.front().first;
    });

    ClassificationTable table;
    for (auto& b : buckets) {
        ClassEntry e;
        e.representative = k0_data(b.members.front().second);
        for (auto& [canon, g] : b.members) e.members.push_back(std::move(g));
        table.classes.push_back(std::move(e));
    }
    return table;
}

namespace {

using CanonKey = std::vector<long long>;

CanonKey canon_key(const IntMatrix& m) {
    CanonKey k;
    k.reserve(m.entries().size() + 1);
    k.push_back(static_cast<long long>(m.rows()));
    k.insert(k.end(), m.entries().begin(), m.entries().end());
    return k;
}

bool within_bounds(const MultiGraph& g, const SearchBounds& b) {
    return static_cast<long long>(g.size()) <= b.max_vertices &&
           g.adjacency().max_abs_entry() <= b.max_multiplicity;
}

// Deterministic move generation: shifts, then unshifts, then binary
// out-splits, then pairwise amalgamations; vertex pairs in index order and
// partition classes in lexicographic order.
std::vector<MoveStep> candidate_moves(const MultiGraph& g, const SearchBounds& bounds) {
    std::vector<MoveStep> moves;
    std::size_t n = g.size();

    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            if (shift_applicable(g, g.name(v), g.name(w))) {
                moves.push_back(MoveStep::shift(g.name(v), g.name(w)));
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            if (g.mult(v, w) >= 1 && !g.is_sink(w)) {
                moves.push_back(MoveStep::unshift(g.name(v), g.name(w)));
            }
        }
    }
    if (static_cast<long long>(n) + 1 <= bounds.max_vertices) {
        for (std::size_t v = 0; v < n; ++v) {
            if (g.is_sink(v)) continue;
            std::vector<long long> row(n);
            for (std::size_t u = 0; u < n; ++u) row[u] = g.mult(v, u);
            // enumerate first-class count vectors a with 0 < a < row, a <= row-a
            std::vector<long long> a(n, 0);
            for (;;) {
                std::size_t k = n;
                while (k > 0) {
                    --k;
                    if (a[k] < row[k]) {
                        ++a[k];
                        for (std::size_t j = k + 1; j < n; ++j) a[j] = 0;
                        break;
                    }
                    if (k == 0) goto done_splits;
                }
                {
                    std::vector<long long> rest(n);
                    bool nonzero_rest = false;
                    for (std::size_t u = 0; u < n; ++u) {
                        rest[u] = row[u] - a[u];
                        if (rest[u] != 0) nonzero_rest = true;
                    }
                    if (!nonzero_rest) continue;
                    if (rest < a) continue;  // unordered pair, keep one order
                    PartitionSpec spec;
                    spec.vertex = g.name(v);
                    spec.classes = {a, rest};
                    moves.push_back(MoveStep::outsplit(std::move(spec)));
                }
            }
        done_splits:;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.is_sink(i) || g.is_sink(j)) continue;
            bool cols_equal = true;
            for (std::size_t u = 0; u < n && cols_equal; ++u) {
                cols_equal = g.mult(u, i) == g.mult(u, j);
            }
            if (cols_equal) {
                moves.push_back(MoveStep::amalgamate({g.name(i), g.name(j)}));
            }
        }
    }
    return moves;
}

}  // namespace

FindPathResult find_path(const MultiGraph& g1, const MultiGraph& g2, const SearchBounds& bounds,
                         long long torsion_cap) {
    if (bounds.max_vertices < 1 || bounds.max_multiplicity < 1 || bounds.max_steps < 0) {
        throw std::invalid_argument("search bounds must be positive");
    }
    if (bounds.max_vertices > static_cast<long long>(kCanonicalCap)) {
        throw std::invalid_argument("max_vertices above canonical form cap");
    }
    if (!within_bounds(g1, bounds) || !within_bounds(g2, bounds)) {
        return {std::nullopt, "search exhausted: an endpoint exceeds the bounds"};
    }
    if (!pointed_iso(k0_data(g1), k0_data(g2), torsion_cap)) {
        return {std::nullopt, "invariant mismatch: pointed K0 data differ"};
    }

    struct Node {
        MultiGraph graph;
        long long parent;
        MoveStep step;
        long long depth;
    };

    CanonKey goal = canon_key(canonical_form(g2));
    std::vector<Node> nodes;
    nodes.push_back({g1, -1, MoveStep{}, 0});
    std::map<CanonKey, long long> visited;
    visited.emplace(canon_key(canonical_form(g1)), 0);

    auto build_cert = [&](long long idx) {
        std::vector<MoveStep> steps;
        for (long long cur = idx; cur > 0; cur = nodes[cur].parent) {
            steps.push_back(nodes[cur].step);
        }
        std::reverse(steps.begin(), steps.end());
        return MoveCertificate{g1, std::move(steps), g2};
    };

    if (canon_key(canonical_form(g1)) == goal) {
        return {build_cert(0), ""};
    }

    std::deque<long long> queue{0};
    while (!queue.empty()) {
        long long cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= bounds.max_steps) continue;

        for (const MoveStep& step : candidate_moves(nodes[cur].graph, bounds)) {
            MultiGraph next = apply_step(nodes[cur].graph, step);
            if (!within_bounds(next, bounds)) continue;
            CanonKey key = canon_key(canonical_form(next));
            if (visited.count(key)) continue;
            long long idx = static_cast<long long>(nodes.size());
            nodes.push_back({next, cur, step, nodes[cur].depth + 1});
            visited.emplace(key, idx);
            if (key == goal) {
                return {build_cert(idx), ""};
            }
            queue.push_back(idx);
        }
    }
    return {std::nullopt, "search exhausted within bounds"};
}

}  // namespace lpa
