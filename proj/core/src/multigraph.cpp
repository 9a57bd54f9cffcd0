#include "lpa/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lpa/checked.hpp"

namespace lpa {

MultiGraph::MultiGraph(std::vector<std::string> vertices, IntMatrix adjacency)
    : names_(std::move(vertices)), adj_(std::move(adjacency)) {
    if (names_.empty()) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    if (!adj_.is_square() || adj_.rows() != names_.size()) {
        throw std::invalid_argument("adjacency matrix size does not match vertex count");
    }
    if (!adj_.all_nonnegative()) {
        throw std::invalid_argument("negative entry in adjacency matrix");
    }
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) {
            throw std::invalid_argument("duplicate vertex name: " + n);
        }
    }
}

MultiGraph MultiGraph::from_edges(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, long long>>& edges) {
    if (vertices.empty()) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!idx.emplace(vertices[i], i).second) {
            throw std::invalid_argument("duplicate vertex name: " + vertices[i]);
        }
    }
    IntMatrix adj(vertices.size(), vertices.size(), 0);
    for (const auto& [src, dst, m] : edges) {
        auto si = idx.find(src);
        if (si == idx.end()) throw std::invalid_argument("unknown vertex in edge: " + src);
        auto di = idx.find(dst);
        if (di == idx.end()) throw std::invalid_argument("unknown vertex in edge: " + dst);
        if (m < 1) throw std::invalid_argument("edge multiplicity must be positive");
        if (adj(si->second, di->second) != 0) {
            throw std::invalid_argument("duplicate edge record for (" + src + ", " + dst + ")");
        }
        adj(si->second, di->second) = m;
    }
    return MultiGraph(std::move(vertices), std::move(adj));
}

std::optional<std::size_t> MultiGraph::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

std::size_t MultiGraph::index_checked(const std::string& name) const {
    auto i = index(name);
    if (!i) throw std::invalid_argument("unknown vertex: " + name);
    return *i;
}

long long MultiGraph::out_degree(std::size_t i) const {
    long long d = 0;
    for (std::size_t j = 0; j < size(); ++j) d = checked_add(d, adj_(i, j));
    return d;
}

long long MultiGraph::in_degree(std::size_t j) const {
    long long d = 0;
    for (std::size_t i = 0; i < size(); ++i) d = checked_add(d, adj_(i, j));
    return d;
}

std::vector<std::tuple<std::string, std::string, long long>> MultiGraph::edge_records() const {
    std::vector<std::tuple<std::string, std::string, long long>> out;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (adj_(i, j) != 0) out.emplace_back(names_[i], names_[j], adj_(i, j));
        }
    }
    return out;
}

IntMatrix incidence(const MultiGraph& g) { return g.adjacency(); }

MultiGraph from_incidence(const IntMatrix& a, std::optional<std::vector<std::string>> names) {
    if (!a.is_square()) {
        throw std::invalid_argument("incidence matrix must be square");
    }
    if (!a.all_nonnegative()) {
        throw std::invalid_argument("negative entry in incidence matrix");
    }
    std::vector<std::string> v;
    if (names) {
        v = std::move(*names);
    } else {
        for (std::size_t i = 0; i < a.rows(); ++i) v.push_back("v" + std::to_string(i + 1));
    }
    return MultiGraph(std::move(v), a);
}

MultiGraph builtin(const std::string& name, long long n, long long k) {
    auto need_n = [&] {
        if (n < 2) throw std::invalid_argument("builtin " + name + " requires n >= 2");
    };
    auto need_k = [&] {
        if (k < 1) throw std::invalid_argument("builtin " + name + " requires k >= 1");
    };
    if (name == "R_n") {
        need_n();
        IntMatrix a(1, 1);
        a(0, 0) = n;
        return MultiGraph({"v"}, a);
    }
    if (name == "R_n_k") {
        need_n();
        need_k();
        if (k == 1) return builtin("R_n", n);
        IntMatrix a(2, 2, 0);
        a(0, 0) = n;
        a(1, 0) = k - 1;
        return MultiGraph({"v1", "v2"}, a);
    }
    if (name == "A_n_k") {
        need_n();
        need_k();
        std::size_t sz = static_cast<std::size_t>(k);
        IntMatrix a(sz, sz, 0);
        a(0, 0) = n;
        for (std::size_t i = 1; i < sz; ++i) a(i, 0) = 1;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sz; ++i) names.push_back("v" + std::to_string(i + 1));
        return MultiGraph(std::move(names), a);
    }
    if (name == "B_n_k") {
        need_n();
        need_k();
        std::size_t sz = static_cast<std::size_t>(k);
        IntMatrix a(sz, sz, 0);
        a(0, 0) = n;
        for (std::size_t i = 1; i < sz; ++i) a(i, i - 1) = 1;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < sz; ++i) names.push_back("v" + std::to_string(i + 1));
        return MultiGraph(std::move(names), a);
    }
    if (name == "R2_hat") {
        return MultiGraph({"v1", "v2"}, IntMatrix{{1, 1}, {1, 1}});
    }
    if (name == "S2") {
        return MultiGraph({"v1", "v2"}, IntMatrix{{1, 1}, {1, 0}});
    }
    throw std::invalid_argument("unknown builtin graph family: " + name);
}

namespace {

// Vertex-simple cycles through start, restricted to indices >= start so each
// cycle is emitted exactly once, rooted at its minimal vertex.
void cycle_dfs(const MultiGraph& g, std::size_t start, std::vector<std::size_t>& path,
               std::vector<bool>& on_path, std::vector<std::vector<std::size_t>>& out) {
    std::size_t u = path.back();
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.mult(u, v) == 0) continue;
        if (v == start) {
            out.push_back(path);
        } else if (v > start && !on_path[v]) {
            path.push_back(v);
            on_path[v] = true;
            cycle_dfs(g, start, path, on_path, out);
            on_path[v] = false;
            path.pop_back();
        }
    }
}

std::vector<std::vector<std::size_t>> cycles_idx(const MultiGraph& g) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < g.size(); ++s) {
        std::vector<std::size_t> path{s};
        std::vector<bool> on_path(g.size(), false);
        on_path[s] = true;
        cycle_dfs(g, s, path, on_path, out);
    }
    return out;
}

std::vector<bool> reachable_from(const MultiGraph& g, std::size_t start) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (g.mult(u, v) != 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

std::vector<bool> hs_closure_idx(const MultiGraph& g, std::vector<bool> in) {
    bool changed = true;
    while (changed) {
        changed = false;
        // hereditary: everything reachable from the set
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (!in[u]) continue;
            for (std::size_t v = 0; v < g.size(); ++v) {
                if (g.mult(u, v) != 0 && !in[v]) {
                    in[v] = true;
                    changed = true;
                }
            }
        }
        // saturated: non-sink whose out-ranges all lie inside
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (in[u] || g.is_sink(u)) continue;
            bool all_in = true;
            for (std::size_t v = 0; v < g.size() && all_in; ++v) {
                if (g.mult(u, v) != 0 && !in[v]) all_in = false;
            }
            if (all_in) {
                in[u] = true;
                changed = true;
            }
        }
    }
    return in;
}

}  // namespace

std::vector<std::vector<std::string>> cycles(const MultiGraph& g) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : cycles_idx(g)) {
        std::vector<std::string> named;
        for (std::size_t i : c) named.push_back(g.name(i));
        out.push_back(std::move(named));
    }
    return out;
}

std::set<std::string> hs_closure(const MultiGraph& g, const std::set<std::string>& x) {
    std::vector<bool> in(g.size(), false);
    for (const auto& n : x) in[g.index_checked(n)] = true;
    in = hs_closure_idx(g, std::move(in));
    std::set<std::string> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (in[i]) out.insert(g.name(i));
    }
    return out;
}

PropertyReport analyze(const MultiGraph& g) {
    PropertyReport r;
    std::size_t n = g.size();

    for (std::size_t i = 0; i < n; ++i) {
        if (g.is_sink(i)) r.sinks.push_back(g.name(i));
        if (g.is_source(i)) r.sources.push_back(g.name(i));
    }

    auto cyc = cycles_idx(g);

    // Condition (L): every cycle contains a vertex of out-degree >= 2.
    r.condition_L = true;
    for (const auto& c : cyc) {
        bool has_exit = false;
        for (std::size_t v : c) {
            if (g.out_degree(v) >= 2) {
                has_exit = true;
                break;
            }
        }
        if (!has_exit) {
            r.condition_L = false;
            break;
        }
    }

    r.condition_sing = g.adjacency().max_abs_entry() <= 1;

    r.cofinal = true;
    for (std::size_t v = 0; v < n && r.cofinal; ++v) {
        std::vector<bool> in(n, false);
        in[v] = true;
        in = hs_closure_idx(g, std::move(in));
        for (std::size_t u = 0; u < n; ++u) {
            if (!in[u]) {
                r.cofinal = false;
                break;
            }
        }
    }

    std::vector<bool> on_cycle(n, false);
    for (const auto& c : cyc) {
        for (std::size_t v : c) on_cycle[v] = true;
    }
    r.all_connect_to_cycle = true;
    for (std::size_t v = 0; v < n && r.all_connect_to_cycle; ++v) {
        auto reach = reachable_from(g, v);
        bool hits = false;
        for (std::size_t u = 0; u < n; ++u) {
            if (reach[u] && on_cycle[u]) {
                hits = true;
                break;
            }
        }
        if (!hits) r.all_connect_to_cycle = false;
    }

    r.purely_infinite_simple = r.condition_L && r.cofinal && r.all_connect_to_cycle;
    return r;
}

}  // namespace lpa
