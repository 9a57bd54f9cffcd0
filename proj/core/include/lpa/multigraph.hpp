#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lpa/intmatrix.hpp"

namespace lpa {

// Finite directed multigraph. Parallel edges are stored as multiplicities;
// vertex order is significant and fixes incidence-matrix indexing.
class MultiGraph {
public:
    MultiGraph(std::vector<std::string> vertices, IntMatrix adjacency);

    static MultiGraph from_edges(
        std::vector<std::string> vertices,
        const std::vector<std::tuple<std::string, std::string, long long>>& edges);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertices() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index(const std::string& name) const;
    std::size_t index_checked(const std::string& name) const;

    long long mult(std::size_t i, std::size_t j) const { return adj_(i, j); }
    const IntMatrix& adjacency() const { return adj_; }

    long long out_degree(std::size_t i) const;
    long long in_degree(std::size_t j) const;
    bool is_sink(std::size_t i) const { return out_degree(i) == 0; }
    bool is_source(std::size_t j) const { return in_degree(j) == 0; }

    // Edge records (src, dst, mult), sorted by (src index, dst index).
    std::vector<std::tuple<std::string, std::string, long long>> edge_records() const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    std::vector<std::string> names_;
    IntMatrix adj_;
};

struct PropertyReport {
    std::vector<std::string> sinks;
    std::vector<std::string> sources;
    bool condition_L = false;
    bool condition_sing = false;
    bool cofinal = false;
    bool all_connect_to_cycle = false;
    bool purely_infinite_simple = false;
};

IntMatrix incidence(const MultiGraph& g);

MultiGraph from_incidence(const IntMatrix& a,
                          std::optional<std::vector<std::string>> names = std::nullopt);

// Named graph families: R_n (rose with n loops), R_n_k / A_n_k / B_n_k
// (tails into a rose), R2_hat (all-ones 2x2), S2.
MultiGraph builtin(const std::string& name, long long n = 0, long long k = 0);

// All cycles up to cyclic rotation, parallel edges treated as one. Each cycle
// is a vertex sequence starting at its smallest vertex index.
std::vector<std::vector<std::string>> cycles(const MultiGraph& g);

// Smallest hereditary and saturated superset of x.
std::set<std::string> hs_closure(const MultiGraph& g, const std::set<std::string>& x);

PropertyReport analyze(const MultiGraph& g);

}  // namespace lpa
