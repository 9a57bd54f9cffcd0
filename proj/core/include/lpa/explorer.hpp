#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpa/invariants.hpp"
#include "lpa/moves.hpp"
#include "lpa/multigraph.hpp"

namespace lpa {

struct SearchBounds {
    long long max_vertices = 5;
    long long max_multiplicity = 4;
    long long max_steps = 20;
};

struct ClassEntry {
    PointedK0 representative;
    std::vector<MultiGraph> members;
};

struct ClassificationTable {
    std::vector<ClassEntry> classes;
};

struct FindPathResult {
    std::optional<MoveCertificate> certificate;
    std::string reason;  // filled when no certificate is returned
};

// Lexicographically least incidence matrix over all vertex permutations.
// Brute force; capped at 8 vertices.
IntMatrix canonical_form(const MultiGraph& g);

bool graph_iso(const MultiGraph& a, const MultiGraph& b);

// All n-vertex {0,1} incidence matrices whose Leavitt path algebra is purely
// infinite simple, deduplicated by canonical form and sorted. Capped at 4.
std::vector<MultiGraph> enumerate_pis_sing(long long n, bool parallel = false);

// Partition by pointed isomorphism of K0 data; classes are ordered by
// (rank, factors, canonical representative) and members sorted canonically.
ClassificationTable classify(const std::vector<MultiGraph>& graphs, long long torsion_cap = -1);

// Breadth-first search over shift / unshift / binary out-split / pairwise
// amalgamation moves, states deduplicated by canonical form. Exhaustion is
// reported as such, never as non-existence.
FindPathResult find_path(const MultiGraph& g1, const MultiGraph& g2, const SearchBounds& bounds,
                         long long torsion_cap = -1);

}  // namespace lpa
