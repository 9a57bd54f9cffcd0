#pragma once

#include <vector>

#include "lpa/intlat.hpp"
#include "lpa/multigraph.hpp"

namespace lpa {

// The classification invariant (K0, [1]): a finitely generated abelian group
// with a distinguished element. Unit coordinates are one residue in
// [0, factor) per invariant factor followed by one integer per free rank.
// Coordinates are basis-dependent, so equality of invariants is always
// decided through pointed_iso, never by comparing coordinates.
struct PointedK0 {
    AbelianGroup group;
    std::vector<long long> unit_class;

    friend bool operator==(const PointedK0&, const PointedK0&) = default;
};

// Brute-force cap on |torsion| for the automorphism search; the env var
// LPACLASS_MAX_TORSION overrides the default of 10^4.
long long default_torsion_cap();

PointedK0 k0_data(const MultiGraph& g);

// True iff a group isomorphism carries a's unit class to b's. Throws
// CapExceeded when the torsion part is too large to search.
bool pointed_iso(const PointedK0& a, const PointedK0& b, long long torsion_cap = -1);

bool group_iso(const AbelianGroup& a, const AbelianGroup& b);

long long k1_rank(const MultiGraph& g);

}  // namespace lpa
