#pragma once

#include <vector>

#include "lpa/intmatrix.hpp"

namespace lpa {

// Smith normal form P*A*Q = D with unimodular P, Q and a nonnegative diagonal
// whose entries form a divisibility chain (zeros at the end).
struct SmithForm {
    IntMatrix d;
    IntMatrix p;
    IntMatrix q;
};

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/f1 + ... + Z/fk with 2 <= f1 | f2 | ... | fk.
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<long long> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Deterministic pivot rule: smallest nonzero absolute value in the remaining
// block, ties broken by row-major position.
SmithForm smith_normal_form(const IntMatrix& a);

AbelianGroup cokernel(const IntMatrix& a);

// Coordinates of v's class in coker(a): entries of P*v reduced per diagonal
// entry (mod d for d >= 2, kept whole for d = 0, dropped for d = 1), ordered
// invariant factors first, then free coordinates.
std::vector<long long> project(const IntMatrix& a, const std::vector<long long>& v);

long long kernel_rank(const IntMatrix& a);

// Exact determinant by fraction-free (Bareiss) elimination.
long long determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& m);

}  // namespace lpa
