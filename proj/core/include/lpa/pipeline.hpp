#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpa/intmatrix.hpp"
#include "lpa/moves.hpp"
#include "lpa/multigraph.hpp"

namespace lpa {

// Result of the extended Euclidean matrix recurrence on a coprime pair
// a > b > 1. The accumulated 3x3 matrix S = [[x1,y1,0],[x2,y2,0],[0,0,1]]
// satisfies x1*b - y1*a = 1, x2*b - y2*a = -1, x1 + x2 = a, y1 + y2 = b,
// x1 - y1 >= 1, x2 - y2 >= 0 and det(S) = 1.
struct EuclidResult {
    long long a = 0;
    long long b = 0;
    std::vector<long long> quotients;
    IntMatrix s_matrix;
    long long x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

// The row-operation functional A -> M*A + I - M; with elementary M it encodes
// bundles of shift moves on incidence matrices.
IntMatrix phi(const IntMatrix& m, const IntMatrix& a);

// Identity plus k at position (s, t), s != t, zero-based.
IntMatrix elementary_matrix(std::size_t p, std::size_t s, std::size_t t, long long k);

EuclidResult euclid_s_matrix(long long a, long long b);

// Certificate of k unshift steps at (s, t) whose endpoint has incidence
// phi(I + k*e_st, A); requires a_tt >= 1, a_st >= 1 and Condition (L).
MoveCertificate phi_shift_cert(const MultiGraph& g, const std::string& s, const std::string& t,
                               long long k);

// R_n^k --outsplit--> A_n^k --shift chain--> B_n^k.
MoveCertificate cert_open_tails(long long n, long long k);

// R_n^{k+t(n-1)} down to R_n^k, one stabilization round at a time.
MoveCertificate cert_stabilize(long long n, long long k, long long t);

// R_n^k down to R_n when k divides n.
MoveCertificate cert_divides(long long n, long long k);

// R_n^d down to R_n whenever gcd(d, n-1) = 1; dispatches between the
// stabilization, division and ten-step routes.
MoveCertificate cert_fish(long long n, long long d);

// Shift every source-tree vertex onto a cycle, layer by layer; input must be
// purely infinite simple and parallel-edge free.
std::pair<MultiGraph, MoveCertificate> cert_remove_sources(const MultiGraph& g);

// Maximal out-split followed by binary out-splits until the graph has exactly
// n vertices; input must be purely infinite simple, n at least the edge count.
std::pair<MultiGraph, MoveCertificate> cert_expand(const MultiGraph& g, long long n);

}  // namespace lpa
