#pragma once

#include <random>
#include <vector>

#include "lpa/intmatrix.hpp"
#include "lpa/multigraph.hpp"

namespace lpa::test {

inline MultiGraph graph(std::initializer_list<std::initializer_list<long long>> rows) {
    return from_incidence(IntMatrix(rows));
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_size, long long max_abs) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<long long> entry_dist(-max_abs, max_abs);
    std::size_t n = size_dist(rng);
    std::size_t m = size_dist(rng);
    IntMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a(i, j) = entry_dist(rng);
    }
    return a;
}

inline IntMatrix random_square(std::mt19937& rng, std::size_t max_size, long long max_abs) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<long long> entry_dist(-max_abs, max_abs);
    std::size_t n = size_dist(rng);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry_dist(rng);
    }
    return a;
}

inline MultiGraph random_graph(std::mt19937& rng, std::size_t max_size, long long max_mult) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
    std::uniform_int_distribution<long long> entry_dist(0, max_mult);
    std::size_t n = size_dist(rng);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = entry_dist(rng);
    }
    return from_incidence(a);
}

// Random unimodular matrix: a product of elementary row additions and swaps.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 8) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<long long> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int s = 0; s < ops; ++s) {
        std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        if (i == j) continue;
        switch (kind(rng)) {
            case 0: u.add_row_multiple(i, j, coef(rng)); break;
            case 1: u.swap_rows(i, j); break;
            case 2: u.negate_row(i); break;
        }
    }
    return u;
}

}  // namespace lpa::test
