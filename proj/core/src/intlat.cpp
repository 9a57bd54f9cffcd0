#include "lpa/intlat.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "lpa/checked.hpp"

namespace lpa {

namespace {

long long abs_ll(long long x) { return x < 0 ? checked_neg(x) : x; }

// Smallest nonzero |entry| in the block starting at (t, t), row-major ties.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    long long best_abs = 0;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            long long v = d(i, j);
            if (v == 0) continue;
            long long a = abs_ll(v);
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw std::invalid_argument("smith_normal_form requires a nonempty matrix");
    }
    IntMatrix d = a;
    IntMatrix p = IntMatrix::identity(a.rows());
    IntMatrix q = IntMatrix::identity(a.cols());

    std::size_t nmin = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
        bool block_empty = false;
        for (;;) {
            auto piv = find_pivot(d, t);
            if (!piv) {
                block_empty = true;
                break;
            }
            d.swap_rows(t, piv->first);
            p.swap_rows(t, piv->first);
            d.swap_cols(t, piv->second);
            q.swap_cols(t, piv->second);

            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) != 0) {
                    long long f = checked_neg(d(i, t) / d(t, t));
                    if (f != 0) {
                        d.add_row_multiple(i, t, f);
                        p.add_row_multiple(i, t, f);
                    }
                }
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) != 0) {
                    long long f = checked_neg(d(t, j) / d(t, t));
                    if (f != 0) {
                        d.add_col_multiple(j, t, f);
                        q.add_col_multiple(j, t, f);
                    }
                }
            }

            bool residue = false;
            for (std::size_t i = t + 1; i < d.rows() && !residue; ++i) residue = d(i, t) != 0;
            for (std::size_t j = t + 1; j < d.cols() && !residue; ++j) residue = d(t, j) != 0;
            if (residue) continue;  // leftover remainders become smaller pivots

            // Divisibility fix-up: fold an offending row into row t and redo.
            bool fixed = true;
            for (std::size_t i = t + 1; i < d.rows() && fixed; ++i) {
                for (std::size_t j = t + 1; j < d.cols() && fixed; ++j) {
                    if (d(i, j) % d(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        p.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (block_empty) break;
        if (d(t, t) < 0) {
            d.negate_row(t);
            p.negate_row(t);
        }
    }
    return SmithForm{d, p, q};
}

AbelianGroup cokernel(const IntMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("cokernel requires a square matrix");
    }
    SmithForm snf = smith_normal_form(a);
    AbelianGroup g;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        long long di = snf.d(i, i);
        if (di == 0) {
            g.free_rank += 1;
        } else if (di > 1) {
            g.invariant_factors.push_back(di);
        }
    }
    return g;
}

std::vector<long long> project(const IntMatrix& a, const std::vector<long long>& v) {
    if (!a.is_square()) {
        throw std::invalid_argument("project requires a square matrix");
    }
    if (v.size() != a.rows()) {
        throw std::invalid_argument("vector length does not match matrix side");
    }
    SmithForm snf = smith_normal_form(a);
    std::vector<long long> w = snf.p.apply(v);
    std::vector<long long> torsion;
    std::vector<long long> free_part;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        long long di = snf.d(i, i);
        if (di == 1) continue;
        if (di == 0) {
            free_part.push_back(w[i]);
        } else {
            long long r = w[i] % di;
            if (r < 0) r += di;
            torsion.push_back(r);
        }
    }
    torsion.insert(torsion.end(), free_part.begin(), free_part.end());
    return torsion;
}

long long kernel_rank(const IntMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("kernel_rank requires a square matrix");
    }
    SmithForm snf = smith_normal_form(a);
    long long nonzero = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (snf.d(i, i) != 0) ++nonzero;
    }
    return static_cast<long long>(a.rows()) - nonzero;
}

long long determinant(const IntMatrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("determinant requires a square matrix");
    }
    IntMatrix m = a;
    std::size_t n = m.rows();
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                long long num =
                    checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j)));
                m(i, j) = num / prev;  // Bareiss division is exact
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return checked_mul(sign, m(n - 1, n - 1));
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square()) {
        throw std::invalid_argument("is_unimodular requires a square matrix");
    }
    long long det = determinant(m);
    return det == 1 || det == -1;
}

}  // namespace lpa
