#include "lpa/invariants.hpp"

#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lpa/checked.hpp"
#include "lpa/errors.hpp"

namespace lpa {

long long default_torsion_cap() {
    if (const char* env = std::getenv("LPACLASS_MAX_TORSION")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("LPACLASS_MAX_TORSION must be a positive integer");
    }
    return 10000;
}

PointedK0 k0_data(const MultiGraph& g) {
    IntMatrix m = incidence(g).transpose() - IntMatrix::identity(g.size());
    PointedK0 out;
    out.group = cokernel(m);
    out.unit_class = project(m, std::vector<long long>(g.size(), 1));
    return out;
}

bool group_iso(const AbelianGroup& a, const AbelianGroup& b) { return a == b; }

long long k1_rank(const MultiGraph& g) {
    IntMatrix m = incidence(g).transpose() - IntMatrix::identity(g.size());
    return kernel_rank(m);
}

namespace {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

// Torsion group T = Z/f1 + ... + Z/fk with elements as residue tuples.
struct Torsion {
    std::vector<long long> factors;

    long long order() const {
        long long o = 1;
        for (long long f : factors) o = checked_mul(o, f);
        return o;
    }

    std::vector<long long> element(long long rank_index) const {
        std::vector<long long> e(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            e[i] = rank_index % factors[i];
            rank_index /= factors[i];
        }
        return e;
    }

    long long element_order(const std::vector<long long>& x) const {
        long long o = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            long long oi = factors[i] / gcd_ll(x[i], factors[i]);
            o = o / gcd_ll(o, oi) * oi;
        }
        return o;
    }
};

// Enumerate Aut(T) by choosing an image of each factor generator (any element
// of the right order) and keeping the bijections.
class AutEnumerator {
public:
    AutEnumerator(const Torsion& t, long long candidate_cap) : t_(t) {
        long long n = t_.order();
        for (std::size_t i = 0; i < t_.factors.size(); ++i) {
            std::vector<std::vector<long long>> imgs;
            for (long long r = 0; r < n; ++r) {
                auto e = t_.element(r);
                if (t_.element_order(e) == t_.factors[i]) imgs.push_back(std::move(e));
            }
            long long total = 1;
            for (const auto& c : candidates_) total = checked_mul(total, (long long)c.size());
            if (checked_mul(total, (long long)imgs.size()) > candidate_cap) {
                throw CapExceeded("undecided, cap exceeded: automorphism search too large");
            }
            candidates_.push_back(std::move(imgs));
        }
    }

    // Invokes fn for each automorphism, given as generator images; stops early
    // when fn returns true.
    template <typename Fn>
    bool for_each(Fn&& fn) const {
        std::vector<std::size_t> pick(candidates_.size(), 0);
        return recurse(0, pick, fn);
    }

private:
    template <typename Fn>
    bool recurse(std::size_t i, std::vector<std::size_t>& pick, Fn&& fn) const {
        if (i == candidates_.size()) {
            std::vector<std::vector<long long>> gen_images;
            for (std::size_t j = 0; j < pick.size(); ++j) {
                gen_images.push_back(candidates_[j][pick[j]]);
            }
            if (!is_bijective(gen_images)) return false;
            return fn(gen_images);
        }
        for (pick[i] = 0; pick[i] < candidates_[i].size(); ++pick[i]) {
            if (recurse(i + 1, pick, fn)) return true;
        }
        return false;
    }

    bool is_bijective(const std::vector<std::vector<long long>>& gen_images) const {
        long long n = t_.order();
        std::set<std::vector<long long>> seen;
        for (long long r = 0; r < n; ++r) {
            auto x = t_.element(r);
            std::vector<long long> y(t_.factors.size(), 0);
            for (std::size_t i = 0; i < t_.factors.size(); ++i) {
                for (std::size_t j = 0; j < t_.factors.size(); ++j) {
                    y[j] = (y[j] + x[i] % t_.factors[j] * (gen_images[i][j] % t_.factors[j])) %
                           t_.factors[j];
                }
            }
            if (!seen.insert(std::move(y)).second) return false;
        }
        return true;
    }

    Torsion t_;
    std::vector<std::vector<std::vector<long long>>> candidates_;
};

}  // namespace

bool pointed_iso(const PointedK0& a, const PointedK0& b, long long torsion_cap) {
    if (torsion_cap < 0) torsion_cap = default_torsion_cap();
    if (!group_iso(a.group, b.group)) return false;

    std::size_t k = a.group.invariant_factors.size();
    std::size_t rank = static_cast<std::size_t>(a.group.free_rank);
    if (a.unit_class.size() != k + rank || b.unit_class.size() != k + rank) {
        throw std::invalid_argument("unit class coordinate count does not match group");
    }

    // Free parts lie in the same GL(Z)-orbit iff their coordinate gcds agree.
    long long ca = 0;
    long long cb = 0;
    for (std::size_t i = 0; i < rank; ++i) {
        ca = gcd_ll(ca, a.unit_class[k + i]);
        cb = gcd_ll(cb, b.unit_class[k + i]);
    }
    if (ca != cb) return false;
    if (k == 0) return true;

    Torsion t{a.group.invariant_factors};
    if (t.order() > torsion_cap) {
        throw CapExceeded("undecided, cap exceeded: torsion order " + std::to_string(t.order()) +
                          " above cap " + std::to_string(torsion_cap));
    }

    // Need delta in Aut(T) with b_t - delta(a_t) in c*T, where c*T absorbs the
    // torsion contribution of the free coordinates.
    std::vector<long long> at(a.unit_class.begin(), a.unit_class.begin() + k);
    std::vector<long long> bt(b.unit_class.begin(), b.unit_class.begin() + k);

    AutEnumerator autos(t, checked_mul(torsion_cap, torsion_cap));
    return autos.for_each([&](const std::vector<std::vector<long long>>& gen_images) {
        std::vector<long long> delta_at(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                delta_at[j] = (delta_at[j] +
                               at[i] % t.factors[j] * (gen_images[i][j] % t.factors[j])) %
                              t.factors[j];
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            long long diff = (bt[j] - delta_at[j]) % t.factors[j];
            if (diff < 0) diff += t.factors[j];
            long long step = gcd_ll(ca, t.factors[j]);
            if (step == 0 ? diff != 0 : diff % step != 0) return false;
        }
        return true;
    });
}

}  // namespace lpa
