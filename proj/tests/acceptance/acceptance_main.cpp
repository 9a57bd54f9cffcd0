// Acceptance suite: one line per criterion, exit status = number of failures.
//
// Criterion 1 asserts the classical two-vertex catalog count of 3, which
// includes the two-parallel-loop graph B_2^2 alongside the two parallel-edge-
// free graphs. A strict no-parallel-edges enumeration (the same filter that
// reproduces the 34-graph three-vertex catalog) yields only 2, so that count
// sub-check is expected to stay red; the substance of the criterion (one
// class, trivial pointed data) is checked separately below.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lpa/explorer.hpp"
#include "lpa/intlat.hpp"
#include "lpa/invariants.hpp"
#include "lpa/moves.hpp"
#include "lpa/pipeline.hpp"

using namespace lpa;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, double seconds,
            const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                seconds, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

PointedK0 pk0(long long rank, std::vector<long long> factors, std::vector<long long> unit) {
    return PointedK0{AbelianGroup{rank, std::move(factors)}, std::move(unit)};
}

PointedK0 cyclic_header(long long modulus, long long element) {
    if (modulus == 1) return pk0(0, {}, {});
    return pk0(0, {modulus}, {((element % modulus) + modulus) % modulus});
}

// Independent move generator for the invariance sweep: shifts, unshifts,
// binary out-splits and pairwise amalgamations.
std::vector<MultiGraph> all_move_results(const MultiGraph& g) {
    std::vector<MultiGraph> results;
    std::size_t n = g.size();
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w = 0; w < n; ++w) {
            if (v == w) continue;
            if (shift_applicable(g, g.name(v), g.name(w))) {
                results.push_back(apply_shift(g, g.name(v), g.name(w)));
            }
            if (g.mult(v, w) >= 1 && !g.is_sink(w)) {
                results.push_back(apply_unshift(g, g.name(v), g.name(w)));
            }
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (g.is_sink(v)) continue;
        std::vector<long long> row(n);
        for (std::size_t u = 0; u < n; ++u) row[u] = g.mult(v, u);
        std::vector<long long> a(n, 0);
        for (;;) {
            std::size_t k = n;
            bool done = false;
            while (k > 0) {
                --k;
                if (a[k] < row[k]) {
                    ++a[k];
                    for (std::size_t j = k + 1; j < n; ++j) a[j] = 0;
                    break;
                }
                if (k == 0) done = true;
            }
            if (done) break;
            std::vector<long long> rest(n);
            bool nonzero = false;
            for (std::size_t u = 0; u < n; ++u) {
                rest[u] = row[u] - a[u];
                if (rest[u] != 0) nonzero = true;
            }
            if (!nonzero || rest < a) continue;
            results.push_back(apply_outsplit(g, PartitionSpec{g.name(v), {a, rest}}));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (g.is_sink(i) || g.is_sink(j)) continue;
            bool equal = true;
            for (std::size_t u = 0; u < n && equal; ++u) equal = g.mult(u, i) == g.mult(u, j);
            if (equal) results.push_back(apply_amalgamate(g, {g.name(i), g.name(j)}));
        }
    }
    return results;
}

void criterion_two_vertex_catalog() {
    Timer t;
    auto graphs = enumerate_pis_sing(2);
    auto table = classify(graphs);
    bool count_ok = graphs.size() == 3;
    bool class_ok = table.classes.size() == 1 &&
                    table.classes.front().representative.group.is_trivial() &&
                    pointed_iso(table.classes.front().representative, pk0(0, {}, {}));
    std::string detail = "enumerated " + std::to_string(graphs.size()) + " graphs in " +
                         std::to_string(table.classes.size()) + " class(es); count-of-3 check " +
                         (count_ok ? "met" : "unmet") + ", single trivial pointed class " +
                         (class_ok ? "met" : "unmet");
    report(1, "two-vertex catalog: 3 graphs, one trivial pointed class", count_ok && class_ok,
           t.elapsed(), detail);
}

void criterion_thirty_four() {
    Timer t;
    auto graphs = enumerate_pis_sing(3);
    report(2, "three-vertex catalog has exactly 34 graphs", graphs.size() == 34, t.elapsed(),
           "got " + std::to_string(graphs.size()));
}

void criterion_seven_classes() {
    Timer t;
    auto table = classify(enumerate_pis_sing(3));
    bool ok = table.classes.size() == 7;
    // the seven class headers with their member counts
    std::vector<std::pair<PointedK0, std::size_t>> expected;
    expected.emplace_back(pk0(0, {}, {}), 18);
    expected.emplace_back(pk0(0, {2}, {0}), 6);
    expected.emplace_back(pk0(0, {2}, {1}), 4);
    expected.emplace_back(pk0(0, {3}, {1}), 2);
    expected.emplace_back(pk0(0, {4}, {2}), 1);
    expected.emplace_back(pk0(0, {2, 2}, {0, 0}), 1);
    expected.emplace_back(pk0(1, {}, {0}), 2);
    for (const auto& [header, size] : expected) {
        bool found = false;
        for (const auto& cls : table.classes) {
            if (pointed_iso(cls.representative, header)) {
                found = cls.members.size() == size;
                break;
            }
        }
        ok = ok && found;
    }
    report(3, "34 graphs split into 7 pointed classes of sizes {18,6,4,2,1,1,2}", ok, t.elapsed());
}

void criterion_worked_k0() {
    Timer t;
    bool ok = true;
    MultiGraph triangle = from_incidence(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    PointedK0 tri = k0_data(triangle);
    ok = ok && tri.group == AbelianGroup{0, {2, 2}} &&
         tri.unit_class == std::vector<long long>{0, 0};
    for (long long n = 2; n <= 6; ++n) {
        PointedK0 rose = k0_data(builtin("R_n", n));
        ok = ok && pointed_iso(rose, cyclic_header(n - 1, 1));
        if (n >= 3) ok = ok && rose.group == AbelianGroup{0, {n - 1}};
        for (long long k = 1; k <= 4; ++k) {
            PointedK0 got = k0_data(builtin("B_n_k", n, k));
            ok = ok && pointed_iso(got, cyclic_header(n - 1, k));
            if (n >= 3) {
                ok = ok && got.group == AbelianGroup{0, {n - 1}} &&
                     std::gcd(got.unit_class.at(0), n - 1) == std::gcd(k, n - 1);
            }
        }
    }
    report(4, "worked pointed-K0 values for the triangle, roses and tailed roses", ok,
           t.elapsed());
}

void criterion_move_chains() {
    Timer t;
    SearchBounds bounds{5, 4, 20};
    auto table = classify(enumerate_pis_sing(3));
    bool ok = table.classes.size() == 7;
    int searched = 0;
    for (const auto& cls : table.classes) {
        const MultiGraph& rep = cls.members.front();
        for (std::size_t i = 1; i < cls.members.size(); ++i) {
            auto res = find_path(cls.members[i], rep, bounds);
            ++searched;
            ok = ok && res.certificate.has_value() && verify_certificate(*res.certificate).valid;
        }
    }
    for (std::size_t a = 0; a < table.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < table.classes.size(); ++b) {
            auto res = find_path(table.classes[a].members.front(),
                                 table.classes[b].members.front(), bounds);
            ok = ok && !res.certificate.has_value() &&
                 res.reason.find("invariant mismatch") == 0;
        }
    }
    report(5, "move search connects members within classes and never across", ok, t.elapsed(),
           std::to_string(searched) + " in-class searches");
}

void criterion_euclid() {
    Timer t;
    bool ok = true;
    int checked = 0;
    for (long long a = 3; a <= 50 && ok; ++a) {
        for (long long b = 2; b < a && ok; ++b) {
            if (std::gcd(a, b) != 1) continue;
            try {
                EuclidResult e = euclid_s_matrix(a, b);
                ok = ok && e.x1 * b - e.y1 * a == 1 && e.x2 * b - e.y2 * a == -1 &&
                     e.x1 + e.x2 == a && e.y1 + e.y2 == b && e.x1 - e.y1 >= 1 &&
                     e.x2 - e.y2 >= 0 && determinant(e.s_matrix) == 1;
                ++checked;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    report(6, "euclid S-matrix identities for all coprime a > b > 1 up to 50", ok, t.elapsed(),
           std::to_string(checked) + " pairs");
}

void criterion_fish() {
    Timer t;
    bool ok = true;
    int built = 0;
    for (long long n = 2; n <= 12 && ok; ++n) {
        for (long long d = 1; d <= 12 && ok; ++d) {
            if (std::gcd(d, n - 1) != 1) continue;
            try {
                MoveCertificate cert = cert_fish(n, d);
                VerifyReport rep = verify_certificate(cert);
                ok = ok && rep.valid && !rep.field_conditional;
                ok = ok && graph_iso(cert.source, builtin("R_n_k", n, d)) &&
                     graph_iso(cert.target, builtin("R_n", n));
                ok = ok && pointed_iso(k0_data(cert.source), cyclic_header(n - 1, d)) &&
                     pointed_iso(k0_data(cert.target), cyclic_header(n - 1, 1)) &&
                     pointed_iso(k0_data(cert.source), k0_data(cert.target));
                ++built;
            } catch (const std::exception&) {
                ok = false;
            }
        }
    }
    // (8, 3) takes the full ten-step route: its replay passes a three-vertex
    // stage before collapsing to the rose
    MoveCertificate deep = cert_fish(8, 3);
    bool three_vertex_stage = false;
    MultiGraph cur = deep.source;
    for (const auto& step : deep.steps) {
        cur = apply_step(cur, step);
        three_vertex_stage = three_vertex_stage || cur.size() == 3;
    }
    ok = ok && three_vertex_stage;
    report(7, "fish certificates verify for all coprime (n, d) in 2..12 x 1..12", ok, t.elapsed(),
           std::to_string(built) + " certificates");
}

void criterion_property_suites() {
    Timer t;
    bool ok = true;
    std::mt19937 rng(20240811);

    // phi composition law
    {
        std::uniform_int_distribution<long long> entry(-3, 3);
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            std::size_t n = dim(rng);
            IntMatrix m1(n, n), m2(n, n), a(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m1(i, j) = entry(rng);
                    m2(i, j) = entry(rng);
                    a(i, j) = entry(rng);
                }
            }
            ok = phi(m2, phi(m1, a)) == phi(m2 * m1, a);
        }
    }

    // smith form contract
    {
        std::uniform_int_distribution<long long> entry(-5, 5);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            std::size_t r = dim(rng);
            std::size_t c = dim(rng);
            IntMatrix a(r, c);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j) a(i, j) = entry(rng);
            }
            SmithForm s = smith_normal_form(a);
            ok = s.p * a * s.q == s.d && is_unimodular(s.p) && is_unimodular(s.q);
            for (std::size_t i = 0; i + 1 < std::min(r, c) && ok; ++i) {
                if (s.d(i, i) != 0) ok = s.d(i + 1, i + 1) % s.d(i, i) == 0;
                ok = ok && s.d(i, i) >= 0;
            }
        }
    }

    // move round trips on random small graphs
    {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::uniform_int_distribution<long long> entry(0, 3);
        int done = 0;
        while (done < 500 && ok) {
            std::size_t n = dim(rng);
            IntMatrix a(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
            }
            MultiGraph g = from_incidence(a);
            bool used = false;
            for (std::size_t v = 0; v < n && !used && ok; ++v) {
                for (std::size_t w = 0; w < n && !used && ok; ++w) {
                    if (v == w) continue;
                    if (shift_applicable(g, g.name(v), g.name(w))) {
                        MultiGraph s = apply_shift(g, g.name(v), g.name(w));
                        ok = apply_unshift(s, g.name(v), g.name(w)) == g;
                        used = true;
                    } else if (g.mult(v, w) >= 1 && !g.is_sink(w)) {
                        MultiGraph u = apply_unshift(g, g.name(v), g.name(w));
                        ok = apply_shift(u, g.name(v), g.name(w)) == g;
                        used = true;
                    }
                }
            }
            if (used) ++done;
        }
    }

    // pointed-K0 invariance under every applicable move on the catalog
    long long moves_checked = 0;
    {
        std::vector<MultiGraph> catalog = enumerate_pis_sing(2);
        for (auto& g : enumerate_pis_sing(3)) catalog.push_back(std::move(g));
        for (const auto& g : catalog) {
            if (!ok) break;
            PointedK0 before = k0_data(g);
            for (const auto& moved : all_move_results(g)) {
                ok = ok && pointed_iso(before, k0_data(moved));
                ++moves_checked;
            }
        }
    }

    report(8, "property suites: phi composition, smith contract, round trips, K0 invariance", ok,
           t.elapsed(), std::to_string(moves_checked) + " catalog moves checked");
}

}  // namespace

int main() {
    criterion_two_vertex_catalog();
    criterion_thirty_four();
    criterion_seven_classes();
    criterion_worked_k0();
    criterion_move_chains();
    criterion_euclid();
    criterion_fish();
    criterion_property_suites();
    std::printf(
        "[SKIP] criterion 9: ring-level isomorphism statements are out of scope by design; the "
        "suite checks their finite shadows (move legality, condition L, K0 invariance) only\n");
    std::printf("RESULT: %d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
