#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lpa/explorer.hpp"
#include "lpa/invariants.hpp"
#include "test_support.hpp"

using namespace lpa;

namespace {

MultiGraph relabel(const MultiGraph& g, const std::vector<std::size_t>& perm) {
    IntMatrix a(g.size(), g.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.size(); ++i) {
        names.push_back("w" + std::to_string(i));
        for (std::size_t j = 0; j < g.size(); ++j) a(i, j) = g.mult(perm[i], perm[j]);
    }
    return MultiGraph(std::move(names), std::move(a));
}

}  // namespace

TEST_CASE("canonical form is permutation invariant") {
    MultiGraph s2 = builtin("S2");
    CHECK(canonical_form(s2) == canonical_form(relabel(s2, {1, 0})));
    CHECK(canonical_form(test::graph({{0, 1}, {1, 0}})) == IntMatrix{{0, 1}, {1, 0}});
    CHECK(canonical_form(test::graph({{2, 0}, {1, 0}})) ==
          canonical_form(test::graph({{0, 1}, {0, 2}})));

    // exhaustive over every 3-vertex {0,1} graph and every permutation
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (unsigned bits = 0; bits < 512; ++bits) {
        IntMatrix a(3, 3, 0);
        for (std::size_t k = 0; k < 9; ++k) {
            if ((bits >> k) & 1u) a(k / 3, k % 3) = 1;
        }
        MultiGraph g = from_incidence(a);
        IntMatrix canon = canonical_form(g);
        for (const auto& perm : perms) {
            CHECK(canonical_form(relabel(g, perm)) == canon);
        }
    }
}

TEST_CASE("canonical form rejects oversized graphs") {
    IntMatrix big(9, 9, 1);
    CHECK_THROWS_AS(canonical_form(from_incidence(big)), std::invalid_argument);
}

TEST_CASE("graph isomorphism via canonical forms") {
    MultiGraph s2 = builtin("S2");
    CHECK(graph_iso(s2, relabel(s2, {1, 0})));
    CHECK_FALSE(graph_iso(builtin("R_n", 2), builtin("R_n", 3)));
    // the triangle without loops is vertex transitive
    MultiGraph tri = test::graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(graph_iso(tri, relabel(tri, {2, 0, 1})));
}

TEST_CASE("catalog enumeration") {
    CHECK(enumerate_pis_sing(1).empty());

    auto two = enumerate_pis_sing(2);
    CHECK(two.size() == 2);
    for (const auto& g : two) {
        PropertyReport r = analyze(g);
        CHECK(r.purely_infinite_simple);
        CHECK(r.condition_sing);
    }

    auto three = enumerate_pis_sing(3);
    CHECK(three.size() == 34);
    // deduplicated, canonical and sorted
    for (std::size_t i = 0; i < three.size(); ++i) {
        CHECK(canonical_form(three[i]) == incidence(three[i]));
        if (i + 1 < three.size()) CHECK(incidence(three[i]) < incidence(three[i + 1]));
    }

    CHECK(enumerate_pis_sing(3, true) == three);
    CHECK_THROWS_AS(enumerate_pis_sing(5), std::invalid_argument);
}

TEST_CASE("classification of the two-vertex catalog") {
    auto table = classify(enumerate_pis_sing(2));
    REQUIRE(table.classes.size() == 1);
    CHECK(table.classes[0].members.size() == 2);
    CHECK(table.classes[0].representative.group.is_trivial());
}

TEST_CASE("classification of the three-vertex catalog") {
    auto table = classify(enumerate_pis_sing(3));
    REQUIRE(table.classes.size() == 7);
    std::vector<std::size_t> sizes;
    for (const auto& c : table.classes) sizes.push_back(c.members.size());
    std::vector<std::size_t> sorted_sizes = sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end());
    CHECK(sorted_sizes == std::vector<std::size_t>{1, 1, 2, 2, 4, 6, 18});
    for (const auto& c : table.classes) {
        for (const auto& g : c.members) {
            CHECK(pointed_iso(c.representative, k0_data(g)));
        }
    }
}

TEST_CASE("classification is stable under input shuffling") {
    auto graphs = enumerate_pis_sing(3);
    auto table = classify(graphs);
    std::mt19937 rng(2024);
    std::shuffle(graphs.begin(), graphs.end(), rng);
    auto shuffled = classify(graphs);
    REQUIRE(shuffled.classes.size() == table.classes.size());
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        CHECK(shuffled.classes[i].members.size() == table.classes[i].members.size());
        for (std::size_t j = 0; j < table.classes[i].members.size(); ++j) {
            CHECK(incidence(shuffled.classes[i].members[j]) ==
                  incidence(table.classes[i].members[j]));
        }
    }
    CHECK(classify({}).classes.empty());
}

TEST_CASE("find_path recovers the one-step shift witness") {
    SearchBounds bounds{3, 3, 4};
    FindPathResult res = find_path(builtin("S2"), builtin("R_n_k", 2, 2), bounds);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->steps.size() == 1);
    CHECK(verify_certificate(*res.certificate).valid);
}

TEST_CASE("find_path stops immediately on an invariant mismatch") {
    SearchBounds bounds{4, 3, 6};
    FindPathResult res = find_path(builtin("R_n", 2), builtin("R_n", 3), bounds);
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.reason.find("invariant mismatch") == 0);
}

TEST_CASE("find_path reports exhaustion rather than non-existence") {
    // same pointed K0 but a one-step bound too small for the needed path
    SearchBounds tight{2, 2, 0};
    FindPathResult res = find_path(builtin("S2"), builtin("R_n_k", 2, 2), tight);
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.reason.find("search exhausted") == 0);
}

TEST_CASE("find_path connects a split graph back to its amalgam") {
    // passes through an out-split or amalgamation, not just shifts
    MultiGraph split = test::graph({{1, 1, 0}, {1, 1, 0}, {1, 1, 0}});
    SearchBounds bounds{4, 3, 6};
    FindPathResult res = find_path(split, builtin("R_n_k", 2, 2), bounds);
    REQUIRE(res.certificate.has_value());
    CHECK(verify_certificate(*res.certificate).valid);
}

TEST_CASE("identical endpoints yield an empty certificate") {
    SearchBounds bounds{3, 3, 2};
    FindPathResult res = find_path(builtin("S2"), relabel(builtin("S2"), {1, 0}), bounds);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->steps.empty());
    CHECK(verify_certificate(*res.certificate).valid);
}
