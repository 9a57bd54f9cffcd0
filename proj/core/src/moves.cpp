#include "lpa/moves.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lpa/checked.hpp"
#include "lpa/errors.hpp"
#include "lpa/explorer.hpp"
#include "lpa/invariants.hpp"

namespace lpa {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Shift: return "shift";
        case MoveKind::Unshift: return "unshift";
        case MoveKind::Outsplit: return "outsplit";
        case MoveKind::Amalgamate: return "amalgamate";
    }
    throw std::logic_error("unreachable move kind");
}

MoveKind move_kind_from_name(const std::string& name) {
    if (name == "shift") return MoveKind::Shift;
    if (name == "unshift") return MoveKind::Unshift;
    if (name == "outsplit") return MoveKind::Outsplit;
    if (name == "amalgamate") return MoveKind::Amalgamate;
    throw std::invalid_argument("unknown move kind: " + name);
}

MoveStep MoveStep::shift(std::string v, std::string w) {
    MoveStep s;
    s.kind = MoveKind::Shift;
    s.v = std::move(v);
    s.w = std::move(w);
    return s;
}

MoveStep MoveStep::unshift(std::string v, std::string w) {
    MoveStep s;
    s.kind = MoveKind::Unshift;
    s.v = std::move(v);
    s.w = std::move(w);
    return s;
}

MoveStep MoveStep::outsplit(PartitionSpec spec) {
    MoveStep s;
    s.kind = MoveKind::Outsplit;
    s.partition = std::move(spec);
    return s;
}

MoveStep MoveStep::amalgamate(std::vector<std::string> group) {
    MoveStep s;
    s.kind = MoveKind::Amalgamate;
    s.group = std::move(group);
    return s;
}

bool shift_applicable(const MultiGraph& g, const std::string& v, const std::string& w) {
    std::size_t vi = g.index_checked(v);
    std::size_t wi = g.index_checked(w);
    if (vi == wi) throw std::invalid_argument("shift requires two distinct vertices");
    if (g.is_sink(vi) || g.is_sink(wi)) return false;
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (g.mult(wi, u) > g.mult(vi, u)) return false;
    }
    return true;
}

MultiGraph apply_shift(const MultiGraph& g, const std::string& v, const std::string& w) {
    if (!shift_applicable(g, v, w)) {
        throw std::invalid_argument("shift not applicable at (" + v + ", " + w + ")");
    }
    std::size_t vi = g.index_checked(v);
    std::size_t wi = g.index_checked(w);
    IntMatrix a = g.adjacency();
    for (std::size_t u = 0; u < g.size(); ++u) {
        a(vi, u) = checked_sub(a(vi, u), g.mult(wi, u));
    }
    a(vi, wi) = checked_add(a(vi, wi), 1);
    return MultiGraph(g.vertices(), std::move(a));
}

MultiGraph apply_unshift(const MultiGraph& g, const std::string& v, const std::string& w) {
    std::size_t vi = g.index_checked(v);
    std::size_t wi = g.index_checked(w);
    if (vi == wi) throw std::invalid_argument("unshift requires two distinct vertices");
    if (g.mult(vi, wi) < 1) {
        throw std::invalid_argument("unshift needs an edge " + v + " -> " + w);
    }
    if (g.is_sink(wi)) {
        throw std::invalid_argument("unshift target " + w + " must not be a sink");
    }
    IntMatrix a = g.adjacency();
    for (std::size_t u = 0; u < g.size(); ++u) {
        a(vi, u) = checked_add(a(vi, u), g.mult(wi, u));
    }
    a(vi, wi) = checked_sub(a(vi, wi), 1);
    MultiGraph result(g.vertices(), std::move(a));
    if (apply_shift(result, v, w) != g) {
        throw std::invalid_argument("unshift round-trip check failed at (" + v + ", " + w + ")");
    }
    return result;
}

namespace {

void validate_partition(const MultiGraph& g, const PartitionSpec& spec, std::size_t vi) {
    if (spec.classes.empty()) {
        throw std::invalid_argument("partition must have at least one class");
    }
    std::vector<long long> total(g.size(), 0);
    for (const auto& cls : spec.classes) {
        if (cls.size() != g.size()) {
            throw std::invalid_argument("partition class vector length must equal vertex count");
        }
        long long sum = 0;
        for (std::size_t u = 0; u < g.size(); ++u) {
            if (cls[u] < 0) throw std::invalid_argument("negative count in partition class");
            total[u] = checked_add(total[u], cls[u]);
            sum = checked_add(sum, cls[u]);
        }
        if (sum == 0) throw std::invalid_argument("empty class in partition");
    }
    for (std::size_t u = 0; u < g.size(); ++u) {
        if (total[u] != g.mult(vi, u)) {
            throw std::invalid_argument("partition classes do not sum to the out-row of " +
                                        spec.vertex);
        }
    }
}

}  // namespace

MultiGraph apply_outsplit(const MultiGraph& g, const PartitionSpec& spec) {
    std::size_t vi = g.index_checked(spec.vertex);
    if (g.is_sink(vi)) {
        throw std::invalid_argument("cannot out-split sink vertex " + spec.vertex);
    }
    validate_partition(g, spec, vi);

    std::size_t m = spec.classes.size();
    std::size_t n = g.size();
    std::size_t nn = n - 1 + m;

    std::vector<std::string> names;
    std::unordered_set<std::string> existing(g.vertices().begin(), g.vertices().end());
    // old index -> first new index; split vertex expands to v#1..v#m in place
    std::vector<std::size_t> base(n);
    for (std::size_t i = 0; i < n; ++i) {
        base[i] = names.size();
        if (i == vi) {
            for (std::size_t c = 1; c <= m; ++c) {
                std::string part = spec.vertex + "#" + std::to_string(c);
                if (existing.count(part)) {
                    throw std::invalid_argument("out-split name collision: " + part);
                }
                names.push_back(std::move(part));
            }
        } else {
            names.push_back(g.name(i));
        }
    }

    IntMatrix a(nn, nn, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == vi) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == vi) {
                // edges into the split vertex are replicated into every part
                for (std::size_t c = 0; c < m; ++c) {
                    a(base[i], base[vi] + c) = g.mult(i, vi);
                }
            } else {
                a(base[i], base[j]) = g.mult(i, j);
            }
        }
    }
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j == vi) {
                for (std::size_t c2 = 0; c2 < m; ++c2) {
                    a(base[vi] + c, base[vi] + c2) = spec.classes[c][vi];
                }
            } else {
                a(base[vi] + c, base[j]) = spec.classes[c][j];
            }
        }
    }
    return MultiGraph(std::move(names), std::move(a));
}

MultiGraph apply_amalgamate(const MultiGraph& g, const std::vector<std::string>& group) {
    if (group.size() < 2) {
        throw std::invalid_argument("amalgamation needs at least two vertices");
    }
    std::vector<std::size_t> idx;
    std::unordered_set<std::size_t> in_group;
    for (const auto& name : group) {
        std::size_t i = g.index_checked(name);
        if (!in_group.insert(i).second) {
            throw std::invalid_argument("repeated vertex in amalgamation group: " + name);
        }
        idx.push_back(i);
    }
    std::size_t rep = idx.front();
    for (std::size_t i : idx) {
        if (g.is_sink(i)) {
            throw std::invalid_argument("cannot amalgamate sink vertex " + g.name(i));
        }
    }
    // in-columns must agree across the group (full columns, group rows included)
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t i : idx) {
            if (g.mult(u, i) != g.mult(u, rep)) {
                throw std::invalid_argument("in-columns differ inside amalgamation group at " +
                                            g.name(u));
            }
        }
    }

    std::size_t n = g.size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == rep || !in_group.count(i)) keep.push_back(i);
    }
    std::vector<std::string> names;
    for (std::size_t i : keep) names.push_back(g.name(i));

    IntMatrix a(keep.size(), keep.size(), 0);
    for (std::size_t r = 0; r < keep.size(); ++r) {
        std::size_t i = keep[r];
        for (std::size_t c = 0; c < keep.size(); ++c) {
            std::size_t j = keep[c];
            if (i == rep && j == rep) {
                // loops: sum of group rows into any single group column
                long long s = 0;
                for (std::size_t gi : idx) s = checked_add(s, g.mult(gi, rep));
                a(r, c) = s;
            } else if (i == rep) {
                long long s = 0;
                for (std::size_t gi : idx) s = checked_add(s, g.mult(gi, j));
                a(r, c) = s;
            } else if (j == rep) {
                // in-edges were replicated across the group; de-replicate
                a(r, c) = g.mult(i, rep);
            } else {
                a(r, c) = g.mult(i, j);
            }
        }
    }
    return MultiGraph(std::move(names), std::move(a));
}

// Splitting a vertex replicates edges into it, so the class for an original
// edge must cover every current copy of that edge: one count at each part the
// edge's range has already been split into.
std::vector<MoveStep> maximal_outsplit_steps(const MultiGraph& g) {
    std::vector<MoveStep> steps;
    MultiGraph cur = g;
    std::vector<std::vector<std::string>> parts(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) parts[u] = {g.name(u)};

    for (std::size_t v = 0; v < g.size(); ++v) {
        std::size_t vi = cur.index_checked(g.name(v));
        if (cur.is_sink(vi)) continue;
        PartitionSpec spec;
        spec.vertex = g.name(v);
        for (std::size_t u = 0; u < g.size(); ++u) {
            for (long long c = 0; c < g.mult(v, u); ++c) {
                std::vector<long long> cls(cur.size(), 0);
                for (const auto& part : parts[u]) cls[cur.index_checked(part)] = 1;
                spec.classes.push_back(std::move(cls));
            }
        }
        cur = apply_outsplit(cur, spec);
        parts[v].clear();
        for (std::size_t c = 1; c <= spec.classes.size(); ++c) {
            parts[v].push_back(g.name(v) + "#" + std::to_string(c));
        }
        steps.push_back(MoveStep::outsplit(std::move(spec)));
    }
    return steps;
}

MultiGraph maximal_outsplit(const MultiGraph& g) {
    MultiGraph cur = g;
    for (const MoveStep& step : maximal_outsplit_steps(g)) cur = apply_step(cur, step);
    return cur;
}

MultiGraph apply_step(const MultiGraph& g, const MoveStep& step) {
    switch (step.kind) {
        case MoveKind::Shift: return apply_shift(g, step.v, step.w);
        case MoveKind::Unshift: return apply_unshift(g, step.v, step.w);
        case MoveKind::Outsplit: return apply_outsplit(g, step.partition);
        case MoveKind::Amalgamate: return apply_amalgamate(g, step.group);
    }
    throw std::logic_error("unreachable move kind");
}

VerifyReport verify_certificate(const MoveCertificate& cert, const VerifyOptions& opts) {
    VerifyReport report;
    report.steps = static_cast<long long>(cert.steps.size());

    MultiGraph cur = cert.source;
    PointedK0 cur_k0 = k0_data(cur);

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const MoveStep& step = cert.steps[i];
        long long si = static_cast<long long>(i);

        MultiGraph next = cur;
        try {
            next = apply_step(cur, step);
        } catch (const std::exception& e) {
            report.failures.push_back({si, "precondition", e.what()});
            report.valid = false;
            return report;
        }

        if (step.kind == MoveKind::Shift || step.kind == MoveKind::Unshift) {
            // Condition (L) must hold for the graph being shifted: the
            // pre-move graph for a shift, the post-move graph for an unshift.
            const MultiGraph& shifted = step.kind == MoveKind::Shift ? cur : next;
            if (!analyze(shifted).condition_L) {
                if (opts.allow_infinite_field) {
                    report.field_conditional = true;
                } else {
                    report.failures.push_back(
                        {si, "condition-L",
                         "graph being shifted violates Condition (L); the isomorphism needs an "
                         "infinite field"});
                }
            }
        }

        try {
            PointedK0 next_k0 = k0_data(next);
            if (!pointed_iso(cur_k0, next_k0, opts.torsion_cap)) {
                report.failures.push_back({si, "k0-invariance",
                                           "pointed K0 changed across the step"});
            }
            cur_k0 = std::move(next_k0);
        } catch (const CapExceeded& e) {
            report.failures.push_back({si, "k0-invariance", e.what()});
        }

        cur = std::move(next);
    }

    try {
        if (!graph_iso(cur, cert.target)) {
            report.failures.push_back(
                {-1, "endpoint", "replayed graph is not isomorphic to the stated target"});
        }
    } catch (const std::exception& e) {
        report.failures.push_back({-1, "endpoint", e.what()});
    }

    report.valid = report.failures.empty();
    return report;
}

}  // namespace lpa
