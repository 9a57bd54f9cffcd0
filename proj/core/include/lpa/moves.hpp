#pragma once

#include <string>
#include <vector>

#include "lpa/multigraph.hpp"

namespace lpa {

enum class MoveKind { Shift, Unshift, Outsplit, Amalgamate };

const char* move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);

// Per-vertex partition of outgoing edges driving an out-split. Each class is
// a count vector over the graph's vertex order; classes must be nonempty and
// sum to the vertex's out-row.
struct PartitionSpec {
    std::string vertex;
    std::vector<std::vector<long long>> classes;

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

struct MoveStep {
    MoveKind kind = MoveKind::Shift;
    std::string v;  // shift/unshift: vertex whose out-row changes
    std::string w;  // shift/unshift: the hooked vertex
    PartitionSpec partition;         // outsplit
    std::vector<std::string> group;  // amalgamate

    static MoveStep shift(std::string v, std::string w);
    static MoveStep unshift(std::string v, std::string w);
    static MoveStep outsplit(PartitionSpec spec);
    static MoveStep amalgamate(std::vector<std::string> group);

    friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

// Replayable witness that two graphs have isomorphic Leavitt path algebras.
struct MoveCertificate {
    MultiGraph source;
    std::vector<MoveStep> steps;
    MultiGraph target;
};

// Shift legality: v != w, neither a sink, and w's out-row is dominated by
// v's (the count criterion for the edge-bundle injection).
bool shift_applicable(const MultiGraph& g, const std::string& v, const std::string& w);

// row_v <- row_v - row_w + unit(w); all other rows unchanged.
MultiGraph apply_shift(const MultiGraph& g, const std::string& v, const std::string& w);

// Inverse direction: row_v <- row_v + row_w - unit(w), then the round trip
// apply_shift(result, v, w) == g is checked.
MultiGraph apply_unshift(const MultiGraph& g, const std::string& v, const std::string& w);

// Split one vertex by the partition; everything else keeps the trivial
// one-class partition. The split vertex v with m classes becomes v#1..v#m.
MultiGraph apply_outsplit(const MultiGraph& g, const PartitionSpec& spec);

// Merge vertices with identical in-columns; inverse of an out-split. The
// merged vertex takes the first group member's name and position.
MultiGraph apply_amalgamate(const MultiGraph& g, const std::vector<std::string>& group);

// Out-split with all-singleton classes at every non-sink vertex; for a
// sink-free graph this is the dual graph (one vertex per edge).
MultiGraph maximal_outsplit(const MultiGraph& g);

// The maximal out-split as a replayable sequence of single-vertex steps.
std::vector<MoveStep> maximal_outsplit_steps(const MultiGraph& g);

MultiGraph apply_step(const MultiGraph& g, const MoveStep& step);

struct VerifyFailure {
    long long step = -1;  // -1 for endpoint checks
    std::string check;
    std::string detail;
};

struct VerifyOptions {
    // Skip the Condition (L) requirement at shift steps; the isomorphism then
    // needs an infinite coefficient field and the report says so.
    bool allow_infinite_field = false;
    long long torsion_cap = -1;
};

struct VerifyReport {
    bool valid = false;
    bool field_conditional = false;
    long long steps = 0;
    std::vector<VerifyFailure> failures;
};

// Replays the certificate, checking step preconditions, Condition (L) at
// shift/unshift steps, pointed-K0 invariance at every step, and isomorphism
// of the final graph with the stated target. Failures become report entries.
VerifyReport verify_certificate(const MoveCertificate& cert, const VerifyOptions& opts = {});

}  // namespace lpa
