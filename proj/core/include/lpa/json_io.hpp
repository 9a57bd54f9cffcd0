#pragma once

#include <string>
#include <string_view>

#include "lpa/explorer.hpp"
#include "lpa/intlat.hpp"
#include "lpa/intmatrix.hpp"
#include "lpa/invariants.hpp"
#include "lpa/moves.hpp"
#include "lpa/multigraph.hpp"

namespace lpa {

// Graph JSON is exactly {"vertices": [...], "edges": [[src, dst, mult], ...]};
// unknown keys are rejected. Matrix JSON is {"rows", "cols", "entries"}.

MultiGraph parse_graph(std::string_view text);
std::string graph_to_json(const MultiGraph& g, bool pretty = false);
std::string graph_to_dot(const MultiGraph& g);

IntMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const IntMatrix& m, bool pretty = false);

std::string smith_to_json(const SmithForm& s, bool pretty = false);
std::string k0_to_json(const PointedK0& k0, bool pretty = false);
std::string property_report_to_json(const PropertyReport& r, bool pretty = false);

MoveCertificate certificate_from_json(std::string_view text);
std::string certificate_to_json(const MoveCertificate& c, bool pretty = false);

std::string verify_report_to_json(const VerifyReport& r, bool pretty = false);
std::string table_to_json(const ClassificationTable& t, bool pretty = false);

}  // namespace lpa
