#ifndef MGD_REPORT_JSON_HPP
#define MGD_REPORT_JSON_HPP

#include <nlohmann/json.hpp>

#include "mgd/certify.hpp"
#include "mgd/diagram.hpp"
#include "mgd/moves.hpp"
#include "mgd/resolve.hpp"
#include "mgd/search.hpp"
#include "mgd/surface.hpp"
#include "mgd/validate.hpp"

namespace mgd {

// Deterministic JSON projections (insertion-ordered keys, stable element
// order) so repeated runs are byte-identical.
using Json = nlohmann::ordered_json;

[[nodiscard]] Json to_json(const ValidateReport& r);
[[nodiscard]] Json to_json(const LinkInvariants& r);
[[nodiscard]] Json to_json(const Certificate& c);
[[nodiscard]] Json to_json(const HAdmissibility& h);
[[nodiscard]] Json to_json(const SingularReport& s);
[[nodiscard]] Json to_json(const SurfaceResult& s);
[[nodiscard]] Json to_json(const MoveSite& site);
[[nodiscard]] Json to_json(const SearchResult& r);
[[nodiscard]] Json steps_to_json(const std::vector<MoveStep>& steps);

[[nodiscard]] std::string verdict_name(Verdict v);
[[nodiscard]] std::string outcome_name(SearchOutcome o);

}  // namespace mgd

#endif  // MGD_REPORT_JSON_HPP
