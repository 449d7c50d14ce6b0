#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "mvmodal/decide.hpp"
#include "mvmodal/kripke.hpp"
#include "mvmodal/measures.hpp"
#include "mvmodal/proofs.hpp"
#include "mvmodal/suite.hpp"
#include "mvmodal/translate.hpp"

namespace mvmodal {

using Json = nlohmann::ordered_json;
using AnyModel = std::variant<Mvs5Model, PossibilisticModel>;

/// {"n", "atoms", "reserved_p", "worlds": [{"id", "pi", "val": {atom: value}}]};
/// "pi" appears only for possibilistic models.
Json to_json(const Mvs5Model& m);
Json to_json(const PossibilisticModel& m);
Json to_json(const AnyModel& m);
/// A model with "pi" on every world is possibilistic, one without on any is MVS5.
AnyModel model_from_json(const Json& j);

/// {"n", "atoms", "table": [{"mec": {atom: value}, "pi": value}]}.
Json to_json(const PossibilityAssignment& a);
PossibilityAssignment assignment_from_json(const Json& j);

/// {"system", "n", "atoms"?, "premises", "lines": [{"formula", "just"}]} where
/// just is {"premise": k}, {"axiom": id, "subst"?: {...}, "params"?: {...}},
/// {"mp": [a, b]}, {"nec": a} or {"coef_one": a}.
Proof proof_from_json(const Json& j, const ParseOptions& popts = {});
Json to_json(const Proof& p);

Json to_json(const Countermodel& c);
Json to_json(const Verdict& v);
Json to_json(const ProofCheck& c);
Json to_json(const SpotcheckReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const MeasureReport& r);
Json to_json(const FaithfulnessReport& r);

/// Reads and parses a JSON file; throws Error on I/O or syntax problems.
Json read_json_file(const std::string& path);

}  // namespace mvmodal
