#pragma once

#include <string>

#include <json.hpp>

#include "bes/bounds.hpp"
#include "bes/cleaning.hpp"
#include "bes/density.hpp"
#include "bes/hypergraph.hpp"
#include "bes/solver.hpp"

namespace bes {

using Json = nlohmann::json;

Json to_json(const Hypergraph& F);
Json to_json(const Configuration& S);
Json to_json(const TGraph& J);
Json to_json(const CoverProfile& p);
Json to_json(const CleaningLedger& ledger);
Json to_json(const CleaningReport& rep);
Json to_json(const ReductionStep& step, std::uint64_t c_rt);
Json to_json(const KnownValue& v);
Json to_json(const SolverResult& res);
Json to_json(const GridSummary& g);
Json to_json(const OddPartition& p);
Json to_json(const ComponentG3Report& c);

/// "r t k value status decimal source".
std::string table_row(const KnownValue& v);
/// Six significant digits, for display only.
std::string decimal(const Rational& q);

}  // namespace bes
