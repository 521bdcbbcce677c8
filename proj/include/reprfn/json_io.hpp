#pragma once

// JSON documents for the command-line tool. Counts are written as decimal
// strings and rationals as {"exact": "p/q", "decimal": "..."}; boundaries are
// JSON numbers when they fit in 64 bits and decimal strings otherwise. The
// readers accept either form for integers.

#include "json.hpp"
#include "reprfn/blockset.hpp"
#include "reprfn/psilab.hpp"
#include "reprfn/structure.hpp"
#include "reprfn/witness.hpp"

#include <ostream>

namespace reprfn {

using Json = nlohmann::json;

Json int_to_json(const Int& x);
Int int_from_json(const Json& j);
Json rational_to_json(const Rational& x);

// { "boundaries": [...], "leading_gap": bool, "tail": {"a","k","i0"} | null }
Json to_json(const BlockSet& set);
BlockSet blockset_from_json(const Json& j);

Json to_json(const TailRule& rule);
Json to_json(const GSelection& sel);
Json to_json(const Decomposition& d);
Json to_json(const MultiplicativeProfile& p);
Json to_json(const WitnessReport& report);
Json to_json(const PsiReport& report);
Json to_json(const RatioScan& scan);
Json to_json(const std::vector<SeedResult>& results);

// Columns: n, r_A, r_comp, ratio_num, ratio_den. The ratio is for the
// containing side; for equality reports it is r_A / n.
void write_csv(std::ostream& out, const RatioScan& scan);
void write_csv(std::ostream& out, const PsiReport& report);

}  // namespace reprfn
