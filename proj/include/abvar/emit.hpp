#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "abvar/census.hpp"
#include "abvar/kunneth.hpp"
#include "abvar/moments.hpp"
#include "abvar/motive.hpp"

namespace abvar {

using json = nlohmann::json;

// Motive: {"terms":[{"coeff":int,"l":int,"sym":"1"|"S1[k]"|"S2[j,k]"|"S3[a,b,c]"}]},
// terms in (sym, l) descending order; round trips bit-exactly.
json motive_to_json(const Motive& m);
Motive motive_from_json(const json& j);

std::string motive_to_latex(const Motive& m);

// polynomials as [[exponent, coeff], ...] descending
json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

// exact rationals as "p/q" (or "p" for integers)
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const json& j);

json table_to_json(const CohomologyTable& t);
CohomologyTable table_from_json(const json& j);
std::string table_to_text(const CohomologyTable& t);
std::string table_to_latex(const CohomologyTable& t);

json report_to_json(const MomentReport& r);
MomentReport report_from_json(const json& j);
std::string report_to_text(const MomentReport& r);
std::string reports_to_csv(const std::vector<MomentReport>& rs);
std::string reports_to_latex(const std::vector<MomentReport>& rs);

json census_to_json(const CensusReport& r);
CensusReport census_from_json(const json& j);
std::string census_to_csv(const CensusReport& r);
std::string comparisons_to_csv(const std::vector<CensusComparison>& rows);

}  // namespace abvar
