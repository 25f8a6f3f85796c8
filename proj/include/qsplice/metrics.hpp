#pragma once

#include <map>
#include <string>

#include "qsplice/sim.hpp"

namespace qsplice {

using OutcomeDistribution = std::map<std::string, double>;

// Empirical distribution of a counts table. Throws std::invalid_argument on
// an empty table (no shots).
OutcomeDistribution normalize(const CountsTable& t);

// Total variation distance: (1/2) * sum |p_x - q_x| over the union of
// supports; a key missing from one side contributes its full mass.
double tvd(const OutcomeDistribution& p, const OutcomeDistribution& q);

}  // namespace qsplice
