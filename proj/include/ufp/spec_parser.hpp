#pragma once

// Text grammar for matchup components.
//
//   forecaster := "powerlaw:c=" RAT ",p=" INT
//               | "constant:c=" RAT                 (p = 0)
//               | "file:" PATH
//   skeptic    := "zero"
//               | "avoider:eps=" RAT [",decay=const" | ",decay=geo,ratio=" RAT]
//               | "momentum:m=" RAT
//               | "negv:v=" RAT
//               | "replay:" PATH
//
// RAT is "p/q" or a decimal string, always read exactly. Failures throw
// ParseError carrying the offending offset and the expected tokens.

#include <string_view>
#include <variant>

#include "ufp/forecaster.hpp"
#include "ufp/skeptic.hpp"

namespace ufp {

/// "file:" specs are returned with an empty value list; call
/// resolve_forecaster to load them.
ForecasterSpec parse_forecaster_spec(std::string_view text);
SkepticSpec parse_skeptic_spec(std::string_view text);
std::variant<ForecasterSpec, SkepticSpec> parse_spec(std::string_view text);

/// Loads the variance file of a FromFile spec; other specs pass through.
ForecasterSpec resolve_forecaster(ForecasterSpec spec);

/// Canonical text of a parsed spec.
std::string describe(const ForecasterSpec& spec);
std::string describe(const SkepticSpec& spec);

}  // namespace ufp
