#pragma once

#include <filesystem>
#include <istream>

#include "frobnil/algebra.hpp"

namespace frobnil {

/// Parses the line-oriented algebra description format:
///
///   frobnil-algebra v1
///   name <identifier>
///   trace_parity even|odd
///   trace_degree <int>            # optional; requires degrees on every basis line
///   [basis]
///   <label> even|odd [<degree>]
///   [unit]
///   <label>
///   [trace]
///   <label> <rational>            # omitted labels trace to zero
///   [mult]
///   <label>*<label> = <sum of rational*label>   # omitted products are zero
///
/// '#' starts a comment; blank lines are ignored; rationals are "p/q" or "p".
/// Labels are identifiers; x and u are reserved for generators.
AlgebraData parse_algebra_config(std::istream& in, const std::string& origin);

/// Loads, validates, and constructs the algebra. Throws IoError on a missing
/// file, ParseError on bad syntax, and ValidationFailed (with the report
/// embedded in the message) when the axioms fail.
FrobeniusSuperalgebra load_config(const std::filesystem::path& path);

}  // namespace frobnil
