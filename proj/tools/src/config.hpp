#pragma once

#include <istream>
#include <map>
#include <string>

namespace catlab::cli {

/// key=value lines; '#' starts a comment; surrounding blanks are trimmed.
/// Throws domain_error naming the line for anything else.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace catlab::cli
