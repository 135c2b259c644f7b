#pragma once

#include <stdexcept>
#include <string>

namespace lcz {

/// Malformed textual input: rational strings, JSON documents, file schemas.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside a hard feasibility cap (enumeration sizes, factorization
/// range). Caps are errors, never silent truncations.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lcz
