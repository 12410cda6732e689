#pragma once

#include <stdexcept>
#include <string>

namespace mshuffle {

// Thrown when a computation would exceed a hard size limit (deck size above
// the addressable bound, enumeration past its cap). Kept distinct from
// std::invalid_argument so the CLI can map the two to different exit codes.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

} // namespace mshuffle
