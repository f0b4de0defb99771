#pragma once

#include <stdexcept>
#include <string>

namespace graphlens {

/// Base error for everything graphlens raises: bad input files, violated
/// preconditions, unwritable outputs. Messages name the offending
/// file/line/flag where one exists.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace graphlens
