#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/groups.hpp"

namespace cgt::groups {

// Declarative description of a group model; round-trips losslessly through
// its JSON text form.
struct GroupSpec {
  Family family = Family::FreeAbelian;
  std::vector<std::int64_t> params;
  std::vector<std::vector<std::int64_t>> generators;  // custom positive generators (free abelian)
  std::vector<GroupSpec> factors;                     // exactly two for products

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec spec_of(const GroupModel& model);
GroupModel instantiate(const GroupSpec& spec);

// Canonical one-document JSON form.
std::string to_text(const GroupSpec& spec);
GroupSpec parse_spec(const std::string& text);

// Compact names for the command line: "Z", "Z2" or "Z^2", "F2", "Z/5",
// "Dinf", "Heis", and products joined with "x" such as "ZxZ/2".
GroupSpec parse_builtin_expr(const std::string& expr);

}  // namespace cgt::groups
