#pragma once

#include <iosfwd>
#include <string>

#include "fdikit/structural.hpp"

namespace fdikit::structural {

// Declarative text format for structural models, one directive per line:
//
//   model <name>
//   unknowns <var>...
//   knowns <var>...
//   faults <var>...
//   eq <name>: <var>...          # incident unknowns/knowns/faults, any order
//   diff <name>: <state> <derivative>
//
// '#' starts a comment; blank lines are ignored. Variables must be declared
// before equations reference them. write_model emits the canonical form, and
// parse(write_model(m)) reproduces m exactly.
StructuralModel parse_model(std::istream& in);
StructuralModel parse_model_string(const std::string& text);
StructuralModel load_model(const std::string& path);

std::string write_model(const StructuralModel& model);
void save_model(const StructuralModel& model, const std::string& path);

}  // namespace fdikit::structural
