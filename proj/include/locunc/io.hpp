#pragma once

#include <iosfwd>
#include <string>

#include "locunc/instance.hpp"

namespace locunc {

// shortest decimal form that parses back to the same double
std::string format_double(double x);

void write_instance(const Instance& inst, std::ostream& out);
void write_instance(const Instance& inst, const std::string& path);
std::string instance_to_string(const Instance& inst);

// throws ParseError carrying the 1-based line number
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& path);
Instance instance_from_string(const std::string& text);

std::string family_to_string(const FamilyDescriptor& fam);

}  // namespace locunc
