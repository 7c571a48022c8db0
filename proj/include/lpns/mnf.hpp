#pragma once

#include <iosfwd>
#include <string>

#include "lpns/field.hpp"

namespace lpns {

/// MNF1 field file: text header lines "mnf1", "d=<int>", "n=<ints>",
/// "L=<floats>", "c=<int>", then little-endian 64-bit floats, row-major,
/// component-major. Write/read round-trips bit-exactly.
void write_mnf(std::ostream& out, const RealField& f);
void write_mnf(const std::string& path, const RealField& f);

RealField read_mnf(std::istream& in);
RealField read_mnf(const std::string& path);

}  // namespace lpns
