#ifndef MATADJ_IO_HPP
#define MATADJ_IO_HPP

#include <iosfwd>
#include <string>

#include "matadj/core.hpp"

namespace matadj {

// Plain-text matrix format: first line "rows cols", then `rows` lines of
// whitespace-separated decimal literals. Values round-trip at 17 significant
// digits.

RealMatrix parse_matrix(std::istream& in, const std::string& name);
RealMatrix read_matrix(const std::string& path);

void write_matrix(std::ostream& out, const RealMatrix& m);
std::string format_matrix(const RealMatrix& m);
std::string format_value(double v);

}  // namespace matadj

#endif
