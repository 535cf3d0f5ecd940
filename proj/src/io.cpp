#include "matadj/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace matadj {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

RealMatrix parse_matrix(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line))
    throw ParseError(name, 1, "empty input, expected 'rows cols'");
  ++lineno;
  long rows = 0, cols = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> rows >> cols) || (head >> extra))
      throw ParseError(name, lineno, "expected header 'rows cols'");
    if (rows <= 0 || cols <= 0)
      throw ParseError(name, lineno, "rows and cols must be positive");
  }
  RealMatrix m(rows, cols);
  for (long i = 0; i < rows; ++i) {
    if (!std::getline(in, line))
      throw ParseError(name, lineno + 1, "unexpected end of input at row " + std::to_string(i + 1));
    ++lineno;
    std::istringstream row(line);
    for (long j = 0; j < cols; ++j) {
      double v;
      if (!(row >> v))
        throw ParseError(name, lineno, "expected " + std::to_string(cols) +
                                           " values, failed at column " + std::to_string(j + 1));
      if (!std::isfinite(v))
        throw ParseError(name, lineno, "non-finite value at column " + std::to_string(j + 1));
      m(i, j) = v;
    }
    std::string extra;
    if (row >> extra)
      throw ParseError(name, lineno, "trailing token '" + extra + "'");
  }
  return m;
}

RealMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_matrix(in, path);
}

void write_matrix(std::ostream& out, const RealMatrix& m) {
  out << m.rows() << " " << m.cols() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << format_value(m(i, j));
    }
    out << "\n";
  }
}

std::string format_matrix(const RealMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace matadj
