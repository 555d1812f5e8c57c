#include "rbi/kernel/matrix.hpp"

#include <sstream>

namespace rbi {

std::string matrix_to_csv(const ScalarMatrix& m, const std::string& basis) {
  std::ostringstream os;
  os << "# rows=" << m.rows() << " cols=" << m.cols() << " basis=" << basis << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_real()) throw Error("matrix dump supports real entries only");
      if (j != 0) os << ",";
      os << rational_to_string(m(i, j).re());
    }
    os << "\n";
  }
  return os.str();
}

std::pair<ScalarMatrix, std::string> matrix_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw ParseError("empty matrix dump");
  std::size_t rows = 0, cols = 0;
  std::string basis;
  {
    std::istringstream hs(header);
    std::string hash, r, c, b;
    if (!(hs >> hash >> r >> c >> b) || hash != "#" || r.rfind("rows=", 0) != 0 ||
        c.rfind("cols=", 0) != 0 || b.rfind("basis=", 0) != 0) {
      throw ParseError("malformed matrix header '" + header + "'");
    }
    try {
      rows = std::stoul(r.substr(5));
      cols = std::stoul(c.substr(5));
    } catch (const std::exception&) {
      throw ParseError("malformed matrix header '" + header + "'");
    }
    basis = b.substr(6);
  }
  ScalarMatrix m(rows, cols);
  std::string line;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!std::getline(is, line)) throw ParseError("matrix dump has too few rows");
    std::istringstream ls(line);
    std::string cell;
    std::size_t j = 0;
    while (std::getline(ls, cell, ',')) {
      if (j >= cols) throw ParseError("matrix dump row too long");
      m(i, j++) = Scalar(parse_rational(cell));
    }
    if (j != cols) throw ParseError("matrix dump row too short");
  }
  return {std::move(m), basis};
}

}  // namespace rbi
