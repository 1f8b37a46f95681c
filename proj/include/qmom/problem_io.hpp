#ifndef QMOM_PROBLEM_IO_HPP
#define QMOM_PROBLEM_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qmom/repspace.hpp"

namespace qmom {

// A parsed problem file: quiver, dimensions and weights, plus optional
// reproducibility knobs. Parsing is purely syntactic; run validate() on the
// triple to get semantic violations.
struct Problem {
  Quiver quiver;
  DimensionVector dims;
  Weight theta;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol_scale;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Line-oriented format; see README for the grammar. Parse errors carry
// "origin:line:col".
Problem parse_problem(const std::string& text, const std::string& origin);
Problem load_problem(const std::string& path);
std::string serialize_problem(const Problem& p);

// Rep-matrix file: per arrow a line with the arrow id, then d_t rows of d_s
// entries "a+bi". Arrows with a zero dimension take no rows. Every arrow of
// the space must appear exactly once.
RepPoint parse_rep(const RepSpace& sp, const std::string& text,
                   const std::string& origin);
RepPoint load_rep(const RepSpace& sp, const std::string& path);
std::string serialize_rep(const RepSpace& sp, const RepPoint& rho);

// One complex literal: "a", "bi", or "a+bi" (signs allowed, exponents
// allowed). Throws Kind::parse.
Complex parse_complex(const std::string& token);
std::string format_complex(const Complex& z);

} // namespace qmom

#endif
