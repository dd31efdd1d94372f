#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trop {

using Rat = mpq_class;
using Int = mpz_class;

// Domain errors carry a machine-readable kind so the CLI can map them to
// the documented error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical rational from a possibly non-reduced numerator/denominator
// pair. GMP's two-argument mpq constructor does not reduce, and comparisons
// misbehave on non-canonical values, so construction must go through here.
inline Rat frac(long num, long den) {
  if (den == 0) throw Error("ParseError", "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p". Rejects floats, empty strings, zero denominators.
Rat parse_rat(const std::string& s);

// Renders canonically: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& q);

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest integer <= q.
inline Int rat_floor(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }

}  // namespace trop
