#ifndef TORLOG_SCALAR_HPP
#define TORLOG_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace torlog {

/// Exact rational scalar. gmpxx keeps results of arithmetic in lowest terms
/// with a positive denominator; values built by hand go through make_scalar
/// or parse_scalar, which canonicalize.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Operand shapes do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-shaped but outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& q);

inline bool is_zero(const Scalar& q) { return sgn(q) == 0; }

}  // namespace torlog

#endif  // TORLOG_SCALAR_HPP
