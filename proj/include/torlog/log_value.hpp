#ifndef TORLOG_LOG_VALUE_HPP
#define TORLOG_LOG_VALUE_HPP

#include <optional>
#include <string>
#include <vector>

#include "torlog/scalar.hpp"

namespace torlog {

struct LogTerm {
  Scalar weight;
  Scalar base;  // > 0

  friend bool operator==(const LogTerm&, const LogTerm&) = default;
};

/// Exact formal sum of weighted logarithms of positive rationals.
///
/// Canonical form: either no terms (the value 0) or a single term w*log(q) with
/// w != 0, q > 1 and q not a perfect power. Every finite sum of rational
/// multiples of logs of positive rationals reduces to this form, and two sums
/// denote the same real number iff their canonical forms coincide, so equality
/// here is syntactic.
class LogValue {
 public:
  LogValue() = default;
  /// Canonicalizes. Throws DomainError on a non-positive base.
  explicit LogValue(std::vector<LogTerm> terms);

  /// weight * log(base).
  static LogValue log(const Scalar& base, const Scalar& weight = 1);

  const std::vector<LogTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Numeric evaluation of sum w * ln(q); display only.
  double approx() const;

  /// exp of the value when it is rational (weight an integer), else nullopt.
  std::optional<Scalar> exp_rational() const;

  /// "0" or "w*log(q)".
  std::string to_string() const;

  LogValue& operator+=(const LogValue& o);
  LogValue& operator-=(const LogValue& o);
  LogValue& operator*=(const Scalar& s);

  friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
  friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
  friend LogValue operator-(LogValue a) { return a *= Scalar(-1); }
  friend LogValue operator*(const Scalar& s, LogValue a) { return a *= s; }
  friend bool operator==(const LogValue&, const LogValue&) = default;

 private:
  std::vector<LogTerm> terms_;
};

}  // namespace torlog

#endif  // TORLOG_LOG_VALUE_HPP
