#include "torlog/log_value.hpp"

#include <cmath>
#include <utility>

namespace torlog {

namespace {

bool is_perfect_power(const Integer& x, unsigned long k, Integer& root) {
  return mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0;
}

/// Replaces q = a/b (coprime, a > b >= 1) by its primitive root r with q = r^k
/// and returns k.
unsigned long extract_power(Scalar& q) {
  unsigned long total = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    const Integer a = q.get_num();
    const Integer b = q.get_den();
    const auto bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    Integer ra, rb;
    for (unsigned long k = 2; k <= bits; ++k) {
      // Composite k are covered by repeated prime extraction.
      bool prime = true;
      for (unsigned long f = 2; f * f <= k; ++f)
        if (k % f == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      if (is_perfect_power(a, k, ra) && is_perfect_power(b, k, rb)) {
        q = Scalar(ra, rb);
        total *= k;
        changed = true;
        break;
      }
    }
  }
  return total;
}

Scalar rational_pow(const Scalar& q, const Integer& e) {
  const bool neg = sgn(e) < 0;
  const Integer mag = abs(e);
  if (!mag.fits_ulong_p()) throw DomainError("exponent too large in log combination");
  const unsigned long n = mag.get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), n);
  Scalar r = neg ? Scalar(den, num) : Scalar(num, den);
  r.canonicalize();
  return r;
}

double ln(const Integer& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

LogValue::LogValue(std::vector<LogTerm> terms) {
  Integer lcm = 1;
  for (const auto& t : terms) {
    if (sgn(t.base) <= 0) throw DomainError("logarithm of non-positive base " + torlog::to_string(t.base));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.weight.get_den_mpz_t());
  }
  std::vector<std::pair<Integer, Scalar>> scaled;
  Integer g = 0;
  for (const auto& t : terms) {
    if (sgn(t.weight) == 0 || t.base == 1) continue;
    Integer n = t.weight.get_num() * (lcm / t.weight.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    scaled.emplace_back(std::move(n), t.base);
  }
  if (scaled.empty()) return;
  Scalar q = 1;
  for (const auto& [n, base] : scaled) q *= rational_pow(base, n / g);
  if (q == 1) return;
  Scalar w(g, lcm);
  w.canonicalize();
  if (q < 1) {
    q = 1 / q;
    w = -w;
  }
  w *= extract_power(q);
  terms_.push_back({w, q});
}

LogValue LogValue::log(const Scalar& base, const Scalar& weight) { return LogValue({{weight, base}}); }

double LogValue::approx() const {
  double v = 0;
  for (const auto& t : terms_) v += t.weight.get_d() * (ln(t.base.get_num()) - ln(t.base.get_den()));
  return v;
}

std::optional<Scalar> LogValue::exp_rational() const {
  if (terms_.empty()) return Scalar(1);
  const auto& t = terms_.front();
  if (t.weight.get_den() != 1) return std::nullopt;
  return rational_pow(t.base, t.weight.get_num());
}

std::string LogValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += torlog::to_string(t.weight) + "*log(" + torlog::to_string(t.base) + ")";
  }
  return s;
}

LogValue& LogValue::operator+=(const LogValue& o) {
  auto all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = LogValue(std::move(all));
  return *this;
}

LogValue& LogValue::operator-=(const LogValue& o) { return *this += -o; }

LogValue& LogValue::operator*=(const Scalar& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.weight *= s;
  return *this;
}

}  // namespace torlog
