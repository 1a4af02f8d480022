#include "torlog/fredholm.hpp"

#include <string>

#include "torlog/nerve.hpp"

namespace torlog {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

long to_long(const Scalar& s) {
  if (s.get_den() != 1) throw DomainError("expected an integer, got " + to_string(s));
  return s.get_num().get_si();
}

}  // namespace

Matrix parametrix(const Matrix& z) { return pseudo_inverse(z); }

BlockLog log_fred(const Matrix& z, const Matrix& q) {
  if (q.rows() != z.cols() || q.cols() != z.rows()) {
    throw ShapeError("parametrix must be " + std::to_string(z.cols()) + "x" + std::to_string(z.rows()) + ", got " +
                     shape(q));
  }
  BlockLog b;
  b.source_dim = z.cols();
  b.target_dim = z.rows();
  b.m = direct_sum(Matrix::identity(z.cols()) - q * z, z * q - Matrix::identity(z.rows()));
  b.trace = trace(b.m);
  return b;
}

long index_character(const Matrix& z) { return to_long(log_fred(z, parametrix(z)).trace); }

Matrix hat_z(const Matrix& z) {
  Matrix m(z.cols() + z.rows(), z.cols() + z.rows());
  m.set_block(z.cols(), 0, z);
  return m;
}

Matrix hat_q(const Matrix& q) {
  Matrix m(q.rows() + q.cols(), q.rows() + q.cols());
  m.set_block(0, q.rows(), q);
  return m;
}

Matrix j_matrix(std::size_t source_dim, std::size_t target_dim) {
  return direct_sum(-Matrix::identity(source_dim), Matrix::identity(target_dim));
}

WitnessReport certify(const Matrix& d) {
  WitnessReport r;
  r.difference = d;
  r.trace = trace(d);
  if (sgn(r.trace) == 0) {
    r.witness = commutator_witness(d);
    r.witness_verified = sum_of_commutators(r.witness, d.rows()) == d;
  }
  return r;
}

WitnessReport check_parametrix_independence(const Matrix& z, const Matrix& q1, const Matrix& q2) {
  WitnessReport r = certify(log_fred(z, q1).m - log_fred(z, q2).m);
  r.explicit_form.emplace_back(hat_z(z), hat_q(q1) - hat_q(q2));
  r.explicit_verified = sum_of_commutators(r.explicit_form, r.difference.rows()) == r.difference;
  return r;
}

WitnessReport check_additivity(const Matrix& z, const Matrix& z2, const std::optional<Matrix>& q_opt,
                               const std::optional<Matrix>& q2_opt, const std::optional<Matrix>& qc_opt) {
  if (z2.cols() != z.rows()) throw ShapeError("cannot compose " + shape(z2) + " after " + shape(z));
  const std::size_t n = z.cols(), n1 = z.rows(), n2 = z2.rows();
  const Matrix q = q_opt ? *q_opt : parametrix(z);
  const Matrix q2 = q2_opt ? *q2_opt : parametrix(z2);
  const Matrix zc = z2 * z;
  const Matrix qc = qc_opt ? *qc_opt : parametrix(zc);

  const Letter h{"H", n}, h1{"H'", n1}, h2{"H''", n2};
  const MonoidalWord f_word({h, h1}), g_word({h1, h2}), gf_word({h, h2});
  const Matrix d = eta_insert(gf_word, 1, h1).apply(log_fred(zc, qc).m) - eta_insert(f_word, 2, h2).apply(log_fred(z, q).m) -
                   eta_insert(g_word, 0, h).apply(log_fred(z2, q2).m);
  WitnessReport r = certify(d);

  // D = [A, B] for the parametrix q q2 of the composite.
  const std::size_t total = n + n1 + n2;
  Matrix a(total, total), b(total, total);
  a.set_block(n, 0, z);
  a.set_block(n + n1, n, z2);
  const Matrix l_z2 = q2 * z2 - Matrix::identity(n1);
  const Matrix r_z = z * q - Matrix::identity(n1);
  b.set_block(0, n, q * l_z2);
  b.set_block(n, n + n1, r_z * q2);
  r.explicit_form.emplace_back(std::move(a), std::move(b));
  const Matrix qq = q * q2;
  if (!(qc == qq)) {
    const Insertion e = eta_insert(gf_word, 1, h1);
    r.explicit_form.emplace_back(e.apply(hat_z(zc)), e.apply(hat_q(qc) - hat_q(qq)));
  }
  r.explicit_verified = sum_of_commutators(r.explicit_form, total) == d;
  return r;
}

namespace {

void require_projection(const Matrix& p, std::size_t n, const char* name) {
  if (p.rows() != n || p.cols() != n) throw ShapeError(std::string(name) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  if (!(p * p == p)) throw DomainError(std::string(name) + " is not idempotent");
}

void require_exact_row(const ProjectionDiagram& d, const Matrix& p0, const Matrix& p1, const Matrix& p2,
                       const std::string& which) {
  if (!(p1 * d.incl * p0 == d.incl * p0)) throw DomainError(which + " row: incl does not map V0 into V1");
  if (!(p2 * d.proj * p1 == d.proj * p1)) throw DomainError(which + " row: proj does not map V1 into V2");
  if (rank(d.proj * p1) != rank(p2)) throw DomainError(which + " row: proj is not onto V2");
  if (rank(p1) != rank(p0) + rank(p2)) throw DomainError(which + " row: not exact at V1");
}

long trace_index(const Matrix& p, const Matrix& p_prime) { return to_long(trace(p) - trace(p_prime)); }

}  // namespace

DiagramReport relative_index_diagram(const ProjectionDiagram& d) {
  const std::size_t n0 = d.p0.rows(), n1 = d.p1.rows(), n2 = d.p2.rows();
  require_projection(d.p0, n0, "p0");
  require_projection(d.p0_prime, n0, "p0_prime");
  require_projection(d.p1, n1, "p1");
  require_projection(d.p1_prime, n1, "p1_prime");
  require_projection(d.p2, n2, "p2");
  require_projection(d.p2_prime, n2, "p2_prime");
  if (d.incl.rows() != n1 || d.incl.cols() != n0) throw ShapeError("incl must be " + std::to_string(n1) + "x" + std::to_string(n0));
  if (d.proj.rows() != n2 || d.proj.cols() != n1) throw ShapeError("proj must be " + std::to_string(n2) + "x" + std::to_string(n1));
  if (!(d.proj * d.incl).is_zero() || rank(d.incl) != n0 || rank(d.proj) != n2 || n1 != n0 + n2) {
    throw DomainError("0 -> H0 -> H1 -> H2 -> 0 is not exact");
  }
  require_exact_row(d, d.p0, d.p1, d.p2, "top");
  require_exact_row(d, d.p0_prime, d.p1_prime, d.p2_prime, "bottom");

  // Splitting: section s_H = proj^+, retraction r from [incl s_H]^-1.
  const Matrix section = pseudo_inverse(d.proj);
  Matrix basis(n1, n1);
  basis.set_block(0, 0, d.incl);
  basis.set_block(0, n0, section);
  const Matrix retraction = inverse(basis).block(0, 0, n0, n1);
  auto iota = [&](const Matrix& a) { return d.incl * a * retraction; };
  auto s = [&](const Matrix& b) { return section * b * d.proj; };

  DiagramReport r;
  r.index0 = trace_index(d.p0, d.p0_prime);
  r.index1 = trace_index(d.p1, d.p1_prime);
  r.index2 = trace_index(d.p2, d.p2_prime);
  r.direct_index0 = static_cast<long>(rank(d.p0)) - static_cast<long>(rank(d.p0_prime));
  r.direct_index1 = static_cast<long>(rank(d.p1)) - static_cast<long>(rank(d.p1_prime));
  r.direct_index2 = static_cast<long>(rank(d.p2)) - static_cast<long>(rank(d.p2_prime));
  r.additive = r.index1 == r.index0 + r.index2;
  r.expression = certify((d.p1 - d.p1_prime) - iota(d.p0 - d.p0_prime) - s(d.p2 - d.p2_prime));
  return r;
}

namespace {

/// Oblique projection onto the column span of b (full column rank).
Matrix random_projection_onto(Rng& rng, const Matrix& b) {
  const std::size_t n = b.rows(), k = b.cols();
  if (k == 0) return Matrix(n, n);
  for (;;) {
    const Matrix c = random_matrix(rng, n, k);
    const Matrix ctb = c.transpose() * b;
    if (sgn(determinant(ctb)) == 0) continue;
    return b * inverse(ctb) * c.transpose();
  }
}

struct DiagramRow {
  Matrix p0, p1, p2;
};

DiagramRow random_row(Rng& rng, const Matrix& s, std::size_t n0, std::size_t n2) {
  const std::size_t n1 = n0 + n2;
  const auto k0 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n0)));
  const auto k2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n2)));
  const Matrix b0 = random_matrix_of_rank(rng, n0, k0, k0);
  const Matrix b2 = random_matrix_of_rank(rng, n2, k2, k2);
  // V1 = incl(V0) + lifts of V2 through S [Y b2; b2].
  const Matrix y = random_matrix(rng, n0, n2);
  Matrix lift(n1, k2);
  lift.set_block(0, 0, y * b2);
  lift.set_block(n0, 0, b2);
  Matrix top(n1, k0);
  top.set_block(0, 0, b0);
  Matrix b1(n1, k0 + k2);
  b1.set_block(0, 0, s * top);
  b1.set_block(0, k0, s * lift);
  return {random_projection_onto(rng, b0), random_projection_onto(rng, b1), random_projection_onto(rng, b2)};
}

}  // namespace

ProjectionDiagram random_projection_diagram(Rng& rng, std::size_t max_dim) {
  const auto n0 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim)));
  const auto n2 = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim - n0)));
  const std::size_t n1 = n0 + n2;
  const Matrix s = random_invertible(rng, n1);
  const Matrix s_inv = inverse(s);
  ProjectionDiagram d;
  d.incl = s.block(0, 0, n1, n0);
  d.proj = s_inv.block(n0, 0, n2, n1);
  const DiagramRow top = random_row(rng, s, n0, n2), bottom = random_row(rng, s, n0, n2);
  d.p0 = top.p0;
  d.p1 = top.p1;
  d.p2 = top.p2;
  d.p0_prime = bottom.p0;
  d.p1_prime = bottom.p1;
  d.p2_prime = bottom.p2;
  return d;
}

}  // namespace torlog
