#include "qbench/kak.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "qbench/errors.hpp"

namespace qbench {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::complex<double> kI{0.0, 1.0};

Matrix4cd magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix4cd m;
  m << s, 0, 0, kI * s,
       0, kI * s, s, 0,
       0, kI * s, -s, 0,
       s, 0, 0, -kI * s;
  return m;
}

// simultaneous diagonalisation of the complex symmetric unitary m2:
// orthogonal P with P^T m2 P diagonal
Eigen::Matrix4d simultaneous_diagonalize(const Matrix4cd& m2) {
  const Eigen::Matrix4d re = m2.real();
  const Eigen::Matrix4d im = m2.imag();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(re);
  Eigen::Matrix4d q = solver.eigenvectors();
  Eigen::Vector4d w = solver.eigenvalues();
  // within clusters of equal eigenvalues of Re, diagonalise Im
  int i = 0;
  while (i < 4) {
    int j = i + 1;
    while (j < 4 && w(j) - w(i) < 1e-7) ++j;
    if (j - i > 1) {
      const Eigen::MatrixXd sub = q.middleCols(i, j - i);
      const Eigen::MatrixXd bp = sub.transpose() * im * sub;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> inner(bp);
      q.middleCols(i, j - i) = sub * inner.eigenvectors();
    }
    i = j;
  }
  if (q.determinant() < 0) q.col(3) = -q.col(3);
  return q;
}

struct SplitCore {
  Matrix4cd us;          // det-normalised input
  Matrix4cd up;          // magic-basis transform of us
  Eigen::Matrix4d p;     // orthogonal eigenvectors, canonically ordered
  Eigen::Vector4d theta; // half-args, sorted descending, branch unapplied
};

SplitCore split_core(const Matrix4cd& u) {
  static const Matrix4cd kMagic = magic_basis();
  SplitCore s;
  const std::complex<double> det = u.determinant();
  s.us = u / std::pow(det, 0.25);
  s.up = kMagic.adjoint() * s.us * kMagic;
  const Matrix4cd m2 = s.up.transpose() * s.up;
  Eigen::Matrix4d p = simultaneous_diagonalize(m2);
  const Matrix4cd diag = p.transpose() * m2 * p;
  double offdiag = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) offdiag = std::max(offdiag, std::abs(diag(r, c)));
  if (offdiag > 1e-8)
    throw GateError("kak: simultaneous diagonalisation failed");

  // canonical ordering: args in [0, 2*pi) with a snap at the wrap point,
  // sorted descending; keeps two splits of locally-equivalent inputs aligned
  Eigen::Vector4d phi;
  for (int k = 0; k < 4; ++k) {
    double a = std::arg(diag(k, k));
    if (a < 0) a += 2 * kPi;
    if (a > 2 * kPi - 1e-9) a -= 2 * kPi;
    phi(k) = a;
  }
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return phi(a) > phi(b); });
  Eigen::Matrix4d ps;
  for (int k = 0; k < 4; ++k) {
    ps.col(k) = p.col(order[static_cast<std::size_t>(k)]);
    s.theta(k) = phi(order[static_cast<std::size_t>(k)]) / 2.0;
  }
  if (ps.determinant() < 0) ps.col(3) = -ps.col(3);
  s.p = ps;
  return s;
}

struct SplitResult {
  Matrix4cd a1;   // local factor applied last
  Matrix4cd can;  // canonical part, M diag(e^{i theta}) M^dag
  Matrix4cd a2;   // local factor applied first
};

// assemble the split for a given theta branch; empty optional when the
// branch does not yield a real orthogonal K1
std::optional<SplitResult> assemble(const SplitCore& s,
                                    const Eigen::Vector4d& theta) {
  static const Matrix4cd kMagic = magic_basis();
  Matrix4cd dh = Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) dh(k, k) = std::exp(kI * theta(k));
  const Matrix4cd k1 = s.up * s.p.cast<std::complex<double>>() * dh.conjugate();
  double max_imag = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      max_imag = std::max(max_imag, std::abs(k1(r, c).imag()));
  if (max_imag > 1e-7) return std::nullopt;
  if (std::abs(k1.determinant() - 1.0) > 1e-7) return std::nullopt;
  SplitResult out;
  out.a1 = kMagic * k1 * kMagic.adjoint();
  out.a2 = kMagic * s.p.transpose().cast<std::complex<double>>() *
           kMagic.adjoint();
  out.can = kMagic * dh * kMagic.adjoint();
  return out;
}

SplitResult kak_split(const Matrix4cd& u) {
  const SplitCore s = split_core(u);
  Eigen::Vector4d theta = s.theta;
  const auto parity = static_cast<long>(std::llround(theta.sum() / kPi));
  if (parity % 2 != 0) theta(0) -= kPi;
  auto r = assemble(s, theta);
  if (!r) throw GateError("kak: default branch assembly failed");
  return *r;
}

// all 16 theta-flip subsets, grouped by parity of subset size
const std::array<std::array<int, 5>, 16>& flip_subsets() {
  // {size, i0, i1, i2, i3}
  static const std::array<std::array<int, 5>, 16> kSubsets = {{
      {0, 0, 0, 0, 0},
      {1, 0, -1, -1, -1}, {1, 1, -1, -1, -1}, {1, 2, -1, -1, -1}, {1, 3, -1, -1, -1},
      {2, 0, 1, -1, -1}, {2, 0, 2, -1, -1}, {2, 0, 3, -1, -1},
      {2, 1, 2, -1, -1}, {2, 1, 3, -1, -1}, {2, 2, 3, -1, -1},
      {3, 0, 1, 2, -1}, {3, 0, 1, 3, -1}, {3, 0, 2, 3, -1}, {3, 1, 2, 3, -1},
      {4, 0, 1, 2, 3},
  }};
  return kSubsets;
}

double phase_distance4(const Matrix4cd& a, const Matrix4cd& b) {
  int bi = 0, bj = 0;
  double best = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (std::abs(b(r, c)) > best) {
        best = std::abs(b(r, c));
        bi = r;
        bj = c;
      }
  if (best < 1e-14) return 1e9;
  const std::complex<double> phase = a(bi, bj) / b(bi, bj);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

// split T so that its canonical part equals can_target (mod global phase):
// try T and i*T (the i factor negates the m2 spectrum, which the det
// normalisation cannot see), and every parity-consistent theta flip
std::optional<std::pair<SplitResult, double>> match_template(
    const Matrix4cd& t, const Matrix4cd& can_target) {
  std::optional<SplitResult> best;
  double best_err = 1e18;
  for (int fi = 0; fi < 2 && best_err > 1e-9; ++fi) {
    const Matrix4cd tt = (fi == 0) ? t : Matrix4cd(kI * t);
    SplitCore s;
    try {
      s = split_core(tt);
    } catch (const GateError&) {
      continue;
    }
    const auto parity =
        static_cast<long>(std::llround(s.theta.sum() / kPi)) % 2;
    for (const auto& sub : flip_subsets()) {
      if (sub[0] % 2 != (parity != 0 ? 1 : 0)) continue;
      Eigen::Vector4d theta = s.theta;
      for (int k = 1; k <= sub[0]; ++k) theta(sub[static_cast<std::size_t>(k)]) -= kPi;
      const auto r = assemble(s, theta);
      if (!r) continue;
      const double err = phase_distance4(r->can, can_target);
      if (err < best_err) {
        best_err = err;
        best = r;
      }
      if (best_err < 1e-9) break;
    }
  }
  if (!best) return std::nullopt;
  return std::make_pair(*best, best_err);
}

double reduce_mod_half_pi(double x) {
  return x - std::round(x / (kPi / 2)) * (kPi / 2);
}

Matrix2cd rx_matrix(double t) {
  Matrix2cd m;
  m << std::cos(t / 2), -kI * std::sin(t / 2),
       -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix2cd ry_matrix(double t) {
  Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Matrix2cd rz_matrix(double t) {
  Matrix2cd m;
  m << std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2));
  return m;
}

Matrix4cd on_q0(const Matrix2cd& g) {
  Matrix4cd out = Matrix4cd::Zero();
  out.block<2, 2>(0, 0) = g(0, 0) * Matrix2cd::Identity();
  out.block<2, 2>(0, 2) = g(0, 1) * Matrix2cd::Identity();
  out.block<2, 2>(2, 0) = g(1, 0) * Matrix2cd::Identity();
  out.block<2, 2>(2, 2) = g(1, 1) * Matrix2cd::Identity();
  return out;
}

Matrix4cd on_q1(const Matrix2cd& g) {
  Matrix4cd out = Matrix4cd::Zero();
  out.block<2, 2>(0, 0) = g;
  out.block<2, 2>(2, 2) = g;
  return out;
}

Matrix4cd cx01() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = 1; m(1, 1) = 1; m(2, 3) = 1; m(3, 2) = 1;
  return m;
}

Matrix4cd cx10() {
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = 1; m(1, 3) = 1; m(2, 2) = 1; m(3, 1) = 1;
  return m;
}

struct Template {
  Matrix4cd matrix;
  std::vector<Gate> gates;  // circuit order, first applied first
  int cx_count;
};

// gate template locally equivalent to exp(i(a XX + b YY + c ZZ)) for the
// reduced coordinate triple rr, using the fewest CX gates for its class
Template build_template(const std::array<double, 3>& rr) {
  constexpr double kTol = 1e-10;
  const bool zero0 = std::abs(rr[0]) < kTol;
  const bool zero1 = std::abs(rr[1]) < kTol;
  const bool zero2 = std::abs(rr[2]) < kTol;
  const int zeros = static_cast<int>(zero0) + static_cast<int>(zero1) +
                    static_cast<int>(zero2);
  int quarters = 0;
  for (double x : rr)
    if (std::abs(std::abs(x) - kPi / 4) < kTol) ++quarters;

  Template t;
  if (zeros == 3) {
    t.matrix = Matrix4cd::Identity();
    t.cx_count = 0;
    return t;
  }
  if (zeros == 2 && quarters == 1) {
    t.matrix = cx01();
    t.gates = {Gate::cx(0, 1)};
    t.cx_count = 1;
    return t;
  }
  if (zeros >= 1) {
    // exp(i a XX) exp(i c ZZ) = CX (RX0(-2a) RZ1(-2c)) CX
    std::array<double, 2> nz{0.0, 0.0};
    int idx = 0;
    for (int k = 0; k < 3; ++k)
      if (std::abs(rr[static_cast<std::size_t>(k)]) >= kTol)
        nz[static_cast<std::size_t>(idx++)] = rr[static_cast<std::size_t>(k)];
    const double a = nz[0], c = nz[1];
    t.matrix = cx01() * on_q0(rx_matrix(-2 * a)) * on_q1(rz_matrix(-2 * c)) *
               cx01();
    t.gates = {Gate::cx(0, 1), Gate::rx(0, -2 * a), Gate::rz(1, -2 * c),
               Gate::cx(0, 1)};
    t.cx_count = 2;
    return t;
  }
  // general case: CX10 (RZ0(p1) RY1(p2)) CX01 (RY1(p3)) CX10 with
  // p = (2a + pi/2, 2c + pi/2, 2b - pi/2)
  const double p1 = 2 * rr[0] + kPi / 2;
  const double p2 = 2 * rr[2] + kPi / 2;
  const double p3 = 2 * rr[1] - kPi / 2;
  t.matrix = cx10() * (on_q0(rz_matrix(p1)) * on_q1(ry_matrix(p2))) * cx01() *
             on_q1(ry_matrix(p3)) * cx10();
  // RY(t) = U3(t, 0, 0)
  t.gates = {Gate::cx(1, 0), Gate::u3(1, p3, 0.0, 0.0), Gate::cx(0, 1),
             Gate::rz(0, p1), Gate::u3(1, p2, 0.0, 0.0), Gate::cx(1, 0)};
  t.cx_count = 3;
  return t;
}

}  // namespace

std::array<double, 3> zyz_angles(const Matrix2cd& v) {
  const std::complex<double> det = v.determinant();
  const Matrix2cd su = v / std::sqrt(det);
  const double theta = 2.0 * std::atan2(std::abs(su(1, 0)), std::abs(su(0, 0)));
  double phi, lambda;
  if (std::abs(su(1, 0)) < 1e-12) {
    phi = 2.0 * std::arg(su(1, 1));
    lambda = 0.0;
  } else if (std::abs(su(0, 0)) < 1e-12) {
    phi = 2.0 * std::arg(su(1, 0));
    lambda = 0.0;
  } else {
    phi = std::arg(su(1, 1)) + std::arg(su(1, 0));
    lambda = std::arg(su(1, 1)) - std::arg(su(1, 0));
  }
  return {theta, phi, lambda};
}

std::pair<Matrix2cd, Matrix2cd> kron_factor(const Matrix4cd& a, double tol) {
  // block (i,j) of a equals Va(i,j) * Vb
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double norm = a.block<2, 2>(2 * i, 2 * j).cwiseAbs().sum();
      if (norm > best) {
        best = norm;
        bi = i;
        bj = j;
      }
    }
  }
  Matrix2cd vb = a.block<2, 2>(2 * bi, 2 * bj);
  vb /= std::sqrt(vb.determinant());
  Matrix2cd va;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      va(i, j) = (a.block<2, 2>(2 * i, 2 * j) * vb.adjoint()).trace() / 2.0;
  // residual check
  Matrix4cd recon;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      recon.block<2, 2>(2 * i, 2 * j) = va(i, j) * vb;
  if ((recon - a).cwiseAbs().maxCoeff() > tol)
    throw GateError("kron_factor: input is not a tensor product");
  return {va, vb};
}

std::vector<Gate> kak_decompose(const Matrix4cd& u) {
  if (!is_unitary(u, 1e-8))
    throw GateError("kak_decompose: input is not unitary within 1e-8");

  const SplitResult split = kak_split(u);
  const Eigen::Vector4d& th = [&] {
    // recover theta from the canonical part for coordinate extraction
    static const Matrix4cd kMagic = magic_basis();
    const Matrix4cd dh = kMagic.adjoint() * split.can * kMagic;
    Eigen::Vector4d t;
    for (int k = 0; k < 4; ++k) t(k) = std::arg(dh(k, k));
    return t;
  }();
  const double a = (th(0) + th(1) - th(2) - th(3)) / 4.0;
  const double b = (-th(0) + th(1) - th(2) + th(3)) / 4.0;
  const double c = (th(0) - th(1) - th(2) + th(3)) / 4.0;
  const std::array<double, 3> reduced{reduce_mod_half_pi(a),
                                      reduce_mod_half_pi(b),
                                      reduce_mod_half_pi(c)};

  // candidate representatives: permutations x pair sign flips, preferring
  // the most non-negative ones
  static const std::array<std::array<int, 3>, 6> kPerms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  static const std::array<std::array<int, 3>, 4> kFlips = {{
      {1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}}};
  std::vector<std::array<double, 3>> candidates;
  for (const auto& perm : kPerms) {
    for (const auto& flip : kFlips) {
      std::array<double, 3> cand;
      for (int k = 0; k < 3; ++k)
        cand[static_cast<std::size_t>(k)] =
            flip[static_cast<std::size_t>(k)] *
            reduced[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
      if (std::none_of(candidates.begin(), candidates.end(), [&](const auto& x) {
            return std::abs(x[0] - cand[0]) < 1e-12 &&
                   std::abs(x[1] - cand[1]) < 1e-12 &&
                   std::abs(x[2] - cand[2]) < 1e-12;
          }))
        candidates.push_back(cand);
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) {
                     auto nonneg = [](const std::array<double, 3>& t) {
                       int k = 0;
                       for (double v : t)
                         if (v >= 0) ++k;
                       return k;
                     };
                     return nonneg(x) > nonneg(y);
                   });

  Template chosen;
  std::optional<SplitResult> matched;
  double matched_err = 1e18;
  for (const auto& cand : candidates) {
    Template t = build_template(cand);
    const auto m = match_template(t.matrix, split.can);
    if (m && m->second < matched_err) {
      matched_err = m->second;
      matched = m->first;
      chosen = std::move(t);
    }
    if (matched_err < 1e-9) break;
  }
  if (!matched || matched_err > 1e-7)
    throw GateError("kak_decompose: no template matched the canonical part");

  // U ~= (A1 B1^dag) T (B2^dag A2); factor the local corrections
  const Matrix4cd left = split.a1 * matched->a1.adjoint();
  const Matrix4cd right = matched->a2.adjoint() * split.a2;
  const auto [la, lb] = kron_factor(left);
  const auto [ra, rb] = kron_factor(right);

  std::vector<Gate> gates;
  auto push_u3 = [&gates](std::uint32_t q, const Matrix2cd& v) {
    const auto [theta, phi, lambda] = zyz_angles(v);
    gates.push_back(Gate::u3(q, theta, phi, lambda));
  };
  push_u3(0, ra);
  push_u3(1, rb);
  for (const Gate& g : chosen.gates) gates.push_back(g);
  push_u3(0, la);
  push_u3(1, lb);
  return gates;
}

}  // namespace qbench
