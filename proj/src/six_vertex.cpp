#include "cyloops/six_vertex.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <locale>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyloops/closed_form.hpp"
#include "cyloops/errors.hpp"

namespace cyloops {

namespace {

using Matrix = Eigen::MatrixXcd;

// Weight of the vertex (left, bottom, right, top); zero when arrows are not
// conserved.
cplx vertex(const SixVertexWeights& w, int left, int bottom, int right, int top) {
  if (left + bottom != right + top) return 0.0;
  if (left == bottom) return left == right ? (left ? w.a1 : w.a2) : 0.0;
  if (left == right) return left ? w.b1 : w.b2;
  return left ? w.c1 : w.c2;
}

// T[top][bottom] = sum over the periodic horizontal arrow of the row product.
Matrix row_matrix(int L, double phi) {
  const SixVertexWeights w = SixVertexWeights::make(L, phi);
  const int dim = 1 << L;
  Matrix T = Matrix::Zero(dim, dim);
  struct Frame {
    int site;
    int h;
    unsigned top;
    cplx weight;
  };
  std::vector<Frame> stack;
  for (int bottom = 0; bottom < dim; ++bottom) {
    for (int h0 = 0; h0 <= 1; ++h0) {
      stack.push_back({0, h0, 0U, 1.0});
      while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (f.site == L) {
          if (f.h == h0) T(static_cast<int>(f.top), bottom) += f.weight;
          continue;
        }
        const int v = (bottom >> f.site) & 1;
        for (int right = 0; right <= 1; ++right) {
          const int top = f.h + v - right;
          if (top < 0 || top > 1) continue;
          const cplx wt = vertex(w, f.h, v, right, top);
          if (wt == 0.0) continue;
          stack.push_back({f.site + 1, right, f.top | (static_cast<unsigned>(top) << f.site), f.weight * wt});
        }
      }
    }
  }
  return T;
}

Matrix sector(const Matrix& T, int L, int up) {
  std::vector<int> idx;
  for (int s = 0; s < (1 << L); ++s)
    if (std::popcount(static_cast<unsigned>(s)) == up) idx.push_back(s);
  const auto n = static_cast<Eigen::Index>(idx.size());
  Matrix S(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) S(i, j) = T(idx[i], idx[j]);
  return S;
}

struct Leading {
  cplx value;
  double gap;
};

Leading leading(const Matrix& m) {
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw InconsistencyError("sixvertex_check: eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < ev.size(); ++k)
    if (std::abs(ev[k]) > std::abs(ev[best])) best = k;
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    if (k != best) gap = std::min(gap, std::abs(ev[k] - ev[best]));
  return {ev[best], gap};
}

}  // namespace

SixVertexWeights SixVertexWeights::make(int L, double phi, cplx z) {
  if (L < 1) throw std::invalid_argument("SixVertexWeights: L must be positive");
  const double pi = std::numbers::pi;
  SixVertexWeights w;
  w.z = z;
  w.phi = phi;
  w.q = std::polar(1.0, pi / 3);
  const cplx sq = std::polar(1.0, pi / 6);
  const cplx e = std::polar(1.0, phi / L);
  w.a1 = z * e;
  w.a2 = z / e;
  w.b1 = e;
  w.b2 = 1.0 / e;
  w.c1 = z * sq + 1.0 / sq;
  w.c2 = sq + z / sq;
  return w;
}

bool SixVertexReport::ok(double eigen_tol, double density_tol) const {
  return lambda_error < eigen_tol && symmetry_error < eigen_tol && nu_nc_error < density_tol &&
         std::abs(nu_nc_imag) < density_tol;
}

std::string SixVertexReport::str() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(12);
  os << "L=" << L << " lambda_max=" << lambda_max.real() << (lambda_max.imag() < 0 ? "" : "+") << lambda_max.imag()
     << "i |err|=" << lambda_error << " symmetry=" << symmetry_error << " nu_nc~" << nu_nc_estimate
     << " exact=" << nu_nc_exact << " |err|=" << nu_nc_error;
  return os.str();
}

SixVertexReport sixvertex_check(int L, double delta_phi) {
  if (L < 2 || L > 8 || L % 2 != 0)
    throw std::invalid_argument("sixvertex_check: L must be even and in [2, 8], got " + std::to_string(L));
  if (!(delta_phi >= 1e-6 && delta_phi <= 1e-3))
    throw std::invalid_argument("sixvertex_check: delta_phi must lie in [1e-6, 1e-3]");
  const int N = L / 2;
  const double phi = std::numbers::pi / 3;

  SixVertexReport r;
  r.L = L;
  r.delta_phi = delta_phi;
  const Matrix T = row_matrix(L, phi);
  r.lambda_max = leading(T).value;
  r.lambda_error = std::abs(r.lambda_max - static_cast<double>(1 << L));
  r.symmetry_error = std::abs(leading(row_matrix(L, -phi)).value - r.lambda_max);

  const Leading mid = leading(sector(T, L, N));
  r.lambda_sector = mid.value;
  r.sector_gap = mid.gap;
  if (!(mid.gap > 1e-6)) throw InconsistencyError("sixvertex_check: leading eigenvalue of the M = N sector is degenerate");

  const cplx up = leading(sector(row_matrix(L, phi + delta_phi), L, N)).value;
  const cplx down = leading(sector(row_matrix(L, phi - delta_phi), L, N)).value;
  const cplx dlog = std::log(up / down) / (2 * delta_phi);
  const cplx nu = -dlog / (2 * std::sqrt(3.0) * N);
  r.nu_nc_estimate = nu.real();
  r.nu_nc_imag = nu.imag();
  r.nu_nc_exact = nu_nc_exact(N).to_double();
  r.nu_nc_error = std::abs(r.nu_nc_estimate - r.nu_nc_exact);
  return r;
}

}  // namespace cyloops
