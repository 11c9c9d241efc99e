#pragma once

// Floating-point cross-check in the six-vertex picture: the twisted row
// transfer matrix on 2^L arrow configurations, its leading eigenvalue at
// the stochastic point, and the twist derivative that gives nu_nc.

#include <complex>
#include <string>

namespace cyloops {

using cplx = std::complex<double>;

/// Vertex weights with the twist phi spread evenly over the L sites.
/// Vertex key (left, bottom, right, top), 1 = arrow right/up:
///   a1 (1,1,1,1) = z e^{i phi/L}     a2 (0,0,0,0) = z e^{-i phi/L}
///   b1 (1,0,1,0) = e^{i phi/L}       b2 (0,1,0,1) = e^{-i phi/L}
///   c1 (1,0,0,1) = z q^{1/2} + q^{-1/2}
///   c2 (0,1,1,0) = q^{1/2} + z q^{-1/2}
struct SixVertexWeights {
  cplx a1, a2, b1, b2, c1, c2;
  cplx z;
  double phi = 0;
  cplx q;

  /// q = e^{i pi/3}.
  static SixVertexWeights make(int L, double phi, cplx z = 1.0);
};

struct SixVertexReport {
  int L = 0;
  double delta_phi = 0;
  /// Largest-modulus eigenvalue over all 2^L states at phi = pi/3.
  cplx lambda_max;
  /// Same within the sector of L/2 up arrows.
  cplx lambda_sector;
  /// |lambda_max - 2^L|.
  double lambda_error = 0;
  /// |Lambda_max(pi/3) - Lambda_max(-pi/3)|.
  double symmetry_error = 0;
  /// Smallest distance from the sector's leading eigenvalue to any other of
  /// its eigenvalues; zero would mean the derivative is ill-defined.
  double sector_gap = 0;
  /// -(1/(2 sqrt3 N)) d ln Lambda / d phi by central difference.
  double nu_nc_estimate = 0;
  /// Imaginary part of the same expression (should vanish).
  double nu_nc_imag = 0;
  double nu_nc_exact = 0;
  double nu_nc_error = 0;

  bool ok(double eigen_tol = 1e-9, double density_tol = 1e-6) const;
  std::string str() const;
};

/// Requires even L in [2, 8] and delta_phi in [1e-6, 1e-3]
/// (std::invalid_argument otherwise); throws InconsistencyError if the
/// sector's leading eigenvalue is degenerate.
SixVertexReport sixvertex_check(int L, double delta_phi = 1e-4);

}  // namespace cyloops
