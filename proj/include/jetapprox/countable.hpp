#pragma once

#include "jetapprox/geometry.hpp"
#include "jetapprox/jet.hpp"
#include "jetapprox/rational.hpp"

#include <ostream>
#include <span>
#include <vector>

namespace jetapprox {

/// Finite truncation x_0, x_1, ... of a countable set with targets
/// f_0, f_1, ...; targets past the end of the list are identically zero.
struct CountableTarget {
  std::vector<Complex> points;
  std::vector<FunctionOracle> targets;

  Complex value(std::size_t j, Complex x) const { return j < targets.size() ? targets[j](x) : Complex(0.0); }
};

struct PolynomialPiece {
  std::size_t centerIndex = 0;
  Disk disk;
  Poly poly;
};

/// A function equal to one polynomial on each disk of a disjoint disk system.
struct PiecewisePolynomial {
  std::vector<PolynomialPiece> pieces;

  /// Piece whose open disk contains z, or nullptr.
  const PolynomialPiece* piece_at(Complex z) const;
};

/// Degree-k polynomial with p^(s)(x) = values[s] for s <= k.
Poly taylor_interpolant(Complex x, std::span<const Complex> values);

/// Greedy disk system: centers x_0..x_k first, then repeatedly the
/// least-index uncovered point. Each disk is disjoint from the earlier ones,
/// has no point of the set on its circumference, keeps the spread of every
/// f_j (j <= k) over its points and of every p^(s) (s <= k) over the disk
/// below 1/(2k). The derivative spread is certified by
/// diam p^(s)(D) <= 2 rho sup_D |p^(s+1)| with the supremum bounded from
/// the Taylor coefficients. Initial radii are just under half the distance to
/// the nearest other initial center (later disks: just under half the gap to
/// the nearest existing disk) and are halved until all conditions hold.
std::vector<PolynomialPiece> build_disk_system(const CountableTarget& target, int k);

struct CountableApprox {
  PiecewisePolynomial h;
  std::vector<double> errorTable;  // s = 0..k: max over points |h^(s)(x) - f_s(x)|
};

CountableApprox locally_polynomial_approx(const CountableTarget& target, int k);

/// s-th derivative of the piece covering z; Uncovered when no disk contains z.
Complex derivative_at(const PiecewisePolynomial& h, int s, Complex z);

struct CountableRow {
  int k = 0;
  CountableApprox approx;
};

/// CSV rows "k,s,supError,bound" with bound = 1/k.
void write_csv(std::ostream& os, const std::vector<CountableRow>& rows);

}  // namespace jetapprox
