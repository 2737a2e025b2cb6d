#pragma once

#include "jetapprox/engine.hpp"
#include "jetapprox/gamma_check.hpp"
#include "jetapprox/geometry.hpp"
#include "jetapprox/jet.hpp"

#include <ostream>
#include <vector>

namespace jetapprox {

struct LiftResult {
  Rational H;
  Rational stripped;  // h with its order 1..N coefficients at the finite poles removed
  std::vector<RemovedTerm> removedCoefficients;
  std::vector<double> seminormErrors;       // k = 0..N: max over samples |H^(k) - g_k|
  std::vector<double> inductionBoundChain;  // k = 0..N-1: M * seminormErrors[k + 1]
};

/// Turns an approximation h of the top component g_N into a rational H
/// whose derivatives of orders 0..N approximate the whole jet: strip the
/// principal-part coefficients of orders 1..N at every finite pole, take the
/// N-th primitive, and pin H^(r)(a) = g_r(a) at the base point.
LiftResult lift(const Jet& G, const CompactSetDescriptor& set, const Rational& h);

struct InductionCheck {
  /// max over dense-subset samples b and r < N of
  /// |H^(r)(b) - g_r(b)| - M * seminormErrors[r + 1]; <= 0 when the bound holds.
  double maxExcess = 0.0;
  std::vector<double> maxPointwise;  // r -> max_b |H^(r)(b) - g_r(b)|
};

InductionCheck induction_bound_check(const LiftResult& res, const Jet& G, const CompactSetDescriptor& set);

enum class GateMode { WarnAndContinue, Strict };

struct JetApproxOptions {
  GateMode gate = GateMode::WarnAndContinue;
  bool runGate = true;
  double threshold = 1e-6;
  IbpOptions ibp;
};

struct ScheduleEntry {
  ApproxConfig config;
  ApproxResult approx;
  LiftResult lift;
  double dValue = 0.0;
  double tailBound = 0.0;
};

struct JetApproxRun {
  bool gateRan = false;
  DefectReport gate;
  std::vector<ScheduleEntry> entries;  // schedule order
};

/// For each config: approximate g_N, lift, and measure d(jet_of(H, N), G).
/// The Gamma(K) gate runs on the descriptor's loops and connectors; in
/// strict mode a failed gate throws GammaCheckFailed.
JetApproxRun approximate_jet(const Jet& G, const CompactSetDescriptor& set,
                             const std::vector<ApproxConfig>& schedule, const JetApproxOptions& opt = {});

struct ResidueCheckEntry {
  std::size_t loopId = 0;
  int r = 0;
  Complex value;  // \oint_{delta_i} g_N (z - a_i)^(r - 1) dz
};

/// Contour integrals that must vanish for jets in Gamma(K); they control
/// how fast the stripped coefficients of approximants go to zero.
std::vector<ResidueCheckEntry> residue_vanishing_check(const Jet& G, const CompactSetDescriptor& set,
                                                       double tol = 1e-12);

/// Upper bound on |coefficient of (z - a_i)^(-r) in h| from the loop delta_i:
/// (len * max|h - g_N| * max|z - a_i|^(r-1) + |\oint g_N (z - a_i)^(r-1)|) / 2 pi,
/// with the maxima taken over a refinement of the loop.
double removed_coefficient_bound(const Rational& h, const Jet& G, const CompactSetDescriptor& set,
                                 std::size_t loopId, int r, double tol = 1e-12);

/// CSV rows "configIndex,degree,poleDegree,k,seminormError,dValue,tailBound".
void write_csv(std::ostream& os, const JetApproxRun& run);

}  // namespace jetapprox
