#pragma once

#include "jetapprox/polyline.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetapprox {

struct Disk {
  std::complex<double> center;
  double radius = 0.0;

  bool contains_strictly(std::complex<double> z) const { return std::abs(z - center) < radius; }
};

enum class SetKind { Disk, Segment, Circle, Annulus, Dumbbell, Countable, Custom };

std::string_view to_string(SetKind kind);
SetKind parse_set_kind(std::string_view name);

/// Connector gamma_{a,z}: a curve inside K from the base point to `target`.
struct Connector {
  std::complex<double> target;
  Polyline path;
};

/// Named subset of the sample list (disk pieces and bar of a dumbbell).
struct SetPiece {
  std::string name;
  std::vector<std::size_t> sampleIndices;
};

/// Finite description of a compact set K together with the data needed to
/// run the derivative-lifting construction on it.
///
/// Sup over K is taken as max over `samples`. The dense subset S is recorded
/// only as a finite list; its closure being K is not machine-checkable.
/// The base point has no connector (the trivial curve); every other entry
/// of the dense subset has one. Countable sets carry no connectors and a
/// connector bound of 0.
struct CompactSetDescriptor {
  SetKind kind = SetKind::Custom;
  std::vector<std::complex<double>> samples;
  std::vector<std::complex<double>> denseSubsetSamples;
  std::complex<double> basePoint;
  std::vector<std::complex<double>> finitePoles;  // one per bounded complementary component
  bool includesInfinity = true;
  std::vector<Polyline> loops;       // loops[i] winds once around finitePoles[i] only
  double connectorBound = 0.0;       // M
  std::vector<Connector> connectors;
  std::vector<Polyline> boundaries;  // extra curves in K used for Gamma checks
  std::vector<SetPiece> pieces;

  const Connector* connector_to(std::complex<double> z) const;
};

struct SetParams {
  std::complex<double> center{0.0, 0.0};
  double radius = 1.0;
  double innerRadius = 0.5;
  std::complex<double> segmentStart{0.0, 0.0};
  std::complex<double> segmentEnd{1.0, 0.0};
  std::complex<double> center2{3.0, 0.0};  // second disk of a dumbbell
  double radius2 = 1.0;
  std::vector<std::complex<double>> points;  // countable sets; empty selects {0} u {1/n}
  int nMax = 200;
  int samples = 256;
  int loopSides = 64;
};

/// Scenario constructor for the supported set kinds; the result satisfies
/// every descriptor invariant (checked by validate_descriptor before return).
CompactSetDescriptor make_set(SetKind kind, const SetParams& params);

/// Throws InvalidParams describing the first violated invariant.
void validate_descriptor(const CompactSetDescriptor& set, double windingTol = 1e-6);

/// Winding number of a closed curve around p, by contour quadrature of
/// dz/(z - p). The value before rounding must be within `tol` of an integer.
int winding_number(const Polyline& curve, std::complex<double> p, double tol = 1e-6);

/// Pre-rounding value (1/2 pi i) \oint dz/(z - p).
std::complex<double> winding_value(const Polyline& curve, std::complex<double> p);

}  // namespace jetapprox
