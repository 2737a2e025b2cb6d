#include "jetapprox/geometry.hpp"

#include "jetapprox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace jetapprox {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinSamples = 16;

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidParams, what);
}

// Splits `total` points over rings proportionally to their radii.
std::vector<int> ring_counts(int total, const std::vector<double>& radii) {
  const double sum = std::accumulate(radii.begin(), radii.end(), 0.0);
  std::vector<int> counts;
  int used = 0;
  for (std::size_t j = 0; j < radii.size(); ++j) {
    int c = j + 1 == radii.size() ? total - used : std::max(3, int(std::lround(total * radii[j] / sum)));
    counts.push_back(c);
    used += c;
  }
  return counts;
}

void push_unique(std::vector<std::complex<double>>& v, std::complex<double> z) {
  if (std::find(v.begin(), v.end(), z) == v.end()) v.push_back(z);
}

std::size_t index_of(const std::vector<std::complex<double>>& v, std::complex<double> z) {
  return std::size_t(std::find(v.begin(), v.end(), z) - v.begin());
}

// Center plus concentric rings; the outer ring is the boundary and starts at
// angle `boundaryPhase` (its first point is replaced by `boundaryFirst` when given).
std::vector<std::complex<double>> disk_samples(std::complex<double> c, double r, int n,
                                               double boundaryPhase,
                                               std::optional<std::complex<double>> boundaryFirst) {
  std::vector<std::complex<double>> out{c};
  const int rings = std::max(2, int(std::lround(std::sqrt((n - 1) / (2.0 * kPi)))));
  std::vector<double> radii;
  for (int j = 1; j <= rings; ++j) radii.push_back(r * j / rings);
  const auto counts = ring_counts(n - 1, radii);
  for (int j = 0; j < rings; ++j) {
    const bool boundary = j + 1 == rings;
    const double phase = boundary ? boundaryPhase : (j % 2 ? kPi / counts[j] : 0.0);
    for (int i = 0; i < counts[j]; ++i) {
      auto z = c + std::polar(radii[j], phase + 2.0 * kPi * i / counts[j]);
      if (boundary && i == 0 && boundaryFirst) z = *boundaryFirst;
      push_unique(out, z);
    }
  }
  return out;
}

std::vector<std::complex<double>> segment_samples(std::complex<double> u, std::complex<double> v,
                                                  int n) {
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(i + 1 == n ? v : u + (v - u) * (double(i) / (n - 1)));
  return out;
}

// Polygonal path along the circle |z - c| = rho from angle 0 to angle theta,
// using vertices at multiples of 2 pi / sides.
std::vector<std::complex<double>> arc_vertices(std::complex<double> c, double rho, double theta,
                                               int sides) {
  std::vector<std::complex<double>> v{c + rho};
  const double step = 2.0 * kPi / sides;
  const int dir = theta >= 0 ? 1 : -1;
  for (int k = 1; k * step < std::abs(theta); ++k) v.push_back(c + std::polar(rho, dir * k * step));
  const auto last = c + std::polar(rho, theta);
  if (last != v.back()) v.push_back(last);
  return v;
}

CompactSetDescriptor make_disk(const SetParams& p) {
  require(p.radius > 0.0, "disk radius must be positive");
  CompactSetDescriptor k;
  k.kind = SetKind::Disk;
  k.samples = disk_samples(p.center, p.radius, p.samples, 0.0, std::nullopt);
  k.denseSubsetSamples = k.samples;
  k.basePoint = p.center;
  k.includesInfinity = true;
  k.connectorBound = 2.0 * p.radius;
  for (const auto& z : k.denseSubsetSamples)
    if (z != k.basePoint) k.connectors.push_back({z, Polyline{{k.basePoint, z}, false}});
  k.boundaries.push_back(circle_polygon(p.center, p.radius, p.loopSides));
  return k;
}

CompactSetDescriptor make_segment(const SetParams& p) {
  require(p.segmentStart != p.segmentEnd, "segment endpoints must differ");
  CompactSetDescriptor k;
  k.kind = SetKind::Segment;
  k.samples = segment_samples(p.segmentStart, p.segmentEnd, p.samples);
  k.denseSubsetSamples = k.samples;
  k.basePoint = p.segmentStart;
  k.connectorBound = std::abs(p.segmentEnd - p.segmentStart);
  for (const auto& z : k.denseSubsetSamples)
    if (z != k.basePoint) k.connectors.push_back({z, Polyline{{k.basePoint, z}, false}});
  k.boundaries.push_back(Polyline{{p.segmentStart, p.segmentEnd}, false});
  return k;
}

CompactSetDescriptor make_circle(const SetParams& p) {
  require(p.radius > 0.0, "circle radius must be positive");
  CompactSetDescriptor k;
  k.kind = SetKind::Circle;
  const int n = p.samples;
  for (int j = 0; j < n; ++j) k.samples.push_back(p.center + std::polar(p.radius, 2.0 * kPi * j / n));
  k.denseSubsetSamples = k.samples;
  k.basePoint = k.samples.front();
  k.finitePoles = {p.center};
  k.loops = {circle_polygon(p.center, p.radius, n)};
  k.connectorBound = kPi * p.radius;
  for (int j = 1; j < n; ++j) {
    std::vector<std::complex<double>> v{k.samples[0]};
    if (2 * j <= n) {
      for (int i = 1; i <= j; ++i) v.push_back(k.samples[std::size_t(i)]);
    } else {
      for (int i = n - 1; i >= j; --i) v.push_back(k.samples[std::size_t(i)]);
    }
    k.connectors.push_back({k.samples[std::size_t(j)], Polyline{std::move(v), false}});
  }
  return k;
}

CompactSetDescriptor make_annulus(const SetParams& p) {
  require(p.innerRadius > 0.0 && p.innerRadius < p.radius, "annulus needs 0 < innerRadius < radius");
  CompactSetDescriptor k;
  k.kind = SetKind::Annulus;
  const double mid = 0.5 * (p.innerRadius + p.radius);
  int sides = p.loopSides;
  while (mid * std::cos(kPi / sides) < p.innerRadius) sides *= 2;

  k.basePoint = p.center + mid;
  k.samples.push_back(k.basePoint);
  const int rings = std::max(3, int(std::lround(std::sqrt((p.samples - 1) / (2.0 * kPi)))));
  std::vector<double> radii;
  for (int j = 0; j < rings; ++j) radii.push_back(p.innerRadius + (p.radius - p.innerRadius) * j / (rings - 1));
  const auto counts = ring_counts(p.samples - 1, radii);
  for (int j = 0; j < rings; ++j)
    for (int i = 0; i < counts[j]; ++i) {
      const double phase = j % 2 ? kPi / counts[j] : 0.0;
      push_unique(k.samples, p.center + std::polar(radii[j], phase + 2.0 * kPi * i / counts[j]));
    }
  k.denseSubsetSamples = k.samples;
  k.finitePoles = {p.center};
  k.loops = {circle_polygon(p.center, mid, sides)};
  k.connectorBound = kPi * mid + 0.5 * (p.radius - p.innerRadius);
  for (const auto& z : k.denseSubsetSamples) {
    if (z == k.basePoint) continue;
    const double theta = std::arg(z - p.center);
    auto v = arc_vertices(p.center, mid, theta, sides);
    if (z != v.back()) v.push_back(z);
    k.connectors.push_back({z, Polyline{std::move(v), false}});
  }
  k.boundaries = {circle_polygon(p.center, p.radius, p.loopSides),
                  circle_polygon(p.center, p.innerRadius, sides)};
  return k;
}

CompactSetDescriptor make_dumbbell(const SetParams& p) {
  require(p.radius > 0.0 && p.radius2 > 0.0, "dumbbell radii must be positive");
  const double dist = std::abs(p.center2 - p.center);
  require(dist > p.radius + p.radius2, "dumbbell disks must be disjoint");
  const auto u = (p.center2 - p.center) / dist;
  const auto jointA = p.center + p.radius * u;
  const auto jointB = p.center2 - p.radius2 * u;

  const int diskCount = std::max(kMinSamples, (p.samples * 2) / 5);
  const int barCount = std::max(kMinSamples, p.samples - 2 * diskCount);
  const auto first = disk_samples(p.center, p.radius, diskCount, std::arg(u), jointA);
  const auto bar = segment_samples(jointA, jointB, barCount);
  const auto second = disk_samples(p.center2, p.radius2, diskCount, std::arg(-u), jointB);

  CompactSetDescriptor k;
  k.kind = SetKind::Dumbbell;
  for (const auto& z : first) push_unique(k.samples, z);
  for (const auto& z : bar) push_unique(k.samples, z);
  for (const auto& z : second) push_unique(k.samples, z);
  auto piece = [&](const char* name, const std::vector<std::complex<double>>& zs) {
    SetPiece sp{name, {}};
    for (const auto& z : zs) sp.sampleIndices.push_back(index_of(k.samples, z));
    return sp;
  };
  k.pieces = {piece("disk1", first), piece("bar", bar), piece("disk2", second)};
  k.denseSubsetSamples = k.samples;
  k.basePoint = p.center;
  const double barLength = std::abs(jointB - jointA);
  k.connectorBound = p.radius + barLength + 2.0 * p.radius2;
  for (const auto& z : first)
    if (z != k.basePoint) k.connectors.push_back({z, Polyline{{k.basePoint, z}, false}});
  for (const auto& z : bar)
    if (z != jointA) k.connectors.push_back({z, Polyline{{k.basePoint, jointA, z}, false}});
  for (const auto& z : second)
    if (z != jointB) k.connectors.push_back({z, Polyline{{k.basePoint, jointA, jointB, z}, false}});
  // the piece lists share A and B; connectors for them come from the earlier pieces
  k.boundaries = {circle_polygon(p.center, p.radius, p.loopSides, std::arg(u)),
                  Polyline{{jointA, jointB}, false},
                  circle_polygon(p.center2, p.radius2, p.loopSides, std::arg(-u))};
  return k;
}

CompactSetDescriptor make_countable(const SetParams& p) {
  CompactSetDescriptor k;
  k.kind = SetKind::Countable;
  if (p.points.empty()) {
    require(p.nMax >= 1, "countable set needs nMax >= 1");
    k.samples.push_back(0.0);
    for (int n = 1; n <= p.nMax; ++n) k.samples.push_back(1.0 / n);
  } else {
    for (const auto& z : p.points) {
      require(std::find(k.samples.begin(), k.samples.end(), z) == k.samples.end(),
              "countable set points must be pairwise distinct");
      k.samples.push_back(z);
    }
  }
  k.denseSubsetSamples = k.samples;
  k.basePoint = k.samples.front();
  k.connectorBound = 0.0;
  return k;
}

}  // namespace

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::Disk: return "disk";
    case SetKind::Segment: return "segment";
    case SetKind::Circle: return "circle";
    case SetKind::Annulus: return "annulus";
    case SetKind::Dumbbell: return "dumbbell";
    case SetKind::Countable: return "countable";
    case SetKind::Custom: return "custom";
  }
  return "custom";
}

SetKind parse_set_kind(std::string_view name) {
  for (SetKind k : {SetKind::Disk, SetKind::Segment, SetKind::Circle, SetKind::Annulus,
                    SetKind::Dumbbell, SetKind::Countable, SetKind::Custom})
    if (to_string(k) == name) return k;
  throw Error(ErrorKind::InvalidParams, "unknown set kind '" + std::string(name) + "'");
}

const Connector* CompactSetDescriptor::connector_to(std::complex<double> z) const {
  for (const auto& c : connectors)
    if (c.target == z) return &c;
  return nullptr;
}

CompactSetDescriptor make_set(SetKind kind, const SetParams& params) {
  if (kind != SetKind::Countable && kind != SetKind::Custom)
    require(params.samples >= kMinSamples, "sample count must be >= 16");
  require(params.loopSides >= 3, "loops need at least 3 sides");
  CompactSetDescriptor k;
  switch (kind) {
    case SetKind::Disk: k = make_disk(params); break;
    case SetKind::Segment: k = make_segment(params); break;
    case SetKind::Circle: k = make_circle(params); break;
    case SetKind::Annulus: k = make_annulus(params); break;
    case SetKind::Dumbbell: k = make_dumbbell(params); break;
    case SetKind::Countable: k = make_countable(params); break;
    case SetKind::Custom:
      throw Error(ErrorKind::InvalidParams, "custom sets are assembled by the caller and checked with validate_descriptor");
  }
  validate_descriptor(k);
  return k;
}

void validate_descriptor(const CompactSetDescriptor& k, double windingTol) {
  require(!k.samples.empty(), "descriptor has no samples");
  auto in = [](const std::vector<std::complex<double>>& v, std::complex<double> z) {
    return std::find(v.begin(), v.end(), z) != v.end();
  };
  require(in(k.denseSubsetSamples, k.basePoint), "base point must belong to the dense subset");
  for (const auto& z : k.denseSubsetSamples) require(in(k.samples, z), "dense subset must lie in the samples");
  require(k.loops.size() == k.finitePoles.size(), "need exactly one loop per finite pole");
  for (std::size_t i = 0; i < k.loops.size(); ++i) {
    require(k.loops[i].closed, "loops must be closed");
    for (std::size_t j = 0; j < k.finitePoles.size(); ++j) {
      int w = 0;
      try {
        w = winding_number(k.loops[i], k.finitePoles[j], windingTol);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidParams, std::string("loop winding check failed: ") + e.what());
      }
      require(w == (i == j ? 1 : 0), "loop winding numbers must follow the Kronecker pattern");
    }
  }
  require(k.connectorBound >= 0.0, "connector bound must be nonnegative");
  const double slack = 1e-12 * std::max(1.0, k.connectorBound);
  for (const auto& c : k.connectors) {
    require(c.path.vertices.size() >= 2, "connector needs at least two vertices");
    require(c.path.start() == k.basePoint, "connector must start at the base point");
    require(c.path.end() == c.target, "connector must end at its target");
    require(curve_length(c.path) <= k.connectorBound + slack, "connector longer than the bound M");
  }
}

std::complex<double> winding_value(const Polyline& curve, std::complex<double> p) {
  if (!curve.closed || curve.start() != curve.end())
    throw Error(ErrorKind::CurveNotClosed, "winding number needs a closed curve");
  if (!(distance_to_curve(curve, p) > 0.0))
    throw Error(ErrorKind::PoleEvaluation, "point lies on the curve");
  const auto res = contour_integral([p](std::complex<double> z) { return 1.0 / (z - p); }, curve, 1e-10);
  return res.value / std::complex<double>(0.0, 2.0 * kPi);
}

int winding_number(const Polyline& curve, std::complex<double> p, double tol) {
  const auto v = winding_value(curve, p);
  const double nearest = std::round(v.real());
  const double residual = std::abs(v - nearest);
  if (residual > tol)
    throw Error(ErrorKind::AmbiguousWinding,
                "winding value " + std::to_string(v.real()) + " is not within tolerance of an integer");
  return int(nearest);
}

}  // namespace jetapprox
