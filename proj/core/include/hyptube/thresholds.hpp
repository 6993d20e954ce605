#pragma once

namespace hyptube::thresholds {

/// (log 3)/2, the tube radius at which a geodesic subtends exactly 120° from
/// the core.
inline constexpr double kLog3Half = 0.5493061443340549;
/// Shortest-geodesic length above which the (log 3)/2 tube is guaranteed.
inline constexpr double kLongLength = 1.353;
/// Geodesic length below which Meyerhoff's formula guarantees the tube.
inline constexpr double kMeyerhoffLength = 0.0978;
/// The Gehring–Martin improvement of kMeyerhoffLength.
inline constexpr double kGehringMartinLength = 0.19;
/// Volume of a closed manifold with no (log 3)/2 tube. Informational only.
inline constexpr double kWeeksVolume = 1.0149;

}  // namespace hyptube::thresholds
