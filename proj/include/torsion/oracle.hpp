#pragma once

#include <cstddef>
#include <optional>

#include "torsion/certificate.hpp"

namespace torsion {

/// Exact order of the certificate's point computed by divisor-class
/// arithmetic, searching k in [1, bound]. Needs d = 2 and an affine point;
/// runs over Q when every coordinate is rational and over Q(i) otherwise.
/// Throws UnsupportedDegree / UnsupportedField / the curve validation errors
/// when the certificate cannot be embedded.
std::optional<std::size_t> oracle_order(const TorsionCertificate& cert, std::size_t bound);

} // namespace torsion
