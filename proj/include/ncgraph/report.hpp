#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "ncgraph/complex_matrix.hpp"

namespace ncg {

/// Rounds to 12 significant digits so serialized reports are stable across
/// runs and platforms.
double report_real(double v);
nlohmann::json report_complex(cplx v);
nlohmann::json report_matrix(const ComplexMatrix& m);

/// FNV-1a over the canonical dump, as a 16-hex-digit string.
std::string digest(const nlohmann::json& j);

}  // namespace ncg
