#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "polytoric/geometry.hpp"
#include "polytoric/lattice_width.hpp"

namespace polytoric {

/// Polygon outline over the integer grid; with a certificate, also the two
/// supporting lines of the width direction. Presentation only.
std::string render_svg(const Polygon& p, const std::optional<WidthCertificate>& cert);

/// Throws IoError when `path` cannot be written.
void emit_svg(const Polygon& p, const std::optional<WidthCertificate>& cert,
              const std::filesystem::path& path);

}  // namespace polytoric
