#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fht/functions.hpp"
#include "fht/identities.hpp"
#include "fht/spectral_atlas.hpp"

namespace fht {

using json = nlohmann::ordered_json;

/// "x,re,im" header plus one LF-terminated row per point, shortest round-trip numbers.
[[nodiscard]] std::string csv_table(std::span<const double> x, std::span<const cplx> values);

/// Writes to `path` through a temporary file in the same directory and a rename, so a failed
/// run never leaves a partial file. Empty path writes to stdout.
void write_output(const std::string& content, const std::string& path = {});

[[nodiscard]] json complex_json(cplx z);  // [re, im]
[[nodiscard]] cplx complex_from_json(const json& j);

/// {"basis": "chebT"|"chebU", "a": [re,im], "b": [re,im], "coeffs": [[re,im], ...]}
[[nodiscard]] json series_json(const EndpointWeightedFunction& f);
[[nodiscard]] EndpointWeightedFunction series_from_json(const json& j);

[[nodiscard]] json report_json(const IdentityReport& r);
[[nodiscard]] json fine_spectrum_json(const SpaceDescriptor& desc, const FineSpectrum& fs);

/// "lebesgue:p", "lorentz:p,r" (r may be "inf"), "indexed:pX,qX,pa,qa" (attainment 0/1), or a
/// catalog name such as "L^{2,1}". Throws ParseError or InvalidArgument.
[[nodiscard]] SpaceDescriptor parse_space_descriptor(std::string_view text);

/// Comma-separated reals, e.g. "0.25,-0.5".
[[nodiscard]] std::vector<double> parse_real_list(std::string_view text);

/// UTC ISO-8601 time of the call.
[[nodiscard]] std::string utc_timestamp();

}  // namespace fht
