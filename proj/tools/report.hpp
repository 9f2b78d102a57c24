// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

namespace chshkit::cli {

/// Pretty-printed JSON with every floating-point number written as "%.17g"
/// (non-finite values become null).
std::string to_report_text(const nlohmann::ordered_json& doc);

}  // namespace chshkit::cli
