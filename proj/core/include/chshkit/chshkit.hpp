// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "chshkit/analysis.hpp"
#include "chshkit/angles.hpp"
#include "chshkit/band.hpp"
#include "chshkit/candidate.hpp"
#include "chshkit/chsh.hpp"
#include "chshkit/errors.hpp"
#include "chshkit/io.hpp"
#include "chshkit/lp_band.hpp"
#include "chshkit/outcomes.hpp"
#include "chshkit/random.hpp"
#include "chshkit/sampler.hpp"

namespace chshkit {

inline constexpr const char* kVersion = CHSHKIT_VERSION;

}  // namespace chshkit
