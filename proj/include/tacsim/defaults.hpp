// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tacsim/config.hpp"

namespace tacsim {

/// Built-in single-camera, three-RGB-light sensor; also shipped as
/// configs/digit.yaml. Optical values are tuning estimates, not
/// manufacturer data.
SensorConfig default_digit_config();

/// Built-in round-surface sensor with 5 cameras and 11 lights; also
/// shipped as configs/omnitact.yaml.
SensorConfig default_omnitact_config();

}  // namespace tacsim
