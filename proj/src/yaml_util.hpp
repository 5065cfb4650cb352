// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <yaml-cpp/yaml.h>

#include <string>
#include <vector>

#include "tacsim/errors.hpp"
#include "tacsim/pose.hpp"

namespace tacsim::yaml {

inline int mark_line(const YAML::Node& node) {
  return node.Mark().is_null() ? 0 : node.Mark().line + 1;
}

[[noreturn]] inline void fail(const YAML::Node& node, const std::string& message) {
  throw ParseError(mark_line(node), message);
}

/// Rejects keys outside `allowed`; the strict-schema rule for every map.
void check_keys(const YAML::Node& map, const std::vector<std::string>& allowed,
                const std::string& context);

YAML::Node require(const YAML::Node& map, const std::string& key,
                   const std::string& context);

double as_double(const YAML::Node& node, const std::string& context);
int as_int(const YAML::Node& node, const std::string& context);
bool as_bool(const YAML::Node& node, const std::string& context);
std::string as_string(const YAML::Node& node, const std::string& context);

Vec3 as_vec3(const YAML::Node& node, const std::string& context);

/// Reads `position` / `orientation_quat` ([w,x,y,z]) from `map`. The
/// orientation key is optional and defaults to identity. Near-unit
/// quaternions are renormalized; near-zero ones are a ParseError.
Pose pose_from_map(const YAML::Node& map, const std::string& context);

void emit_vec3(YAML::Emitter& out, const Vec3& v);
void emit_pose(YAML::Emitter& out, const Pose& pose);

}  // namespace tacsim::yaml
