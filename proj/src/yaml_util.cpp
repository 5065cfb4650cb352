// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "yaml_util.hpp"

#include <algorithm>

namespace tacsim::yaml {

void check_keys(const YAML::Node& map, const std::vector<std::string>& allowed,
                const std::string& context) {
  if (!map.IsMap()) fail(map, context + " must be a map");
  for (const auto& kv : map) {
    const std::string key = kv.first.as<std::string>();
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(kv.first, "unknown key '" + key + "' in " + context);
    }
  }
}

YAML::Node require(const YAML::Node& map, const std::string& key,
                   const std::string& context) {
  YAML::Node node = map[key];
  if (!node.IsDefined()) fail(map, context + " is missing required key '" + key + "'");
  return node;
}

double as_double(const YAML::Node& node, const std::string& context) {
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    fail(node, context + " must be a number");
  }
}

int as_int(const YAML::Node& node, const std::string& context) {
  try {
    return node.as<int>();
  } catch (const YAML::Exception&) {
    fail(node, context + " must be an integer");
  }
}

bool as_bool(const YAML::Node& node, const std::string& context) {
  try {
    return node.as<bool>();
  } catch (const YAML::Exception&) {
    fail(node, context + " must be a boolean");
  }
}

std::string as_string(const YAML::Node& node, const std::string& context) {
  try {
    return node.as<std::string>();
  } catch (const YAML::Exception&) {
    fail(node, context + " must be a string");
  }
}

Vec3 as_vec3(const YAML::Node& node, const std::string& context) {
  if (!node.IsSequence() || node.size() != 3) {
    fail(node, context + " must be a list of 3 numbers");
  }
  return Vec3(as_double(node[0], context), as_double(node[1], context),
              as_double(node[2], context));
}

Pose pose_from_map(const YAML::Node& map, const std::string& context) {
  Pose pose;
  pose.translation = as_vec3(require(map, "position", context), context + ".position");
  YAML::Node q = map["orientation_quat"];
  if (q.IsDefined()) {
    if (!q.IsSequence() || q.size() != 4) {
      fail(q, context + ".orientation_quat must be a list of 4 numbers [w,x,y,z]");
    }
    const std::string qc = context + ".orientation_quat";
    Quat quat(as_double(q[0], qc), as_double(q[1], qc), as_double(q[2], qc),
              as_double(q[3], qc));
    const double n = quat.norm();
    if (n < 1e-6) fail(q, context + ".orientation_quat is near zero");
    // Keep exact bits when already unit so save/load round-trips.
    if (std::abs(n - 1.0) > 1e-12) quat.coeffs() /= n;
    pose.rotation = quat;
  }
  return pose;
}

void emit_vec3(YAML::Emitter& out, const Vec3& v) {
  out << YAML::Flow << YAML::BeginSeq << v.x() << v.y() << v.z() << YAML::EndSeq;
}

void emit_pose(YAML::Emitter& out, const Pose& pose) {
  out << YAML::Key << "position" << YAML::Value;
  emit_vec3(out, pose.translation);
  out << YAML::Key << "orientation_quat" << YAML::Value << YAML::Flow
      << YAML::BeginSeq << pose.rotation.w() << pose.rotation.x()
      << pose.rotation.y() << pose.rotation.z() << YAML::EndSeq;
}

}  // namespace tacsim::yaml
