// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tacsim/trace.hpp"

#include <json.hpp>

#include <cmath>

#include "tacsim/errors.hpp"

namespace tacsim {

using nlohmann::json;

namespace {

Vec3 vec3_from(const json& j, int line, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw ParseError(line, std::string(what) + " must be [x,y,z]");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

}  // namespace

TraceReader::TraceReader(const std::string& path) : path_(path) {
  in_.open(path);
  if (!in_) throw MissingFile(path);
}

std::optional<TraceFrame> TraceReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(line_no_, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("t")) {
      throw ParseError(line_no_, "frame must be an object with a 't' field");
    }

    TraceFrame frame;
    try {
      frame.t = j["t"].get<double>();
      for (const auto& p : j.value("poses", json::array())) {
        PoseUpdate update;
        update.id = p.at("id").get<std::string>();
        update.pose.translation = vec3_from(p.at("p"), line_no_, "p");
        const auto& q = p.at("q");
        if (!q.is_array() || q.size() != 4) {
          throw ParseError(line_no_, "q must be [w,x,y,z]");
        }
        Quat quat(q[0].get<double>(), q[1].get<double>(), q[2].get<double>(),
                  q[3].get<double>());
        const double n = quat.norm();
        if (n < 1e-6) throw ParseError(line_no_, "q is near zero");
        if (std::abs(n - 1.0) > 1e-12) quat.coeffs() /= n;
        update.pose.rotation = quat;
        frame.poses.push_back(std::move(update));
      }
      for (const auto& c : j.value("contacts", json::array())) {
        ContactReport report;
        report.body_id = c.at("id").get<std::string>();
        report.normal_force = c.at("f").get<double>();
        if (report.normal_force < 0.0) {
          throw ParseError(line_no_, "contact force must be >= 0");
        }
        report.contact_normal = vec3_from(c.at("n"), line_no_, "n");
        const double n = report.contact_normal.norm();
        if (std::abs(n - 1.0) > 1e-6) {
          if (n < 1e-9) throw ParseError(line_no_, "contact normal is near zero");
          report.contact_normal /= n;
        }
        frame.contacts.push_back(std::move(report));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const json::exception& e) {
      throw ParseError(line_no_, std::string("bad frame: ") + e.what());
    }

    if (have_last_ && frame.t < last_t_) {
      throw ParseError(line_no_, "timestamps must be non-decreasing");
    }
    last_t_ = frame.t;
    have_last_ = true;
    return frame;
  }
  return std::nullopt;
}

TraceReader load_trace(const std::string& path) { return TraceReader(path); }

std::vector<TraceFrame> read_all_frames(const std::string& path) {
  TraceReader reader(path);
  std::vector<TraceFrame> frames;
  while (auto frame = reader.next()) frames.push_back(std::move(*frame));
  return frames;
}

void write_trace(const std::vector<TraceFrame>& frames, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const auto& frame : frames) {
    json j;
    j["t"] = frame.t;
    j["poses"] = json::array();
    for (const auto& p : frame.poses) {
      j["poses"].push_back(
          {{"id", p.id},
           {"p", {p.pose.translation.x(), p.pose.translation.y(),
                  p.pose.translation.z()}},
           {"q", {p.pose.rotation.w(), p.pose.rotation.x(), p.pose.rotation.y(),
                  p.pose.rotation.z()}}});
    }
    if (!frame.contacts.empty()) {
      j["contacts"] = json::array();
      for (const auto& c : frame.contacts) {
        j["contacts"].push_back({{"id", c.body_id},
                                 {"f", c.normal_force},
                                 {"n", {c.contact_normal.x(), c.contact_normal.y(),
                                        c.contact_normal.z()}}});
      }
    }
    out << j.dump() << '\n';
  }
  if (!out.good()) throw IoError("write failed: " + path);
}

void apply_trace_frame(Scene& scene, const TraceFrame& frame) {
  for (const auto& update : frame.poses) {
    scene.update_pose(update.id, update.pose);
  }
  scene.set_contacts(frame.contacts);
}

}  // namespace tacsim
