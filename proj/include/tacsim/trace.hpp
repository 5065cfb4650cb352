// Copyright 2026 The tacsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "tacsim/scene.hpp"

namespace tacsim {

struct PoseUpdate {
  std::string id;
  Pose pose;
};

/// One line of the trace: timestamp, pose updates, contact reports.
struct TraceFrame {
  double t = 0.0;  // seconds, non-decreasing across the file
  std::vector<PoseUpdate> poses;
  std::vector<ContactReport> contacts;
};

/// Pull-based reader over a JSON-lines trace; the caller steps frames the
/// way a physics loop would. Throws ParseError with the offending line.
class TraceReader {
 public:
  explicit TraceReader(const std::string& path);

  /// Next frame in file order, or nullopt at end of file.
  std::optional<TraceFrame> next();

 private:
  std::ifstream in_;
  std::string path_;
  int line_no_ = 0;
  double last_t_ = -std::numeric_limits<double>::infinity();
  bool have_last_ = false;
};

TraceReader load_trace(const std::string& path);

/// Reads the whole file at once.
std::vector<TraceFrame> read_all_frames(const std::string& path);

void write_trace(const std::vector<TraceFrame>& frames, const std::string& path);

/// update_pose for every pose entry, then set_contacts.
void apply_trace_frame(Scene& scene, const TraceFrame& frame);

}  // namespace tacsim
