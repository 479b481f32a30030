#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace polyana::cli {

using Json = nlohmann::ordered_json;

// Verdict strings used in records.
inline constexpr const char* kPass = "PASS";
inline constexpr const char* kFail = "FAIL";
inline constexpr const char* kError = "ERROR";
inline constexpr const char* kInfo = "INFO";

// Records are JSON objects with at least "check" and "verdict". A record with
// "expected": true counts towards the exit status; FAIL and ERROR records must
// carry a "repro" command line.
class Report {
 public:
  Report(std::string command, Json config) : command_(std::move(command)), config_(std::move(config)) {}

  void add(Json record);
  bool ok() const;
  const std::vector<Json>& records() const { return records_; }
  const std::string& command() const { return command_; }

  Json to_json() const;
  // Flat projection: one line per record.
  std::string to_csv() const;

 private:
  std::string command_;
  Json config_;
  std::vector<Json> records_;
};

// Adds "elapsed_ms" to a record only when timing is enabled, so that reports
// stay byte-identical by default.
class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void stamp(Json& record) const;

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

std::string tool_version();

}  // namespace polyana::cli
