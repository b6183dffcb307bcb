#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>

#include <json.hpp>

namespace prok {

/// Experiment outcome with a deterministic body; wall-clock timings live in
/// a separate section so that seeded reports compare byte-identical.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {
    start_ = std::chrono::steady_clock::now();
  }

  nlohmann::json& config() { return config_; }
  nlohmann::json& stats() { return stats_; }

  void add_violation(nlohmann::json v) {
    ++violation_count_;
    if (violations_.size() < 100) violations_.push_back(std::move(v));
  }

  bool pass() const { return violation_count_ == 0; }
  long violation_count() const { return violation_count_; }

  static constexpr const char* kVersion = "1.0.0";

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command_;
    j["version"] = kVersion;
    j["config"] = config_;
    j["result"] = pass() ? "pass" : "fail";
    j["violations"] = violations_;
    j["violation_count"] = violation_count_;
    j["stats"] = stats_;
    j["timings"] = {{"seconds", elapsed()}};
    return j;
  }

  std::string to_text() const {
    std::string out = command_ + ": " + (pass() ? "pass" : "FAIL");
    out += " (" + std::to_string(violation_count_) + " violations";
    char buf[64];
    std::snprintf(buf, sizeof(buf), ", %.2fs)", elapsed());
    out += buf;
    if (!stats_.empty()) out += "\n  stats: " + stats_.dump();
    if (!violations_.empty())
      out += "\n  first violations: " + violations_.dump();
    return out;
  }

 private:
  double elapsed() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(now - start_).count();
  }

  std::string command_;
  nlohmann::json config_ = nlohmann::json::object();
  nlohmann::json stats_ = nlohmann::json::object();
  nlohmann::json violations_ = nlohmann::json::array();
  long violation_count_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace prok
