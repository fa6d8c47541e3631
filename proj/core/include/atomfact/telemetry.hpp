#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace atomfact {

struct StageSize {
  std::string stage;
  std::uint64_t max_size = 0;
};

/// Largest encoding size seen per pipeline stage, in first-seen stage order.
/// With echo on, every record is also written to stderr.
class Telemetry {
 public:
  /// True when the ATOMFACT_LOG environment variable is set and not "0".
  static bool env_enabled();

  explicit Telemetry(bool echo = env_enabled()) : echo_(echo) {}

  void record(std::string_view stage, std::uint64_t size);
  const std::vector<StageSize>& stages() const { return stages_; }
  /// Maximum over all stages; 0 when nothing was recorded.
  std::uint64_t overall_max() const;

 private:
  bool echo_;
  std::vector<StageSize> stages_;
};

}  // namespace atomfact
