#include "atomfact/telemetry.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>

namespace atomfact {

bool Telemetry::env_enabled() {
  const char* v = std::getenv("ATOMFACT_LOG");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

void Telemetry::record(std::string_view stage, std::uint64_t size) {
  auto it = std::find_if(stages_.begin(), stages_.end(), [&](const StageSize& s) { return s.stage == stage; });
  if (it == stages_.end())
    stages_.push_back(StageSize{std::string(stage), size});
  else
    it->max_size = std::max(it->max_size, size);
  if (echo_) std::cerr << "[atomfact] " << stage << " size=" << size << '\n';
}

std::uint64_t Telemetry::overall_max() const {
  std::uint64_t m = 0;
  for (const auto& s : stages_) m = std::max(m, s.max_size);
  return m;
}

}  // namespace atomfact
