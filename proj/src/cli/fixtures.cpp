#include "locc/fixtures.hpp"

#include <string>

namespace locc::cli {

namespace {

const std::vector<Fixture> kFixtures = {
    {"eq2", "single-copy incomparable with eq3, deterministic at two copies", {"0.4", "0.36", "0.14", "0.1"}},
    {"eq3", "target for eq2", {"0.5", "0.25", "0.25"}},
    {"eq6", "2-copy incomparable with eq7", {"0.4", "0.4", "0.1", "0.1"}},
    {"eq7", "target for eq6", {"0.5", "0.27", "0.23"}},
    {"eq8", "5-copy incomparable with eq9", {"0.4", "0.4", "0.1", "0.1"}},
    {"eq9", "target for eq8", {"0.48", "0.27", "0.25"}},
    {"eq12", "strongly incomparable with eq13, higher entropy", {"0.4", "0.4", "0.2"}},
    {"eq13", "strongly incomparable with eq12", {"0.5", "0.25", "0.25"}},
    {"chi", "catalyst for eq2 -> eq3", {"0.6", "0.4"}},
};

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

StateFile to_state_file(const Fixture& f) {
  StateFile s;
  s.name = std::string(f.name);
  for (auto p : f.probabilities) {
    s.coefficients.emplace_back(p);
    s.lines.push_back(0);
  }
  return s;
}

std::uint64_t fixtures_checksum() {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::string_view text) {
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& f : kFixtures) {
    mix(f.name);
    mix(":");
    for (std::size_t i = 0; i < f.probabilities.size(); ++i) {
      if (i) mix(",");
      mix(f.probabilities[i]);
    }
    mix(";");
  }
  return h;
}

}  // namespace locc::cli
