#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "locc/state_file.hpp"

namespace locc::cli {

/// A built-in state, stored as the literal Schmidt probabilities.
struct Fixture {
  std::string_view name;
  std::string_view summary;
  std::vector<std::string_view> probabilities;
};

std::span<const Fixture> fixtures();
const Fixture* find_fixture(std::string_view name);

StateFile to_state_file(const Fixture& f);

/// FNV-1a over "name:p1,p2,...;" for every fixture in order.
std::uint64_t fixtures_checksum();

}  // namespace locc::cli
