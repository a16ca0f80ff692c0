#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locc/rational.hpp"
#include "locc/spectrum.hpp"

namespace locc::cli {

enum class CoefficientMode { Probabilities, Amplitudes };

/// A named list of exact decimal coefficients as read from disk.
struct StateFile {
  std::string name;
  std::vector<std::string> coefficients;
  /// 1-based source line of each coefficient (0 when unknown, e.g. JSON).
  std::vector<int> lines;
  CoefficientMode mode = CoefficientMode::Probabilities;
};

/// Malformed or unnormalized state input; the message carries
/// "name:line:" context where available.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts either one coefficient per line (blank lines and '#' comments
/// ignored) or a JSON document: a list of numbers/strings, or an object with
/// "coefficients" and optional "name" / "mode" ("probabilities"|"amplitudes").
StateFile parse_state_text(std::string_view text, std::string name);

StateFile read_state_file(const std::filesystem::path& path);

/// Exact probabilities: amplitudes are squared; with `normalize`, entries are
/// divided by their exact sum. Throws InputError on bad entries or when the
/// result does not sum to one.
SchmidtSpectrum to_spectrum(const StateFile& state, bool normalize);

}  // namespace locc::cli
