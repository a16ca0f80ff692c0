#include "locc/state_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace locc::cli {

namespace {

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Collects JSON numbers as their literal source text so that no value ever
// passes through a double.
class ExactNumberCollector : public nlohmann::json_sax<nlohmann::json> {
 public:
  explicit ExactNumberCollector(StateFile& out) : out_(out) {}

  bool null() override { return fail("null"); }
  bool boolean(bool) override { return fail("boolean"); }
  bool number_integer(number_integer_t v) override { return push(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return push(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return push(s); }
  bool string(string_t& s) override {
    if (!in_array_ && in_object_ && key_ == "name") {
      out_.name = s;
      return true;
    }
    if (!in_array_ && in_object_ && key_ == "mode") {
      if (s == "amplitudes") out_.mode = CoefficientMode::Amplitudes;
      else if (s == "probabilities") out_.mode = CoefficientMode::Probabilities;
      else return fail("mode '" + s + "'");
      return true;
    }
    return push(s);
  }
  bool binary(binary_t&) override { return fail("binary"); }
  bool start_object(std::size_t) override {
    if (in_object_ || in_array_) return fail("nested object");
    in_object_ = true;
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return true; }
  bool start_array(std::size_t) override {
    if (in_array_) return fail("nested array");
    if (in_object_ && key_ != "coefficients") return fail("array under key '" + key_ + "'");
    in_array_ = true;
    return true;
  }
  bool end_array() override {
    in_array_ = false;
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    if (error_.empty()) error_ = "JSON parse error at byte " + std::to_string(position) + ": " + ex.what();
    return false;
  }

  const std::string& error() const { return error_; }

 private:
  bool push(std::string literal) {
    if (!in_array_) return fail("value outside the coefficient list");
    out_.coefficients.push_back(std::move(literal));
    out_.lines.push_back(0);
    return true;
  }
  bool fail(const std::string& what) {
    if (error_.empty()) error_ = "unexpected " + what + " in JSON state";
    return false;
  }

  StateFile& out_;
  std::string key_;
  std::string error_;
  bool in_object_ = false;
  bool in_array_ = false;
};

std::string where(const StateFile& s, std::size_t i) {
  if (i < s.lines.size() && s.lines[i] > 0) return s.name + ":" + std::to_string(s.lines[i]) + ": ";
  return s.name + ": coefficient " + std::to_string(i + 1) + ": ";
}

}  // namespace

StateFile parse_state_text(std::string_view text, std::string name) {
  StateFile state;
  state.name = std::move(name);

  if (const auto body = strip(text); !body.empty() && (body.front() == '[' || body.front() == '{')) {
    ExactNumberCollector collector(state);
    if (!nlohmann::json::sax_parse(body, &collector)) {
      throw InputError(state.name + ": " + collector.error());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string_view content = line;
      if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
      content = strip(content);
      if (content.empty()) continue;
      state.coefficients.emplace_back(content);
      state.lines.push_back(number);
    }
  }
  if (state.coefficients.empty()) throw InputError(state.name + ": no coefficients");
  return state;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open state file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_text(buffer.str(), path.string());
}

SchmidtSpectrum to_spectrum(const StateFile& state, bool normalize) {
  std::vector<Rational> probs;
  probs.reserve(state.coefficients.size());
  for (std::size_t i = 0; i < state.coefficients.size(); ++i) {
    Rational q;
    try {
      q = parse_decimal(state.coefficients[i]);
    } catch (const std::invalid_argument& e) {
      throw InputError(where(state, i) + e.what());
    }
    if (state.mode == CoefficientMode::Amplitudes) {
      q *= q;
    } else if (q < 0) {
      throw InputError(where(state, i) + "negative probability " + state.coefficients[i]);
    }
    probs.push_back(std::move(q));
  }

  if (normalize) {
    Rational total = 0;
    for (const auto& p : probs) total += p;
    if (total == 0) throw InputError(state.name + ": coefficients sum to zero, cannot normalize");
    for (auto& p : probs) p /= total;
  }

  try {
    return make_spectrum(probs);
  } catch (const SpectrumError& e) {
    std::string msg = state.name + ": " + e.what();
    if (e.kind() == SpectrumError::Kind::SumNotOne) {
      msg += " (deficit " + to_string(e.deficit()) + "; pass --normalize to rescale)";
    }
    throw InputError(msg);
  }
}

}  // namespace locc::cli
