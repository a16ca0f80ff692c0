#include "locc/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "locc/catalysis.hpp"
#include "locc/fixtures.hpp"
#include "locc/majorization.hpp"
#include "locc/multicopy.hpp"
#include "locc/state_file.hpp"

namespace locc::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  bool amplitudes = false;
  bool normalize = false;
};

struct LoadedState {
  std::string name;
  SchmidtSpectrum spectrum;
};

// A path that exists wins over a fixture of the same name.
LoadedState load_state(const std::string& ref, const InputOptions& opts) {
  StateFile state;
  if (std::filesystem::exists(ref)) {
    state = read_state_file(ref);
  } else if (const Fixture* f = find_fixture(ref)) {
    state = to_state_file(*f);
  } else {
    throw InputError(ref + ": no such state file or built-in fixture");
  }
  if (opts.amplitudes) state.mode = CoefficientMode::Amplitudes;
  return {state.name, to_spectrum(state, opts.normalize)};
}

std::string exact_and_decimal(const Rational& q) {
  if (q.get_den() == 1) return to_string(q);
  return to_string(q) + " = " + to_decimal(q, 4);
}

std::string format_bits(double bits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", bits);
  return buf;
}

std::string coefficient_list(const SchmidtSpectrum& s) {
  std::string out;
  for (const auto& v : s.expand()) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

PowerLimits limits_from(const std::optional<std::string>& mem_cap) {
  PowerLimits limits;
  if (!mem_cap) return limits;
  try {
    std::size_t used = 0;
    const unsigned long long cap = std::stoull(*mem_cap, &used);
    if (used != mem_cap->size() || cap == 0) throw std::invalid_argument("trailing characters");
    limits.max_distinct = static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    throw InputError("LOCC_LAB_MEM_CAP must be a positive integer, got '" + *mem_cap + "'");
  }
  return limits;
}

std::pair<unsigned, unsigned> parse_dims(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError("--dims expects LO..HI, got '" + text + "'");
    return static_cast<unsigned>(v);
  };
  if (auto sep = text.find(".."); sep != std::string::npos) {
    return {number(text.substr(0, sep)), number(text.substr(sep + 2))};
  }
  const unsigned d = number(text);
  return {d, d};
}

void write_csv(const PmaxScan& scan, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError(path + ": cannot open for writing");
  file << "k,pmax_exact,pmax_decimal,theorem3_bound_exact\n";
  for (const auto& row : scan.rows) {
    file << row.k << ',' << to_fraction_string(row.pmax) << ',' << to_decimal(row.pmax, 15, false) << ','
         << (row.bound ? to_fraction_string(*row.bound) : std::string()) << '\n';
  }
  file.flush();
  if (!file) throw IoError(path + ": write failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& mem_cap) {
  CLI::App app{"Exact LOCC transformation analysis of bipartite pure states", "locc-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  InputOptions input;
  unsigned threads = 1;
  app.add_flag("--amplitudes", input.amplitudes, "Treat coefficients as amplitudes and square them");
  app.add_flag("--normalize", input.normalize, "Rescale coefficients by their exact sum");
  app.add_option("--threads", threads, "Worker threads for scans and catalyst search")
      ->check(CLI::Range(1u, 256u));

  std::string a_ref, b_ref;
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("A", a_ref, "State file or fixture name")->required();
    sub->add_option("B", b_ref, "State file or fixture name")->required();
  };

  auto* compare_cmd = app.add_subcommand("compare", "Single-copy comparability and conclusive probabilities");
  add_pair(compare_cmd);

  unsigned k_max = 8;
  auto* classify_cmd = app.add_subcommand("classify", "Classify an incomparable pair by copies needed");
  add_pair(classify_cmd);
  classify_cmd->add_option("--k-max", k_max, "Largest copy count tried")->check(CLI::PositiveNumber);

  std::string csv_path;
  auto* scan_cmd = app.add_subcommand("scan", "Optimal conclusive probability for k = 1..k-max copies");
  add_pair(scan_cmd);
  scan_cmd->add_option("--k-max", k_max, "Largest copy count")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--csv", csv_path, "Write the scan as CSV to PATH");

  std::string check_ref;
  bool find = false;
  std::string dims = "2..4";
  CatalystSearchConfig cfg;
  auto* catalyst_cmd = app.add_subcommand("catalyst", "Check or search for an entanglement catalyst");
  add_pair(catalyst_cmd);
  auto* check_opt = catalyst_cmd->add_option("--check", check_ref, "Catalyst state file or fixture");
  auto* find_opt = catalyst_cmd->add_flag("--find", find, "Search the rational grid for a catalyst");
  check_opt->excludes(find_opt);
  catalyst_cmd->add_option("--dims", dims, "Catalyst rank range LO..HI");
  catalyst_cmd->add_option("--grid-q", cfg.grid_q, "Grid denominator q")->check(CLI::PositiveNumber);
  catalyst_cmd->add_option("--copies", cfg.copies, "Copies of the pair")->check(CLI::PositiveNumber);

  unsigned evidence_k = 1;
  unsigned n_max = 6;
  auto* evidence_cmd =
      app.add_subcommand("evidence", "Check majorization beyond the first deterministic copy count");
  add_pair(evidence_cmd);
  evidence_cmd->add_option("--k", evidence_k, "Pair is deterministic at k + 1 copies")->check(CLI::PositiveNumber);
  evidence_cmd->add_option("--n-max", n_max, "Largest copy count checked")->check(CLI::PositiveNumber);

  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of entanglement in bits");
  entropy_cmd->add_option("A", a_ref, "State file or fixture name")->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List the built-in states");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const PowerLimits limits = limits_from(mem_cap);

    if (*fixtures_cmd) {
      for (const auto& f : fixtures()) {
        out << f.name << ":";
        for (auto p : f.probabilities) out << ' ' << p;
        out << "  # " << f.summary << '\n';
      }
      return kOk;
    }

    if (*entropy_cmd) {
      const auto a = load_state(a_ref, input);
      out << a.name << ": E = " << format_bits(entropy(a.spectrum)) << " bits\n";
      return kOk;
    }

    const auto a = load_state(a_ref, input);
    const auto b = load_state(b_ref, input);

    if (*compare_cmd) {
      const Comparability relation = compare(a.spectrum, b.spectrum);
      if (relation == Comparability::Equivalent) {
        out << "Equivalent; p_max = 1\n";
      } else {
        out << (relation == Comparability::SourceToTarget   ? "A→B"
                : relation == Comparability::TargetToSource ? "B→A"
                                                            : "Incomparable")
            << "; p_max(A→B) = " << exact_and_decimal(vidal_pmax(a.spectrum, b.spectrum))
            << "; p_max(B→A) = " << exact_and_decimal(vidal_pmax(b.spectrum, a.spectrum)) << '\n';
      }
      out << "A = " << a.name << ' ' << to_string(a.spectrum) << '\n';
      out << "B = " << b.name << ' ' << to_string(b.spectrum) << '\n';
      return kOk;
    }

    if (*classify_cmd) {
      out << describe(classify_pair(a.spectrum, b.spectrum, k_max, limits)) << '\n';
      return kOk;
    }

    if (*scan_cmd) {
      const PmaxScan scan = pmax_scan(a.spectrum, b.spectrum, k_max, limits, threads);
      if (!csv_path.empty()) write_csv(scan, csv_path);
      out << "k\tp_max\texact\tbound\n";
      for (const auto& row : scan.rows) {
        out << row.k << '\t' << to_decimal(row.pmax, 6) << '\t' << to_string(row.pmax) << '\t'
            << (row.bound ? to_string(*row.bound) : std::string("-")) << '\n';
      }
      return kOk;
    }

    if (*catalyst_cmd) {
      if (check_ref.empty() && !find) throw InputError("catalyst needs --check C or --find");
      if (!check_ref.empty()) {
        const auto chi = load_state(check_ref, input);
        const bool ok = multicopy_elocc_check(a.spectrum, b.spectrum, chi.spectrum, cfg.copies, limits);
        out << (ok ? "true" : "false") << '\n';
        return kOk;
      }
      std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(dims);
      cfg.threads = threads;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      const auto outcome = search_catalyst(a.spectrum, b.spectrum, cfg, limits);
      if (outcome.catalyst) {
        out << coefficient_list(*outcome.catalyst) << '\n';
      } else if (outcome.pruned) {
        out << "none (Lemma 1 short-circuit)\n";
      } else {
        out << "none at resolution 1/" << cfg.grid_q << '\n';
      }
      return kOk;
    }

    if (*evidence_cmd) {
      const auto rows = conjecture_scan(a.spectrum, b.spectrum, evidence_k, n_max, limits);
      out << "evidence only, not a proof: deterministic at " << evidence_k + 1 << " copies\n";
      for (const auto& [n, holds] : rows) out << "n=" << n << '\t' << (holds ? "true" : "false") << '\n';
      return kOk;
    }
  } catch (const CapExceeded& e) {
    err << "locc-lab: " << e.what() << " (raise LOCC_LAB_MEM_CAP or lower the copy count)\n";
    return kResourceCap;
  } catch (const IoError& e) {
    err << "locc-lab: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "locc-lab: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "locc-lab: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace locc::cli
