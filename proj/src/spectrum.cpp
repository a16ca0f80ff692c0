#include "locc/spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace locc {

CapExceeded::CapExceeded(Kind kind, Integer estimate, Integer cap)
    : std::runtime_error((kind == Kind::MemoryCap ? "distinct-entry cap exceeded: estimated "
                                                  : "dense oracle cap exceeded: dim^k = ") +
                         estimate.get_str() + " > cap " + cap.get_str()),
      kind_(kind),
      estimate_(std::move(estimate)),
      cap_(std::move(cap)) {}

std::vector<Rational> SchmidtSpectrum::expand(std::size_t max_len) const {
  if (dim_ > Integer(static_cast<unsigned long>(max_len))) {
    throw CapExceeded(CapExceeded::Kind::OracleCap, dim_, Integer(static_cast<unsigned long>(max_len)));
  }
  std::vector<Rational> out;
  out.reserve(dim_.get_ui());
  for (const auto& e : entries_) {
    for (unsigned long i = 0; i < e.multiplicity.get_ui(); ++i) out.push_back(e.value);
  }
  return out;
}

SchmidtSpectrum SchmidtSpectrum::from_weighted(std::vector<SpectrumEntry> weighted) {
  std::erase_if(weighted, [](const SpectrumEntry& e) { return e.value == 0 || e.multiplicity == 0; });
  std::sort(weighted.begin(), weighted.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value > y.value; });

  SchmidtSpectrum s;
  s.entries_.reserve(weighted.size());
  Rational total = 0;
  for (auto& e : weighted) {
    total += e.value * e.multiplicity;
    s.dim_ += e.multiplicity;
    if (!s.entries_.empty() && s.entries_.back().value == e.value) {
      s.entries_.back().multiplicity += e.multiplicity;
    } else {
      s.entries_.push_back(std::move(e));
    }
  }
  if (total != 1) {
    throw SpectrumError(SpectrumError::Kind::SumNotOne,
                        "Schmidt probabilities sum to " + to_string(total) + ", not 1",
                        Rational(1 - total));
  }
  return s;
}

SchmidtSpectrum make_spectrum(std::span<const Rational> probs) {
  if (probs.empty()) throw SpectrumError(SpectrumError::Kind::Empty, "empty coefficient list");
  std::vector<SpectrumEntry> weighted;
  weighted.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0) {
      throw SpectrumError(SpectrumError::Kind::NegativeEntry,
                          "coefficient " + std::to_string(i + 1) + " is negative: " + to_string(probs[i]));
    }
    weighted.push_back({probs[i], 1});
  }
  return SchmidtSpectrum::from_weighted(std::move(weighted));
}

SchmidtSpectrum tensor_product(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  std::vector<SpectrumEntry> products;
  products.reserve(a.distinct() * b.distinct());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      products.push_back({x.value * y.value, x.multiplicity * y.multiplicity});
    }
  }
  return SchmidtSpectrum::from_weighted(std::move(products));
}

Integer estimated_power_distinct(const SchmidtSpectrum& a, unsigned k) {
  Integer n;
  const unsigned long m = a.distinct();
  mpz_bin_uiui(n.get_mpz_t(), k + m - 1, m - 1);
  return n;
}

namespace {

// Walks every composition (c_0..c_{m-1}) of k, emitting the product
// prod v_i^{c_i} with weight multinomial(k; c) * prod mult_i^{c_i}.
class CompositionExpander {
 public:
  CompositionExpander(const SchmidtSpectrum& a, unsigned k) : k_(k) {
    const auto& entries = a.entries();
    value_pows_.resize(entries.size());
    mult_pows_.resize(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      value_pows_[i].resize(k + 1);
      mult_pows_[i].resize(k + 1);
      value_pows_[i][0] = 1;
      mult_pows_[i][0] = 1;
      for (unsigned c = 1; c <= k; ++c) {
        value_pows_[i][c] = value_pows_[i][c - 1] * entries[i].value;
        mult_pows_[i][c] = mult_pows_[i][c - 1] * entries[i].multiplicity;
      }
    }
    factorials_.resize(k + 1);
    factorials_[0] = 1;
    for (unsigned c = 1; c <= k; ++c) factorials_[c] = factorials_[c - 1] * c;
  }

  std::vector<SpectrumEntry> run(std::size_t reserve) {
    out_.clear();
    out_.reserve(reserve);
    recurse(0, k_, Rational(1), Integer(factorials_[k_]));
    return std::move(out_);
  }

 private:
  void recurse(std::size_t index, unsigned remaining, const Rational& value, const Integer& weight) {
    if (index + 1 == value_pows_.size()) {
      out_.push_back({value * value_pows_[index][remaining],
                      weight / factorials_[remaining] * mult_pows_[index][remaining]});
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      recurse(index + 1, remaining - c, value * value_pows_[index][c],
              weight / factorials_[c] * mult_pows_[index][c]);
    }
  }

  unsigned k_;
  std::vector<std::vector<Rational>> value_pows_;
  std::vector<std::vector<Integer>> mult_pows_;
  std::vector<Integer> factorials_;
  std::vector<SpectrumEntry> out_;
};

}  // namespace

SchmidtSpectrum tensor_power(const SchmidtSpectrum& a, unsigned k, const PowerLimits& limits) {
  if (k == 0) throw std::invalid_argument("tensor_power needs k >= 1");
  if (k == 1) return a;
  Integer estimate = estimated_power_distinct(a, k);
  Integer cap(static_cast<unsigned long>(limits.max_distinct));
  if (estimate > cap) throw CapExceeded(CapExceeded::Kind::MemoryCap, estimate, cap);

  CompositionExpander expander(a, k);
  return SchmidtSpectrum::from_weighted(expander.run(estimate.get_ui()));
}

SchmidtSpectrum tensor_power_dense(const SchmidtSpectrum& a, unsigned k, const PowerLimits& limits) {
  if (k == 0) throw std::invalid_argument("tensor_power_dense needs k >= 1");
  Integer total = pow(a.dim(), k);
  Integer cap(static_cast<unsigned long>(limits.oracle_max_dim));
  if (total > cap) throw CapExceeded(CapExceeded::Kind::OracleCap, total, cap);

  const std::vector<Rational> base = a.expand(limits.oracle_max_dim);
  std::vector<Rational> all = base;
  for (unsigned copy = 1; copy < k; ++copy) {
    std::vector<Rational> next;
    next.reserve(all.size() * base.size());
    for (const auto& x : all) {
      for (const auto& y : base) next.push_back(x * y);
    }
    all = std::move(next);
  }
  return make_spectrum(all);
}

SchmidtSpectrum maximally_entangled(unsigned long d) {
  if (d == 0) throw std::invalid_argument("maximally_entangled needs d >= 1");
  return SchmidtSpectrum::from_weighted({{make_rational(1, d), Integer(d)}});
}

double entropy(const SchmidtSpectrum& a) {
  double h = 0.0;
  for (const auto& e : a.entries()) {
    const double v = e.value.get_d();
    h -= e.multiplicity.get_d() * v * std::log2(v);
  }
  return h == 0.0 ? 0.0 : h;
}

std::string to_string(const SchmidtSpectrum& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    const auto& e = s.entries()[i];
    if (i) os << ", ";
    os << '(' << to_string(e.value) << ',' << e.multiplicity.get_str() << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace locc
