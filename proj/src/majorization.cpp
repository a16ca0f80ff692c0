#include "locc/majorization.hpp"

namespace locc {

std::string_view to_string(Comparability c) {
  switch (c) {
    case Comparability::SourceToTarget: return "SourceToTarget";
    case Comparability::TargetToSource: return "TargetToSource";
    case Comparability::Equivalent: return "Equivalent";
    case Comparability::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

// Walks the union of both spectra's breakpoints. Between consecutive
// breakpoints both active values are constant, so prefix sums are affine in
// the position. A spectrum past its rank contributes value zero.
class MergedSegments {
 public:
  MergedSegments(const SchmidtSpectrum& x, const SchmidtSpectrum& y) : x_(x.entries()), y_(y.entries()) {
    if (!x_.empty()) left_x_ = x_[0].multiplicity;
    if (!y_.empty()) left_y_ = y_[0].multiplicity;
  }

  struct Segment {
    Integer length;
    Rational value_x;
    Rational value_y;
  };

  bool next(Segment& seg) {
    const bool has_x = ix_ < x_.size();
    const bool has_y = iy_ < y_.size();
    if (!has_x && !has_y) return false;
    if (has_x && has_y) {
      seg.length = left_x_ < left_y_ ? left_x_ : left_y_;
    } else {
      seg.length = has_x ? left_x_ : left_y_;
    }
    seg.value_x = has_x ? x_[ix_].value : Rational(0);
    seg.value_y = has_y ? y_[iy_].value : Rational(0);
    if (has_x) advance(x_, ix_, left_x_, seg.length);
    if (has_y) advance(y_, iy_, left_y_, seg.length);
    return true;
  }

 private:
  static void advance(const std::vector<SpectrumEntry>& e, std::size_t& i, Integer& left, const Integer& by) {
    left -= by;
    if (left == 0 && ++i < e.size()) left = e[i].multiplicity;
  }

  const std::vector<SpectrumEntry>& x_;
  const std::vector<SpectrumEntry>& y_;
  std::size_t ix_ = 0;
  std::size_t iy_ = 0;
  Integer left_x_;
  Integer left_y_;
};

}  // namespace

bool majorized_by(const SchmidtSpectrum& x, const SchmidtSpectrum& y) {
  MergedSegments walk(x, y);
  MergedSegments::Segment seg;
  Rational prefix_x = 0;
  Rational prefix_y = 0;
  while (walk.next(seg)) {
    prefix_x += seg.value_x * seg.length;
    prefix_y += seg.value_y * seg.length;
    if (prefix_x > prefix_y) return false;
  }
  return true;
}

Rational vidal_pmax(const SchmidtSpectrum& source, const SchmidtSpectrum& target) {
  if (source.dim() < target.dim()) return 0;

  // Position m is the number of leading entries removed, so the tail ratio
  // at m is (1 - prefix_s(m)) / (1 - prefix_t(m)) for m in [0, dim_t - 1].
  // On each segment the ratio is linear-fractional in m, hence monotone, and
  // its minimum sits at a segment endpoint.
  const Integer last = target.dim() - 1;
  Rational best = 1;
  Rational prefix_s = 0;
  Rational prefix_t = 0;
  Integer position = 0;
  auto consider = [&best](const Rational& ps, const Rational& pt) {
    Rational ratio = (1 - ps) / (1 - pt);
    if (ratio < best) best = ratio;
  };

  MergedSegments walk(source, target);
  MergedSegments::Segment seg;
  while (position < last && walk.next(seg)) {
    Integer end = position + seg.length;
    if (end > last) {
      Integer steps = last - position;
      consider(prefix_s + seg.value_x * steps, prefix_t + seg.value_y * steps);
      break;
    }
    prefix_s += seg.value_x * seg.length;
    prefix_t += seg.value_y * seg.length;
    position = end;
    consider(prefix_s, prefix_t);
  }
  return best;
}

Comparability compare(const SchmidtSpectrum& a, const SchmidtSpectrum& b) {
  if (a == b) return Comparability::Equivalent;
  const bool forward = majorized_by(a, b);
  const bool backward = majorized_by(b, a);
  if (forward && backward) return Comparability::Equivalent;
  if (forward) return Comparability::SourceToTarget;
  if (backward) return Comparability::TargetToSource;
  return Comparability::Incomparable;
}

}  // namespace locc
