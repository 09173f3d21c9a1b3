#include "fricke/trace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fricke {

double trace_from_length(double length) {
  if (!(length > 0))
    throw std::domain_error("trace_from_length: length must be positive");
  return 2.0 * std::cosh(length / 2.0);
}

double length_from_trace(double trace) {
  if (!(trace > 2))
    throw std::domain_error("length_from_trace: trace must exceed 2");
  return 2.0 * std::acosh(trace / 2.0);
}

double length_from_log_trace(double log_trace) {
  if (log_trace < 40.0) {
    return length_from_trace(std::exp(log_trace));
  }
  // acosh(t/2) = log(t/2) + log(1 + sqrt(1 - 4/t^2)); for log t >= 40 the
  // second term is log 2 to double precision, so the length is 2 log t.
  return 2.0 * log_trace;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

std::pair<Mat2, Mat2> realize_generators(double x, double y, double z) {
  if (!(x > 2))
    throw std::domain_error("realize_generators: requires x > 2");
  const double lambda = (x + std::sqrt(x * x - 4.0)) / 2.0;
  const double gap = lambda - 1.0 / lambda;  // = sqrt(x^2 - 4) > 0
  Mat2 A{lambda, 0, 0, 1.0 / lambda};
  const double b11 = (z - y / lambda) / gap;
  const double b22 = y - b11;
  Mat2 B{b11, 1, b11 * b22 - 1, b22};
  return {A, B};
}

namespace {

// Parses one letter with optional ^exponent, advancing pos.
std::pair<Mat2, long> next_token(std::string_view word, size_t& pos,
                                 const Mat2& A, const Mat2& B) {
  const char ch = word[pos++];
  Mat2 base;
  long exponent = 1;
  switch (ch) {
    case 'A': base = A; break;
    case 'B': base = B; break;
    case 'a': base = A; exponent = -1; break;
    case 'b': base = B; exponent = -1; break;
    default:
      throw std::invalid_argument(std::string("word_trace: bad letter '") +
                                  ch + "'");
  }
  if (pos < word.size() && word[pos] == '^') {
    ++pos;
    bool neg = false;
    if (pos < word.size() && (word[pos] == '-' || word[pos] == '+')) {
      neg = (word[pos] == '-');
      ++pos;
    }
    if (pos >= word.size() || !std::isdigit(static_cast<unsigned char>(word[pos])))
      throw std::invalid_argument("word_trace: malformed exponent");
    long mag = 0;
    while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos])))
      mag = mag * 10 + (word[pos++] - '0');
    exponent *= neg ? -mag : mag;
  }
  return {base, exponent};
}

}  // namespace

double word_trace(const Mat2& A, const Mat2& B, std::string_view word) {
  Mat2 acc;
  bool any = false;
  size_t pos = 0;
  while (pos < word.size()) {
    if (std::isspace(static_cast<unsigned char>(word[pos]))) {
      ++pos;
      continue;
    }
    auto [base, exponent] = next_token(word, pos, A, B);
    if (exponent < 0) {
      base = base.inverse();
      exponent = -exponent;
    }
    for (long i = 0; i < exponent; ++i) acc = acc * base;
    any = true;
  }
  if (!any) throw std::domain_error("word_trace: empty word");
  return acc.trace();
}

double commutator_trace(double x, double y, double z) {
  // Sorted evaluation makes the symmetry bitwise exact.
  double s[3] = {x, y, z};
  std::sort(s, s + 3);
  return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - s[0] * s[1] * s[2] - 2.0;
}

namespace {

double cosh_sum(const CoshSumSpec& spec, double t) {
  double v = std::cosh(spec.a1 * t) + std::cosh(spec.a2 * t);
  for (double b : spec.bs) v -= std::cosh(b * t);
  return v;
}

}  // namespace

ZeroCountReport count_positive_zeros(const CoshSumSpec& spec) {
  if (!(spec.t_max > 0) || spec.grid_points < 2)
    throw std::domain_error("count_positive_zeros: bad scan window");
  constexpr double kPlateau = 1e-13;
  ZeroCountReport report;
  const double h = spec.t_max / spec.grid_points;
  double prev_t = h, prev_f = cosh_sum(spec, h);
  bool flat = std::fabs(prev_f) < kPlateau;
  for (int i = 2; i <= spec.grid_points; ++i) {
    const double t = i * h;
    const double f = cosh_sum(spec, t);
    if (std::fabs(f) < kPlateau) {
      if (flat) report.plateau = true;  // two consecutive near-zero samples
      flat = true;
    } else {
      if ((prev_f < -kPlateau && f > kPlateau) ||
          (prev_f > kPlateau && f < -kPlateau)) {
        double lo = prev_t, hi = t, flo = prev_f;
        for (int it = 0; it < 200; ++it) {
          const double mid = (lo + hi) / 2;
          const double fm = cosh_sum(spec, mid);
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
          if (hi - lo < 1e-14 * std::max(1.0, hi)) break;
        }
        report.zeros.push_back((lo + hi) / 2);
        ++report.count;
      }
      flat = false;
    }
    prev_t = t;
    prev_f = f;
  }
  return report;
}

}  // namespace fricke
