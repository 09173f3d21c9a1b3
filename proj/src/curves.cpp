#include "fricke/curves.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fricke {

Slope::Slope(long long p_, long long q_) : p(p_), q(q_) {
  if (p == 0 && q == 0) throw std::domain_error("Slope: (0,0) is not a slope");
  const long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
}

std::string Slope::str() const {
  return std::to_string(p) + "/" + std::to_string(q);
}

Slope parse_slope(std::string_view text, bool* reduced) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("slope: expected \"p/q\"");
  long long p = 0, q = 0;
  const char* pb = text.data();
  auto r1 = std::from_chars(pb, pb + slash, p);
  auto r2 = std::from_chars(pb + slash + 1, pb + text.size(), q);
  if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
      r1.ptr != pb + slash || r2.ptr != pb + text.size())
    throw std::invalid_argument("slope: expected \"p/q\" with integers");
  Slope s(p, q);
  if (reduced)
    *reduced = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1;
  return s;
}

long long intersection_number(Slope s1, Slope s2) {
  const long long d = s1.p * s2.q - s1.q * s2.p;
  return d < 0 ? -d : d;
}

Slope dehn_twist(Slope s, Slope along, long long k) {
  const long long v = along.p * s.q - along.q * s.p;
  return Slope(s.p + k * v * along.p, s.q + k * v * along.q);
}

namespace {

// Walks the Stern-Brocot tree to (p,q), p,q >= 1 coprime, combining the
// values attached to the corners of the current Farey triangle.  mul/sub
// must satisfy the SL2 trace identities for the value type.
template <typename T>
T farey_walk(T x, T y, T z, long long p, long long q) {
  long long Lp = 0, Lq = 1, Rp = 1, Rq = 0, Mp = 1, Mq = 1;
  T tL = y, tR = x, tM = z;
  while (Mp != p || Mq != q) {
    if (p * Mq - q * Mp < 0) {  // target lies between L and M
      T next = tL * tM - tR;
      Rp = Mp;
      Rq = Mq;
      tR = tM;
      Mp = Lp + Rp;
      Mq = Lq + Rq;
      tM = next;
    } else {  // between M and R
      T next = tM * tR - tL;
      Lp = Mp;
      Lq = Mq;
      tL = tM;
      Mp = Lp + Rp;
      Mq = Lq + Rq;
      tM = next;
    }
  }
  return tM;
}

template <typename T>
T farey_value(T x, T y, T z, Slope s) {
  if (s == Slope(1, 0)) return x;
  if (s == Slope(0, 1)) return y;
  if (s.p < 0) return farey_walk(x, y, x * y - z, -s.p, s.q);
  return farey_walk(x, y, z, s.p, s.q);
}

}  // namespace

double trace_of_slope(double x, double y, double z, Slope s) {
  return farey_value(x, y, z, s);
}

namespace {

// Positive quantity carried as its log; the trace identities only ever
// multiply two values or subtract a smaller one from a product.
struct LogValue {
  double u;
};

LogValue operator*(LogValue a, LogValue b) { return {a.u + b.u}; }

LogValue operator-(LogValue a, LogValue b) {
  const double d = b.u - a.u;
  if (d >= 0) return {-std::numeric_limits<double>::infinity()};
  return {a.u + std::log1p(-std::exp(d))};
}

}  // namespace

double log_trace_of_slope(double x, double y, double z, Slope s) {
  return farey_value(LogValue{std::log(x)}, LogValue{std::log(y)},
                     LogValue{std::log(z)}, s)
      .u;
}

double TracePolynomial::operator()(double t) const {
  double v = 0;
  for (size_t i = coefficients.size(); i-- > 0;)
    v = v * t + coefficients[i].get_d();
  return v;
}

namespace {

void strip_zeros(std::vector<mpz_class>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

TracePolynomial operator*(const TracePolynomial& f, const TracePolynomial& g) {
  if (f.coefficients.empty() || g.coefficients.empty()) return {};
  std::vector<mpz_class> c(f.coefficients.size() + g.coefficients.size() - 1);
  for (size_t i = 0; i < f.coefficients.size(); ++i)
    for (size_t j = 0; j < g.coefficients.size(); ++j)
      c[i + j] += f.coefficients[i] * g.coefficients[j];
  strip_zeros(c);
  return {std::move(c)};
}

TracePolynomial operator-(const TracePolynomial& f, const TracePolynomial& g) {
  std::vector<mpz_class> c(std::max(f.coefficients.size(), g.coefficients.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < f.coefficients.size()) c[i] += f.coefficients[i];
    if (i < g.coefficients.size()) c[i] -= g.coefficients[i];
  }
  strip_zeros(c);
  return {std::move(c)};
}

std::string TracePolynomial::str() const {
  if (coefficients.empty()) return "0";
  std::string out;
  for (size_t i = coefficients.size(); i-- > 0;) {
    const mpz_class& c = coefficients[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) {
      out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

TracePolynomial trace_polynomial(Slope s) {
  const TracePolynomial t{{0, 1}};
  return farey_value(t, t, t, s);
}

std::vector<Slope> isometry_orbit(Slope s) {
  std::set<Slope> orbit{s};
  std::vector<Slope> frontier{s};
  while (!frontier.empty()) {
    std::vector<Slope> next;
    for (const Slope& m : frontier) {
      for (const Slope& im : {Slope(-m.q, m.p - m.q), Slope(m.q, m.p)}) {
        if (orbit.insert(im).second) next.push_back(im);
      }
    }
    frontier = std::move(next);
  }
  return {orbit.begin(), orbit.end()};
}

std::string slope_word(Slope s) {
  const bool reflect = s.p < 0;
  const long long p = reflect ? -s.p : s.p;
  const long long q = s.q;
  const char a = 'A';
  const char b = reflect ? 'b' : 'B';
  if (q == 0) return {a};
  if (p == 0) return {b};
  std::string wL{b}, wR{a}, wM{a, b};
  long long Lp = 0, Lq = 1, Rp = 1, Rq = 0, Mp = 1, Mq = 1;
  while (Mp != p || Mq != q) {
    if (p * Mq - q * Mp < 0) {
      Rp = Mp;
      Rq = Mq;
      wR = wM;
    } else {
      Lp = Mp;
      Lq = Mq;
      wL = wM;
    }
    Mp = Lp + Rp;
    Mq = Lq + Rq;
    wM = wR + wL;  // mediant word: right corner then left corner
  }
  return wM;
}

}  // namespace fricke
