#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace chebcert {

namespace detail {

// One-ulp outward steps. Round-to-nearest results are within half an ulp of
// the exact value, so a single step in each direction restores containment.
inline double next_up(double x) {
  if (std::isnan(x)) return x;
  if (x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof b);
  b = (x > 0.0) ? b + 1 : b - 1;
  std::memcpy(&x, &b, sizeof x);
  return x;
}

inline double next_down(double x) {
  if (std::isnan(x)) return x;
  if (x == -std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof b);
  b = (x > 0.0) ? b - 1 : b + 1;
  std::memcpy(&x, &b, sizeof x);
  return x;
}

inline long double next_up(long double x) {
  return std::nextafterl(x, std::numeric_limits<long double>::infinity());
}

inline long double next_down(long double x) {
  return std::nextafterl(x, -std::numeric_limits<long double>::infinity());
}

}  // namespace detail

// Closed interval of machine numbers with outward-rounded arithmetic.
// No global rounding-mode state is touched anywhere: endpoints are adjusted
// by one representable step after round-to-nearest operations, trading up to
// 2 ulp of width for thread-safety.
template <class F>
struct Iv {
  F lo{0};
  F hi{0};

  Iv() = default;
  Iv(F point) : lo(point), hi(point) {}  // NOLINT: implicit by design
  Iv(F l, F h) : lo(l), hi(h) {
    if (!(lo <= hi)) throw std::invalid_argument("Iv: lo > hi");
  }

  static Iv hull(F a, F b) { return a <= b ? Iv(a, b) : Iv(b, a); }

  F mid() const { return lo + (hi - lo) / 2; }
  F width() const { return hi - lo; }
  F mag() const { return std::max(std::abs(lo), std::abs(hi)); }
  bool contains(F x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  Iv& operator+=(const Iv& o) { return *this = *this + o; }
  Iv& operator-=(const Iv& o) { return *this = *this - o; }
  Iv& operator*=(const Iv& o) { return *this = *this * o; }
  Iv& operator/=(const Iv& o) { return *this = *this / o; }

  friend Iv operator-(const Iv& x) { return Iv(-x.hi, -x.lo); }

  friend Iv operator+(const Iv& x, const Iv& y) {
    return Iv(detail::next_down(x.lo + y.lo), detail::next_up(x.hi + y.hi));
  }

  friend Iv operator-(const Iv& x, const Iv& y) {
    return Iv(detail::next_down(x.lo - y.hi), detail::next_up(x.hi - y.lo));
  }

  friend Iv operator*(const Iv& x, const Iv& y) {
    const F p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    F mn = std::min(std::min(p1, p2), std::min(p3, p4));
    F mx = std::max(std::max(p1, p2), std::max(p3, p4));
    return Iv(detail::next_down(mn), detail::next_up(mx));
  }

  friend Iv operator/(const Iv& x, const Iv& y) {
    if (y.contains_zero())
      throw std::domain_error("Iv: division by interval containing zero");
    const F q1 = x.lo / y.lo, q2 = x.lo / y.hi, q3 = x.hi / y.lo, q4 = x.hi / y.hi;
    F mn = std::min(std::min(q1, q2), std::min(q3, q4));
    F mx = std::max(std::max(q1, q2), std::max(q3, q4));
    return Iv(detail::next_down(mn), detail::next_up(mx));
  }

  friend bool operator==(const Iv& x, const Iv& y) { return x.lo == y.lo && x.hi == y.hi; }
};

template <class F>
inline Iv<F> abs(const Iv<F>& x) {
  if (x.lo >= 0) return x;
  if (x.hi <= 0) return -x;
  return Iv<F>(F(0), std::max(-x.lo, x.hi));
}

template <class F>
inline Iv<F> max(const Iv<F>& x, const Iv<F>& y) {
  return Iv<F>(std::max(x.lo, y.lo), std::max(x.hi, y.hi));
}

template <class F>
inline Iv<F> min(const Iv<F>& x, const Iv<F>& y) {
  return Iv<F>(std::min(x.lo, y.lo), std::min(x.hi, y.hi));
}

template <class F>
inline Iv<F> hull(const Iv<F>& x, const Iv<F>& y) {
  return Iv<F>(std::min(x.lo, y.lo), std::max(x.hi, y.hi));
}

template <class F>
inline Iv<F> sqrt(const Iv<F>& x) {
  if (x.lo < 0) throw std::domain_error("Iv: sqrt of interval with negative part");
  return Iv<F>(detail::next_down(std::sqrt(x.lo)), detail::next_up(std::sqrt(x.hi)));
}

// The unit certified quantity of the project: a binary64 enclosure.
using Interval = Iv<double>;

// Extended-precision twin used internally on the residual path, where the
// binary64 evaluation noise floor (~1e-16 per entry) would dominate Y.
using IntervalX = Iv<long double>;

inline Interval narrow(const IntervalX& x) {
  double lo = static_cast<double>(x.lo);
  double hi = static_cast<double>(x.hi);
  if (static_cast<long double>(lo) > x.lo) lo = detail::next_down(lo);
  if (static_cast<long double>(hi) < x.hi) hi = detail::next_up(hi);
  return Interval(lo, hi);
}

inline IntervalX widen(const Interval& x) {
  return IntervalX(static_cast<long double>(x.lo), static_cast<long double>(x.hi));
}

// Hex float round-trips for bit-exact serialization.
inline std::string to_hex(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

inline double from_hex(const std::string& s) {
  return std::strtod(s.c_str(), nullptr);
}

using RigorousMatrix = Eigen::Matrix<Interval, Eigen::Dynamic, Eigen::Dynamic>;
using RigorousVector = Eigen::Matrix<Interval, Eigen::Dynamic, 1>;

}  // namespace chebcert

namespace Eigen {

template <>
struct NumTraits<chebcert::Interval> {
  using Real = chebcert::Interval;
  using NonInteger = chebcert::Interval;
  using Nested = chebcert::Interval;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8,
  };
  static inline Real epsilon() { return chebcert::Interval(std::numeric_limits<double>::epsilon()); }
  static inline Real dummy_precision() { return chebcert::Interval(1e-12); }
  static inline Real highest() { return chebcert::Interval(std::numeric_limits<double>::max()); }
  static inline Real lowest() { return chebcert::Interval(std::numeric_limits<double>::lowest()); }
  static inline int digits10() { return std::numeric_limits<double>::digits10; }
};

}  // namespace Eigen
