#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "chebcert/interval.hpp"

namespace chebcert {

// Scalar -> interval promotion used by the norm routines.
template <class S> struct IvOf { using type = Interval; };
template <> struct IvOf<long double> { using type = IntervalX; };
template <> struct IvOf<IntervalX> { using type = IntervalX; };
template <class S> using IvOfT = typename IvOf<S>::type;

template <class S>
inline IvOfT<S> as_iv(const S& x) { return IvOfT<S>(x); }
inline Interval as_iv(const Interval& x) { return x; }
inline IntervalX as_iv(const IntervalX& x) { return x; }

// Weight w_{k,j} of the X_{nu,1} norm: 1, 2, 2 nu^k or 4 nu^k depending on
// which of k, j vanish.
inline double weight(int k, int j, double nu) {
  if (k < 0 || j < 0) throw std::invalid_argument("weight: negative index");
  if (nu < 1.0) throw std::invalid_argument("weight: nu < 1");
  const double nuk = std::pow(nu, k);
  if (k == 0) return j == 0 ? 1.0 : 2.0;
  return j == 0 ? 2.0 * nuk : 4.0 * nuk;
}

// Truncated two-index Fourier-Chebyshev coefficient grid. Only the k>=0,
// j>=0 quarter is stored; the symmetries a_{-k,j}=a_{k,j}, a_{k,-j}=a_{k,j}
// are applied on the fly by every operation.
template <class S>
struct CoeffGrid {
  int K = 0;        // Fourier modes 0..K-1
  int N = 0;        // Chebyshev degrees 0..N
  double nu = 1.0;  // spatial decay rate, >= 1
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> a;  // K x (N+1)

  CoeffGrid() = default;
  CoeffGrid(int K_, int N_, double nu_) : K(K_), N(N_), nu(nu_) {
    if (K <= 0 || N < 0) throw std::invalid_argument("CoeffGrid: bad dimensions");
    if (nu < 1.0) throw std::invalid_argument("CoeffGrid: nu < 1");
    a.setZero(K, N + 1);
  }

  S at_sym(int k, int j) const {
    k = std::abs(k);
    j = std::abs(j);
    if (k >= K || j > N) return S(0);
    return a(k, j);
  }
};

// Fourier coefficient vector of one time slice, with an optional ell^1_nu
// error radius enclosing the true data around it.
template <class S>
struct FourierVector {
  double nu = 1.0;
  Eigen::Matrix<S, Eigen::Dynamic, 1> b;
  double radius = 0.0;

  FourierVector() = default;
  FourierVector(int K, double nu_) : nu(nu_) { b.setZero(K); }
  int modes() const { return static_cast<int>(b.size()); }
  S at(int k) const { return k < modes() ? b(std::abs(k)) : S(0); }
};

// ell^1 norm |y_0| + 2 sum |y_j| of a Chebyshev coefficient sequence.
template <class Vec>
inline auto ell1_norm(const Vec& y) {
  using R = IvOfT<std::decay_t<decltype(y[0])>>;
  R s(0);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(y.size()); ++j) {
    R t = abs(as_iv(y[j]));
    s += (j == 0) ? t : R(2) * t;
  }
  return s;
}

// Rigorous enclosure of the X_{nu,1} norm: sum |a_{k,j}| w_{k,j}.
template <class S>
inline IvOfT<S> x_norm(const CoeffGrid<S>& g) {
  using R = IvOfT<S>;
  using F = decltype(R{}.lo);
  R total(0);
  for (int k = 0; k < g.K; ++k) {
    R row(0);
    for (int j = 0; j <= g.N; ++j) {
      R t = abs(as_iv(g.a(k, j)));
      row += (j == 0) ? t : R(2) * t;
    }
    if (k == 0) {
      total += row;
    } else {
      total += R(2) * R(static_cast<F>(std::pow(g.nu, k))) * row;
    }
  }
  return total;
}

template <class S>
inline IvOfT<S> ell1_nu_norm(const FourierVector<S>& v) {
  using R = IvOfT<S>;
  using F = decltype(R{}.lo);
  R s(0);
  for (int k = 0; k < v.modes(); ++k) {
    R t = abs(as_iv(v.b(k)));
    s += (k == 0) ? t : R(2) * R(static_cast<F>(std::pow(v.nu, k))) * t;
  }
  return s;
}

// Full-support discrete convolution over the doubly symmetrized index set:
// (a*b)_{k,j} = sum over k1+k2=k, j1+j2=j with k_i, j_i ranging over Z.
// Never truncates: K_out = K_a + K_b - 1, N_out = N_a + N_b.
template <class S>
CoeffGrid<S> convolve(const CoeffGrid<S>& x, const CoeffGrid<S>& y) {
  if (x.nu != y.nu) throw std::invalid_argument("convolve: mismatched nu");
  const int Ko = x.K + y.K - 1;
  const int No = x.N + y.N;
  CoeffGrid<S> out(Ko, No, x.nu);
  // Symmetric extensions, indexed [k + K - 1][j + N].
  const int XK = 2 * x.K - 1, XN = 2 * x.N + 1;
  const int YK = 2 * y.K - 1, YN = 2 * y.N + 1;
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> X(XK, XN), Y(YK, YN);
  for (int k = -(x.K - 1); k <= x.K - 1; ++k)
    for (int j = -x.N; j <= x.N; ++j) X(k + x.K - 1, j + x.N) = x.at_sym(k, j);
  for (int k = -(y.K - 1); k <= y.K - 1; ++k)
    for (int j = -y.N; j <= y.N; ++j) Y(k + y.K - 1, j + y.N) = y.at_sym(k, j);
  for (int k = 0; k < Ko; ++k) {
    for (int j = 0; j <= No; ++j) {
      S acc(0);
      // k1 in [-(x.K-1), x.K-1], k2 = k - k1 within [-(y.K-1), y.K-1]
      const int k1lo = std::max(-(x.K - 1), k - (y.K - 1));
      const int k1hi = std::min(x.K - 1, k + (y.K - 1));
      const int j1lo = std::max(-x.N, j - y.N);
      const int j1hi = std::min(x.N, j + y.N);
      for (int k1 = k1lo; k1 <= k1hi; ++k1) {
        for (int j1 = j1lo; j1 <= j1hi; ++j1) {
          acc += X(k1 + x.K - 1, j1 + x.N) * Y(k - k1 + y.K - 1, j - j1 + y.N);
        }
      }
      out.a(k, j) = acc;
    }
  }
  return out;
}

// Grid evaluation at tau = 1: b_k = a_{k,0} + 2 sum_{j>=1} a_{k,j}. The
// caller attaches the step's certified radius to carry the enclosure ball
// into the next integration step.
template <class S>
FourierVector<S> endpoint_trace(const CoeffGrid<S>& g, double radius = 0.0) {
  FourierVector<S> v(g.K, g.nu);
  v.radius = radius;
  for (int k = 0; k < g.K; ++k) {
    S s = g.a(k, 0);
    for (int j = 1; j <= g.N; ++j) s += S(2) * g.a(k, j);
    v.b(k) = s;
  }
  return v;
}

// Pointwise evaluation u(tau, x): Clenshaw in the Chebyshev index per mode,
// then the cosine sum in k.
inline double eval_solution(const CoeffGrid<double>& g, double tau, double x) {
  if (tau < -1.0 || tau > 1.0) throw std::invalid_argument("eval_solution: |tau| > 1");
  double u = 0.0;
  for (int k = g.K - 1; k >= 0; --k) {
    // Clenshaw for p(tau) = a_{k,0} + 2 sum_{j>=1} a_{k,j} T_j(tau).
    double b1 = 0.0, b2 = 0.0;
    for (int j = g.N; j >= 1; --j) {
      const double t = 2.0 * tau * b1 - b2 + g.a(k, j);
      b2 = b1;
      b1 = t;
    }
    const double mode = g.a(k, 0) + 2.0 * (tau * b1 - b2);
    u += (k == 0) ? mode : 2.0 * mode * std::cos(k * x);
  }
  return u;
}

// --- serialization -------------------------------------------------------

// Plain-text CSV, one row per (k, j, value_lo, value_hi); hex float fields
// so a round-trip is bit exact. Plain grids are written with lo == hi.
inline void write_grid_csv(const CoeffGrid<Interval>& g, std::ostream& os) {
  os << "# chebcert grid K=" << g.K << " N=" << g.N << " nu=" << to_hex(g.nu) << "\n";
  os << "k,j,lo,hi\n";
  for (int k = 0; k < g.K; ++k)
    for (int j = 0; j <= g.N; ++j)
      os << k << "," << j << "," << to_hex(g.a(k, j).lo) << "," << to_hex(g.a(k, j).hi) << "\n";
}

inline void write_grid_csv(const CoeffGrid<double>& g, std::ostream& os) {
  os << "# chebcert grid K=" << g.K << " N=" << g.N << " nu=" << to_hex(g.nu) << "\n";
  os << "k,j,lo,hi\n";
  for (int k = 0; k < g.K; ++k)
    for (int j = 0; j <= g.N; ++j)
      os << k << "," << j << "," << to_hex(g.a(k, j)) << "," << to_hex(g.a(k, j)) << "\n";
}

inline CoeffGrid<Interval> read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# chebcert grid", 0) != 0)
    throw std::runtime_error("grid csv: bad header");
  int K = 0, N = -1;
  double nu = 1.0;
  {
    std::istringstream h(line);
    std::string tok;
    while (h >> tok) {
      if (tok.rfind("K=", 0) == 0) K = std::stoi(tok.substr(2));
      if (tok.rfind("N=", 0) == 0) N = std::stoi(tok.substr(2));
      if (tok.rfind("nu=", 0) == 0) nu = from_hex(tok.substr(3));
    }
  }
  std::getline(is, line);  // column header
  CoeffGrid<Interval> g(K, N, nu);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f;
    std::getline(ls, f, ',');
    const int k = std::stoi(f);
    std::getline(ls, f, ',');
    const int j = std::stoi(f);
    std::getline(ls, f, ',');
    const double lo = from_hex(f);
    std::getline(ls, f, ',');
    const double hi = from_hex(f);
    g.a(k, j) = Interval(lo, hi);
  }
  return g;
}

template <class S>
CoeffGrid<Interval> to_rigorous(const CoeffGrid<S>& g) {
  CoeffGrid<Interval> out(g.K, g.N, g.nu);
  for (int k = 0; k < g.K; ++k)
    for (int j = 0; j <= g.N; ++j) out.a(k, j) = Interval(static_cast<double>(g.a(k, j)));
  return out;
}

}  // namespace chebcert
