#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebcert/interval.hpp"
#include "chebcert/seqspace.hpp"

namespace chebcert {

// The PDE family u_t = Lu + Q(u) with L = sum gamma_{2l} d_x^{2l} and
// Q(u) = sum_{j=2}^p q_j u^j, under even periodic boundary conditions.
struct ModelSpec {
  std::vector<double> gamma;  // gamma[l] = coefficient of d_x^{2l}, l = 0..d
  std::vector<double> q;      // q[j] = coefficient of u^j, j = 0..p (q0 = q1 = 0)
  std::string name = "custom";

  int degree_p() const { return static_cast<int>(q.size()) - 1; }

  void validate() const {
    if (gamma.empty()) throw std::invalid_argument("ModelSpec: empty linear part");
    const int d = static_cast<int>(gamma.size()) - 1;
    const double lead = gamma[d] * ((d % 2 == 0) ? 1.0 : -1.0);
    if (d > 0 && lead >= 0.0)
      throw std::invalid_argument("ModelSpec: not dissipative (lambda_k does not go to -inf)");
    if (q.size() >= 1 && q[0] != 0.0)
      throw std::invalid_argument("ModelSpec: Q has a constant term");
    if (q.size() >= 2 && q[1] != 0.0)
      throw std::invalid_argument("ModelSpec: Q has a linear term");
  }

  static ModelSpec fisher(double alpha) {
    ModelSpec m;
    m.gamma = {alpha, 1.0};
    m.q = {0.0, 0.0, -alpha};
    m.name = "fisher";
    m.validate();
    return m;
  }

  static ModelSpec swift_hohenberg(double alpha) {
    ModelSpec m;
    m.gamma = {alpha - 1.0, -2.0, -1.0};
    m.q = {0.0, 0.0, 0.0, -1.0};
    m.name = "swift_hohenberg";
    m.validate();
    return m;
  }
};

// lambda_k = sum_l gamma_{2l} (-1)^l k^{2l}
inline double eigenvalue(const ModelSpec& m, int k) {
  double lam = 0.0;
  double k2l = 1.0;  // k^{2l}
  const double k2 = static_cast<double>(k) * k;
  for (std::size_t l = 0; l < m.gamma.size(); ++l) {
    lam += m.gamma[l] * ((l % 2 == 0) ? 1.0 : -1.0) * k2l;
    k2l *= k2;
  }
  return lam;
}

// Same in rigorous arithmetic (supports non-integer gamma without losing
// containment; k^{2l} itself is exact for the sizes used here).
inline Interval eigenvalue_iv(const ModelSpec& m, int k) {
  Interval lam(0.0);
  Interval k2l(1.0);
  const Interval k2(static_cast<double>(k) * k);
  for (std::size_t l = 0; l < m.gamma.size(); ++l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    lam += Interval(m.gamma[l]) * Interval(sgn) * k2l;
    k2l *= k2;
  }
  return lam;
}

// One integration step's discretization context.
struct StepContext {
  ModelSpec model;
  double h = 0.0;    // step size
  int K = 0;         // Fourier truncation
  int N = 0;         // Chebyshev truncation
  double nu = 1.0;   // decay rate
  int khat = -1;     // last index whose block goes through the small-k machinery

  void set_khat_default() {
    // khat = max{ k : mu_k < 0 }; lambda_k is a polynomial in k^2 with a
    // dissipative leading term, so scanning past the last sign change is safe.
    khat = -1;
    int last_pos = -1;
    for (int k = 0; k < 4 * K + 64; ++k) {
      if (eigenvalue(model, k) > 0.0) last_pos = k;
    }
    khat = last_pos;
  }

  Interval mu_iv(int k) const {
    return -(Interval(h) / Interval(2.0)) * eigenvalue_iv(model, k);
  }
  double mu(int k) const { return -h * eigenvalue(model, k) / 2.0; }
};

// (Lambda c)_0 = 0, (Lambda c)_j = -c_{j-1} + c_{j+1}.
template <class Vec>
Vec apply_Lambda(const Vec& c) {
  const Eigen::Index n = c.size();
  Vec out(n + 1);
  using S = std::decay_t<decltype(c[0])>;
  out[0] = S(0);
  for (Eigen::Index j = 1; j <= n; ++j) {
    S v = -c[j - 1];
    if (j + 1 <= n - 1) v += c[j + 1];
    out[j] = v;
  }
  return out;
}

// lambda_k in the arithmetic of the scalar S (plain for the numeric solver,
// interval for every certified path).
template <class S>
S scalar_eigenvalue(const ModelSpec& m, int k) {
  S lam(0);
  S k2l(1);
  const S k2(static_cast<double>(k) * k);
  for (std::size_t l = 0; l < m.gamma.size(); ++l) {
    const double sgn = (l % 2 == 0) ? 1.0 : -1.0;
    lam += S(m.gamma[l]) * S(sgn) * k2l;
    k2l = k2l * k2;
  }
  return lam;
}

// Q_k(a) = sum_j q_j (a^{*j})_k accumulated at full convolution support.
template <class S>
CoeffGrid<S> apply_Q(const ModelSpec& m, const CoeffGrid<S>& a) {
  const int p = m.degree_p();
  const int Ko = p >= 2 ? p * (a.K - 1) + 1 : 1;
  const int No = p >= 2 ? p * a.N : 0;
  CoeffGrid<S> out(std::max(Ko, 1), std::max(No, 0), a.nu);
  if (p < 2) return out;
  CoeffGrid<S> pw = a;  // a^{*1}
  for (int j = 2; j <= p; ++j) {
    pw = convolve(pw, a);
    if (m.q[j] != 0.0) {
      const S coef = S(m.q[j]);
      for (int k = 0; k < pw.K; ++k)
        for (int jj = 0; jj <= pw.N; ++jj) out.a(k, jj) += coef * pw.a(k, jj);
    }
  }
  return out;
}

// The zero-finding map, component-wise:
//   F_{k,0} = a_{k,0} + 2 sum_l (-1)^l a_{k,l} - b_k
//   F_{k,j} = -(h lambda_k / 2) a_{k,j-1} + 2j a_{k,j} + (h lambda_k / 2) a_{k,j+1}
//             + (h/2)(Q_{k,j+1} - Q_{k,j-1}),   j > 0.
// Emitted at full support: modes up to max(K, p(K-1)+1)-1, Chebyshev rows up
// to the Q support plus one.
template <class S>
CoeffGrid<S> apply_F(const StepContext& ctx, const CoeffGrid<S>& a,
                     const FourierVector<S>& b) {
  const CoeffGrid<S> Q = apply_Q(ctx.model, a);
  const int Ko = std::max(a.K, Q.K);
  const int No = std::max(a.N + 1, Q.N + 1);
  CoeffGrid<S> F(Ko, No, a.nu);
  const S half_h = S(ctx.h) / S(2);
  for (int k = 0; k < Ko; ++k) {
    const S mu = -half_h * scalar_eigenvalue<S>(ctx.model, k);
    // j = 0 boundary row
    S s(0);
    if (k < a.K) {
      s = a.a(k, 0);
      for (int l = 1; l <= a.N; ++l)
        s += S(2) * S((l % 2 == 0) ? 1.0 : -1.0) * a.a(k, l);
    }
    F.a(k, 0) = s - b.at(k);
    for (int j = 1; j <= No; ++j) {
      S v(0);
      if (k < a.K) {
        if (j - 1 <= a.N) v += mu * a.a(k, j - 1);
        if (j <= a.N) v += S(2.0 * j) * a.a(k, j);
        if (j + 1 <= a.N) v += -mu * a.a(k, j + 1);
      }
      S qp = (k < Q.K && j + 1 <= Q.N) ? Q.a(k, j + 1) : S(0);
      S qm = (k < Q.K && j - 1 <= Q.N) ? Q.a(k, j - 1) : S(0);
      v += half_h * (qp - qm);
      F.a(k, j) = v;
    }
  }
  return F;
}

}  // namespace chebcert
