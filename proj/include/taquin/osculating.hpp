#ifndef TAQUIN_OSCULATING_HPP
#define TAQUIN_OSCULATING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <utility>
#include <vector>

#include "taquin/partition.hpp"

namespace taquin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

// Dense polynomial over the rationals, coefficients by ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs)
      : coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial monomial(const Rational& c, int degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational coefficient(int d) const {
    return (d >= 0 && d <= degree()) ? coeffs_[d] : Rational(0);
  }

  // Order of vanishing at z = 0; -1 for the zero polynomial.
  int order_at_zero() const {
    for (int d = 0; d <= degree(); ++d)
      if (coeffs_[d] != 0) return d;
    return -1;
  }

  Rational evaluate(const Rational& z) const {
    Rational acc = 0;
    for (int d = degree(); d >= 0; --d) acc = acc * z + coeffs_[d];
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// Falling factorial a (a-1) ... (a-i+1).
inline Integer falling_factorial(int a, int i) {
  Integer out = 1;
  for (int t = 0; t < i; ++t) out *= (a - t);
  return out;
}

// n x n Wronskian-style matrix of the rational normal curve at z: entry
// (i, j) is the i-th derivative of z^{j-1}, with i = 0..n-1 and j = 1..n.
// Its column spans give the flag osculating the curve at z.
inline Matrix osculating_matrix(int n, const Rational& z) {
  detail::require(n >= 1, "osculating_matrix: n must be >= 1");
  Matrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j - 1 < i) continue;
      Rational zp = 1;
      for (int t = 0; t < j - 1 - i; ++t) zp *= z;
      m[i][j - 1] = Rational(falling_factorial(j - 1, i)) * zp;
    }
  return m;
}

// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(Matrix m) {
  int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Determinant of the top-justified minor on columns J (1-based, strictly
// increasing) of the osculating matrix: rows 0..|J|-1.
inline Rational osculating_minor(int n, const std::vector<int>& J,
                                 const Rational& z) {
  detail::require(!J.empty(), "osculating_minor: empty column set");
  Matrix full = osculating_matrix(n, z);
  int p = static_cast<int>(J.size());
  Matrix m(p, std::vector<Rational>(p));
  for (int i = 0; i < p; ++i)
    for (int c = 0; c < p; ++c) {
      detail::require(J[c] >= 1 && J[c] <= n && (c == 0 || J[c] > J[c - 1]),
                      "osculating_minor: J must be a sorted subset of 1..n");
      m[i][c] = full[i][J[c] - 1];
    }
  return determinant(std::move(m));
}

// Vandermonde factor and exponent of the minor on columns J:
//   Delta_J = prod_{j1 < j2 in J} (j2 - j1),
//   e_J     = sum_{j in J} j - binomial(|J| + 1, 2),
// so the minor equals Delta_J z^{e_J}.  Also e_J + e_{J^c} = |J| (n - |J|).
inline std::pair<Integer, int> delta_and_e(const std::vector<int>& J, int n) {
  Integer delta = 1;
  int e = 0;
  int p = static_cast<int>(J.size());
  for (int a = 0; a < p; ++a) {
    detail::require(J[a] >= 1 && J[a] <= n && (a == 0 || J[a] > J[a - 1]),
                    "delta_and_e: J must be a sorted subset of 1..n");
    e += J[a];
    for (int b = a + 1; b < p; ++b) delta *= (J[b] - J[a]);
  }
  e -= p * (p + 1) / 2;
  return {delta, e};
}

inline bool verify_minor_identity(const std::vector<int>& J, int n,
                                  const Rational& z) {
  auto [delta, e] = delta_and_e(J, n);
  Rational zp = 1;
  for (int t = 0; t < e; ++t) zp *= z;
  return osculating_minor(n, J, z) == Rational(delta) * zp;
}

// All k-subsets of {1..n}, lexicographic.
inline std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int j = next; j <= n - (k - 1 - static_cast<int>(cur.size())); ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::vector<int> subset_complement(const std::vector<int>& J, int n) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (int j = 1; j <= n; ++j) {
    if (pos < J.size() && J[pos] == j) {
      ++pos;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

// Column set cut out by lambda in G(k,n): { n - k + j - lambda_j : j = 1..k }.
inline std::vector<int> index_set_of_partition(const Partition& lambda, int k,
                                               int n) {
  detail::require(lambda.fits_in(Rectangle(k, n - k)),
                  "index_set_of_partition: lambda must fit in k x (n-k)");
  std::vector<int> out;
  for (int j = 1; j <= k; ++j) out.push_back(n - k + j - lambda.part(j - 1));
  std::sort(out.begin(), out.end());
  return out;
}

// Plucker coordinates of a point of G(k,n), indexed by sorted k-subsets.
using PluckerVector = std::map<std::vector<int>, Rational>;

// The coordinate point of the Schubert cell of lambda for the flag at 0:
// a single nonzero Plucker coordinate at index_set_of_partition(lambda).
inline PluckerVector coordinate_plucker(const Partition& lambda, int k, int n) {
  PluckerVector v;
  v[index_set_of_partition(lambda, k, n)] = 1;
  return v;
}

// Polynomial whose vanishing order at z records which Schubert conditions
// relative to the osculating flag at z the point satisfies:
//   f(z) = sum_I pl_I Delta_{I^c} (-z)^{e_{I^c}}.
inline Polynomial box_condition_poly(const PluckerVector& v, int n) {
  std::map<int, Rational> coeffs;
  for (const auto& [I, pl] : v) {
    if (pl == 0) continue;
    auto [delta, e] = delta_and_e(subset_complement(I, n), n);
    Rational term = pl * Rational(delta);
    if (e % 2 != 0) term = -term;
    coeffs[e] += term;
  }
  int maxdeg = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  std::vector<Rational> dense(maxdeg + 1, Rational(0));
  for (const auto& [d, c] : coeffs) dense[d] = c;
  return Polynomial(std::move(dense));
}

}  // namespace taquin

#endif
