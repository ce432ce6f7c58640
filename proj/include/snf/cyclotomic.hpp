#pragma once

// Exact arithmetic in Z[zeta_k], the ring of cyclotomic integers.
//
// A CycInt of order k stores the coefficient vector of
//   c[0] + c[1] zeta + ... + c[k-1] zeta^(k-1),   zeta = exp(2 pi i / k).
// The representation is only reduced modulo x^k - 1, so one complex number
// has many coefficient vectors. Equality is decided by exact divisibility of
// the difference by the k-th cyclotomic polynomial.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snf {

inline constexpr int max_order = 36;
inline constexpr std::int64_t coeff_limit = std::int64_t{1} << 31;

class order_mismatch : public std::invalid_argument {
 public:
  order_mismatch(int a, int b)
      : std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b)) {}
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t bounded(std::int64_t v) {
  if (v >= coeff_limit || v <= -coeff_limit)
    throw std::overflow_error("cyclotomic coefficient exceeds 2^31");
  return v;
}

inline int mod(std::int64_t a, int k) {
  auto r = static_cast<int>(a % k);
  return r < 0 ? r + k : r;
}

}  // namespace detail

/// Integer polynomial, lowest degree first. Trailing zeros are trimmed by
/// every operation, so the zero polynomial has no coefficients.
struct IntPolynomial {
  std::vector<std::int64_t> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> c) : coeffs(std::move(c)) { trim(); }

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  std::int64_t leading() const { return coeffs.empty() ? 0 : coeffs.back(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out[i + j] = detail::checked_add(out[i + j], detail::checked_mul(a.coeffs[i], b.coeffs[j]));
  return IntPolynomial(std::move(out));
}

/// Quotient and remainder of division by a monic polynomial. Exact over Z.
inline std::pair<IntPolynomial, IntPolynomial> poly_divmod_monic(IntPolynomial num,
                                                                const IntPolynomial& den) {
  if (den.is_zero() || den.leading() != 1)
    throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
  const int dd = den.degree();
  if (num.degree() < dd) return {IntPolynomial{}, std::move(num)};
  std::vector<std::int64_t> q(static_cast<std::size_t>(num.degree() - dd + 1), 0);
  auto& r = num.coeffs;
  for (int i = num.degree(); i >= dd; --i) {
    const std::int64_t c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - dd)] = c;
    for (int t = 0; t <= dd; ++t) {
      auto& slot = r[static_cast<std::size_t>(i - dd + t)];
      slot = detail::checked_sub(slot, detail::checked_mul(c, den.coeffs[static_cast<std::size_t>(t)]));
    }
  }
  num.trim();
  return {IntPolynomial(std::move(q)), std::move(num)};
}

inline int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

/// Phi_n, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
inline IntPolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::vector<std::int64_t> xn(static_cast<std::size_t>(n) + 1, 0);
  xn[0] = -1;
  xn[static_cast<std::size_t>(n)] = 1;
  IntPolynomial p(std::move(xn));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = poly_divmod_monic(std::move(p), cyclotomic_polynomial(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    p = std::move(q);
  }
  return p;
}

namespace detail {

// Phi_1 .. Phi_max_order, built once.
inline const std::array<IntPolynomial, max_order + 1>& cyclotomic_table() {
  static const auto table = [] {
    std::array<IntPolynomial, max_order + 1> t{};
    for (int n = 1; n <= max_order; ++n) t[static_cast<std::size_t>(n)] = cyclotomic_polynomial(n);
    return t;
  }();
  return table;
}

inline const IntPolynomial& phi(int k) { return cyclotomic_table()[static_cast<std::size_t>(k)]; }

}  // namespace detail

class CycInt {
 public:
  /// Zero of the given order.
  explicit CycInt(int order) : order_(checked_order(order)), c_(static_cast<std::size_t>(order), 0) {}

  CycInt(int order, std::vector<std::int64_t> coeffs) : order_(checked_order(order)), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(order_))
      throw std::invalid_argument("CycInt: expected " + std::to_string(order_) + " coefficients, got " +
                                  std::to_string(c_.size()));
    for (auto v : c_) detail::bounded(v);
  }

  /// scale * zeta^j
  static CycInt root(int order, std::int64_t j, std::int64_t scale = 1) {
    CycInt out(order);
    out.c_[static_cast<std::size_t>(detail::mod(j, order))] = detail::bounded(scale);
    return out;
  }

  static CycInt integer(int order, std::int64_t value) { return root(order, 0, value); }

  int order() const { return order_; }
  std::span<const std::int64_t> coeffs() const { return c_; }
  std::int64_t operator[](std::size_t j) const { return c_[j]; }

 private:
  static int checked_order(int k) {
    if (k < 1 || k > max_order)
      throw std::invalid_argument("CycInt: order must be in [1, " + std::to_string(max_order) + "]");
    return k;
  }

  friend CycInt cyc_add(const CycInt&, const CycInt&);
  friend CycInt cyc_sub(const CycInt&, const CycInt&);
  friend CycInt cyc_neg(const CycInt&);
  friend CycInt cyc_mul(const CycInt&, const CycInt&);
  friend CycInt cyc_scale(const CycInt&, std::int64_t);
  friend CycInt cyc_rotate(const CycInt&, std::int64_t);
  friend CycInt cyc_reflect(const CycInt&, std::int64_t);

  int order_;
  std::vector<std::int64_t> c_;
};

inline void require_same_order(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order()) throw order_mismatch(a.order(), b.order());
}

inline CycInt cyc_add(const CycInt& a, const CycInt& b) {
  require_same_order(a, b);
  CycInt out(a.order());
  for (std::size_t j = 0; j < a.c_.size(); ++j) out.c_[j] = detail::bounded(detail::checked_add(a.c_[j], b.c_[j]));
  return out;
}

inline CycInt cyc_sub(const CycInt& a, const CycInt& b) {
  require_same_order(a, b);
  CycInt out(a.order());
  for (std::size_t j = 0; j < a.c_.size(); ++j) out.c_[j] = detail::bounded(detail::checked_sub(a.c_[j], b.c_[j]));
  return out;
}

inline CycInt cyc_neg(const CycInt& a) {
  CycInt out(a.order());
  for (std::size_t j = 0; j < a.c_.size(); ++j) out.c_[j] = -a.c_[j];
  return out;
}

/// Polynomial product reduced modulo x^k - 1.
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) {
  require_same_order(a, b);
  const int k = a.order();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < k; ++j) {
      auto& slot = acc[static_cast<std::size_t>((i + j) % k)];
      slot = detail::checked_add(slot, detail::checked_mul(a.c_[static_cast<std::size_t>(i)],
                                                           b.c_[static_cast<std::size_t>(j)]));
    }
  }
  return CycInt(k, std::move(acc));
}

inline CycInt cyc_scale(const CycInt& a, std::int64_t s) {
  CycInt out(a.order());
  for (std::size_t j = 0; j < a.c_.size(); ++j) out.c_[j] = detail::bounded(detail::checked_mul(a.c_[j], s));
  return out;
}

/// Multiplication by zeta^j.
inline CycInt cyc_rotate(const CycInt& a, std::int64_t j) {
  const int k = a.order();
  const int s = detail::mod(j, k);
  CycInt out(k);
  for (int i = 0; i < k; ++i) out.c_[static_cast<std::size_t>((i + s) % k)] = a.c_[static_cast<std::size_t>(i)];
  return out;
}

/// Reflection across the line through 0 at angle m*pi/k: z -> zeta^m * conj(z).
inline CycInt cyc_reflect(const CycInt& a, std::int64_t m) {
  const int k = a.order();
  CycInt out(k);
  for (int i = 0; i < k; ++i) out.c_[static_cast<std::size_t>(detail::mod(m - i, k))] = a.c_[static_cast<std::size_t>(i)];
  return out;
}

inline CycInt operator+(const CycInt& a, const CycInt& b) { return cyc_add(a, b); }
inline CycInt operator-(const CycInt& a, const CycInt& b) { return cyc_sub(a, b); }
inline CycInt operator-(const CycInt& a) { return cyc_neg(a); }
inline CycInt operator*(const CycInt& a, const CycInt& b) { return cyc_mul(a, b); }

namespace detail {

/// Remainder of the coefficient polynomial modulo Phi_k, padded to phi(k)
/// entries. Two values are equal iff their residues are identical; used only
/// as a hashing/sorting key, never exposed as a normal form.
inline std::vector<std::int64_t> phi_residue(const CycInt& a) {
  const int k = a.order();
  const auto& p = phi(k);
  const int d = p.degree();
  std::vector<std::int64_t> r(a.coeffs().begin(), a.coeffs().end());
  for (int i = k - 1; i >= d; --i) {
    const std::int64_t c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int t = 0; t <= d; ++t) {
      auto& slot = r[static_cast<std::size_t>(i - d + t)];
      slot = checked_sub(slot, checked_mul(c, p.coeffs[static_cast<std::size_t>(t)]));
    }
  }
  r.resize(static_cast<std::size_t>(d));
  return r;
}

struct ResidueHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Lifts a residue (coefficients on 1, zeta, ..., zeta^(phi-1)) back to a CycInt.
inline CycInt from_residue(int k, const std::vector<std::int64_t>& r) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < r.size(); ++i) c[i] = r[i];
  return CycInt(k, std::move(c));
}

}  // namespace detail

inline bool cyc_eq(const CycInt& a, const CycInt& b) {
  require_same_order(a, b);
  const int k = a.order();
  std::vector<std::int64_t> diff(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    diff[static_cast<std::size_t>(j)] =
        detail::checked_sub(a.coeffs()[static_cast<std::size_t>(j)], b.coeffs()[static_cast<std::size_t>(j)]);
  auto [q, r] = poly_divmod_monic(IntPolynomial(std::move(diff)), detail::phi(k));
  return r.is_zero();
}

inline bool cyc_is_zero(const CycInt& a) { return cyc_eq(a, CycInt(a.order())); }

/// True iff the value is real, i.e. fixed by complex conjugation.
inline bool cyc_is_real(const CycInt& a) { return cyc_eq(a, cyc_reflect(a, 0)); }

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 to_cartesian(const CycInt& a) {
  const int k = a.order();
  Point2 p;
  for (int j = 0; j < k; ++j) {
    const auto c = a.coeffs()[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const double t = 2.0 * std::numbers::pi * j / k;
    p.x += static_cast<double>(c) * std::cos(t);
    p.y += static_cast<double>(c) * std::sin(t);
  }
  return p;
}

inline std::string to_string(const CycInt& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
    if (j) s += ' ';
    s += std::to_string(a.coeffs()[j]);
  }
  return s + ")";
}

/// Exact division by a nonzero integer, when the quotient lies in Z[zeta].
/// The power basis 1..zeta^(phi-1) is an integral basis, so divisibility is
/// read off the residue coefficients.
inline std::optional<CycInt> cyc_divide_exact(const CycInt& a, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("cyc_divide_exact: division by zero");
  auto r = detail::phi_residue(a);
  for (auto& v : r) {
    if (v % n != 0) return std::nullopt;
    v /= n;
  }
  return detail::from_residue(a.order(), r);
}

}  // namespace snf
