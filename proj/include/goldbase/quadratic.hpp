#pragma once

// Exact arithmetic in the quadratic rings Z[phi] and Z[sqrt 2].
//
// An element is stored as a pair of integer coordinates (a, b) meaning
// a + b*theta, with theta = phi = (1 + sqrt 5) / 2 or theta = sqrt 2.
// Every comparison in the library goes through sign(), which uses integer
// inequalities only.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace goldbase {

using BigInt = boost::multiprecision::cpp_int;

/// Which quadratic irrational the coordinates refer to.
enum class Base { phi, silver };

inline const char* to_string(Base base) {
  return base == Base::phi ? "phi" : "silver";
}

/// a + b*theta with theta = phi (base == phi) or theta = sqrt 2 (base == silver).
///
/// `Int` is any signed integer type with the usual arithmetic operators. The
/// library default is BigInt; the brute-force oracles instantiate it with
/// std::int64_t because their search windows are small.
template <class Int>
struct BasicQuadInt {
  Int a{0};
  Int b{0};
  Base base{Base::phi};

  BasicQuadInt() = default;
  BasicQuadInt(Int a_, Int b_, Base base_) : a(std::move(a_)), b(std::move(b_)), base(base_) {}

  bool is_zero() const { return a == 0 && b == 0; }

  friend bool operator==(const BasicQuadInt& x, const BasicQuadInt& y) {
    return x.base == y.base && x.a == y.a && x.b == y.b;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicQuadInt& q) {
    return os << '(' << q.a << ", " << q.b << ')' << (q.base == Base::phi ? "_phi" : "_sqrt2");
  }
};

using QuadInt = BasicQuadInt<BigInt>;

namespace detail {

template <class Int>
void require_same_base(const BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  if (x.base != y.base) throw std::invalid_argument("QuadInt: mixed bases");
}

template <class Int>
int sign_of(const Int& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Sign of x + y*sqrt(d) for a positive non-square d.
template <class Int>
int surd_sign(const Int& x, const Int& y, int d) {
  const int sx = sign_of(x);
  const int sy = sign_of(y);
  if (sx >= 0 && sy >= 0) return (sx != 0 || sy != 0) ? 1 : 0;
  if (sx <= 0 && sy <= 0) return -1;
  const Int xx = Int(x * x);
  const Int dyy = Int(Int(y * y) * d);
  // Opposite signs: the term with the larger square wins.
  if (sx > 0) return xx > dyy ? 1 : -1;
  return dyy > xx ? 1 : -1;
}

}  // namespace detail

template <class Int>
BasicQuadInt<Int> operator+(const BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  detail::require_same_base(x, y);
  return {Int(x.a + y.a), Int(x.b + y.b), x.base};
}

template <class Int>
BasicQuadInt<Int> operator-(const BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  detail::require_same_base(x, y);
  return {Int(x.a - y.a), Int(x.b - y.b), x.base};
}

template <class Int>
BasicQuadInt<Int> operator-(const BasicQuadInt<Int>& x) {
  return {Int(-x.a), Int(-x.b), x.base};
}

template <class Int>
BasicQuadInt<Int>& operator+=(BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  detail::require_same_base(x, y);
  x.a += y.a;
  x.b += y.b;
  return x;
}

template <class Int>
BasicQuadInt<Int>& operator-=(BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  detail::require_same_base(x, y);
  x.a -= y.a;
  x.b -= y.b;
  return x;
}

template <class Int>
BasicQuadInt<Int> operator*(const BasicQuadInt<Int>& x, const Int& k) {
  return {Int(x.a * k), Int(x.b * k), x.base};
}

template <class Int>
BasicQuadInt<Int> operator*(const BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  detail::require_same_base(x, y);
  const Int ac = Int(x.a * y.a);
  const Int bd = Int(x.b * y.b);
  const Int cross = Int(Int(x.a * y.b) + Int(x.b * y.a));
  if (x.base == Base::phi) {
    // phi^2 = phi + 1
    return {Int(ac + bd), Int(cross + bd), Base::phi};
  }
  // (sqrt 2)^2 = 2
  return {Int(ac + Int(bd * 2)), cross, Base::silver};
}

/// Exact sign of a + b*theta.
template <class Int>
int sign(const BasicQuadInt<Int>& q) {
  if (q.base == Base::phi) {
    // a + b*phi = ((2a + b) + b*sqrt 5) / 2
    return detail::surd_sign(Int(Int(q.a * 2) + q.b), q.b, 5);
  }
  return detail::surd_sign(q.a, q.b, 2);
}

template <class Int>
int compare(const BasicQuadInt<Int>& x, const BasicQuadInt<Int>& y) {
  return sign(x - y);
}

/// F_n for any integer n, with F_{-n} = (-1)^{n+1} F_n.
template <class Int>
Int fibonacci(long n) {
  const long m = n < 0 ? -n : n;
  Int prev = 0;
  Int cur = 1;
  if (m == 0) return prev;
  for (long k = 1; k < m; ++k) {
    Int next = Int(prev + cur);
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (n < 0 && m % 2 == 0) return Int(-cur);
  return cur;
}

namespace detail {

template <class Int>
BasicQuadInt<Int> compute_phi_pow(long i) {
  // phi^i = F_{i-1} + F_i * phi
  return {fibonacci<Int>(i - 1), fibonacci<Int>(i), Base::phi};
}

template <class Int>
BasicQuadInt<Int> compute_sigma_pow(long i) {
  const long m = i < 0 ? -i : i;
  Int p = 1;
  Int q = 0;
  for (long k = 0; k < m; ++k) {
    // (p + q sqrt2)(1 + sqrt2)
    Int np = Int(p + Int(q * 2));
    Int nq = Int(p + q);
    p = std::move(np);
    q = std::move(nq);
  }
  if (i >= 0) return {p, q, Base::silver};
  // sigma^{-1} = -conj(sigma), so sigma^{-m} = (-1)^m conj(sigma^m)
  if (m % 2 == 0) return {p, Int(-q), Base::silver};
  return {Int(-p), q, Base::silver};
}

inline constexpr long kPowerCacheRadius = 400;

template <class Int>
class PowerTable {
 public:
  explicit PowerTable(Base base) {
    powers_.reserve(2 * kPowerCacheRadius + 1);
    for (long i = -kPowerCacheRadius; i <= kPowerCacheRadius; ++i) {
      powers_.push_back(base == Base::phi ? compute_phi_pow<Int>(i) : compute_sigma_pow<Int>(i));
    }
  }
  const BasicQuadInt<Int>& at(long i) const { return powers_[static_cast<std::size_t>(i + kPowerCacheRadius)]; }

 private:
  std::vector<BasicQuadInt<Int>> powers_;
};

template <class Int>
const PowerTable<Int>& power_table(Base base) {
  static const PowerTable<Int> phi_table(Base::phi);
  static const PowerTable<Int> silver_table(Base::silver);
  return base == Base::phi ? phi_table : silver_table;
}

}  // namespace detail

/// theta^i for the golden mean (base == phi) or the silver mean 1 + sqrt 2
/// (base == silver). Powers of the silver mean live in Z[sqrt 2].
template <class Int = BigInt>
BasicQuadInt<Int> power(Base base, long i) {
  if (i >= -detail::kPowerCacheRadius && i <= detail::kPowerCacheRadius) {
    return detail::power_table<Int>(base).at(i);
  }
  return base == Base::phi ? detail::compute_phi_pow<Int>(i) : detail::compute_sigma_pow<Int>(i);
}

template <class Int = BigInt>
BasicQuadInt<Int> phi_pow(long i) {
  return power<Int>(Base::phi, i);
}

template <class Int = BigInt>
BasicQuadInt<Int> sigma_pow(long i) {
  return power<Int>(Base::silver, i);
}

/// The rational integer n as an element of the ring.
template <class Int = BigInt>
BasicQuadInt<Int> integer(const Int& n, Base base) {
  return {n, Int(0), base};
}

}  // namespace goldbase
