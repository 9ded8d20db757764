#include "brillouin/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "brillouin/fuchsian.hpp"

namespace brillouin {

namespace {

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Factorization factorize(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  while (n % 2 == 0) {
    ++f.two_exponent;
    n /= 2;
  }
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      ++e;
      n /= p;
    }
    (p % 4 == 1 ? f.one_mod4 : f.three_mod4).push_back({p, e});
  }
  if (n > 1) (n % 4 == 1 ? f.one_mod4 : f.three_mod4).push_back({n, 1});
  return f;
}

std::int64_t r2_formula(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("r2: n must be >= 0");
  if (n == 0) return 1;  // the zero pair
  Factorization f = factorize(n);
  for (const auto& pp : f.three_mod4)
    if (pp.exponent % 2) return 0;
  std::int64_t count = 4;
  for (const auto& pp : f.one_mod4) count *= pp.exponent + 1;
  return count;
}

std::int64_t r2_bruteforce(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("r2: n must be >= 0");
  std::int64_t top = isqrt64(n);
  std::int64_t count = 0;
  for (std::int64_t p = -top; p <= top; ++p) {
    std::int64_t rem = n - p * p;
    std::int64_t q = isqrt64(rem);
    if (q * q != rem) continue;
    count += (q == 0) ? 1 : 2;
  }
  return count;
}

std::int64_t torus_focusing(Rational t_sq) {
  if (t_sq.den == 0) throw std::invalid_argument("torus_focusing: zero denominator");
  std::int64_t num = t_sq.num, den = t_sq.den;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw std::invalid_argument("torus_focusing: squared length must be >= 0");
  if (num % den != 0) return 0;  // non-integer squared length never refocuses
  return r2_formula(num / den);
}

std::int64_t gamma_focusing_bound(std::int64_t k, std::int64_t n) {
  if (k < 2) throw std::invalid_argument("gamma_focusing: k must be >= 2");
  if (n < 0) throw std::invalid_argument("gamma_focusing: n must be >= 0");
  if (n == 0) return 0;  // identity excluded
  std::int64_t inner;
  if (k == 2) {
    inner = r2_formula(n);
  } else {
    std::int64_t ksq = k * k;
    if (n % ksq != 0) return 0;
    inner = r2_formula(n / ksq);
  }
  return inner * r2_formula(n + 1) / 4;
}

std::int64_t gamma_focusing_formula(std::int64_t k, std::int64_t n) {
  if (k != 2 && k != 3 && k != 5)
    throw std::invalid_argument("gamma_focusing_formula: exact only for k in {2,3,5}");
  return gamma_focusing_bound(k, n);
}

std::int64_t gamma_focusing_bruteforce(std::int64_t k, std::int64_t n) {
  if (k < 2) throw std::invalid_argument("gamma_focusing: k must be >= 2");
  if (n < 0) throw std::invalid_argument("gamma_focusing: n must be >= 0");
  if (n == 0) return 0;
  auto sols = solve_quadruples(n, k);
  std::vector<Quadruple> canon;
  canon.reserve(sols.size());
  for (const auto& g : sols) canon.push_back(canonicalize(g));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return static_cast<std::int64_t>(canon.size());
}

std::vector<Coincidence> lk_circle_coincidences(int k_exp, std::int64_t bound) {
  if (k_exp < 2) throw std::invalid_argument("lk_circle_coincidences: exponent must be >= 2");
  if (bound < 0) throw std::invalid_argument("lk_circle_coincidences: negative bound");

  auto ipow = [k_exp](std::int64_t v) {
    std::int64_t r = 1;
    for (int i = 0; i < k_exp; ++i) {
      if (v != 0 && r > std::numeric_limits<std::int64_t>::max() / v)
        throw std::overflow_error("lk_circle_coincidences: power exceeds 64 bits");
      r *= v;
    }
    return r;
  };

  std::map<std::int64_t, std::vector<PowerPair>> by_value;
  for (std::int64_t a = 0; a <= bound; ++a) {
    std::int64_t pa = ipow(a);
    for (std::int64_t b = a; b <= bound; ++b) {
      std::int64_t pb = ipow(b);
      if (pa > std::numeric_limits<std::int64_t>::max() - pb)
        throw std::overflow_error("lk_circle_coincidences: sum exceeds 64 bits");
      by_value[pa + pb].push_back({a, b});
    }
  }

  std::vector<Coincidence> out;
  for (auto& [value, reps] : by_value) {
    if (reps.size() < 2) continue;
    std::sort(reps.begin(), reps.end(), [](const PowerPair& x, const PowerPair& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.b < y.b;
    });
    out.push_back({value, reps});
  }
  return out;  // std::map iteration is already ascending in value
}

}  // namespace brillouin
