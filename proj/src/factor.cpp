#include "biplane/factor.hpp"

#include <algorithm>
#include <cassert>

#include <boost/integer/common_factor_rt.hpp>
#include <boost/multiprecision/integer.hpp>

#include "biplane/error.hpp"

namespace biplane {

namespace {

unsigned const small_primes[] = {
  2u,   3u,   5u,   7u,   11u,  13u,  17u,  19u,  23u,  29u,
  31u,  37u,  41u,  43u,  47u,  53u,  59u,  61u,  67u,  71u,
  73u,  79u,  83u,  89u,  97u,  101u, 103u, 107u, 109u, 113u,
  127u, 131u, 137u, 139u, 149u, 151u, 157u, 163u, 167u, 173u};

Bigint mulmod(Bigint const &a, Bigint const &b, Bigint const &m)
{ return a * b % m; }

// one Miller-Rabin round; returns false when 'base' witnesses compositeness
bool strong_probable_prime(Bigint const &n, Bigint const &base)
{
  Bigint const a = base % n;
  if (a == 0)
    return true;

  Bigint d = n - 1;
  unsigned s = 0u;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }

  Bigint x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1)
    return true;

  for (unsigned i = 1u; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1)
      return true;
  }

  return false;
}

// Brent's cycle-finding variant of the Pollard rho method, with the
// polynomial x^2 + c; deterministic because c steps through 1, 2, 3, ...
Bigint pollard_brent(Bigint const &n)
{
  assert(n > 3 && (n & 1) != 0);

  for (Bigint c = 1;; ++c) {
    Bigint x = 2, y = 2, q = 1, g = 1, ys = 2;
    unsigned long long r = 1u;

    while (g == 1) {
      x = y;
      for (unsigned long long i = 0u; i < r; ++i)
        y = (mulmod(y, y, n) + c) % n;

      for (unsigned long long done = 0u; done < r && g == 1; done += 128u) {
        ys = y;
        unsigned long long const batch = std::min<unsigned long long>(128u, r - done);
        for (unsigned long long i = 0u; i < batch; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          Bigint diff = x > y ? x - y : y - x;
          q = mulmod(q, diff, n);
        }
        g = boost::integer::gcd(q, n);
      }
      r *= 2u;
    }

    if (g == n) {
      // backtrack one step at a time from the last saved position
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        Bigint diff = x > ys ? x - ys : ys - x;
        g = boost::integer::gcd(diff, n);
      }
    }

    if (g != n)
      return g; // proper factor
    // the whole cycle collapsed at once; retry with the next c
  }
}

void factor_into(Bigint n, std::map<Bigint, unsigned> &out)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Bigint const f = pollard_brent(n);
  assert(f > 1 && f < n && n % f == 0);
  factor_into(f, out);
  factor_into(n / f, out);
}

} // namespace

bool is_probable_prime(Bigint const &n)
{
  if (n < 2)
    return false;

  for (unsigned p : small_primes) {
    if (n == p)
      return true;
    if (n % p == 0)
      return false;
  }

  for (unsigned p : small_primes)
    if (!strong_probable_prime(n, p))
      return false;

  return true;
}

std::map<Bigint, unsigned> factorize(Bigint n)
{
  if (n < 1)
    throw Error(ErrorKind::domain_error, "factorize requires a positive integer");

  std::map<Bigint, unsigned> out;

  for (unsigned p : small_primes) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }

  factor_into(n, out);
  return out;
}

std::vector<Bigint> divisors(Bigint const &n)
{
  auto const factors = factorize(n);

  std::vector<Bigint> out{1};
  for (auto const &[p, e] : factors) {
    std::size_t const previous = out.size();
    Bigint power = 1;
    for (unsigned i = 0u; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0u; j < previous; ++j)
        out.push_back(out[j] * power);
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

} // namespace biplane
