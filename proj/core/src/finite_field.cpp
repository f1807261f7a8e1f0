#include "lssd/finite_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace lssd {

namespace {

struct Irreducible {
  int q;
  // Monic modulus as coefficient list c[0] + c[1] x + ... + x^e, low first,
  // leading 1 omitted.
  std::array<int, 6> low;
  int deg;
};

// x^2+x+1, x^3+x+1, x^2+1, x^4+x+1, x^2+x+1, x^3+2x+1, x^5+x^2+1,
// x^2+x+3, x^6+x+1.
constexpr Irreducible kModuli[] = {
    {4, {1, 1}, 2},  {8, {1, 1, 0}, 3},  {9, {1, 0}, 2},
    {16, {1, 1, 0, 0}, 4}, {25, {1, 1}, 2}, {27, {1, 2, 0}, 3},
    {32, {1, 0, 1, 0, 0}, 5}, {49, {3, 1}, 2}, {64, {1, 1, 0, 0, 0, 0}, 6},
};

int small_prime_base(int q, int& e) {
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                59, 61}) {
    if (q % p == 0) {
      int m = q, k = 0;
      while (m % p == 0) m /= p, ++k;
      if (m != 1) return 0;
      e = k;
      return p;
    }
  }
  return 0;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2 || q > 64)
    throw std::invalid_argument("finite field order " + std::to_string(q) +
                                " out of supported range 2..64");
  int e = 0;
  int p = small_prime_base(q, e);
  if (p == 0)
    throw std::invalid_argument("finite field order " + std::to_string(q) +
                                " is not a prime power");
  p_ = p;
  e_ = e;

  const std::size_t n = static_cast<std::size_t>(q);
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);

  // Digit decomposition, low digit first.
  auto digs = [&](int x) {
    std::vector<int> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) {
      d[static_cast<std::size_t>(i)] = x % p_;
      x /= p_;
    }
    return d;
  };
  auto undigs = [&](const std::vector<int>& d) {
    int x = 0;
    for (int i = e_ - 1; i >= 0; --i) x = x * p_ + d[static_cast<std::size_t>(i)];
    return x;
  };

  const Irreducible* mod = nullptr;
  if (e_ > 1) {
    for (const auto& m : kModuli)
      if (m.q == q) mod = &m;
    if (!mod)
      throw std::invalid_argument("no modulus known for field order " +
                                  std::to_string(q));
  }

  for (int a = 0; a < q; ++a) {
    auto da = digs(a);
    for (int b = 0; b < q; ++b) {
      auto db = digs(b);
      std::vector<int> sum(static_cast<std::size_t>(e_));
      for (int i = 0; i < e_; ++i)
        sum[static_cast<std::size_t>(i)] =
            (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
      add_[idx(a, b)] = undigs(sum);

      std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] +
               da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
              p_;
      // Reduce modulo the defining polynomial: x^e = -(low part).
      for (int d = 2 * e_ - 2; d >= e_; --d) {
        int c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < e_; ++i) {
          int coef = mod->low[static_cast<std::size_t>(i)];
          if (coef == 0) continue;
          std::size_t t = static_cast<std::size_t>(d - e_ + i);
          prod[t] = ((prod[t] - c * coef) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(a, b)] = undigs(prod);
    }
  }

  // Exhaustive axiom check: associativity, distributivity, inverses.
  auto fail = [&](const char* what) {
    throw std::logic_error("field construction for q=" + std::to_string(q) +
                           " failed " + what);
  };
  for (int a = 0; a < q; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a) fail("identity laws");
    bool add_inv = false, mul_inv = (a == 0);
    for (int b = 0; b < q; ++b) {
      if (add(a, b) == 0) add_inv = true;
      if (a != 0 && mul(a, b) == 1) mul_inv = true;
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < q; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
    if (!add_inv || !mul_inv) fail("inverse existence");
  }
}

}  // namespace lssd
