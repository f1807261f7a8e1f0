#include <optional>
#include <stdexcept>
#include <string>

#include "lssd/feasibility.hpp"

namespace lssd {

namespace {

Int ipow(const Int& b, const Int& e) {
  Int r = 1;
  for (Int i = 0; i < e; ++i) r *= b;
  return r;
}

// 1 + q + ... + q^j  (0 for j < 0)
Int geom(const Int& q, const Int& j) {
  if (j < 0) return 0;
  return (ipow(q, j + 1) - 1) / (q - 1);
}

std::optional<Int> exact_div(const Int& num, const Int& den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  return Int(num / den);
}

const Int& need(const FamilySpec& f, const char* name) {
  auto it = f.idx.find(name);
  if (it == f.idx.end())
    throw std::invalid_argument("family " + std::to_string(f.family_id) +
                                " requires index '" + name + "'");
  return it->second;
}

void need_min(const Int& val, long long lo, const char* name) {
  if (val < lo)
    throw std::invalid_argument(std::string("index '") + name +
                                "' must be at least " + std::to_string(lo));
}

void need_prime_power(const Int& q) {
  if (!prime_power(q))
    throw std::invalid_argument("q = " + q.str() + " is not a prime power");
}

FamilyResult reject(std::string reason) {
  FamilyResult r;
  r.rejected = true;
  r.reason = std::move(reason);
  return r;
}

FamilyResult accept(Int v, Int k, Int l) {
  FamilyResult r;
  r.v = std::move(v);
  r.k = std::move(k);
  r.lambda = std::move(l);
  return r;
}

}  // namespace

FamilyResult family_params(const FamilySpec& f) {
  switch (f.family_id) {
    case 1: {  // point-hyperplane designs of PG(m, q)
      const Int &q = need(f, "q"), &m = need(f, "m");
      need_prime_power(q);
      need_min(m, 1, "m");
      return accept(geom(q, m), geom(q, m - 1), geom(q, m - 2));
    }
    case 2: {  // Hadamard matrix designs
      const Int& n = need(f, "n");
      need_min(n, 2, "n");
      return accept(4 * n - 1, 2 * n - 1, n - 1);
    }
    case 3:
      return reject("Chowla designs require v prime; v must be composite");
    case 4:
      return reject("Lehmer designs require v prime; v must be composite");
    case 5: {  // Whiteman
      const Int& p = need(f, "p");
      if (!is_prime(p))
        throw std::invalid_argument("p = " + p.str() + " is not prime");
      Int q = 3 * p + 2;
      if (!is_prime(q))
        return reject("q = 3p+2 = " + q.str() + " is not prime");
      Int pq = p * q;
      auto k = exact_div(pq - 1, 4);
      if (!k) return reject("k = (pq-1)/4 = " + Int(pq - 1).str() + "/4 is not an integer");
      auto l = exact_div(pq - 5, 16);
      if (!l) return reject("lambda = (pq-5)/16 = " + Int(pq - 5).str() + "/16 is not an integer");
      return accept(pq, *k, *l);
    }
    case 6: {  // Menon
      const Int& t = need(f, "t");
      need_min(t, 1, "t");
      return accept(4 * t * t, 2 * t * t - t, t * t - t);
    }
    case 7: {  // Wallis; McFarland
      const Int &q = need(f, "q"), &m = need(f, "m");
      need_prime_power(q);
      need_min(m, 1, "m");
      Int qm = ipow(q, m);
      return accept(qm * q * (geom(q, m) + 1), qm * geom(q, m),
                    qm * geom(q, m - 1));
    }
    case 8: {  // Wilson; Shrikhande and Singhi
      const Int& m = need(f, "m");
      need_min(m, 1, "m");
      return accept(m * m * m + m + 1, m * m + 1, m);
    }
    case 9: {  // Spence
      const Int& m = need(f, "m");
      need_min(m, 1, "m");
      Int tm = ipow(3, m), tm1 = ipow(3, m - 1);
      return accept(tm * (tm - 1) / 2, tm1 * (tm + 1) / 2,
                    tm1 * (tm1 + 1) / 2);
    }
    case 10: {  // Rajkundlia and Mitchell; Ionin (d = 2, so r = q + 1)
      const Int &q = need(f, "q"), &m = need(f, "m");
      need_prime_power(q);
      need_min(m, 1, "m");
      Int r = q + 1;
      return accept(1 + r * (ipow(r, m) - 1), ipow(r, m), ipow(r, m - 1));
    }
    case 11: {  // Wilson; Brouwer
      const Int &q = need(f, "q"), &m = need(f, "m");
      need_prime_power(q);
      need_min(m, 1, "m");
      auto l = exact_div(ipow(q, m - 1) * (q - 1), 2);
      if (!l)
        return reject("lambda = q^(m-1)(q-1)/2 = " +
                      Int(ipow(q, m - 1) * (q - 1)).str() +
                      "/2 is not an integer");
      return accept(2 * q * geom(q, m - 1) + 1, ipow(q, m), *l);
    }
    case 12: {  // Spence; Jungnickel and Pott; Ionin
      const Int &q = need(f, "q"), &d = need(f, "d"), &m = need(f, "m");
      need_prime_power(q);
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int r = geom(q, d);
      return accept(ipow(q, d + 1) * geom(r, 2 * m - 1),
                    ipow(r, 2 * m - 1) * ipow(q, d),
                    (r - 1) * ipow(r, 2 * m - 2) * ipow(q, d - 1));
    }
    case 13: {  // Davis and Jedwab
      const Int& d = need(f, "d");
      need_min(d, 0, "d");
      return accept(ipow(2, 2 * d + 4) * (ipow(2, 2 * d + 2) - 1) / 3,
                    ipow(2, 2 * d + 1) * (ipow(2, 2 * d + 3) + 1) / 3,
                    ipow(2, 2 * d + 1) * (ipow(2, 2 * d + 1) + 1) / 3);
    }
    case 14: {  // Chen
      const Int &q = need(f, "q"), &d = need(f, "d");
      need_prime_power(q);
      need_min(d, 1, "d");
      Int Q = ipow(q, 2 * d);
      Int v = 4 * Q * ((Q - 1) / (q * q - 1));
      Int k = ipow(q, 2 * d - 1) * (1 + 2 * ((Q - 1) / (q + 1)));
      Int l = ipow(q, 2 * d - 1) * (q - 1) * ((ipow(q, 2 * d - 1) + 1) / (q + 1));
      return accept(v, k, l);
    }
    case 15: {  // Ionin, r = q^{d+1} + q - 1
      const Int &q = need(f, "q"), &d = need(f, "d"), &m = need(f, "m");
      need_prime_power(q);
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int r = ipow(q, d + 1) + q - 1;
      Int qd = ipow(q, d);
      auto v = exact_div(qd * (ipow(r, 2 * m) - 1), (q - 1) * (qd + 1));
      if (!v)
        return reject("v is not an integer for q = " + q.str() +
                      ", d = " + d.str() + ", m = " + m.str());
      return accept(*v, qd * ipow(r, 2 * m - 1),
                    qd * (qd + 1) * (q - 1) * ipow(r, 2 * m - 2));
    }
    case 16: {  // Ionin, q = (3^{d+1} + 1)/2
      const Int &d = need(f, "d"), &m = need(f, "m");
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int q = (ipow(3, d + 1) + 1) / 2;
      if (!prime_power(q))
        return reject("q = (3^(d+1)+1)/2 = " + q.str() + " is not a prime power");
      Int td = ipow(3, d);
      auto v = exact_div(2 * td * (ipow(q, 2 * m) - 1), td + 1);
      if (!v) return reject("v is not an integer for d = " + d.str());
      return accept(*v, td * ipow(q, 2 * m - 1),
                    td * (td + 1) * ipow(q, 2 * m - 2) / 2);
    }
    case 17: {  // Ionin, q = 3^{d+1} - 2
      const Int &d = need(f, "d"), &m = need(f, "m");
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int q = ipow(3, d + 1) - 2;
      if (!prime_power(q))
        return reject("q = 3^(d+1)-2 = " + q.str() + " is not a prime power");
      Int td = ipow(3, d);
      auto v = exact_div(td * (ipow(q, 2 * m) - 1), 2 * (td - 1));
      if (!v) return reject("v is not an integer for d = " + d.str());
      return accept(*v, td * ipow(q, 2 * m - 1),
                    2 * td * (td - 1) * ipow(q, 2 * m - 2));
    }
    case 18: {  // Ionin, q = (2^{2d+3} + 1)/3
      const Int &d = need(f, "d"), &m = need(f, "m");
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int q = (ipow(2, 2 * d + 3) + 1) / 3;
      if (!prime_power(q))
        return reject("q = (2^(2d+3)+1)/3 = " + q.str() + " is not a prime power");
      Int p2 = ipow(2, 2 * d + 3);
      auto v = exact_div(p2 * (ipow(q, 2 * m) - 1), q + 1);
      if (!v) return reject("v is not an integer for d = " + d.str());
      return accept(*v, ipow(2, 2 * d + 1) * ipow(q, 2 * m - 1),
                    ipow(2, 2 * d - 1) * (q + 1) * ipow(q, 2 * m - 2));
    }
    case 19: {  // Ionin, q = 2^{2d+3} - 3
      const Int &d = need(f, "d"), &m = need(f, "m");
      need_min(d, 1, "d");
      need_min(m, 1, "m");
      Int q = ipow(2, 2 * d + 3) - 3;
      if (!prime_power(q))
        return reject("q = 2^(2d+3)-3 = " + q.str() + " is not a prime power");
      Int p2 = ipow(2, 2 * d + 3);
      auto v = exact_div(p2 * (ipow(q, 2 * m) - 1), 3 * (q - 1));
      if (!v) return reject("v is not an integer for d = " + d.str());
      return accept(*v, ipow(2, 2 * d + 1) * ipow(q, 2 * m - 1),
                    3 * ipow(2, 2 * d - 1) * (q - 1) * ipow(q, 2 * m - 2));
    }
    case 20: {  // Ionin, q = 2^d - 1 a Mersenne prime
      const Int& d = need(f, "d");
      need_min(d, 1, "d");
      Int q = ipow(2, d) - 1;
      if (!is_prime(q))
        return reject("q = 2^d - 1 = " + q.str() + " is not prime");
      return reject(
          "the order k - lambda = 2^(2dm-d-1) (2^d - 1) is never a perfect "
          "square: its odd part 2^d - 1 = " + q.str() + " is 3 mod 4");
    }
    case 21: {  // Kharaghani and Ionin, q = (2t-1)^2
      const Int &t = need(f, "t"), &m = need(f, "m");
      need_min(t, 2, "t");
      need_min(m, 1, "m");
      Int q = (2 * t - 1) * (2 * t - 1);
      if (!prime_power(2 * t - 1))
        return reject("2t-1 = " + Int(2 * t - 1).str() + " is not a prime power");
      Int qm = ipow(q, m);
      return accept(4 * t * t * geom(q, m), (2 * t * t - t) * qm,
                    (t * t - t) * qm);
    }
    default:
      throw std::invalid_argument("unknown family id " +
                                  std::to_string(f.family_id));
  }
}

namespace {

std::vector<FamilySpec> product_range(
    int id, const std::vector<std::pair<std::string, std::vector<Int>>>& axes) {
  std::vector<FamilySpec> out;
  std::vector<std::size_t> pos(axes.size(), 0);
  while (true) {
    FamilySpec f;
    f.family_id = id;
    for (std::size_t a = 0; a < axes.size(); ++a)
      f.idx[axes[a].first] = axes[a].second[pos[a]];
    out.push_back(std::move(f));
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++pos[a] < axes[a].second.size()) break;
      pos[a] = 0;
      if (a == 0) return out;
    }
    if (axes.empty()) return out;
  }
}

std::vector<Int> seq(long long lo, long long hi) {
  std::vector<Int> r;
  for (long long x = lo; x <= hi; ++x) r.emplace_back(x);
  return r;
}

}  // namespace

std::vector<FamilySpec> default_family_range(int family_id) {
  switch (family_id) {
    case 1:
      return product_range(1, {{"q", {2, 3, 4, 5}}, {"m", seq(2, 5)}});
    case 2:
      return product_range(2, {{"n", seq(2, 40)}});
    case 3:
    case 4:
      return {FamilySpec{family_id, {}}};
    case 5:
      return product_range(5, {{"p", {3, 5, 7, 11}}});
    case 6:
      return product_range(6, {{"t", seq(2, 20)}});
    case 7:
      return product_range(7, {{"q", {2, 3, 4}}, {"m", seq(1, 3)}});
    case 8:
      return product_range(8, {{"m", seq(2, 10)}});
    case 9:
      return product_range(9, {{"m", seq(2, 4)}});
    case 10:
      return product_range(10, {{"q", {2, 3, 4}}, {"m", seq(1, 4)}});
    case 11:
      return product_range(11, {{"q", {2, 3, 4}}, {"m", seq(1, 4)}});
    case 12:
      return product_range(12, {{"q", {2}}, {"d", seq(1, 2)}, {"m", seq(1, 3)}});
    case 13:
      return product_range(13, {{"d", seq(1, 3)}});
    case 14:
      return product_range(14, {{"q", {2, 3}}, {"d", seq(1, 2)}});
    case 15:
      return product_range(15, {{"q", {2}}, {"d", {1}}, {"m", seq(1, 3)}});
    case 16:
      return product_range(16, {{"d", {1}}, {"m", seq(1, 3)}});
    case 17:
      return product_range(17, {{"d", {1}}, {"m", seq(1, 3)}});
    case 18:
      return product_range(18, {{"d", {1}}, {"m", seq(1, 3)}});
    case 19:
      return product_range(19, {{"d", {1}}, {"m", seq(1, 3)}});
    case 20:
      return product_range(20, {{"d", seq(2, 5)}});
    case 21:
      return product_range(21, {{"t", seq(2, 6)}, {"m", {1}}});
    default:
      throw std::invalid_argument("unknown family id " +
                                  std::to_string(family_id));
  }
}

std::vector<FamilySpec> family_range(int family_id, const Int& lo,
                                     const Int& hi) {
  if (lo > hi) throw std::invalid_argument("empty index range");
  std::vector<Int> vals;
  for (Int x = lo; x <= hi; ++x) vals.push_back(x);

  // primary index and pinned secondary indices per family
  std::string primary;
  std::map<std::string, Int> fixed;
  switch (family_id) {
    case 1: primary = "m"; fixed = {{"q", 2}}; break;
    case 2: primary = "n"; break;
    case 3: case 4: primary = "t"; break;
    case 5: primary = "p"; break;
    case 6: primary = "t"; break;
    case 7: primary = "m"; fixed = {{"q", 2}}; break;
    case 8: case 9: primary = "m"; break;
    case 10: case 11: primary = "m"; fixed = {{"q", 2}}; break;
    case 12: primary = "m"; fixed = {{"q", 2}, {"d", 1}}; break;
    case 13: primary = "d"; break;
    case 14: primary = "d"; fixed = {{"q", 2}}; break;
    case 15: primary = "m"; fixed = {{"q", 2}, {"d", 1}}; break;
    case 16: case 17: case 18: case 19:
      primary = "m"; fixed = {{"d", 1}}; break;
    case 20: primary = "d"; break;
    case 21: primary = "t"; fixed = {{"m", 1}}; break;
    default:
      throw std::invalid_argument("unknown family id " +
                                  std::to_string(family_id));
  }

  std::vector<FamilySpec> out;
  for (const Int& x : vals) {
    FamilySpec f;
    f.family_id = family_id;
    f.idx = fixed;
    f.idx[primary] = x;
    out.push_back(std::move(f));
  }
  return out;
}

const char* family_name(int family_id) {
  switch (family_id) {
    case 1: return "point-hyperplane";
    case 2: return "Hadamard design";
    case 3: return "Chowla";
    case 4: return "Lehmer";
    case 5: return "Whiteman";
    case 6: return "Menon";
    case 7: return "Wallis-McFarland";
    case 8: return "Wilson-Shrikhande-Singhi";
    case 9: return "Spence";
    case 10: return "Rajkundlia-Mitchell-Ionin";
    case 11: return "Wilson-Brouwer";
    case 12: return "Spence-Jungnickel-Pott-Ionin";
    case 13: return "Davis-Jedwab";
    case 14: return "Chen";
    case 15: return "Ionin-I";
    case 16: return "Ionin-II";
    case 17: return "Ionin-III";
    case 18: return "Ionin-IV";
    case 19: return "Ionin-V";
    case 20: return "Ionin-VI";
    case 21: return "Kharaghani-Ionin";
    default: return "unknown";
  }
}

}  // namespace lssd
