#include "lssd/scheme.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace lssd {

namespace {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

RelationMatrices assemble_relations(const LssdGraph& g) {
  if (g.w < 2) throw scheme_error("need at least 2 fibers");
  LssdClass cls = classify(g.params);
  bool flip = (cls.heaviness == Heaviness::NuHeavy);

  RelationMatrices R;
  R.w = g.w;
  R.params = flip ? complement_params(g.params) : g.params;
  std::size_t v = static_cast<std::size_t>(g.params.v);
  std::size_t n = v * static_cast<std::size_t>(g.w);
  R.size = n;
  for (auto& a : R.A) a = BinMatrix(n, n);

  for (std::size_t x = 0; x < n; ++x) R.A[0].set(x, x, true);
  for (int f = 0; f < g.w; ++f) {
    std::size_t off = static_cast<std::size_t>(f) * v;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        if (a != b) R.A[2].set(off + a, off + b, true);
  }
  for (int i = 1; i <= g.w; ++i)
    for (int j = i + 1; j <= g.w; ++j) {
      const BinMatrix& blk = g.block(i, j);
      std::size_t oi = static_cast<std::size_t>(i - 1) * v;
      std::size_t oj = static_cast<std::size_t>(j - 1) * v;
      for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b) {
          bool e = blk.get(a, b);
          BinMatrix& mu_side = flip ? (e ? R.A[3] : R.A[1]) : (e ? R.A[1] : R.A[3]);
          mu_side.set(oi + a, oj + b, true);
          mu_side.set(oj + b, oi + a, true);
        }
    }
  return R;
}

RelationMatrices relation_matrices(const LssdGraph& g) {
  if (g.params.degenerate)
    throw scheme_error(
        "degenerate parameters (k = 1 or k = v-1): the induced scheme is not "
        "Q-polynomial, since s(v-2) > v-2k fails in the k = 1 labelling");
  return assemble_relations(g);
}

std::array<IntMat, 4> intersection_numbers(const DesignParams& p, int w) {
  MuNu mn = mu_nu(p);
  const Int &v = p.v, &k = p.k, &l = p.lambda, &mu = mn.mu, &nu = mn.nu;
  Int W(w);

  std::array<IntMat, 4> L;
  L[0] = IntMat::identity(4);
  L[1] = IntMat(4, 4);
  L[1](0, 1) = k * (W - 1);
  L[1](1, 0) = 1;
  L[1](1, 1) = mu * (W - 2);
  L[1](1, 2) = k - 1;
  L[1](1, 3) = (k - mu) * (W - 2);
  L[1](2, 1) = l * (W - 1);
  L[1](2, 3) = (k - l) * (W - 1);
  L[1](3, 1) = nu * (W - 2);
  L[1](3, 2) = k;
  L[1](3, 3) = (k - nu) * (W - 2);

  L[2] = IntMat(4, 4);
  L[2](0, 2) = v - 1;
  L[2](1, 1) = k - 1;
  L[2](1, 3) = v - k;
  L[2](2, 0) = 1;
  L[2](2, 2) = v - 2;
  L[2](3, 1) = k;
  L[2](3, 3) = v - k - 1;

  L[3] = IntMat(4, 4);
  L[3](0, 3) = (v - k) * (W - 1);
  L[3](1, 1) = (k - mu) * (W - 2);
  L[3](1, 2) = v - k;
  L[3](1, 3) = (v + mu - 2 * k) * (W - 2);
  L[3](2, 1) = (k - l) * (W - 1);
  L[3](2, 3) = (v + l - 2 * k) * (W - 1);
  L[3](3, 0) = 1;
  L[3](3, 1) = (k - nu) * (W - 2);
  L[3](3, 2) = v - k - 1;
  L[3](3, 3) = (v + nu - 2 * k) * (W - 2);
  return L;
}

std::pair<RatMat, RatMat> eigenmatrices(const DesignParams& p, int w) {
  if (!p.s)
    throw scheme_error("order " + p.n.str() + " is not a perfect square");
  Rat v(p.v), k(p.k), s(*p.s), W(w);

  RatMat P(4, 4), Q(4, 4);
  Rat one(1);
  // clang-format off
  P(0,0)=one; P(0,1)=k*(W-1);  P(0,2)=v-1; P(0,3)=(v-k)*(W-1);
  P(1,0)=one; P(1,1)=s*(W-1);  P(1,2)=-1;  P(1,3)=-s*(W-1);
  P(2,0)=one; P(2,1)=-s;       P(2,2)=-1;  P(2,3)=s;
  P(3,0)=one; P(3,1)=-k;       P(3,2)=v-1; P(3,3)=k-v;

  Q(0,0)=one; Q(0,1)=v-1;      Q(0,2)=(W-1)*(v-1);  Q(0,3)=W-1;
  Q(1,0)=one; Q(1,1)=(v-k)/s;  Q(1,2)=-(v-k)/s;     Q(1,3)=-1;
  Q(2,0)=one; Q(2,1)=-1;       Q(2,2)=1-W;          Q(2,3)=W-1;
  Q(3,0)=one; Q(3,1)=-k/s;     Q(3,2)=k/s;          Q(3,3)=-1;
  // clang-format on
  return {P, Q};
}

std::array<Int, 4> multiplicities(const DesignParams& p, int w) {
  Int W(w);
  return {Int(1), Int(p.v - 1), Int((W - 1) * (p.v - 1)), Int(W - 1)};
}

KreinTables krein_parameters(const DesignParams& p, int w) {
  auto [P, Q] = eigenmatrices(p, w);
  std::array<Int, 4> m = multiplicities(p, w);
  Rat X(p.v * w);

  KreinTables kt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        Rat sum(0);
        for (int u = 0; u < 4; ++u) {
          Rat ku = P(0, u);
          sum += P(i, u) * P(j, u) * P(k, u) / (ku * ku);
        }
        Rat q = Rat(m[static_cast<std::size_t>(i)] *
                    m[static_cast<std::size_t>(j)]) /
                X * sum;
        if (q < 0) {
          std::ostringstream os;
          os << "Krein parameter q_{" << i << j << "}^" << k << " = "
             << rat_str(q) << " is negative";
          throw krein_violation(i, j, k, os.str());
        }
        kt.q(i, j, k) = q;
      }

  Rat v(p.v), k(p.k), s(*p.s), W(w);
  Rat ws = W * s;
  kt.L1 = RatMat(4, 4);
  kt.L1(0, 1) = v - 1;
  kt.L1(1, 0) = 1;
  kt.L1(1, 1) = ((1 - W) * (2 * k - v) + (v - 2) * s) / ws;
  kt.L1(1, 2) = (W - 1) * (s * (v - 2) + (2 * k - v)) / ws;
  kt.L1(2, 1) = (s * (v - 2) + 2 * k - v) / ws;
  kt.L1(2, 2) = (s * (W - 1) * (v - 2) - (2 * k - v)) / ws;
  kt.L1(2, 3) = 1;
  kt.L1(3, 2) = v - 1;

  kt.L3 = RatMat(4, 4);
  kt.L3(0, 3) = W - 1;
  kt.L3(1, 2) = W - 1;
  kt.L3(2, 1) = 1;
  kt.L3(2, 2) = W - 2;
  kt.L3(3, 0) = 1;
  kt.L3(3, 3) = W - 2;

  for (int kk = 0; kk < 4; ++kk)
    for (int j = 0; j < 4; ++j) {
      if (kt.q(1, j, kk) != kt.L1(kk, j))
        throw scheme_error("Krein cross-check failed: q_{1" +
                           std::to_string(j) + "}^" + std::to_string(kk) +
                           " = " + rat_str(kt.q(1, j, kk)) +
                           " but the closed form gives " +
                           rat_str(kt.L1(kk, j)));
      if (kt.q(3, j, kk) != kt.L3(kk, j))
        throw scheme_error("Krein cross-check failed: q_{3" +
                           std::to_string(j) + "}^" + std::to_string(kk) +
                           " = " + rat_str(kt.q(3, j, kk)) +
                           " but the closed form gives " +
                           rat_str(kt.L3(kk, j)));
    }
  return kt;
}

SchemeTables scheme_tables(const DesignParams& p, int w) {
  SchemeTables t;
  t.L = intersection_numbers(p, w);
  std::tie(t.P, t.Q) = eigenmatrices(p, w);
  KreinTables kt = krein_parameters(p, w);
  t.Lstar1 = kt.L1;
  t.Lstar3 = kt.L3;
  t.m = multiplicities(p, w);
  return t;
}

SchemeReport verify_scheme(const LssdGraph& g) {
  SchemeReport rep;
  RelationMatrices R;
  try {
    R = assemble_relations(g);
  } catch (const std::exception& e) {
    rep.detail = std::string("relation assembly failed: ") + e.what();
    return rep;
  }
  rep.constructed = true;
  const DesignParams& p = R.params;

  std::array<IntMat, 4> L = intersection_numbers(p, R.w);
  long long Ll[4][4][4];
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j)
        Ll[i][k][j] = static_cast<long long>(
            L[static_cast<std::size_t>(i)](static_cast<std::size_t>(k),
                                           static_cast<std::size_t>(j)));

  std::size_t n = R.size;
  std::size_t v = static_cast<std::size_t>(p.v);
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::uint8_t r;
      if (a == b)
        r = 0;
      else if (a / v == b / v)
        r = 2;
      else
        r = R.A[1].get(a, b) ? 1 : 3;
      rel[a * n + b] = r;
    }

  rep.algebra_ok = true;
  for (int i = 0; i < 4 && rep.algebra_ok; ++i)
    for (int j = 0; j < 4 && rep.algebra_ok; ++j) {
      I64Mat M = mul01_bt(R.A[static_cast<std::size_t>(i)],
                          R.A[static_cast<std::size_t>(j)]);  // A_j symmetric
      for (std::size_t a = 0; a < n && rep.algebra_ok; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          long long want = Ll[i][rel[a * n + b]][j];
          if (M(a, b) != want) {
            rep.algebra_ok = false;
            std::ostringstream os;
            os << "A" << i << " A" << j << " entry (" << a << ", " << b
               << ") is " << M(a, b) << ", expected p_{" << i << j << "}^"
               << int(rel[a * n + b]) << " = " << want;
            rep.detail = os.str();
            break;
          }
        }
    }

  Int s = *p.s;
  Int lhs = s * (p.v - 2), rhs = p.v - 2 * p.k;
  rep.q_poly_ok = lhs > rhs;
  if (!rep.q_poly_ok) {
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += "Q-polynomial ordering fails: s(v-2) = " + lhs.str() +
                  " is not > v-2k = " + rhs.str();
  }

  if (R.w == 2) {
    rep.q_antipodal_checked = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += "w = 2: Q-antipodality not checked";
  } else {
    rep.q_antipodal_checked = true;
    try {
      KreinTables kt = krein_parameters(p, R.w);
      rep.q_antipodal_ok = (kt.q(3, 3, 1) == 0) && (kt.q(3, 3, 2) == 0);
      if (!rep.q_antipodal_ok) {
        if (!rep.detail.empty()) rep.detail += "; ";
        rep.detail += "q_{33}^1 = " + rat_str(kt.q(3, 3, 1)) +
                      ", q_{33}^2 = " + rat_str(kt.q(3, 3, 2));
      }
    } catch (const std::exception& e) {
      rep.q_antipodal_ok = false;
      if (!rep.detail.empty()) rep.detail += "; ";
      rep.detail += e.what();
    }
  }
  return rep;
}

}  // namespace lssd
