#include "lssd/geometry.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "lssd/scheme.hpp"

namespace lssd {

namespace {

DesignParams effective_params(const DesignParams& p) {
  return classify(p).heaviness == Heaviness::NuHeavy ? complement_params(p) : p;
}

RelationMatrices single_fiber_relations(const DesignParams& eff) {
  RelationMatrices r;
  r.w = 1;
  r.params = eff;
  std::size_t v = static_cast<std::size_t>(eff.v);
  r.size = v;
  for (auto& a : r.A) a = BinMatrix(v, v);
  for (std::size_t i = 0; i < v; ++i) r.A[0].set(i, i, true);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j) r.A[2].set(i, j, true);
  return r;
}

// D * (sum_i x_i E_i) as an integer matrix, via the relation coefficients
// (1/vw) sum_i x_i Q_{ji} of the idempotent expansion.
IntMat combine_idempotents(const RelationMatrices& r,
                           const std::array<Rat, 4>& x, const Int& scale) {
  auto pq = eigenmatrices(r.params, r.w);
  const RatMat& q = pq.second;
  std::array<Int, 4> coef;
  for (std::size_t j = 0; j < 4; ++j) {
    Rat c;
    for (std::size_t i = 0; i < 4; ++i) c += x[i] * q(j, i);
    c *= Rat(scale, Int(r.size));
    if (!is_integer(c))
      throw construction_integrity_error(
          "scale " + scale.str() + " does not clear the Gram denominators");
    coef[j] = numerator(c);
  }

  const std::size_t n = r.size;
  const std::size_t v = n / static_cast<std::size_t>(r.w);
  IntMat m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t j;
      if (a == b)
        j = 0;
      else if (a / v == b / v)
        j = 2;
      else
        j = r.A[1].get(a, b) ? 1 : 3;
      m(a, b) = coef[j];
    }
  return m;
}

void certify_rank(const ScaledGram& g, const char* what) {
  if (g.dim > kRankCertifyLimit) return;
  std::size_t r = rank_exact(g.entries);
  if (Int(r) != g.claimed_rank)
    throw construction_integrity_error(
        std::string(what) + " has rank " + std::to_string(r) + ", expected " +
        g.claimed_rank.str());
}

}  // namespace

std::pair<ScaledGram, GramProfile> simplex_gram(const DesignParams& p, int w,
                                                const LssdGraph* g,
                                                bool second_pair) {
  if (w < 1) throw std::invalid_argument("need w >= 1");
  if (!p.s)
    throw design_error("the order k - lambda must be a perfect square");
  if (second_pair && w != 2)
    throw std::invalid_argument("the companion pair is defined for w = 2 only");
  if (w >= 2 && !g)
    throw std::invalid_argument("a graph is required for w >= 2");
  if (g) {
    if (g->w != w || g->params.v != p.v || g->params.k != p.k ||
        g->params.lambda != p.lambda)
      throw std::invalid_argument(
          "graph parameters do not match the requested simplex system");
  }

  RelationMatrices r =
      g ? assemble_relations(*g) : single_fiber_relations(effective_params(p));
  const Int& v = r.params.v;
  const Int& k = r.params.k;
  const Int& s = *r.params.s;

  std::array<Rat, 4> x{};
  x[second_pair ? 2 : 1] = Rat(Int(v * w), Int(v - 1));
  ScaledGram gram;
  gram.scale = Int((v - 1) * s);
  gram.entries = combine_idempotents(r, x, gram.scale);
  gram.dim = r.size;
  gram.claimed_rank = Int(v - 1);
  certify_rank(gram, "simplex Gram");

  GramProfile profile;
  profile.within_fiber_ip = Rat(Int(-1), Int(v - 1));
  Rat gpos(Int(v - k), Int((v - 1) * s));
  Rat gneg(Int(-k), Int((v - 1) * s));
  if (second_pair) {
    Rat t = gpos;
    gpos = -gneg;
    gneg = -t;
  }
  profile.cross_ip_positive = gpos;
  profile.cross_ip_negative = gneg;
  return {std::move(gram), profile};
}

LssdGraph lssd_from_gram(const ScaledGram& gram, const Int& v, int w) {
  if (w < 2) throw std::invalid_argument("need at least two fibers");
  if (v < 2) throw std::invalid_argument("need v >= 2");
  const std::size_t sv = static_cast<std::size_t>(v);
  const std::size_t n = sv * static_cast<std::size_t>(w);
  const Int& d = gram.scale;
  if (gram.dim != n || gram.entries.rows() != n || gram.entries.cols() != n)
    throw std::invalid_argument("Gram dimension does not equal v*w");
  if (d <= 0) throw std::invalid_argument("scale must be positive");

  const IntMat& m = gram.entries;
  for (std::size_t a = 0; a < n; ++a) {
    if (m(a, a) != d)
      throw design_error("diagonal entry " + std::to_string(a) +
                         " differs from the scale: the vectors are not "
                         "constant-norm");
    for (std::size_t b = a + 1; b < n; ++b)
      if (m(a, b) != m(b, a))
        throw design_error("Gram matrix is not symmetric at (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (std::size_t f = 0; f < static_cast<std::size_t>(w); ++f)
    for (std::size_t a = 0; a < sv; ++a)
      for (std::size_t b = a + 1; b < sv; ++b) {
        const Int& e = m(f * sv + a, f * sv + b);
        if (Int(e * (v - 1)) != Int(-d))
          throw design_error(
              "within-fiber inner product " + e.str() + "/" + d.str() +
              " in fiber " + std::to_string(f + 1) + " is not -1/(v-1)");
      }

  std::set<Int> values;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a / sv != b / sv) {
        values.insert(m(a, b));
        if (values.size() > 3) break;
      }
  if (values.size() != 2) {
    std::string list;
    for (const Int& x : values) {
      if (!list.empty()) list += ", ";
      list += x.str();
    }
    throw design_error("cross-fiber inner products take " +
                       std::to_string(values.size()) +
                       " distinct values (" + list + "), expected two");
  }
  const Int gma = *values.rbegin();
  const Int zta = *values.begin();

  Rat krat(Int(-zta * v), Int(gma - zta));
  if (!is_integer(krat))
    throw design_error(
        "the balance equation gives non-integral k = " + krat.str() +
        "; no linked system of simplices has this Gram matrix");
  Int k = numerator(krat);
  if (k < 1 || k > v - 1)
    throw design_error("recovered block size k = " + k.str() +
                       " is outside 1..v-1");
  Rat lrat(Int(k * (k - 1)), Int(v - 1));
  if (!is_integer(lrat))
    throw design_error("recovered lambda = " + lrat.str() +
                       " is not an integer; no linked system of simplices "
                       "has this Gram matrix");
  DesignParams params = validate_params(v, k, numerator(lrat));
  if (!params.s)
    throw design_error("recovered order k - lambda is not a perfect square");
  const Int& s = *params.s;
  if (Int(gma * (v - 1) * s) != Int((v - k) * d) ||
      Int(zta * (v - 1) * s) != Int(-k * d))
    throw design_error(
        "cross inner products " + gma.str() + "/" + d.str() + " and " +
        zta.str() + "/" + d.str() +
        " are inconsistent with the recovered design parameters");

  LssdGraph g;
  g.w = w;
  g.params = params;
  for (int i = 1; i <= w; ++i)
    for (int j = i + 1; j <= w; ++j) {
      std::size_t oi = static_cast<std::size_t>(i - 1) * sv;
      std::size_t oj = static_cast<std::size_t>(j - 1) * sv;
      BinMatrix b(sv, sv);
      std::vector<long long> coldeg(sv, 0);
      for (std::size_t a = 0; a < sv; ++a) {
        long long deg = 0;
        for (std::size_t x = 0; x < sv; ++x)
          if (m(oi + a, oj + x) == gma) {
            b.set(a, x, true);
            ++deg;
            ++coldeg[x];
          }
        if (Int(deg) != k)
          throw design_error("cross block (" + std::to_string(i) + "," +
                             std::to_string(j) + ") has non-constant degree");
      }
      for (long long dg : coldeg)
        if (Int(dg) != k)
          throw design_error("cross block (" + std::to_string(i) + "," +
                             std::to_string(j) + ") has non-constant degree");
      g.blocks.emplace(std::make_pair(i, j), std::move(b));
    }

  LssdReport rep = verify_lssd(g);
  if (!rep.ok()) {
    std::string msg =
        "the simplices are not linked; the original set could not exist";
    if (!rep.failures.empty()) {
      const AxiomFailure& f = rep.failures.front();
      msg += ": axiom " + std::to_string(f.axiom) + " fails (" + f.detail + ")";
    } else if (!rep.note.empty()) {
      msg += ": " + rep.note;
    }
    throw design_error(msg);
  }
  return g;
}

std::pair<ScaledGram, LineSystemCoeffs> equiangular_gram(const LssdGraph& g,
                                                         int t) {
  if (t < 1 || t > g.w)
    throw std::invalid_argument("t = " + std::to_string(t) +
                                " is outside 1.." + std::to_string(g.w));
  if (!g.params.s)
    throw design_error("the order k - lambda must be a perfect square");
  LssdClass cls = classify(g.params);

  RelationMatrices r;
  if (t >= 2) {
    std::vector<int> fibers;
    for (int i = 1; i <= t; ++i) fibers.push_back(i);
    r = assemble_relations(restrict_fibers(g, fibers));
  } else {
    r = single_fiber_relations(effective_params(g.params));
  }
  const Int& v = r.params.v;
  const Int& k = r.params.k;
  const Int& s = *r.params.s;

  if (cls.outlook == Outlook::Pessimistic) {
    Rat bound = Rat(2) + Rat(Int(2 * (k + s)), Int(v - 2 * k));
    if (Rat(t) > bound)
      throw design_error("t = " + std::to_string(t) +
                         " exceeds the bound t <= 2 + 2(k+s)/(v-2k) = " +
                         bound.str() + " for pessimistic parameters");
  }

  Rat vta(Int(v + 2 * s - (t - 1) * (v - 2 * k)), Int(2 * s - 1));
  Rat vtb(Int(2 * t * s), Int(2 * s - 1));
  Rat vtg(Int(2 * v - 2 * k + 2 * s), Int(2 * s - 1));
  std::array<Rat, 4> x{vta, vtb, Rat(0), vtg};

  ScaledGram gram;
  gram.scale = Int(v * t * (2 * s - 1));
  gram.entries = combine_idempotents(r, x, gram.scale);
  gram.dim = r.size;

  const Int offmag(v * t);
  const Int& diag = gram.entries(0, 0);
  for (std::size_t a = 0; a < gram.dim; ++a)
    for (std::size_t b = 0; b < gram.dim; ++b) {
      const Int& e = gram.entries(a, b);
      if (a == b ? e != diag : (e != offmag && e != -offmag))
        throw construction_integrity_error(
            "line-system Gram entry (" + std::to_string(a) + "," +
            std::to_string(b) + ") = " + e.str() +
            " breaks the equiangular pattern");
    }

  gram.claimed_rank = Int(v + t - 1 - (vta == 0 ? 1 : 0));
  certify_rank(gram, "line-system Gram");

  LineSystemCoeffs coeffs;
  Rat vt(Int(v * t));
  coeffs.alpha = vta / vt;
  coeffs.beta = vtb / vt;
  coeffs.gamma = vtg / vt;
  coeffs.c = Rat(Int(1), Int(2 * s - 1));
  return {std::move(gram), coeffs};
}

MubGram mub_gram(const LssdGraph& g) {
  if (!g.params.s)
    throw design_error("the order k - lambda must be a perfect square");
  LssdClass cls = classify(g.params);
  RelationMatrices r = assemble_relations(g);
  const Int& v = r.params.v;
  const Int& k = r.params.k;
  const Int& s = *r.params.s;

  std::array<Rat, 4> x{Rat(g.w), Rat(g.w), Rat(0), Rat(0)};
  MubGram res;
  res.gram.scale = Int(v * s);
  res.gram.entries = combine_idempotents(r, x, res.gram.scale);
  res.gram.dim = r.size;
  res.gram.claimed_rank = v;
  certify_rank(res.gram, "basis Gram");

  res.beta1 = Rat(Int(v - k + s), Int(v * s));
  res.beta2 = Rat(Int(-(k - s)), Int(v * s));
  res.is_mub =
      cls.outlook == Outlook::Optimistic && abs(v - 2 * k) == 2 * s;
  if (res.is_mub) {
    std::optional<Int> root = exact_sqrt(v);
    if (Int(v - k + s) != Int(k - s) || !root ||
        Int(k - s) != Int(s * *root))
      throw construction_integrity_error(
          "cross inner products are not +-1/sqrt(v) despite the Menon "
          "condition");
  }
  return res;
}

std::pair<Rat, Rat> frame_sum_check(const SignSimplex& simplex,
                                    const std::vector<Rat>& x,
                                    const std::vector<Rat>& y) {
  const std::size_t v = simplex.vecs.size();
  if (v < 2) throw std::invalid_argument("need at least two simplex vectors");
  const std::size_t d = v - 1;
  for (const auto& a : simplex.vecs)
    if (a.size() != d)
      throw std::invalid_argument(
          "simplex vectors must live in R^(v-1) with v vectors");
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) {
      long long dot = 0;
      for (std::size_t c = 0; c < d; ++c)
        dot += static_cast<long long>(simplex.vecs[i][c]) *
               static_cast<long long>(simplex.vecs[j][c]);
      if (dot != -1)
        throw std::invalid_argument("vectors do not form a regular simplex");
    }
  if (x.size() != d || y.size() != d)
    throw std::invalid_argument("test vectors must have dimension v-1");

  Rat lhs;
  for (std::size_t i = 0; i < v; ++i) {
    Rat ax, ay;
    for (std::size_t c = 0; c < d; ++c) {
      int sign = simplex.vecs[i][c];
      ax += sign * x[c];
      ay += sign * y[c];
    }
    lhs += ax * ay;
  }
  lhs /= Int(v - 1);
  Rat ip;
  for (std::size_t c = 0; c < d; ++c) ip += x[c] * y[c];
  Rat rhs = Rat(Int(v), Int(v - 1)) * ip;
  return {lhs, rhs};
}

}  // namespace lssd
