#include "lssd/linked_system.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lssd {

namespace {

std::string param_str(const DesignParams& p) {
  std::ostringstream os;
  os << "(" << p.v << ", " << p.k << ", " << p.lambda << ")";
  return os.str();
}

}  // namespace

MuNu mu_nu(const DesignParams& p) {
  if (!p.s)
    throw no_integral_branch("order " + p.n.str() +
                             " of design " + param_str(p) +
                             " is not a perfect square");
  const Int& s = *p.s;

  auto try_branch = [&](Branch b) -> std::optional<MuNu> {
    Int num = p.k * (b == Branch::Plus ? Int(p.k + s) : Int(p.k - s));
    if (num % p.v != 0) return std::nullopt;
    Int nu = num / p.v;
    Int mu = (b == Branch::Plus) ? Int(nu - s) : Int(nu + s);
    if (nu < 0 || mu < 0) return std::nullopt;
    return MuNu{mu, nu, b};
  };

  std::optional<MuNu> plus = try_branch(Branch::Plus);
  std::optional<MuNu> minus = try_branch(Branch::Minus);
  if (plus && minus)
    throw both_branches_integral("both sign branches of " + param_str(p) +
                                 " give integral (mu, nu)");
  if (plus) return *plus;
  if (minus) return *minus;
  throw no_integral_branch("neither sign branch of " + param_str(p) +
                           " gives integral (mu, nu)");
}

LssdClass classify(const DesignParams& p) {
  MuNu mn = mu_nu(p);
  LssdClass c;
  c.heaviness = (mn.branch == Branch::Minus) ? Heaviness::MuHeavy : Heaviness::NuHeavy;
  Int opt = (2 * p.k - p.v) * (mn.mu - mn.nu);
  c.outlook = (opt > 0) ? Outlook::Optimistic : Outlook::Pessimistic;
  return c;
}

const BinMatrix& LssdGraph::block(int i, int j) const {
  auto it = blocks.find({i, j});
  if (it == blocks.end())
    throw std::out_of_range("no stored block for fiber pair (" +
                            std::to_string(i) + ", " + std::to_string(j) + ")");
  return it->second;
}

BinMatrix LssdGraph::relation(int i, int j) const {
  if (i < j) return block(i, j);
  return block(j, i).transpose();
}

LssdReport verify_lssd(const LssdGraph& g) {
  LssdReport rep;
  const DesignParams& p = g.params;
  std::size_t v = static_cast<std::size_t>(p.v);

  // axiom i: w fibers, every cross pair present with a square 01 block
  rep.axiom_i_ok = true;
  if (g.w < 2) {
    rep.axiom_i_ok = false;
    rep.failures.push_back({1, {g.w, 0, 0}, {-1, -1}, "need at least 2 fibers"});
  }
  for (int i = 1; rep.axiom_i_ok && i <= g.w; ++i)
    for (int j = i + 1; j <= g.w; ++j) {
      auto it = g.blocks.find({i, j});
      if (it == g.blocks.end()) {
        rep.axiom_i_ok = false;
        rep.failures.push_back({1, {i, j, 0}, {-1, -1}, "missing block"});
        break;
      }
      if (it->second.rows() != v || it->second.cols() != v) {
        rep.axiom_i_ok = false;
        rep.failures.push_back({1, {i, j, 0}, {-1, -1},
                                "block is " + std::to_string(it->second.rows()) +
                                    "x" + std::to_string(it->second.cols()) +
                                    ", expected " + std::to_string(v) + "x" +
                                    std::to_string(v)});
        break;
      }
    }
  if (g.blocks.size() != static_cast<std::size_t>(g.w) * (g.w - 1) / 2) {
    for (const auto& [key, blk] : g.blocks) {
      (void)blk;
      if (key.first < 1 || key.second <= key.first || key.second > g.w) {
        rep.axiom_i_ok = false;
        rep.failures.push_back({1, {key.first, key.second, 0}, {-1, -1},
                                "stored key is not an increasing fiber pair"});
        break;
      }
    }
  }
  if (!rep.axiom_i_ok) return rep;

  // Biadjacency in every orientation: N[i][j] has rows indexed by fiber i.
  std::vector<std::vector<BinMatrix>> N(g.w + 1,
                                        std::vector<BinMatrix>(g.w + 1));
  for (int i = 1; i <= g.w; ++i)
    for (int j = i + 1; j <= g.w; ++j) {
      N[i][j] = g.block(i, j);
      N[j][i] = N[i][j].transpose();
    }

  // axiom ii: every block is the incidence matrix of a symmetric design
  long long nn = static_cast<long long>(p.n);
  long long ll = static_cast<long long>(p.lambda);
  rep.axiom_ii_ok = true;
  for (int i = 1; i <= g.w; ++i) {
    for (int j = i + 1; j <= g.w; ++j) {
      bool bad = false;
      for (std::size_t a = 0; a < v && !bad; ++a)
        for (std::size_t b = 0; b < v; ++b) {
          long long want = (a == b) ? nn + ll : ll;
          long long got = N[i][j].row_and_weight(a, N[i][j], b);
          if (got != want) {
            rep.axiom_ii_ok = false;
            std::ostringstream os;
            os << "B B^T entry is " << got << ", expected " << want;
            rep.failures.push_back({2, {i, j, 0},
                                    {static_cast<long long>(a),
                                     static_cast<long long>(b)},
                                    os.str()});
            bad = true;
            break;
          }
          got = N[j][i].row_and_weight(a, N[j][i], b);
          if (got != want) {
            rep.axiom_ii_ok = false;
            std::ostringstream os;
            os << "B^T B entry is " << got << ", expected " << want;
            rep.failures.push_back({2, {i, j, 0},
                                    {static_cast<long long>(a),
                                     static_cast<long long>(b)},
                                    os.str()});
            bad = true;
            break;
          }
        }
      if (bad) break;
    }
    if (!rep.axiom_ii_ok) break;
  }
  if (!rep.axiom_ii_ok) return rep;

  MuNu mn;
  try {
    mn = mu_nu(p);
  } catch (const design_error& e) {
    rep.axiom_iii_ok = false;
    rep.failures.push_back({3, {0, 0, 0}, {-1, -1}, e.what()});
    return rep;
  }
  long long mu = static_cast<long long>(mn.mu);
  long long nu = static_cast<long long>(mn.nu);

  // axiom iii: N(i,h) N(h,j) = nu J + (mu - nu) N(i,j) for all ordered
  // triples of distinct fibers
  rep.axiom_iii_ok = true;
  if (g.w == 2) rep.note = "2 fibers: no fiber triples, third axiom vacuous";
  for (int i = 1; i <= g.w && rep.axiom_iii_ok; ++i)
    for (int h = 1; h <= g.w && rep.axiom_iii_ok; ++h) {
      if (h == i) continue;
      for (int j = 1; j <= g.w && rep.axiom_iii_ok; ++j) {
        if (j == i || j == h) continue;
        // N(h,j) = N(j,h)^T, so N(i,h) N(h,j) = N(i,h) N(j,h)^T
        I64Mat M = mul01_bt(N[i][h], N[j][h]);
        for (std::size_t a = 0; a < v && rep.axiom_iii_ok; ++a)
          for (std::size_t b = 0; b < v; ++b) {
            long long want = nu + (mu - nu) * N[i][j].get(a, b);
            if (M(a, b) != want) {
              rep.axiom_iii_ok = false;
              std::ostringstream os;
              os << "path count is " << M(a, b) << ", expected " << want
                 << " (mu = " << mu << ", nu = " << nu << ")";
              rep.failures.push_back({3, {i, h, j},
                                      {static_cast<long long>(a),
                                       static_cast<long long>(b)},
                                      os.str()});
              break;
            }
          }
      }
    }
  if (!rep.axiom_iii_ok) return rep;

  rep.observed_mu = mn.mu;
  rep.observed_nu = mn.nu;
  rep.cls = classify(p);
  return rep;
}

LssdGraph multipartite_complement(const LssdGraph& g) {
  LssdGraph out;
  out.w = g.w;
  out.params = complement_params(g.params);
  for (const auto& [key, blk] : g.blocks) out.blocks[key] = blk.complement();
  return out;
}

LssdGraph degenerate_lssd(const Int& v, int w) {
  if (v < 2) throw design_error("need v >= 2");
  if (w < 2) throw design_error("need w >= 2");
  LssdGraph g;
  g.w = w;
  g.params = validate_params(v, 1, 0);
  std::size_t n = static_cast<std::size_t>(v);
  BinMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id.set(i, i, true);
  for (int i = 1; i <= w; ++i)
    for (int j = i + 1; j <= w; ++j) g.blocks[{i, j}] = id;
  return g;
}

LssdGraph restrict_fibers(const LssdGraph& g, const std::vector<int>& subset) {
  if (subset.size() < 2)
    throw design_error("need at least 2 fibers in the restriction");
  for (int f : subset)
    if (f < 1 || f > g.w)
      throw design_error("fiber index " + std::to_string(f) + " out of range");
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw design_error("restriction fibers must be distinct");

  LssdGraph out;
  out.w = static_cast<int>(subset.size());
  out.params = g.params;
  for (int a = 1; a <= out.w; ++a)
    for (int b = a + 1; b <= out.w; ++b) {
      int i = subset[a - 1], j = subset[b - 1];
      out.blocks[{a, b}] = (i < j) ? g.block(i, j) : g.block(j, i).transpose();
    }
  return out;
}

}  // namespace lssd
