#include "lssd/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "lssd/finite_field.hpp"
#include "lssd/quadratic_forms.hpp"

namespace lssd {

namespace {

BinMatrix plus_mask(const Hadamard& h) {
  BinMatrix m(static_cast<std::size_t>(h.n), static_cast<std::size_t>(h.n));
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      if (h.at(i, j) > 0) m.set(static_cast<std::size_t>(i),
                                static_cast<std::size_t>(j), true);
  return m;
}

long long exact_isqrt_ll(long long n) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

HadamardProps hadamard_props(const Hadamard& h) {
  HadamardProps props;
  if (h.n <= 0 ||
      h.e.size() != static_cast<std::size_t>(h.n) * static_cast<std::size_t>(h.n))
    return props;
  BinMatrix m = plus_mask(h);
  props.is_hadamard = true;
  for (int i = 0; i < h.n && props.is_hadamard; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (h.n != 2 * m.row_xor_weight(static_cast<std::size_t>(i), m,
                                      static_cast<std::size_t>(j))) {
        props.is_hadamard = false;
        break;
      }

  long long first = 2 * m.row_weight(0) - h.n;
  bool regular = true;
  for (int i = 0; i < h.n && regular; ++i)
    if (2 * m.row_weight(static_cast<std::size_t>(i)) - h.n != first)
      regular = false;
  if (regular) {
    BinMatrix t = m.transpose();
    for (int j = 0; j < h.n && regular; ++j)
      if (2 * t.row_weight(static_cast<std::size_t>(j)) - h.n != first)
        regular = false;
  }
  props.is_regular = regular;
  if (regular) props.row_sum = first;
  return props;
}

I64Mat gram_tt(const Hadamard& a, const Hadamard& b) {
  if (a.n != b.n)
    throw std::invalid_argument("inner products need equal orders, got " +
                                std::to_string(a.n) + " and " +
                                std::to_string(b.n));
  const std::size_t n = static_cast<std::size_t>(a.n);
  BinMatrix at = plus_mask(a).transpose();
  BinMatrix bt = plus_mask(b).transpose();
  I64Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = a.n - 2 * at.row_xor_weight(i, bt, j);
  return g;
}

UnbiasedCheck unbiased(const Hadamard& a, const Hadamard& b) {
  UnbiasedCheck res;
  if (a.n != b.n) {
    res.note = "orders differ";
    return res;
  }
  long long r = exact_isqrt_ll(a.n);
  if (r * r != a.n) {
    res.note = "order " + std::to_string(a.n) +
               " is not a perfect square, so no inner product can be "
               "+-sqrt(order)";
    return res;
  }
  I64Mat g = gram_tt(a, b);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (std::llabs(g(static_cast<std::size_t>(i),
                       static_cast<std::size_t>(j))) != r) {
        res.note = "column inner product (" + std::to_string(i) + "," +
                   std::to_string(j) + ") is " +
                   std::to_string(g(static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(j))) +
                   ", not +-" + std::to_string(r);
        return res;
      }
  res.unbiased = true;
  return res;
}

Hadamard unbiased_product(const Hadamard& a, const Hadamard& b) {
  long long r = exact_isqrt_ll(a.n);
  if (a.n != b.n || r * r != a.n)
    throw construction_integrity_error(
        "unbiased product needs equal square orders, got " +
        std::to_string(a.n) + " and " + std::to_string(b.n));
  I64Mat g = gram_tt(a, b);
  Hadamard h(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      long long e = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (e != r && e != -r)
        throw construction_integrity_error(
            "column inner product (" + std::to_string(i) + "," +
            std::to_string(j) + ") is " + std::to_string(e) + ", not +-" +
            std::to_string(r));
      h.at(i, j) = e > 0 ? 1 : -1;
    }
  return h;
}

Hadamard negate(const Hadamard& h) {
  Hadamard r = h;
  for (auto& x : r.e) x = static_cast<std::int8_t>(-x);
  return r;
}

Hadamard kronecker(const Hadamard& a, const Hadamard& b) {
  Hadamard r(a.n * b.n);
  for (int i1 = 0; i1 < a.n; ++i1)
    for (int j1 = 0; j1 < a.n; ++j1)
      for (int i2 = 0; i2 < b.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2)
          r.at(i1 * b.n + i2, j1 * b.n + j2) =
              static_cast<std::int8_t>(a.at(i1, j1) * b.at(i2, j2));
  return r;
}

Hadamard sylvester(int e) {
  if (e < 0) throw std::invalid_argument("sylvester needs e >= 0");
  Hadamard h(1);
  Hadamard base(2);
  base.at(1, 1) = -1;
  for (int i = 0; i < e; ++i) h = kronecker(base, h);
  return h;
}

IntMat to_int(const Hadamard& h) {
  IntMat m(static_cast<std::size_t>(h.n), static_cast<std::size_t>(h.n));
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = h.at(i, j);
  return m;
}

Hadamard hadamard_from_int(const IntMat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("+-1 matrix must be square");
  Hadamard h(static_cast<int>(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& e = m(i, j);
      if (e != 1 && e != -1)
        throw std::invalid_argument("entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not +-1");
      h.at(static_cast<int>(i), static_cast<int>(j)) = e == 1 ? 1 : -1;
    }
  return h;
}

bool oa_pairs_ok(const OrthArray& o) {
  if (o.n < 1 || o.cols < 2 ||
      o.cells.size() != static_cast<std::size_t>(o.rows()) *
                            static_cast<std::size_t>(o.cols))
    return false;
  for (int r = 0; r < o.rows(); ++r)
    for (int c = 0; c < o.cols; ++c)
      if (o.at(r, c) < 1 || o.at(r, c) > o.n) return false;

  std::vector<int> seen(static_cast<std::size_t>(o.n) *
                        static_cast<std::size_t>(o.n));
  for (int c1 = 0; c1 < o.cols; ++c1)
    for (int c2 = c1 + 1; c2 < o.cols; ++c2) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < o.rows(); ++r)
        ++seen[static_cast<std::size_t>(o.at(r, c1) - 1) *
                   static_cast<std::size_t>(o.n) +
               static_cast<std::size_t>(o.at(r, c2) - 1)];
      for (int x : seen)
        if (x != 1) return false;
    }
  return true;
}

OrthArray mols_oa(int q) {
  FiniteField f(q);
  OrthArray o;
  o.n = q;
  o.cols = q + 1;
  o.cells.resize(static_cast<std::size_t>(o.rows()) *
                 static_cast<std::size_t>(o.cols));
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      int r = x * q + y;
      o.at(r, 0) = x + 1;
      o.at(r, 1) = y + 1;
      for (int a = 1; a < q; ++a) o.at(r, a + 1) = f.add(f.mul(a, x), y) + 1;
    }
  return o;
}

OrthArray macneish_product(const OrthArray& o1, const OrthArray& o2) {
  OrthArray o;
  o.n = o1.n * o2.n;
  o.cols = std::min(o1.cols, o2.cols);
  if (o.cols < 2)
    throw std::invalid_argument("composition needs at least two columns");
  o.cells.resize(static_cast<std::size_t>(o.rows()) *
                 static_cast<std::size_t>(o.cols));
  for (int r1 = 0; r1 < o1.rows(); ++r1)
    for (int r2 = 0; r2 < o2.rows(); ++r2) {
      int r = r1 * o2.rows() + r2;
      for (int c = 0; c < o.cols; ++c)
        o.at(r, c) = (o1.at(r1, c) - 1) * o2.n + o2.at(r2, c);
    }
  return o;
}

UnbiasedHadamardSet beth_wocjan_unbiased_set(const OrthArray& o,
                                             const Hadamard& h) {
  if (h.n != o.n)
    throw std::invalid_argument("Hadamard order " + std::to_string(h.n) +
                                " does not match array symbol count " +
                                std::to_string(o.n));
  if (o.cols < 2)
    throw std::invalid_argument("array needs at least two columns");
  if (!oa_pairs_ok(o))
    throw std::invalid_argument(
        "array is not an orthogonal array of strength 2 and index 1");
  HadamardProps hp = hadamard_props(h);
  if (!hp.is_hadamard)
    throw std::invalid_argument("seed matrix is not a Hadamard matrix");

  const int n = o.n;
  const int N = n * n;
  const std::size_t nN = static_cast<std::size_t>(N);

  // Basis vector (j, l) of component c is the 01 indicator of symbol j in
  // column c with its k-th one replaced by row k, entry l, of the seed; the
  // vectors only ever meet through the occurrence index, so each array row
  // contributes one rank-one update to every inner-product matrix.
  std::vector<std::vector<int>> occ(
      static_cast<std::size_t>(o.cols),
      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<std::vector<int>> acc(
      static_cast<std::size_t>(o.cols - 1), std::vector<int>(nN * nN, 0));
  std::vector<int> krow(static_cast<std::size_t>(o.cols));
  for (int r = 0; r < o.rows(); ++r) {
    for (int c = 0; c < o.cols; ++c)
      krow[static_cast<std::size_t>(c)] =
          ++occ[static_cast<std::size_t>(c)][static_cast<std::size_t>(o.at(r, c))];
    int j0 = o.at(r, 0), k0 = krow[0];
    for (int i = 1; i < o.cols; ++i) {
      int ji = o.at(r, i), ki = krow[static_cast<std::size_t>(i)];
      std::vector<int>& m = acc[static_cast<std::size_t>(i - 1)];
      for (int l = 0; l < n; ++l) {
        int lhs = h.at(k0 - 1, l);
        std::size_t row = (static_cast<std::size_t>(j0 - 1) *
                               static_cast<std::size_t>(n) +
                           static_cast<std::size_t>(l)) *
                          nN;
        std::size_t col0 = static_cast<std::size_t>(ji - 1) *
                           static_cast<std::size_t>(n);
        for (int lp = 0; lp < n; ++lp)
          m[row + col0 + static_cast<std::size_t>(lp)] +=
              lhs * h.at(ki - 1, lp);
      }
    }
  }

  UnbiasedHadamardSet set;
  set.order = N;
  for (int i = 1; i < o.cols; ++i) {
    const std::vector<int>& m = acc[static_cast<std::size_t>(i - 1)];
    Hadamard hi(N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int e = m[static_cast<std::size_t>(a) * nN + static_cast<std::size_t>(b)];
        if (e != 1 && e != -1)
          throw construction_integrity_error(
              "basis inner product (" + std::to_string(a) + "," +
              std::to_string(b) + ") of matrix " + std::to_string(i) +
              " is " + std::to_string(e) + ", not +-1");
        hi.at(a, b) = static_cast<std::int8_t>(e);
      }
    HadamardProps props = hadamard_props(hi);
    if (!props.is_hadamard)
      throw construction_integrity_error("inner-product matrix " +
                                         std::to_string(i) +
                                         " is not a Hadamard matrix");
    if (hp.is_regular) {
      long long want = *hp.row_sum * *hp.row_sum;
      if (!props.is_regular || *props.row_sum != want)
        throw construction_integrity_error(
            "matrix " + std::to_string(i) + " is not regular with row sum " +
            std::to_string(want));
    }
    set.matrices.push_back(std::move(hi));
  }
  set.regular = hp.is_regular;
  if (!hp.is_regular)
    set.note = "seed Hadamard matrix is not regular; the output matrices "
               "need not be regular";
  return set;
}

LssdGraph lssd_from_unbiased_hadamards(const UnbiasedHadamardSet& s) {
  if (s.matrices.empty())
    throw std::invalid_argument("need at least one Hadamard matrix");
  const int v = s.order;
  std::vector<Hadamard> hs;
  hs.reserve(s.matrices.size());
  long long c = 0;
  for (std::size_t t = 0; t < s.matrices.size(); ++t) {
    const Hadamard& h = s.matrices[t];
    if (h.n != v)
      throw std::invalid_argument("matrix " + std::to_string(t + 1) +
                                  " has order " + std::to_string(h.n) +
                                  ", expected " + std::to_string(v));
    HadamardProps props = hadamard_props(h);
    if (!props.is_hadamard || !props.is_regular)
      throw std::invalid_argument("matrix " + std::to_string(t + 1) +
                                  " is not a regular Hadamard matrix");
    hs.push_back(*props.row_sum < 0 ? negate(h) : h);
    long long rs = std::llabs(*props.row_sum);
    if (c == 0) c = rs;
    if (rs != c || rs * rs != v || rs % 2 != 0)
      throw std::invalid_argument(
          "matrix " + std::to_string(t + 1) + " has row sum +-" +
          std::to_string(rs) + ", incompatible with order " +
          std::to_string(v));
  }

  LssdGraph g;
  g.w = static_cast<int>(hs.size()) + 1;
  g.params = validate_params(Int(v), Int((v + c) / 2),
                             Int((v + c) / 2 - (c / 2) * (c / 2)));
  const std::size_t sv = static_cast<std::size_t>(v);
  for (std::size_t t = 0; t < hs.size(); ++t) {
    BinMatrix b(sv, sv);
    for (int a = 0; a < v; ++a)
      for (int x = 0; x < v; ++x)
        if (hs[t].at(a, x) > 0)
          b.set(static_cast<std::size_t>(a), static_cast<std::size_t>(x), true);
    g.blocks.emplace(std::make_pair(1, static_cast<int>(t) + 2), std::move(b));
  }
  for (std::size_t t1 = 0; t1 < hs.size(); ++t1)
    for (std::size_t t2 = t1 + 1; t2 < hs.size(); ++t2) {
      I64Mat d = gram_tt(hs[t1], hs[t2]);
      BinMatrix b(sv, sv);
      for (std::size_t a = 0; a < sv; ++a)
        for (std::size_t x = 0; x < sv; ++x) {
          if (std::llabs(d(a, x)) != c)
            throw construction_integrity_error(
                "fibers (" + std::to_string(t1 + 2) + "," +
                std::to_string(t2 + 2) + "): column inner product (" +
                std::to_string(a) + "," + std::to_string(x) + ") is " +
                std::to_string(d(a, x)) + ", not +-" + std::to_string(c));
          if (d(a, x) > 0) b.set(a, x, true);
        }
      g.blocks.emplace(
          std::make_pair(static_cast<int>(t1) + 2, static_cast<int>(t2) + 2),
          std::move(b));
    }

  LssdReport rep = verify_lssd(g);
  if (!rep.ok()) {
    std::string msg = "the Hadamard matrices do not form a linked system";
    if (!rep.failures.empty()) {
      const AxiomFailure& f = rep.failures.front();
      msg += ": axiom " + std::to_string(f.axiom) + " fails at fibers (" +
             std::to_string(f.fibers[0]) + "," + std::to_string(f.fibers[1]) +
             "," + std::to_string(f.fibers[2]) + "): " + f.detail;
    }
    throw construction_integrity_error(msg);
  }
  return g;
}

UnbiasedHadamardSet hadamards_from_lssd(const LssdGraph& g) {
  const DesignParams& p = g.params;
  if (!p.s)
    throw design_error("the order k - lambda must be a perfect square");
  LssdClass cls = classify(p);
  if (cls.outlook == Outlook::Pessimistic)
    throw design_error(
        "derivation needs optimistic parameters ((2k - v)(mu - nu) > 0); (" +
        p.v.str() + "," + p.k.str() + "," + p.lambda.str() + ") is pessimistic");
  Int diff = p.v - 2 * p.k;
  if (abs(diff) != 2 * *p.s)
    throw design_error("Menon condition |v - 2k| = 2s fails: |" + diff.str() +
                       "| != " + Int(2 * *p.s).str());

  const LssdGraph* work = &g;
  LssdGraph comp;
  if (cls.heaviness == Heaviness::NuHeavy) {
    comp = multipartite_complement(g);
    work = &comp;
  }
  const int v = static_cast<int>(work->params.v);
  const long long c = 2 * static_cast<long long>(*work->params.s);

  UnbiasedHadamardSet set;
  set.order = v;
  set.regular = true;
  for (int i = 2; i <= work->w; ++i) {
    const BinMatrix& b = work->block(1, i);
    Hadamard h(v);
    for (int a = 0; a < v; ++a)
      for (int x = 0; x < v; ++x)
        h.at(a, x) = b.get(static_cast<std::size_t>(a),
                           static_cast<std::size_t>(x))
                         ? 1
                         : -1;
    HadamardProps props = hadamard_props(h);
    if (!props.is_hadamard || !props.is_regular || *props.row_sum != c)
      throw construction_integrity_error(
          "fiber " + std::to_string(i) +
          " block does not give a regular Hadamard matrix of row sum " +
          std::to_string(c));
    set.matrices.push_back(std::move(h));
  }
  for (int i = 2; i <= work->w; ++i)
    for (int j = i + 1; j <= work->w; ++j) {
      I64Mat d = gram_tt(set.matrices[static_cast<std::size_t>(i - 2)],
                         set.matrices[static_cast<std::size_t>(j - 2)]);
      const BinMatrix& b = work->block(i, j);
      for (std::size_t a = 0; a < static_cast<std::size_t>(v); ++a)
        for (std::size_t x = 0; x < static_cast<std::size_t>(v); ++x) {
          long long e = d(a, x);
          if (std::llabs(e) != c || (e > 0) != b.get(a, x))
            throw construction_integrity_error(
                "fibers (" + std::to_string(i) + "," + std::to_string(j) +
                "): inner products do not reproduce the block signs");
        }
    }
  return set;
}

}  // namespace lssd
