#include "lssd/quadratic_forms.hpp"

#include <bit>
#include <string>

#include "lssd/bitmatrix.hpp"
#include "lssd/design.hpp"

namespace lssd {

int pair_bit(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int QuadForm::operator()(std::uint32_t x) const {
  int acc = std::popcount(linear & x) & 1;
  for (int i = 0; i < n; ++i) {
    if (!((x >> i) & 1)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!((x >> j) & 1)) continue;
      acc ^= static_cast<int>((upper >> pair_bit(n, i, j)) & 1);
    }
  }
  return acc;
}

std::vector<std::uint8_t> truth_table(const QuadForm& q) {
  std::size_t pts = std::size_t{1} << q.n;
  std::vector<std::uint8_t> t(pts);
  for (std::size_t x = 0; x < pts; ++x)
    t[x] = static_cast<std::uint8_t>(q(static_cast<std::uint32_t>(x)));
  return t;
}

std::vector<std::uint32_t> bilinear_matrix(const QuadForm& q) {
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(q.n), 0);
  for (int i = 0; i < q.n; ++i)
    for (int j = i + 1; j < q.n; ++j)
      if ((q.upper >> pair_bit(q.n, i, j)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint32_t{1} << i;
      }
  return rows;
}

int gf2_rank(std::vector<std::uint32_t> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint32_t r = rows[i];
    for (std::size_t p = 0; p < i; ++p) {
      std::uint32_t q = rows[p];
      if (q && ((r >> std::countr_zero(q)) & 1)) r ^= q;
    }
    rows[i] = r;
    if (r) ++rank;
  }
  return rank;
}

int bilinear_rank_gf2(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  if (m.rows() > 32) throw std::invalid_argument("matrix too large");
  std::vector<std::uint32_t> rows(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1)
        throw std::invalid_argument("matrix is not 01-valued");
      if (m(i, j) == 1) rows[i] |= std::uint32_t{1} << j;
    }
  return gf2_rank(std::move(rows));
}

bool pairwise_full_rank(const KerdockFamily& fam) {
  for (std::size_t i = 0; i < fam.forms.size(); ++i)
    for (std::size_t j = i + 1; j < fam.forms.size(); ++j) {
      QuadForm sum{fam.n, fam.forms[i].upper ^ fam.forms[j].upper, 0};
      if (gf2_rank(bilinear_matrix(sum)) != fam.n) return false;
    }
  return true;
}

KerdockFamily kerdock_catalog_n4() {
  // strictly-upper coefficient pairs of the eight forms
  static const std::vector<std::vector<std::pair<int, int>>> coeffs = {
      {},
      {{0, 1}, {2, 3}},
      {{0, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 2}, {1, 2}, {1, 3}},
      {{0, 3}, {1, 2}, {1, 3}, {2, 3}},
      {{0, 1}, {0, 3}, {1, 2}},
      {{0, 2}, {0, 3}, {1, 2}, {2, 3}},
      {{0, 1}, {0, 2}, {0, 3}, {1, 3}},
  };
  KerdockFamily fam;
  fam.n = 4;
  for (const auto& pairs : coeffs) {
    QuadForm q{4, 0, 0};
    for (auto [i, j] : pairs) q.upper |= std::uint64_t{1} << pair_bit(4, i, j);
    fam.forms.push_back(q);
  }
  return fam;
}

KerdockFamily search_kerdock_family(int n, int target_w,
                                    long long node_budget) {
  if (n < 2 || n > 8 || n % 2 != 0)
    throw std::invalid_argument("n must be one of 2, 4, 6, 8");
  if (target_w < 1) throw std::invalid_argument("target_w must be positive");
  long long bound = 1LL << (n - 1);
  if (target_w > bound)
    throw kerdock_bound_error("target w = " + std::to_string(target_w) +
                              " exceeds the bound 2^(n-1) = " +
                              std::to_string(bound));

  int bits = n * (n - 1) / 2;
  std::uint64_t masks = std::uint64_t{1} << bits;

  // memoized full-rank test when the mask space is small enough
  std::vector<std::int8_t> memo;
  if (bits <= 20) memo.assign(masks, -1);
  auto full_rank = [&](std::uint64_t m) -> bool {
    if (!memo.empty() && memo[m] >= 0) return memo[m] != 0;
    QuadForm q{n, m, 0};
    bool ok = gf2_rank(bilinear_matrix(q)) == n;
    if (!memo.empty()) memo[m] = ok ? 1 : 0;
    return ok;
  };

  std::vector<std::uint64_t> chosen{0};
  long long nodes = 0;

  auto extend = [&](auto&& self) -> bool {
    if (static_cast<long long>(chosen.size()) == target_w) return true;
    for (std::uint64_t m = chosen.back() + 1; m < masks; ++m) {
      if (++nodes > node_budget)
        throw kerdock_budget_error(
            "search budget of " + std::to_string(node_budget) +
            " nodes exhausted at family size " +
            std::to_string(chosen.size()));
      bool ok = true;
      for (std::uint64_t c : chosen)
        if (!full_rank(m ^ c)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(m);
      if (self(self)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (target_w > 1 && !extend(extend))
    throw kerdock_bound_error("exhausted the search space: no family of " +
                              std::to_string(target_w) + " forms exists");

  KerdockFamily fam;
  fam.n = n;
  for (std::uint64_t m : chosen)
    fam.forms.push_back(QuadForm{n, m, 0});
  fam.forms.resize(static_cast<std::size_t>(target_w));
  return fam;
}

std::vector<std::vector<std::uint8_t>> rm1_coset(const QuadForm& q) {
  std::size_t pts = std::size_t{1} << q.n;
  std::vector<std::uint8_t> base = truth_table(q);
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(2 * pts);
  for (std::uint32_t a = 0; a < pts; ++a)
    for (std::uint8_t c = 0; c < 2; ++c) {
      std::vector<std::uint8_t> row(pts);
      for (std::size_t x = 0; x < pts; ++x)
        row[x] = static_cast<std::uint8_t>(
            base[x] ^ (std::popcount(a & static_cast<std::uint32_t>(x)) & 1) ^
            c);
      rows.push_back(std::move(row));
    }
  return rows;
}

SignSimplex kerdock_simplex(const QuadForm& q) {
  std::size_t pts = std::size_t{1} << q.n;
  SignSimplex s;
  s.n = q.n;
  for (const auto& row : rm1_coset(q)) {
    if (row[pts - 1] != 0) continue;
    std::vector<std::int8_t> v(pts - 1);
    for (std::size_t x = 0; x + 1 < pts; ++x)
      v[x] = row[x] ? std::int8_t{1} : std::int8_t{-1};
    s.vecs.push_back(std::move(v));
  }
  return s;
}

LssdGraph cameron_seidel_lssd(const KerdockFamily& fam) {
  if (fam.n % 2 != 0) throw std::invalid_argument("n must be even");
  if (fam.forms.size() < 2)
    throw std::invalid_argument("need at least 2 forms");
  int r = fam.n / 2;
  long long pts = 1LL << fam.n;
  long long len = pts - 1;
  long long dot_near = (1LL << r) - 1;
  long long dot_far = -((1LL << r) + 1);

  // binary codewords of each simplex, bit-packed for weight counting
  std::vector<BinMatrix> code;
  for (const QuadForm& q : fam.forms) {
    BinMatrix C(static_cast<std::size_t>(pts), static_cast<std::size_t>(len));
    std::size_t a = 0;
    std::size_t last = static_cast<std::size_t>(pts) - 1;
    for (const auto& row : rm1_coset(q)) {
      if (row[last] != 0) continue;
      for (std::size_t x = 0; x < static_cast<std::size_t>(len); ++x)
        if (row[x]) C.set(a, x, true);
      ++a;
    }
    code.push_back(std::move(C));
  }

  LssdGraph g;
  g.w = static_cast<int>(fam.forms.size());
  g.params = validate_params(pts, (1LL << (r - 1)) * ((1LL << r) + 1),
                             (1LL << (r - 1)) * ((1LL << (r - 1)) + 1));
  for (int i = 1; i <= g.w; ++i)
    for (int j = i + 1; j <= g.w; ++j) {
      const BinMatrix& Ci = code[static_cast<std::size_t>(i - 1)];
      const BinMatrix& Cj = code[static_cast<std::size_t>(j - 1)];
      BinMatrix blk(static_cast<std::size_t>(pts),
                    static_cast<std::size_t>(pts));
      for (std::size_t a = 0; a < static_cast<std::size_t>(pts); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(pts); ++b) {
          long long dot = len - 2 * Ci.row_xor_weight(a, Cj, b);
          if (dot == dot_near)
            blk.set(a, b, true);
          else if (dot != dot_far)
            throw construction_integrity_error(
                "cross-fiber dot product " + std::to_string(dot) +
                " between fibers " + std::to_string(i) + " and " +
                std::to_string(j) + " is neither " +
                std::to_string(dot_near) + " nor " + std::to_string(dot_far));
        }
      g.blocks[{i, j}] = std::move(blk);
    }
  return g;
}

}  // namespace lssd
