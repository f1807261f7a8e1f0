#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lssd/linked_system.hpp"
#include "lssd/matrix.hpp"

namespace lssd {

// Dense +-1 matrix.
struct Hadamard {
  int n = 0;
  std::vector<std::int8_t> e;  // row-major, values +1 / -1

  Hadamard() = default;
  Hadamard(int order, std::int8_t fill = 1)
      : n(order),
        e(static_cast<std::size_t>(order) * static_cast<std::size_t>(order),
          fill) {}

  std::int8_t& at(int i, int j) {
    return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  std::int8_t at(int i, int j) const {
    return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  }
  bool operator==(const Hadamard&) const = default;
};

struct HadamardProps {
  bool is_hadamard = false;
  bool is_regular = false;                // constant row and column sums
  std::optional<long long> row_sum;       // set when regular
};

HadamardProps hadamard_props(const Hadamard& h);

struct UnbiasedCheck {
  bool unbiased = false;
  std::string note;  // reason when false
};

// True iff every column inner product (entry of a^T b) is +-sqrt(order);
// requires square order.
UnbiasedCheck unbiased(const Hadamard& a, const Hadamard& b);

// (1/sqrt(n)) a^T b, checked to be a +-1 matrix (and in fact Hadamard).
Hadamard unbiased_product(const Hadamard& a, const Hadamard& b);

// Exact integer product a^T b, computed on bit-packed sign masks.
I64Mat gram_tt(const Hadamard& a, const Hadamard& b);

Hadamard negate(const Hadamard& h);
Hadamard kronecker(const Hadamard& a, const Hadamard& b);
Hadamard sylvester(int e);  // order 2^e Kronecker power

IntMat to_int(const Hadamard& h);
Hadamard hadamard_from_int(const IntMat& m);

// Orthogonal array OA(n^2, cols) of strength 2 and index 1: n^2 rows over
// symbols 1..n, each ordered symbol pair appearing exactly once in each
// ordered column pair.
struct OrthArray {
  int n = 0;
  int cols = 0;
  std::vector<int> cells;  // row-major, n^2 rows

  int rows() const { return n * n; }
  int& at(int r, int c) {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
  }
  int at(int r, int c) const {
    return cells[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                 static_cast<std::size_t>(c)];
  }
};

bool oa_pairs_ok(const OrthArray& o);

// OA(q^2, q+1) from the complete set of MOLS over GF(q); q a prime power
// <= 64.  Rows are pairs (x, y) in lexicographic order, columns are the two
// coordinates followed by L_a(x, y) = a*x + y for a = 1..q-1.
OrthArray mols_oa(int q);

// MacNeish composition: from OA(n1^2, c1) and OA(n2^2, c2) an
// OA((n1 n2)^2, min(c1, c2)) with symbol (a, b) -> (a-1) n2 + b.
OrthArray macneish_product(const OrthArray& o1, const OrthArray& o2);

struct UnbiasedHadamardSet {
  int order = 0;
  std::vector<Hadamard> matrices;
  bool regular = false;
  std::string note;
};

// Beth-Wocjan construction: from OA(n^2, c) and a Hadamard matrix of order n,
// c-1 pairwise unbiased Hadamard matrices of order n^2.  Regular output
// requires a regular seed; a non-regular seed is flagged in the note.
UnbiasedHadamardSet beth_wocjan_unbiased_set(const OrthArray& o,
                                             const Hadamard& h);

// Mutually unbiased regular Hadamard matrices of order v = 4u^2 with row sum
// 2u  <->  linked system of symmetric Menon designs (v, 2u^2+u, u^2+u) on
// |S|+1 fibers.
LssdGraph lssd_from_unbiased_hadamards(const UnbiasedHadamardSet& s);
UnbiasedHadamardSet hadamards_from_lssd(const LssdGraph& g);

}  // namespace lssd
