#include "lssd/catalog.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace lssd {

namespace {

static const char* const kH36[] = {
    "----+--++++-++-+-+++++---++++-+++-+-",
    "+----+--++-++-+-+++++---++++-+++-+-+",
    "++----+---++-+-+++++---++++-+++-+-++",
    "-++----+-++-+-+++-+---++++++++-+-++-",
    "--++----++-+-+++-+---++++++++-+-++-+",
    "+--++-----+-+++-++--++++++-+-+-++-++",
    "-+--++---+-+++-++--++++++---+-++-+++",
    "--+--++---+++-++-+++++++---+-++-+++-",
    "---+--++-+++-++-+-+++++---+-++-+++-+",
    "++-++-+-+++++-++--+-+-+++-+---+++---",
    "+-++-+-++-++++-++--+-+++-++--+++----",
    "-++-+-+++--++++-+++-+++-++--+++-----",
    "++-+-+++-+--++++-+-+++-++-++++------",
    "+-+-+++-+++--++++-+++-++-+-++------+",
    "-+-+++-++-++--++++++-++-+-++------++",
    "+-+++-++-+-++--++++-++-+-++------+++",
    "-+++-++-+++-++--++-++-+-+++-----+++-",
    "+++-++-+-+++-++--+++-+-+++-----+++--",
    "++++---++-+-+---+-++++-++--++-+-++-+",
    "+++---++++-+---+---++++-++-+-+-++-++",
    "++---++++-+---+--+--++++-++-+-++-+++",
    "+---++++++---+--+-+--++++-++-++-+++-",
    "---++++++---+--+-+++--++++--++-+++-+",
    "--++++++---+--+-+--++--++++++-+++-+-",
    "-++++++---+--+-+--+-++--++++-+++-+-+",
    "++++++---+--+-+---++-++--++-+++-+-++",
    "+++++---+--+-+---++++-++--++++-+-++-",
    "++-+++-+-+++---+++--+-+--+-++++-++--",
    "+-+++-+-+++---++++-+-+--+---++++-++-",
    "-+++-+-+++---++++++-+--+-----++++-++",
    "+++-+-++----++++++-+--+---++--++++-+",
    "++-+-++-+--++++++-+--+---+-++--++++-",
    "+-+-++-++-++++++----+---+-+-++--++++",
    "-+-++-+++++++++----+---+-+-+-++--+++",
    "+-++-+++-+++++---++---+-+--++-++--++",
    "-++-+++-+++++---++---+-+--++++-++--+",
};

static const char* const kH12[] = {
    "+----+++-+++-+++",
    "-++++----+++-+++",
    "-+++-++++----+++",
    "-+++-+++-++++---",
    "-+--+-+++-+++-++",
    "+-++-+--+-+++-++",
    "+-+++-++-+--+-++",
    "+-+++-+++-++-+--",
    "--+-++-+++-+++-+",
    "++-+--+-++-+++-+",
    "++-+++-+--+-++-+",
    "++-+++-+++-+--+-",
    "---++++-+++-+++-",
    "+++----++++-+++-",
    "+++-+++----++++-",
    "+++-+++-+++----+",
};

static const char* const kH13[] = {
    "+----+++-+++-+++",
    "-++++----+++-+++",
    "-+++-++++----+++",
    "-+++-+++-++++---",
    "+-++-+--+-+++-++",
    "+-+++-++-+--+-++",
    "+-+++-+++-++-+--",
    "-+--+-+++-+++-++",
    "++-+++-+--+-++-+",
    "++-+++-+++-+--+-",
    "--+-++-+++-+++-+",
    "++-+--+-++-+++-+",
    "+++-+++-+++----+",
    "---++++-+++-+++-",
    "+++----++++-+++-",
    "+++-+++----++++-",
};

static const char* const kH23[] = {
    "+---+-++++-++++-",
    "-+++-+--++-++++-",
    "-++++-++--+-+++-",
    "-++++-++++-+---+",
    "+++-+---+-++++-+",
    "+++--+++-+--++-+",
    "+++--++++-++--+-",
    "---+-++++-++++-+",
    "++-++++-+---+-++",
    "++-++++--+++-+--",
    "--+-+++--++++-++",
    "++-+---+-++++-++",
    "+-++++-++++-+---",
    "-+--++-++++--+++",
    "+-++--+-+++--+++",
    "+-++++-+---+-+++",
};

template <std::size_t N>
Hadamard parse_pm(const char* const (&rows)[N]) {
  Hadamard h(static_cast<int>(N));
  for (std::size_t i = 0; i < N; ++i) {
    std::string_view row(rows[i]);
    if (row.size() != N) throw std::logic_error("bad catalog row length");
    for (std::size_t j = 0; j < N; ++j)
      h.at(static_cast<int>(i), static_cast<int>(j)) = row[j] == '+' ? 1 : -1;
  }
  return h;
}

}  // namespace

Hadamard catalog_h4() {
  Hadamard h(4);
  for (int i = 0; i < 4; ++i) h.at(i, i) = -1;
  return h;
}

Hadamard catalog_h36() { return parse_pm(kH36); }

OrthArray catalog_oa16() {
  OrthArray o;
  o.n = 4;
  o.cols = 3;
  o.cells.resize(16 * 3);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int r = x * 4 + y;
      o.at(r, 0) = x + 1;
      o.at(r, 1) = y + 1;
      o.at(r, 2) = (x + y) % 4 + 1;
    }
  return o;
}

Hadamard catalog_unbiased16(int which) {
  switch (which) {
    case 0: return parse_pm(kH12);
    case 1: return parse_pm(kH13);
    case 2: return parse_pm(kH23);
    default:
      throw std::invalid_argument("catalog index " + std::to_string(which) +
                                  " out of range 0..2");
  }
}

}  // namespace lssd
