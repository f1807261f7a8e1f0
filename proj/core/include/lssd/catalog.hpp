#pragma once

#include "lssd/hadamard.hpp"

namespace lssd {

// Regular Hadamard matrix of order 4 with row sum 2 (J - 2I).
Hadamard catalog_h4();

// Regular Hadamard matrix of order 36 with row sum 6.
Hadamard catalog_h36();

// OA(16, 3) over symbols 1..4 built from the cyclic Latin square of order 4.
OrthArray catalog_oa16();

// The three pairwise unbiased regular Hadamard matrices of order 16 produced
// by the Beth-Wocjan construction from catalog_oa16() and catalog_h4():
// which = 0, 1 are the two construction outputs, which = 2 their unbiased
// product.
Hadamard catalog_unbiased16(int which);

}  // namespace lssd
