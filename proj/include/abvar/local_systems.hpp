#pragma once

#include <map>

#include "abvar/motive.hpp"
#include "abvar/weights.hpp"

namespace abvar {

/// e_c of the weight-lambda local system on the genus-1 moduli stack:
/// 0 for odd lambda, else normalize(-S1[lambda+2] - 1); lambda = 0 gives L
/// through the S1[2] convention.
Motive ec_a1(int lambda);

/// The endoscopic/Eisenstein rest term of the genus-2 formula. Zero when
/// lambda_1 + lambda_2 is odd.
Motive ec_extr_a2(int l1, int l2);

/// e_c of the (l1 >= l2) local system on the genus-2 moduli stack:
/// normalize(-S2[l1-l2, l2+3] + ec_extr_a2).
Motive ec_a2(int l1, int l2);

/// Genus-3 Euler characteristic through the genus-2 recursion:
/// normalize(S3[l1-l2, l2-l3, l3+4] + rest), zero for odd |lambda|.
Motive ec_a3(int l1, int l2, int l3);

/// Ordinary cohomology of the genus-1 moduli stack with V_lambda
/// coefficients, by degree. lambda = 0: {0: 1}; positive even lambda:
/// {1: S1[lambda+2] + L^(lambda+1)}; odd: empty.
std::map<int, Motive> h_degrees_a1(int lambda);

}  // namespace abvar
