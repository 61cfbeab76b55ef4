#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

// Eigen scalar traits for exact arbitrary-precision integers.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace mcs {

using ExactVec4 = Eigen::Matrix<mpz_class, 4, 1>;
using ExactMat4 = Eigen::Matrix<mpz_class, 4, 4>;

}  // namespace mcs
