#pragma once

#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace raypf {

// GMP-backed integer without expression templates, so it behaves as a
// plain value type inside Eigen containers.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using BigMatrix = DenseMatrix<BigInt>;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline int sign_of(const BigInt& v) { return v.sign(); }

}  // namespace raypf

namespace Eigen {

template <>
struct NumTraits<raypf::BigInt> : GenericNumTraits<raypf::BigInt> {
  typedef raypf::BigInt Real;
  typedef raypf::BigInt NonInteger;
  typedef raypf::BigInt Nested;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
