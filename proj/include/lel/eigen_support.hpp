#ifndef LEL_EIGEN_SUPPORT_HPP
#define LEL_EIGEN_SUPPORT_HPP

#include <Eigen/Core>

#include "lel/big_float.hpp"
#include "lel/pi_poly.hpp"
#include "lel/rat_series.hpp"
#include "lel/rational.hpp"

// NumTraits so Eigen dense matrices can carry the exact scalars. The heavy
// kernels (adjugate, LU, series elimination) are hand-written loops; Eigen
// provides storage, views and the assembly-level expressions.
namespace Eigen {

template <>
struct NumTraits<lel::Integer> : GenericNumTraits<lel::Integer> {
  typedef lel::Integer Real;
  typedef lel::Integer NonInteger;
  typedef lel::Integer Nested;
  static inline Real epsilon() { return lel::Integer(0); }
  static inline Real dummy_precision() { return lel::Integer(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 30,
  };
};

template <>
struct NumTraits<lel::Rational> : GenericNumTraits<lel::Rational> {
  typedef lel::Rational Real;
  typedef lel::Rational NonInteger;
  typedef lel::Rational Nested;
  static inline Real epsilon() { return lel::Rational(0); }
  static inline Real dummy_precision() { return lel::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 60,
    MulCost = 60,
  };
};

template <>
struct NumTraits<lel::PiPoly> : GenericNumTraits<lel::PiPoly> {
  typedef lel::PiPoly Real;
  typedef lel::PiPoly NonInteger;
  typedef lel::PiPoly Nested;
  static inline Real epsilon() { return lel::PiPoly{}; }
  static inline Real dummy_precision() { return lel::PiPoly{}; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 200,
    MulCost = 400,
  };
};

template <>
struct NumTraits<lel::BigFloat> : GenericNumTraits<lel::BigFloat> {
  typedef lel::BigFloat Real;
  typedef lel::BigFloat NonInteger;
  typedef lel::BigFloat Nested;
  static inline Real epsilon() { return lel::BigFloat(); }
  static inline Real dummy_precision() { return lel::BigFloat(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 30,
    MulCost = 40,
  };
};

template <>
struct NumTraits<lel::RatSeries> : GenericNumTraits<lel::RatSeries> {
  typedef lel::RatSeries Real;
  typedef lel::RatSeries NonInteger;
  typedef lel::RatSeries Nested;
  static inline Real epsilon() { return lel::RatSeries(); }
  static inline Real dummy_precision() { return lel::RatSeries(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 400,
    MulCost = 2000,
  };
};

}  // namespace Eigen

namespace lel {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixPoly = Eigen::Matrix<PiPoly, Eigen::Dynamic, Eigen::Dynamic>;
using MatrixF = Eigen::Matrix<BigFloat, Eigen::Dynamic, Eigen::Dynamic>;
using VectorF = Eigen::Matrix<BigFloat, Eigen::Dynamic, 1>;
using MatrixSeries = Eigen::Matrix<RatSeries, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace lel

#endif
