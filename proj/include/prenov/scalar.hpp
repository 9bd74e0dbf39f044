#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

/// Exact rational scalar for dense matrices. All pivoting in the LU
/// decompositions only compares magnitudes, which is well defined for bignum
/// rationals, so decompositions stay exact.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace prenov {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator (the GMP canonical form).
using Rational = mpq_class;

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "p" or "p/q" with arbitrary-precision integers.
/// Throws std::invalid_argument on malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&]() {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const std::string num_s = text.substr(0, slash);
  const std::string den_s =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (num_s.empty() || den_s.empty()) bad();
  mpz_class num, den;
  if (num.set_str(num_s, 10) != 0) bad();
  if (den.set_str(den_s, 10) != 0) bad();
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_of(long n) { return Rational(n); }

}  // namespace prenov
