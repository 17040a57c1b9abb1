#pragma once

// Hand-rolled generators for the property tests. Every generator draws from
// an engine built by rigidity::make_engine so failures replay from the trial
// index alone.

#include <cstdint>
#include <vector>

#include "rigidity/matrix.hpp"
#include "rigidity/random.hpp"
#include "rigidity/scalar.hpp"
#include "rigidity/second_fundamental_form.hpp"

namespace gen {

using rigidity::Integer;
using rigidity::Rational;
using rigidity::Scalar;

inline std::mt19937_64 engine(std::uint64_t suite, std::uint64_t trial) {
  return rigidity::make_engine(0xc0ffee, suite, trial);
}

inline Rational rational(std::mt19937_64& e, int num_bound, int den_bound) {
  const int num = rigidity::uniform_int(e, -num_bound, num_bound);
  const int den = rigidity::uniform_int(e, 1, den_bound);
  return Rational(num, den);
}

inline Rational positive_rational(std::mt19937_64& e, int num_bound, int den_bound) {
  return Rational(rigidity::uniform_int(e, 1, num_bound), rigidity::uniform_int(e, 1, den_bound));
}

inline int squarefree(std::mt19937_64& e) {
  static const int table[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 29, 30, 5485};
  return table[rigidity::uniform_int(e, 0, static_cast<int>(std::size(table)) - 1)];
}

/// q + r sqrt(d) with the given radicand (d = 0 for a rational).
inline Scalar scalar_in(std::mt19937_64& e, int d) {
  const Rational q = rational(e, 50, 12);
  if (d == 0) return Scalar(q);
  return Scalar::surd(q, rational(e, 50, 12), Integer(d));
}

/// Any exact scalar over a random radicand, 1 in 4 rational.
inline Scalar scalar(std::mt19937_64& e) {
  return scalar_in(e, rigidity::uniform_int(e, 0, 3) == 0 ? 0 : squarefree(e));
}

inline std::vector<double> vec(std::mt19937_64& e, int n, double bound = 1) {
  std::vector<double> v(n);
  for (double& x : v) x = rigidity::uniform(e, -bound, bound);
  return v;
}

inline rigidity::Matrix<Rational> symmetric_rational(std::mt19937_64& e, int n) {
  rigidity::Matrix<Rational> m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m(i, j) = rational(e, 16, 8);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline rigidity::SecondFundamentalForm<Rational> rational_form(std::mt19937_64& e, int n, int p) {
  std::vector<rigidity::Matrix<Rational>> mats;
  for (int a = 0; a < p; ++a) mats.push_back(symmetric_rational(e, n));
  return rigidity::SecondFundamentalForm<Rational>(std::move(mats));
}

template <class From>
rigidity::SecondFundamentalForm<Scalar> to_scalar_form(const rigidity::SecondFundamentalForm<From>& h) {
  std::vector<rigidity::Matrix<Scalar>> mats;
  for (const auto& a : h.shape_operators()) {
    rigidity::Matrix<Scalar> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Scalar(a(i, j));
    }
    mats.push_back(std::move(m));
  }
  return rigidity::SecondFundamentalForm<Scalar>(std::move(mats));
}

inline rigidity::SecondFundamentalForm<double> to_double_form(
    const rigidity::SecondFundamentalForm<Rational>& h) {
  std::vector<rigidity::Matrix<double>> mats;
  for (const auto& a : h.shape_operators()) {
    rigidity::Matrix<double> m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = rigidity::to_double(a(i, j));
    }
    mats.push_back(std::move(m));
  }
  return rigidity::SecondFundamentalForm<double>(std::move(mats));
}

}  // namespace gen
