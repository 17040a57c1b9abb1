#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/error.hpp"
#include "rigidity/matrix.hpp"

namespace rigidity {

/// The second fundamental form of an n-dimensional submanifold of S^{n+p},
/// stored as p symmetric n x n shape operators A_alpha = (h^alpha_ij) in an
/// orthonormal frame. Indices are zero-based.
template <class T>
class SecondFundamentalForm {
 public:
  explicit SecondFundamentalForm(std::vector<Matrix<T>> shape_operators)
      : shape_(std::move(shape_operators)) {
    if (shape_.empty()) throw ParameterError("second fundamental form needs codimension p >= 1");
    const std::size_t n = shape_.front().rows();
    if (n < 2) throw ParameterError("second fundamental form needs dimension n >= 2");
    for (std::size_t a = 0; a < shape_.size(); ++a) {
      if (shape_[a].rows() != n || shape_[a].cols() != n) {
        throw ParameterError("shape operators must all be " + std::to_string(n) + "x" +
                             std::to_string(n));
      }
      if (!shape_[a].is_symmetric()) {
        throw ParameterError("shape operator " + std::to_string(a) + " is not symmetric");
      }
    }
  }

  int dimension() const { return static_cast<int>(shape_.front().rows()); }
  int codimension() const { return static_cast<int>(shape_.size()); }

  const Matrix<T>& shape(std::size_t alpha) const { return shape_[alpha]; }
  std::span<const Matrix<T>> shape_operators() const { return shape_; }

  const T& operator()(std::size_t alpha, std::size_t i, std::size_t j) const {
    return shape_[alpha](i, j);
  }

  bool simultaneously_diagonal() const {
    for (const auto& a : shape_) {
      if (!a.is_diagonal()) return false;
    }
    return true;
  }

 private:
  std::vector<Matrix<T>> shape_;
};

/// H^alpha = tr(A_alpha) / n.
template <class T>
std::vector<T> mean_curvature_vector(const SecondFundamentalForm<T>& h) {
  std::vector<T> mean;
  mean.reserve(h.codimension());
  const T n(h.dimension());
  for (const auto& a : h.shape_operators()) mean.push_back(a.trace() / n);
  return mean;
}

/// h~^alpha_ij = h^alpha_ij - H^alpha delta_ij.
template <class T>
SecondFundamentalForm<T> traceless(const SecondFundamentalForm<T>& h) {
  const auto mean = mean_curvature_vector(h);
  std::vector<Matrix<T>> out;
  out.reserve(h.codimension());
  for (int a = 0; a < h.codimension(); ++a) {
    Matrix<T> m = h.shape(a);
    for (int i = 0; i < h.dimension(); ++i) m(i, i) -= mean[a];
    out.push_back(std::move(m));
  }
  return SecondFundamentalForm<T>(std::move(out));
}

template <class T>
struct FormInvariants {
  std::vector<T> mean_vector;  // H^alpha
  T mean_norm_sq;              // H^2
  Matrix<T> sigma;             // tr(A_alpha A_beta)
  Matrix<T> sigma_tilde;       // tr(A~_alpha A~_beta)
  T squared_norm;              // S
  T rho_sq;                    // S - n H^2
};

template <class T>
Matrix<T> gram(std::span<const Matrix<T>> mats) {
  Matrix<T> g(mats.size(), mats.size());
  for (std::size_t a = 0; a < mats.size(); ++a) {
    for (std::size_t b = a; b < mats.size(); ++b) {
      g(a, b) = trace_product(mats[a], mats[b]);
      g(b, a) = g(a, b);
    }
  }
  return g;
}

template <class T>
FormInvariants<T> invariants(const SecondFundamentalForm<T>& h) {
  FormInvariants<T> out;
  out.mean_vector = mean_curvature_vector(h);
  out.mean_norm_sq = T(0);
  for (const T& x : out.mean_vector) out.mean_norm_sq += x * x;
  out.sigma = gram(h.shape_operators());
  const auto tilde = traceless(h);
  out.sigma_tilde = gram(tilde.shape_operators());
  out.squared_norm = out.sigma.trace();
  out.rho_sq = out.squared_norm - T(h.dimension()) * out.mean_norm_sq;
  return out;
}

/// Dense 4-index tensor with R(i,j,k,l) addressing.
template <class T>
class RiemannTensor {
 public:
  explicit RiemannTensor(std::size_t n) : n_(n), data_(n * n * n * n, T(0)) {}
  std::size_t dimension() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return data_[((i * n_ + j) * n_ + k) * n_ + l];
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

/// Gauss equation: R_ijkl = (d_ik d_jl - d_il d_jk)
///                        + sum_alpha (h_ik h_jl - h_il h_jk).
/// R(i,j,i,j) is the sectional curvature of the plane e_i ^ e_j.
template <class T>
RiemannTensor<T> riemann_tensor(const SecondFundamentalForm<T>& h) {
  const std::size_t n = h.dimension();
  RiemannTensor<T> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          T v((i == k && j == l ? 1 : 0) - (i == l && j == k ? 1 : 0));
          for (const auto& a : h.shape_operators()) v += a(i, k) * a(j, l) - a(i, l) * a(j, k);
          r(i, j, k, l) = v;
        }
      }
    }
  }
  return r;
}

/// Contraction R_ij = sum_k R_ikjk.
template <class T>
Matrix<T> ricci_from_riemann(const RiemannTensor<T>& r) {
  const std::size_t n = r.dimension();
  Matrix<T> ric(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) ric(i, j) += r(i, k, j, k);
    }
  }
  return ric;
}

/// Closed form R_ij = (n-1) d_ij + n sum_alpha H^alpha h^alpha_ij
///                   - sum_alpha (A_alpha^2)_ij.
template <class T>
Matrix<T> ricci_tensor(const SecondFundamentalForm<T>& h) {
  const std::size_t n = h.dimension();
  const auto mean = mean_curvature_vector(h);
  Matrix<T> ric = Matrix<T>::identity(n) * T(static_cast<int>(n) - 1);
  for (std::size_t a = 0; a < mean.size(); ++a) {
    const Matrix<T>& shape = h.shape(a);
    ric += shape * (T(static_cast<int>(n)) * mean[a]);
    ric -= shape * shape;
  }
  return ric;
}

/// Ricci equation: R^perp(alpha, beta, i, j) = [A_alpha, A_beta]_ij.
template <class T>
class NormalCurvature {
 public:
  explicit NormalCurvature(const SecondFundamentalForm<T>& h)
      : p_(h.codimension()), n_(h.dimension()) {
    blocks_.reserve(p_ * p_);
    for (std::size_t a = 0; a < p_; ++a) {
      for (std::size_t b = 0; b < p_; ++b) blocks_.push_back(commutator(h.shape(a), h.shape(b)));
    }
  }
  std::size_t codimension() const { return p_; }
  std::size_t dimension() const { return n_; }
  const T& operator()(std::size_t alpha, std::size_t beta, std::size_t i, std::size_t j) const {
    return blocks_[alpha * p_ + beta](i, j);
  }
  const Matrix<T>& block(std::size_t alpha, std::size_t beta) const {
    return blocks_[alpha * p_ + beta];
  }
  bool is_zero() const {
    for (const auto& b : blocks_) {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          if (!(b(i, j) == T(0))) return false;
        }
      }
    }
    return true;
  }

 private:
  std::size_t p_;
  std::size_t n_;
  std::vector<Matrix<T>> blocks_;
};

template <class T>
NormalCurvature<T> normal_curvature(const SecondFundamentalForm<T>& h) {
  return NormalCurvature<T>(h);
}

/// Per-alpha bracket of the k-extremal Euler-Lagrange equation with all
/// derivative terms dropped:
///   sum_beta tr(A_alpha A_beta^2) - sum_beta H^beta sigma_alpha_beta
///     - (n / 2k) rho^2 H^alpha.
/// For models with parallel second fundamental form (constant rho) the
/// submanifold is k-extremal iff every component vanishes; the caller is
/// responsible for that precondition.
template <class T>
std::vector<T> reduced_el_residual(const SecondFundamentalForm<T>& h, const T& k) {
  if (k < T(1)) throw ParameterError("k-extremality needs k >= 1");
  const auto inv = invariants(h);
  const std::size_t p = h.codimension();
  const T n(h.dimension());
  std::vector<Matrix<T>> squares;
  squares.reserve(p);
  for (const auto& a : h.shape_operators()) squares.push_back(a * a);
  std::vector<T> out;
  out.reserve(p);
  for (std::size_t a = 0; a < p; ++a) {
    T value(0);
    for (std::size_t b = 0; b < p; ++b) {
      value += trace_product(h.shape(a), squares[b]);
      value -= inv.mean_vector[b] * inv.sigma(a, b);
    }
    value -= n / (T(2) * k) * inv.rho_sq * inv.mean_vector[a];
    out.push_back(value);
  }
  return out;
}

}  // namespace rigidity
