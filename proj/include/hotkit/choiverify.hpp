// Copyright 2026 The hotkit developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "hotkit/boolfn.hpp"
#include "hotkit/common.hpp"
#include "hotkit/mobius.hpp"

namespace hotkit {

/*! \brief Local dimensions of the elementary systems. The superoperators below act
    on the real space of hermitian operators, of dimension prod d_i^2, and are kept
    dense; the cap bounds that dimension. */
struct SystemDims {
  std::vector<int> dims;
  int cap = 4096;

  explicit SystemDims(std::vector<int> d, int cap_ = 4096) : dims(std::move(d)), cap(cap_)
  {
    if (dims.empty() || dims.size() > kMaxSystems) throw UsageError("bad system count");
    long long total = 1;
    for (int di : dims) {
      if (di < 2) throw UsageError("local dimensions must be at least 2");
      total *= static_cast<long long>(di) * di;
      if (total > cap) {
        throw UsageError("superoperator dimension " + std::to_string(total) +
                         " exceeds the cap " + std::to_string(cap));
      }
    }
  }

  int n() const { return static_cast<int>(dims.size()); }

  int superop_dim() const
  {
    int total = 1;
    for (int di : dims) total *= di * di;
    return total;
  }
};

/*! \brief Minimal dense real matrix, row-major. */
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill)
  {
  }

  static Matrix identity(int n)
  {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix operator+(const Matrix& o) const
  {
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
    return out;
  }

  Matrix operator-(const Matrix& o) const
  {
    Matrix out = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
    return out;
  }

  Matrix scaled(double s) const
  {
    Matrix out = *this;
    for (auto& v : out.a_) v *= s;
    return out;
  }

  Matrix operator*(const Matrix& o) const
  {
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const double v = (*this)(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < o.cols_; ++j) out(i, j) += v * o(k, j);
      }
    }
    return out;
  }

  double trace() const
  {
    double t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  /*! \brief Frobenius norm; an upper bound on the operator norm, so thresholding it
      certifies the operator-norm tolerance. */
  double frobenius() const
  {
    double s = 0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  double max_asymmetry() const
  {
    double m = 0;
    for (int i = 0; i < rows_; ++i) {
      for (int j = i + 1; j < cols_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    }
    return m;
  }

  friend Matrix kron(const Matrix& a, const Matrix& b)
  {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) {
        const double v = a(i, j);
        if (v == 0.0) continue;
        for (int r = 0; r < b.rows_; ++r) {
          for (int c = 0; c < b.cols_; ++c) {
            out(i * b.rows_ + r, j * b.cols_ + c) = v * b(r, c);
          }
        }
      }
    }
    return out;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

namespace detail {

using CMat = std::vector<std::complex<double>>;  // d x d, row-major

/*! \brief Orthonormal hermitian basis of B_h(C^d): the normalized identity first,
    then the symmetric, antisymmetric and diagonal traceless elements. */
inline std::vector<CMat> hermitian_basis(int d)
{
  std::vector<CMat> basis;
  auto at = [d](CMat& m, int r, int c) -> std::complex<double>& { return m[r * d + c]; };
  CMat id(d * d, 0.0);
  for (int i = 0; i < d; ++i) at(id, i, i) = 1.0 / std::sqrt(static_cast<double>(d));
  basis.push_back(id);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k) {
    for (int l = k + 1; l < d; ++l) {
      CMat sym(d * d, 0.0), asym(d * d, 0.0);
      at(sym, k, l) = inv_sqrt2;
      at(sym, l, k) = inv_sqrt2;
      at(asym, k, l) = std::complex<double>(0, -inv_sqrt2);
      at(asym, l, k) = std::complex<double>(0, inv_sqrt2);
      basis.push_back(sym);
      basis.push_back(asym);
    }
  }
  for (int m = 1; m < d; ++m) {
    CMat diag(d * d, 0.0);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m) * (m + 1));
    for (int j = 0; j < m; ++j) at(diag, j, j) = norm;
    at(diag, m, m) = -static_cast<double>(m) * norm;
    basis.push_back(diag);
  }
  return basis;
}

inline std::complex<double> hs_inner(const CMat& a, const CMat& b, int d)
{
  std::complex<double> s = 0;
  // <A,B> = Tr[A^dagger B] = sum conj(A_rc) B_rc
  for (int k = 0; k < d * d; ++k) s += std::conj(a[k]) * b[k];
  return s;
}

/*! \brief Matrix of X -> Tr[X]/d I in the hermitian basis, entries computed as
    Hilbert-Schmidt inner products against the numerically built basis. */
inline Matrix local_trace_replace(int d)
{
  const auto basis = hermitian_basis(d);
  const int dim = d * d;
  Matrix p(dim, dim);
  CMat id_over_d(dim, 0.0);
  for (int i = 0; i < d; ++i) id_over_d[i * d + i] = 1.0 / d;
  for (int b = 0; b < dim; ++b) {
    std::complex<double> tr = 0;
    for (int i = 0; i < d; ++i) tr += basis[b][i * d + i];
    // P(B_b) = Tr[B_b]/d I; expand in the basis.
    for (int a = 0; a < dim; ++a) {
      CMat image(dim, 0.0);
      for (int k = 0; k < dim; ++k) image[k] = tr * id_over_d[k];
      const auto entry = hs_inner(basis[a], image, d);
      p(a, b) = entry.real();
      if (std::abs(entry.imag()) > 1e-12) throw InvariantError("projection matrix not real");
    }
  }
  return p;
}

}  // namespace detail

/*! \brief Superoperator projections onto the string subspaces. The per-string and
    per-subset products are cached, so sweeps pay the Kronecker cost once. */
class ProjectionFactory {
 public:
  explicit ProjectionFactory(const SystemDims& dims)
      : dims_(dims),
        ps_cache_(std::size_t{1} << dims.n()),
        pi_cache_(std::size_t{1} << dims.n())
  {
    for (int i = 0; i < dims.n(); ++i) {
      const int d = dims.dims[i];
      Matrix p0 = detail::local_trace_replace(d);
      Matrix p1 = Matrix::identity(d * d) - p0;
      p0_.push_back(std::move(p0));
      p1_.push_back(std::move(p1));
    }
  }

  const SystemDims& dims() const { return dims_; }

  /*! \brief P_s: the product of the local trace-and-replace projections (letter 0)
      and their orthocomplements (letter 1). */
  const Matrix& build_Ps(const BitString& s) const
  {
    if (s.n != dims_.n()) throw UsageError("string length does not match the dimensions");
    auto& slot = ps_cache_[s.bits];
    if (!slot.rows()) {
      Matrix acc = s.at(1) ? p1_[0] : p0_[0];
      for (int i = 2; i <= s.n; ++i) acc = kron(acc, s.at(i) ? p1_[i - 1] : p0_[i - 1]);
      slot = std::move(acc);
    }
    return slot;
  }

  /*! \brief P_f = sum over the support of f of P_s. */
  Matrix build_Pf(const BoolFn& f) const
  {
    if (f.n() != dims_.n()) throw UsageError("function does not match the dimensions");
    Matrix acc(dims_.superop_dim(), dims_.superop_dim());
    for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
      if (f.value(s)) acc = acc + build_Ps(BitString(f.n(), s));
    }
    return acc;
  }

  /*! \brief Trace-and-replace on the systems in T, identity elsewhere. */
  const Matrix& build_PiT(Subset T) const
  {
    if (!subset_of(T, full_set(dims_.n()))) throw UsageError("subset outside [n]");
    auto& slot = pi_cache_[T];
    if (!slot.rows()) {
      Matrix acc = contains(T, 0) ? p0_[0] : Matrix::identity(dims_.dims[0] * dims_.dims[0]);
      for (int i = 1; i < dims_.n(); ++i) {
        acc = kron(acc, contains(T, i) ? p0_[i] : Matrix::identity(dims_.dims[i] * dims_.dims[i]));
      }
      slot = std::move(acc);
    }
    return slot;
  }

  /*! \brief Dimension of the subspace selected by f: each string contributes the
      product of 1 (letter 0) or d_i^2 - 1 (letter 1). */
  long long expected_rank(const BoolFn& f) const
  {
    long long total = 0;
    for (std::uint32_t s = 0; s < f.num_strings(); ++s) {
      if (!f.value(s)) continue;
      long long term = 1;
      for (int i = 0; i < f.n(); ++i) {
        term *= ((s >> i) & 1u) ? (static_cast<long long>(dims_.dims[i]) * dims_.dims[i] - 1) : 1;
      }
      total += term;
    }
    return total;
  }

  /*! \brief Normalization constant: the product of the input dimensions. */
  long long trace_constant(const BoolFn& f) const
  {
    const IOSplit io = io_split(f);
    long long c = 1;
    for (int i = 0; i < f.n(); ++i) {
      if (contains(io.inputs, i)) c *= dims_.dims[i];
    }
    return c;
  }

 private:
  SystemDims dims_;
  std::vector<Matrix> p0_, p1_;
  mutable std::vector<Matrix> ps_cache_, pi_cache_;
};

/*! \brief Residuals of the algebra identities for one pair of functions. All of
    them must vanish: the assignment f -> P_f is a lattice homomorphism, respects
    complement and tensor product, and agrees with the expansion through the
    trace-and-replace projections. */
struct IdentityReport {
  double meet_residual = 0;       // P_{f and g} - P_f P_g
  double join_residual = 0;       // P_{f or g} - (P_f + P_g - P_f P_g)
  double complement_residual = 0; // P_{f*} - (Id - P_f + P_theta)
  double tensor_residual = 0;     // P_{f (x) g} - P_f (x) P_g
  double bridge_residual = 0;     // P_f - sum_T fhat_T Pi_T
  double commutator = 0;          // [P_f, P_g]
  double idempotency = 0;
  double asymmetry = 0;

  double max_residual() const
  {
    double m = meet_residual;
    for (double v : {join_residual, complement_residual, tensor_residual, bridge_residual,
                     commutator, idempotency, asymmetry}) {
      m = std::max(m, v);
    }
    return m;
  }

  bool pass(double construction_tol = 1e-10, double identity_tol = 1e-9) const
  {
    return idempotency <= construction_tol && asymmetry <= construction_tol &&
           meet_residual <= identity_tol && join_residual <= identity_tol &&
           complement_residual <= identity_tol && tensor_residual <= identity_tol &&
           bridge_residual <= identity_tol && commutator <= identity_tol;
  }
};

/*! \brief Checks the identities for f, g on matching dimensions. The tensor check
    splits the dimensions as [f2.n()] after [n - f2.n()] and is skipped (left at 0)
    unless split factors are supplied. */
inline IdentityReport verify_identities(const ProjectionFactory& factory, const BoolFn& f,
                                        const BoolFn& g, const BoolFn* split_left = nullptr,
                                        const BoolFn* split_right = nullptr)
{
  IdentityReport rep;
  const int dim = factory.dims().superop_dim();
  const Matrix Pf = factory.build_Pf(f);
  const Matrix Pg = factory.build_Pf(g);
  const Matrix Ptheta = factory.build_Ps(theta(f.n()));
  const Matrix PfPg = Pf * Pg;

  rep.idempotency = std::max((Pf * Pf - Pf).frobenius(), (Pg * Pg - Pg).frobenius());
  rep.asymmetry = std::max(Pf.max_asymmetry(), Pg.max_asymmetry());
  rep.meet_residual = (factory.build_Pf(meet(f, g)) - PfPg).frobenius();
  rep.join_residual = (factory.build_Pf(join(f, g)) - (Pf + Pg - PfPg)).frobenius();
  rep.complement_residual =
      (factory.build_Pf(complement(f)) - (Matrix::identity(dim) - Pf + Ptheta)).frobenius();
  rep.commutator = (PfPg - Pg * Pf).frobenius();

  Matrix bridge(dim, dim);
  for (const auto& [T, c] : mobius_transform(f).terms) {
    bridge = bridge + factory.build_PiT(T).scaled(static_cast<double>(c));
  }
  rep.bridge_residual = (Pf - bridge).frobenius();

  if (split_left && split_right) {
    std::vector<int> dl(factory.dims().dims.begin(),
                        factory.dims().dims.begin() + split_left->n());
    std::vector<int> dr(factory.dims().dims.begin() + split_left->n(),
                        factory.dims().dims.end());
    const ProjectionFactory left(SystemDims(dl, factory.dims().cap));
    const ProjectionFactory right(SystemDims(dr, factory.dims().cap));
    rep.tensor_residual = (factory.build_Pf(tensor(*split_left, *split_right)) -
                           kron(left.build_Pf(*split_left), right.build_Pf(*split_right)))
                              .frobenius();
  }
  return rep;
}

}  // namespace hotkit
