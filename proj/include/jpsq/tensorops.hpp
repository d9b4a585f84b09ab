// SPDX-License-Identifier: MIT
//
// Sum-of-Kronecker-products operators over a tensor-product Hilbert space.
// Each term is a scalar coefficient times local matrices acting on a subset
// of modes (identity elsewhere).  This representation supports matrix-free
// application for iterative eigensolvers, dense assembly for small spaces,
// exact diagonals for preconditioning, and a triplet debug dump.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

namespace jpsq {

using cxd = std::complex<double>;

struct KronTerm {
  cxd coeff{0.0, 0.0};
  // (mode index, local matrix), strictly increasing mode index
  std::vector<std::pair<int, Eigen::MatrixXcd>> factors;
};

class OperatorSum {
 public:
  explicit OperatorSum(std::vector<int> dims) : dims_(std::move(dims)) {
    dim_ = 1;
    for (int d : dims_) {
      if (d < 1) throw std::invalid_argument("mode dimension must be >= 1");
      dim_ *= d;
    }
  }

  long long dim() const { return dim_; }
  const std::vector<int>& mode_dims() const { return dims_; }
  const std::vector<KronTerm>& terms() const { return terms_; }

  void add_scalar(cxd value) {
    if (value != cxd{0.0, 0.0}) terms_.push_back({value, {}});
  }

  void add_term(cxd coeff, std::vector<std::pair<int, Eigen::MatrixXcd>> factors) {
    if (coeff == cxd{0.0, 0.0}) return;
    for (const auto& [m, op] : factors) {
      if (m < 0 || m >= static_cast<int>(dims_.size()))
        throw std::invalid_argument("factor mode index out of range");
      if (op.rows() != dims_[m] || op.cols() != dims_[m])
        throw std::invalid_argument("factor dimension mismatch");
    }
    for (size_t i = 1; i < factors.size(); ++i)
      if (factors[i - 1].first >= factors[i].first)
        throw std::invalid_argument("factors must be sorted by mode");
    terms_.push_back({coeff, std::move(factors)});
  }

  // y = A x
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const {
    if (x.size() != dim_) throw std::invalid_argument("vector dimension mismatch");
    Eigen::VectorXcd y = Eigen::VectorXcd::Zero(dim_);
    Eigen::VectorXcd tmp, tmp2;
    for (const auto& t : terms_) {
      if (t.factors.empty()) {
        y += t.coeff * x;
        continue;
      }
      tmp = x;
      for (const auto& [m, op] : t.factors) apply_local(op, m, tmp, tmp2);
      y += t.coeff * tmp;
    }
    return y;
  }

  // Dense assembly; refuses dimensions above the guard.
  Eigen::MatrixXcd dense(long long max_dim = 4096) const {
    if (dim_ > max_dim)
      throw std::invalid_argument("dense assembly refused: dimension " +
                                  std::to_string(dim_) + " exceeds " +
                                  std::to_string(max_dim));
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (const auto& t : terms_) {
      Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
      size_t f = 0;
      for (int m = 0; m < static_cast<int>(dims_.size()); ++m) {
        const bool has = f < t.factors.size() && t.factors[f].first == m;
        const Eigen::MatrixXcd& op =
            has ? t.factors[f].second
                : Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(dims_[m], dims_[m]));
        if (has) ++f;
        Eigen::MatrixXcd next(acc.rows() * op.rows(), acc.cols() * op.cols());
        for (Eigen::Index i = 0; i < acc.rows(); ++i)
          for (Eigen::Index j = 0; j < acc.cols(); ++j)
            next.block(i * op.rows(), j * op.cols(), op.rows(), op.cols()) =
                acc(i, j) * op;
        acc.swap(next);
      }
      H += t.coeff * acc;
    }
    return H;
  }

  // Exact diagonal (real part; imaginary part of a Hermitian sum cancels).
  Eigen::VectorXd diagonal_real() const {
    Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(dim_);
    for (const auto& t : terms_) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Ones(1);
      size_t f = 0;
      for (int m = 0; m < static_cast<int>(dims_.size()); ++m) {
        Eigen::VectorXcd dv;
        if (f < t.factors.size() && t.factors[f].first == m)
          dv = t.factors[f++].second.diagonal();
        else
          dv = Eigen::VectorXcd::Ones(dims_[m]);
        Eigen::VectorXcd next(acc.size() * dv.size());
        for (Eigen::Index i = 0; i < acc.size(); ++i)
          next.segment(i * dv.size(), dv.size()) = acc(i) * dv;
        acc.swap(next);
      }
      diag += t.coeff * acc;
    }
    return diag.real();
  }

  // Max |<u|Av> - <Au|v>| over random probe pairs (dense check when small).
  double hermiticity_error(int probes = 4, unsigned seed = 1234) const {
    if (dim_ <= 4096) {
      const Eigen::MatrixXcd H = dense();
      return (H - H.adjoint()).cwiseAbs().maxCoeff();
    }
    std::mt19937 rng(seed);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (int p = 0; p < probes; ++p) {
      Eigen::VectorXcd u(dim_), v(dim_);
      for (long long i = 0; i < dim_; ++i) {
        u(i) = cxd(g(rng), g(rng));
        v(i) = cxd(g(rng), g(rng));
      }
      u.normalize();
      v.normalize();
      const cxd a = u.dot(apply(v));        // <u|Av>
      const cxd b = apply(u).dot(v);        // <Au|v>
      worst = std::max(worst, std::abs(a - b));
    }
    return worst;
  }

  // Debug export: one "row col real imag" line per non-negligible entry.
  void write_triplets(std::ostream& out, double tol = 1e-14,
                      long long max_dim = 4096) const {
    const Eigen::MatrixXcd H = dense(max_dim);
    for (Eigen::Index i = 0; i < H.rows(); ++i)
      for (Eigen::Index j = 0; j < H.cols(); ++j)
        if (std::abs(H(i, j)) > tol)
          out << i << " " << j << " " << H(i, j).real() << " "
              << H(i, j).imag() << "\n";
  }

 private:
  // In the linearized index the last mode varies fastest.  A local operator
  // on mode m acts on (outer, d_m, inner) blocks.
  void apply_local(const Eigen::MatrixXcd& op, int m, Eigen::VectorXcd& x,
                   Eigen::VectorXcd& scratch) const {
    long long inner = 1, outer = 1;
    for (int k = m + 1; k < static_cast<int>(dims_.size()); ++k) inner *= dims_[k];
    for (int k = 0; k < m; ++k) outer *= dims_[k];
    const int d = dims_[m];
    scratch.resize(x.size());
    using RowMat =
        Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    for (long long o = 0; o < outer; ++o) {
      Eigen::Map<const RowMat> xin(x.data() + o * d * inner, d, inner);
      Eigen::Map<RowMat> xout(scratch.data() + o * d * inner, d, inner);
      xout.noalias() = op * xin;
    }
    x.swap(scratch);
  }

  std::vector<int> dims_;
  long long dim_ = 1;
  std::vector<KronTerm> terms_;
};

}  // namespace jpsq
