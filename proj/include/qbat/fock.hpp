#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qbat {

template <typename Scalar>
using ComplexT = std::complex<Scalar>;

template <typename Scalar>
using SparseCMatrix = Eigen::SparseMatrix<std::complex<Scalar>>;

template <typename Scalar>
using DenseCMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using CVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

template <typename Scalar>
using RVector = Eigen::Vector<Scalar, Eigen::Dynamic>;

/// Violation of a runtime numerical contract (truncation leakage,
/// analytic-vs-simulated cross-check mismatch).
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated two-mode Fock basis |N_A, N_B> with 0 <= N_A <= cutoff_a and
/// 0 <= N_B <= cutoff_b, flattened row-major in (N_A, N_B).
class TwoModeSpace {
 public:
  TwoModeSpace(int cutoff_a, int cutoff_b)
      : cutoff_a_(cutoff_a), cutoff_b_(cutoff_b) {
    if (cutoff_a < 0 || cutoff_b < 0) {
      throw std::invalid_argument("TwoModeSpace: cutoffs must be >= 0");
    }
  }

  int cutoff_a() const { return cutoff_a_; }
  int cutoff_b() const { return cutoff_b_; }
  int dim() const { return (cutoff_a_ + 1) * (cutoff_b_ + 1); }

  bool contains(int n_a, int n_b) const {
    return n_a >= 0 && n_a <= cutoff_a_ && n_b >= 0 && n_b <= cutoff_b_;
  }

  int index_of(int n_a, int n_b) const {
    if (!contains(n_a, n_b)) {
      throw std::out_of_range("TwoModeSpace::index_of: (" +
                              std::to_string(n_a) + ", " +
                              std::to_string(n_b) + ") outside cutoffs");
    }
    return n_a * (cutoff_b_ + 1) + n_b;
  }

  std::pair<int, int> occupations(int index) const {
    if (index < 0 || index >= dim()) {
      throw std::out_of_range("TwoModeSpace::occupations: bad index");
    }
    return {index / (cutoff_b_ + 1), index % (cutoff_b_ + 1)};
  }

  friend bool operator==(const TwoModeSpace&, const TwoModeSpace&) = default;

 private:
  int cutoff_a_;
  int cutoff_b_;
};

/// Fixed-charge subspace of the two-mode problem: all (N_A, N_B) with
/// n N_A + N_B = Q, ordered by descending N_A so the charger-full state
/// sits at index 0.
class ChargeSector {
 public:
  ChargeSector(int n, int q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("ChargeSector: n must be >= 1");
    if (q < 0) throw std::invalid_argument("ChargeSector: Q must be >= 0");
    for (int n_a = q / n; n_a >= 0; --n_a) {
      states_.emplace_back(n_a, q - n * n_a);
    }
  }

  int n() const { return n_; }
  int q() const { return q_; }
  int dim() const { return static_cast<int>(states_.size()); }
  const std::vector<std::pair<int, int>>& states() const { return states_; }

  std::pair<int, int> occupations(int index) const {
    if (index < 0 || index >= dim()) {
      throw std::out_of_range("ChargeSector::occupations: bad index");
    }
    return states_[static_cast<std::size_t>(index)];
  }

  bool contains(int n_a, int n_b) const {
    return n_a >= 0 && n_b >= 0 && static_cast<long>(n_) * n_a + n_b == q_;
  }

  int index_of(int n_a, int n_b) const {
    if (!contains(n_a, n_b)) {
      throw std::out_of_range("ChargeSector::index_of: (" +
                              std::to_string(n_a) + ", " +
                              std::to_string(n_b) + ") not in sector n=" +
                              std::to_string(n_) + ", Q=" + std::to_string(q_));
    }
    return q_ / n_ - n_a;  // descending N_A ordering
  }

  friend bool operator==(const ChargeSector&, const ChargeSector&) = default;

 private:
  int n_;
  int q_;
  std::vector<std::pair<int, int>> states_;
};

inline ChargeSector enumerate_sector(int n, int q) { return ChargeSector(n, q); }

/// Sparse complex matrix expressed in a fixed basis. The hermitian flag is a
/// promise made by the constructor (symmetric assembly), not a checked
/// property.
template <class Basis, typename Scalar = double>
struct OperatorMatrix {
  Basis basis;
  SparseCMatrix<Scalar> mat;
  bool hermitian = false;
};

namespace detail {

template <typename Scalar>
SparseCMatrix<Scalar> from_triplets(
    int dim, const std::vector<Eigen::Triplet<std::complex<Scalar>>>& ts) {
  SparseCMatrix<Scalar> m(dim, dim);
  m.setFromTriplets(ts.begin(), ts.end());
  m.makeCompressed();
  return m;
}

}  // namespace detail

/// Ladder and number operators on a truncated two-mode space. Raising past a
/// cutoff silently drops the amplitude; the evolution layer owns the leakage
/// check that makes that approximation explicit.
template <typename Scalar = double>
struct LadderOps {
  OperatorMatrix<TwoModeSpace, Scalar> a;
  OperatorMatrix<TwoModeSpace, Scalar> a_dag;
  OperatorMatrix<TwoModeSpace, Scalar> b;
  OperatorMatrix<TwoModeSpace, Scalar> b_dag;
  OperatorMatrix<TwoModeSpace, Scalar> n_a;
  OperatorMatrix<TwoModeSpace, Scalar> n_b;
};

template <typename Scalar = double>
LadderOps<Scalar> ladder_ops(const TwoModeSpace& space) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  const int ca = space.cutoff_a();
  const int cb = space.cutoff_b();

  std::vector<T> t_a, t_adag, t_b, t_bdag, t_na, t_nb;
  for (int na = 0; na <= ca; ++na) {
    for (int nb = 0; nb <= cb; ++nb) {
      const int col = space.index_of(na, nb);
      if (na > 0) {
        t_a.emplace_back(space.index_of(na - 1, nb), col,
                         std::sqrt(static_cast<Scalar>(na)));
      }
      if (na < ca) {
        t_adag.emplace_back(space.index_of(na + 1, nb), col,
                            std::sqrt(static_cast<Scalar>(na + 1)));
      }
      if (nb > 0) {
        t_b.emplace_back(space.index_of(na, nb - 1), col,
                         std::sqrt(static_cast<Scalar>(nb)));
      }
      if (nb < cb) {
        t_bdag.emplace_back(space.index_of(na, nb + 1), col,
                            std::sqrt(static_cast<Scalar>(nb + 1)));
      }
      if (na > 0) t_na.emplace_back(col, col, static_cast<Scalar>(na));
      if (nb > 0) t_nb.emplace_back(col, col, static_cast<Scalar>(nb));
    }
  }

  const int d = space.dim();
  return LadderOps<Scalar>{
      {space, detail::from_triplets<Scalar>(d, t_a), false},
      {space, detail::from_triplets<Scalar>(d, t_adag), false},
      {space, detail::from_triplets<Scalar>(d, t_b), false},
      {space, detail::from_triplets<Scalar>(d, t_bdag), false},
      {space, detail::from_triplets<Scalar>(d, t_na), true},
      {space, detail::from_triplets<Scalar>(d, t_nb), true}};
}

template <typename Scalar = double>
OperatorMatrix<TwoModeSpace, Scalar> number_op_a(const TwoModeSpace& space) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  std::vector<T> ts;
  for (int na = 1; na <= space.cutoff_a(); ++na) {
    for (int nb = 0; nb <= space.cutoff_b(); ++nb) {
      const int i = space.index_of(na, nb);
      ts.emplace_back(i, i, static_cast<Scalar>(na));
    }
  }
  return {space, detail::from_triplets<Scalar>(space.dim(), ts), true};
}

template <typename Scalar = double>
OperatorMatrix<TwoModeSpace, Scalar> number_op_b(const TwoModeSpace& space) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  std::vector<T> ts;
  for (int na = 0; na <= space.cutoff_a(); ++na) {
    for (int nb = 1; nb <= space.cutoff_b(); ++nb) {
      const int i = space.index_of(na, nb);
      ts.emplace_back(i, i, static_cast<Scalar>(nb));
    }
  }
  return {space, detail::from_triplets<Scalar>(space.dim(), ts), true};
}

template <typename Scalar = double>
OperatorMatrix<ChargeSector, Scalar> number_op_a(const ChargeSector& sector) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  std::vector<T> ts;
  for (int i = 0; i < sector.dim(); ++i) {
    const auto [na, nb] = sector.occupations(i);
    (void)nb;
    if (na > 0) ts.emplace_back(i, i, static_cast<Scalar>(na));
  }
  return {sector, detail::from_triplets<Scalar>(sector.dim(), ts), true};
}

template <typename Scalar = double>
OperatorMatrix<ChargeSector, Scalar> number_op_b(const ChargeSector& sector) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  std::vector<T> ts;
  for (int i = 0; i < sector.dim(); ++i) {
    const auto [na, nb] = sector.occupations(i);
    (void)na;
    if (nb > 0) ts.emplace_back(i, i, static_cast<Scalar>(nb));
  }
  return {sector, detail::from_triplets<Scalar>(sector.dim(), ts), true};
}

/// Conserved charge n n_a + n_b, diagonal in either basis.
template <typename Scalar = double>
OperatorMatrix<TwoModeSpace, Scalar> charge_op(int n, const TwoModeSpace& space) {
  using T = Eigen::Triplet<std::complex<Scalar>>;
  std::vector<T> ts;
  for (int na = 0; na <= space.cutoff_a(); ++na) {
    for (int nb = 0; nb <= space.cutoff_b(); ++nb) {
      const Scalar q = static_cast<Scalar>(n) * na + nb;
      if (q != Scalar(0)) ts.emplace_back(space.index_of(na, nb),
                                          space.index_of(na, nb), q);
    }
  }
  return {space, detail::from_triplets<Scalar>(space.dim(), ts), true};
}

}  // namespace qbat
