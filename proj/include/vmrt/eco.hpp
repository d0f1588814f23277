#pragma once

#include <memory>
#include <span>
#include <vector>

#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// Certificate polynomials for degree-2m ECO polynomials (squares of
/// degree-m polynomials), in variables t1..tm.
///
/// G_0 = 1 and G_k = (t_k - sum_{i=1}^{k-1} G_i G_{k-i}) / 2 for k <= m solve
/// (1 + s_1 L + ... + s_m L^m)^2 = 1 + a_1 L + ... for s given a_1..a_m.
/// A_k = sum_l G_l G_{k-l} (G_l = 0 for l > m) then predicts a_k for k > m.
/// With weight(t_i) = i every G_k and A_k is weighted homogeneous of
/// weighted degree k.
struct EcoFamily {
  int m = 0;
  VarList vars;                 // t1..tm
  std::vector<SparsePoly> G;    // G[0..m]
  std::vector<SparsePoly> A;    // A[k - m - 1] = A_k, k = m+1..2m
  std::vector<std::vector<SparsePoly>> A_partials;  // [k - m - 1][j - 1] = dA_k/dt_j

  const SparsePoly& A_of(int k) const { return A.at(static_cast<size_t>(k - m - 1)); }
  const SparsePoly& dA(int k, int j) const {
    return A_partials.at(static_cast<size_t>(k - m - 1)).at(static_cast<size_t>(j - 1));
  }
};

/// Builds (once per m, then served from a process-wide cache) the family for
/// m >= 1. Throws Error(InvalidArgument) for m = 0.
std::shared_ptr<const EcoFamily> build_family(int m);

struct EcoCertificate {
  int m = 0;
  std::vector<Rat> sigma;      // s_1..s_m
  bool pass = false;
  std::vector<Rat> residuals;  // a_k - A_k(a_1..a_m), k = m+1..2m
};

/// Decides whether 1 + a_1 L + ... + a_{2m} L^{2m} is the square of a
/// polynomial of degree <= m with constant term 1. Throws Error(OddLength)
/// unless a has even, positive length.
EcoCertificate certify(std::span<const Rat> a);

/// Every monomial prod t_j^{i_j} satisfies sum weights[j] * i_j == k.
bool is_weighted_homogeneous(const SparsePoly& p, int k, std::span<const int> weights);

}  // namespace vmrt
