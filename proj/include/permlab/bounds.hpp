#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "permlab/analysis.hpp"

namespace permlab {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundKind {
  prob_general,
  min_degree,
  cyclic_formula,
  neighboring_lower,
  agl_asymptotic,
  dihedral_asymptotic,
};

std::string_view to_string(BoundKind kind);

/// A guaranteed-distance claim: when `valid`, some labeling of the code
/// reaches minimal distance >= guaranteed_distance (which is
/// n + 1 - floor(2pn + t) for the probabilistic kinds).
struct BoundReport {
  BoundKind kind = BoundKind::prob_general;
  bool valid = false;
  std::optional<long long> guaranteed_distance;
  std::optional<double> lhs_value;
  std::map<std::string, double> parameters;
  std::string reason;  // set when invalid
};

/// The inequalities are strict; doubles get this margin below 1.
inline constexpr double kLhsMargin = 1e-9;

/// Left-hand side e^{-2t^2/n} + e^{-np^2/(1-p)} * sum_f e^{c(f) p^2/(1-p)}
/// over the difference set, evaluated from its cycle-count histogram.
/// Requires 0 < p < 1/2 and t > 0.
double prob_bound_lhs(const std::map<int, std::int64_t>& cycle_histogram, int n,
                      double p, double t);
double prob_bound_lhs(const DifferenceSet& diff, double p, double t);

/// Maximizes n + 1 - floor(2pn + t) over a (p, t) grid subject to the strict
/// inequality, with one refinement pass around the best cell. Ties break to
/// the smallest p, then the smallest t. Invalid when no grid point qualifies.
BoundReport prob_bound_optimize(const std::map<int, std::int64_t>& cycle_histogram,
                                int n, int grid = 400);
BoundReport prob_bound_optimize(const DifferenceSet& diff, int grid = 400);

/// Group variant using only |C| and the minimal degree d:
/// e^{-2t^2/n} + |C| e^{-d p^2 / (2(1-p))} < 1.
BoundReport min_degree_bound(double code_size, int min_deg, int n, double p,
                             double t);

/// Instantiation for AGL(q): t = sqrt(q ln(q+1)), p = sqrt(4 ln(q+1)/(q-1)),
/// |C| = q(q-1), minimal degree q-1. parameters["closed_form_value"] carries
/// the closed form 1/(q+1)^2 + q^2/(q+1)^2 upper-bounding the exact LHS.
BoundReport agl_asymptotic_params(long long q);

/// Instantiation for D_n, n >= 37: t = sqrt(n ln(2n+2)/2),
/// p = sqrt(ln(2n+2)/(n/2-1)), |C| = 2n, minimal degree n-2. The closed form
/// is 1/(2n+2) + 2n/(2n+2).
BoundReport dihedral_asymptotic_params(long long n);

/// Smallest k with k(k+1) >= n-1, i.e. ceil((sqrt(4n-3)-1)/2), in exact
/// integer arithmetic.
long long cyclic_k(long long n);
/// Optimal relabeled distance of a transitive cyclic group: n - cyclic_k(n).
long long cyclic_lmax_formula(long long n);

/// Lower bound max{sqrt(2(p-1)), 6} on the neighboring order of AGL(p) for
/// primes p >= 7; for p in {3, 5} the order is infinite.
struct NeighboringBound {
  bool infinite = false;
  double value = 0.0;
};
NeighboringBound neighboring_lower_bound_agl(int p);

/// Z_f(x) = prod_i (1 + x^i)^{a_i(f)}: the coefficient of x^s counts the
/// f-invariant unions of cycles of total size s. Exact integers throughout.
struct CycleIndexPolynomial {
  std::vector<BigInt> coefficients;  // index = power of x

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const BigInt& coefficient(int power) const;

  friend bool operator==(const CycleIndexPolynomial& a,
                         const CycleIndexPolynomial& b) = default;
};

CycleIndexPolynomial cycle_index_poly(const Permutation& f);

/// Closed form of sum_{f in AGL(p), f != id} Z_f(x):
/// (p-1)(1+x^p) + sum_{i | p-1, i > 1} p phi(i) (1+x)(1+x^i)^{(p-1)/i}.
CycleIndexPolynomial agl_cycle_index(int p);

long long euler_totient(long long m);
BigInt binomial(long long n, long long k);

/// The counting comparison behind the O(AGL(p)) <= p regime: the exact
/// coefficient of x^{(p-1)/2} in Z_AGL(p), the analytic bound
/// p^3/sqrt(pi(p-1)/4) * 2^{(p-1)/2}, and C(p, (p-1)/2). The two comparisons
/// against the irrational bound are decided exactly by squaring and using a
/// rational bracket of pi.
struct SubsetCountingReport {
  int p = 0;
  BigInt subset_coefficient;
  BigInt central_binomial;
  double analytic_bound = 0.0;
  bool coefficient_within_bound = false;
  bool binomial_exceeds_bound = false;
  bool chain_holds = false;
};

SubsetCountingReport agl_subset_counting_check(int p);

}  // namespace permlab
