#include "permlab/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace permlab {

namespace {

void require_prob_params(double p, double t) {
  if (!(p > 0.0) || !(p < 0.5)) {
    throw std::invalid_argument("p must lie strictly in (0, 1/2)");
  }
  if (!(t > 0.0)) {
    throw std::invalid_argument("t must be positive");
  }
}

long long floor_2pn_plus_t(double p, double t, int n) {
  return static_cast<long long>(std::floor(2.0 * p * n + t));
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::prob_general: return "prob-general";
    case BoundKind::min_degree: return "min-degree";
    case BoundKind::cyclic_formula: return "cyclic-formula";
    case BoundKind::neighboring_lower: return "neighboring-lower";
    case BoundKind::agl_asymptotic: return "agl-asymptotic";
    case BoundKind::dihedral_asymptotic: return "dihedral-asymptotic";
  }
  return "unknown";
}

double prob_bound_lhs(const std::map<int, std::int64_t>& cycle_histogram, int n,
                      double p, double t) {
  require_prob_params(p, t);
  if (n < 1) throw std::invalid_argument("n must be positive");
  const double rate = p * p / (1.0 - p);
  double sum = 0.0;
  for (const auto& [cycles, multiplicity] : cycle_histogram) {
    // e^{-np^2/(1-p)} e^{c p^2/(1-p)} = e^{-(n-c) p^2/(1-p)}, never overflows.
    sum += static_cast<double>(multiplicity) *
           std::exp(-static_cast<double>(n - cycles) * rate);
  }
  return std::exp(-2.0 * t * t / n) + sum;
}

double prob_bound_lhs(const DifferenceSet& diff, double p, double t) {
  return prob_bound_lhs(cycle_count_histogram(diff), diff.degree, p, t);
}

namespace {

struct GridBest {
  bool found = false;
  long long guaranteed = 0;
  double p = 0.0;
  double t = 0.0;
  double lhs = 0.0;
};

void consider(GridBest& best, const std::map<int, std::int64_t>& hist, int n,
              double p, double t) {
  if (!(p > 0.0) || !(p < 0.5) || !(t > 0.0)) return;
  const double lhs = prob_bound_lhs(hist, n, p, t);
  if (lhs >= 1.0 - kLhsMargin) return;
  const long long guaranteed = n + 1 - floor_2pn_plus_t(p, t, n);
  if (!best.found || guaranteed > best.guaranteed ||
      (guaranteed == best.guaranteed &&
       (p < best.p || (p == best.p && t < best.t)))) {
    best = {true, guaranteed, p, t, lhs};
  }
}

}  // namespace

BoundReport prob_bound_optimize(const std::map<int, std::int64_t>& cycle_histogram,
                                int n, int grid) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (grid < 2) throw std::invalid_argument("grid must have at least 2 steps");
  GridBest best;
  const double p_step = 0.5 / (grid + 1);
  const double t_step = static_cast<double>(n) / grid;
  for (int i = 1; i <= grid; ++i) {
    for (int j = 1; j <= grid; ++j) {
      consider(best, cycle_histogram, n, p_step * i, t_step * j);
    }
  }
  if (best.found) {
    // One refinement pass over the cell around the winner.
    const double p_center = best.p;
    const double t_center = best.t;
    for (int i = -grid / 2; i <= grid / 2; ++i) {
      for (int j = -grid / 2; j <= grid / 2; ++j) {
        consider(best, cycle_histogram, n, p_center + 2.0 * p_step * i / grid,
                 t_center + 2.0 * t_step * j / grid);
      }
    }
  }

  BoundReport report;
  report.kind = BoundKind::prob_general;
  report.parameters["n"] = static_cast<double>(n);
  if (!best.found) {
    report.valid = false;
    report.reason = "no (p, t) grid point satisfies the inequality";
    return report;
  }
  report.valid = true;
  report.guaranteed_distance = best.guaranteed;
  report.lhs_value = best.lhs;
  report.parameters["p"] = best.p;
  report.parameters["t"] = best.t;
  return report;
}

BoundReport prob_bound_optimize(const DifferenceSet& diff, int grid) {
  return prob_bound_optimize(cycle_count_histogram(diff), diff.degree, grid);
}

BoundReport min_degree_bound(double code_size, int min_deg, int n, double p,
                             double t) {
  require_prob_params(p, t);
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (code_size < 1.0) throw std::invalid_argument("code size must be >= 1");
  if (min_deg < 0) throw std::invalid_argument("minimal degree must be >= 0");
  // |C| e^{-x} in log space so huge codes cannot overflow the product.
  const double second_term =
      std::exp(std::log(code_size) - min_deg * p * p / (2.0 * (1.0 - p)));
  const double lhs = std::exp(-2.0 * t * t / n) + second_term;

  BoundReport report;
  report.kind = BoundKind::min_degree;
  report.lhs_value = lhs;
  report.parameters["code_size"] = code_size;
  report.parameters["min_deg"] = static_cast<double>(min_deg);
  report.parameters["n"] = static_cast<double>(n);
  report.parameters["p"] = p;
  report.parameters["t"] = t;
  if (lhs < 1.0 - kLhsMargin) {
    report.valid = true;
    report.guaranteed_distance = n + 1 - floor_2pn_plus_t(p, t, n);
  } else {
    report.reason = "inequality not satisfied";
  }
  return report;
}

BoundReport agl_asymptotic_params(long long q) {
  if (q < 3 || !is_prime(q)) {
    throw std::invalid_argument("q must be an odd prime");
  }
  const double qd = static_cast<double>(q);
  const double log_q1 = std::log(qd + 1.0);
  const double t = std::sqrt(qd * log_q1);
  const double p = std::sqrt(4.0 * log_q1 / (qd - 1.0));
  const double closed_form = (1.0 + qd * qd) / ((qd + 1.0) * (qd + 1.0));

  BoundReport report;
  report.kind = BoundKind::agl_asymptotic;
  report.parameters["q"] = qd;
  report.parameters["p"] = p;
  report.parameters["t"] = t;
  report.parameters["closed_form_value"] = closed_form;
  if (p >= 0.5) {
    report.valid = false;
    report.reason = "p >= 1/2 at this q; the asymptotic regime is not reached";
    return report;
  }
  BoundReport inner =
      min_degree_bound(qd * (qd - 1.0), static_cast<int>(q - 1),
                       static_cast<int>(q), p, t);
  report.valid = inner.valid;
  report.guaranteed_distance = inner.guaranteed_distance;
  report.lhs_value = inner.lhs_value;
  report.parameters["code_size"] = qd * (qd - 1.0);
  report.parameters["min_deg"] = qd - 1.0;
  report.reason = inner.reason;
  return report;
}

BoundReport dihedral_asymptotic_params(long long n) {
  BoundReport report;
  report.kind = BoundKind::dihedral_asymptotic;
  report.parameters["n"] = static_cast<double>(n);
  if (n < 37) {
    report.valid = false;
    report.reason = "the dihedral parameters need n >= 37";
    return report;
  }
  const double nd = static_cast<double>(n);
  const double log_2n2 = std::log(2.0 * nd + 2.0);
  const double t = std::sqrt(nd * log_2n2 / 2.0);
  const double p = std::sqrt(log_2n2 / (nd / 2.0 - 1.0));
  const double closed_form = (2.0 * nd + 1.0) / (2.0 * nd + 2.0);
  report.parameters["p"] = p;
  report.parameters["t"] = t;
  report.parameters["closed_form_value"] = closed_form;
  if (p >= 0.5) {
    report.valid = false;
    report.reason = "p >= 1/2 at this n";
    return report;
  }
  BoundReport inner = min_degree_bound(2.0 * nd, static_cast<int>(n - 2),
                                       static_cast<int>(n), p, t);
  report.valid = inner.valid;
  report.guaranteed_distance = inner.guaranteed_distance;
  report.lhs_value = inner.lhs_value;
  report.parameters["code_size"] = 2.0 * nd;
  report.parameters["min_deg"] = nd - 2.0;
  report.reason = inner.reason;
  return report;
}

long long cyclic_k(long long n) {
  if (n < 2) throw std::invalid_argument("the cyclic formula needs n >= 2");
  long long k = 1;
  while (k * (k + 1) < n - 1) ++k;
  return k;
}

long long cyclic_lmax_formula(long long n) { return n - cyclic_k(n); }

NeighboringBound neighboring_lower_bound_agl(int p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
  if (p == 3 || p == 5) return {true, 0.0};
  return {false, std::max(std::sqrt(2.0 * (p - 1)), 6.0)};
}

const BigInt& CycleIndexPolynomial::coefficient(int power) const {
  static const BigInt zero = 0;
  if (power < 0 || power > degree()) return zero;
  return coefficients[static_cast<std::size_t>(power)];
}

namespace {

// coefficients *= (1 + x^step)^exponent.
void multiply_binomial_factor(std::vector<BigInt>& coefficients, int step,
                              int exponent) {
  for (int rep = 0; rep < exponent; ++rep) {
    std::vector<BigInt> next(coefficients.size() + static_cast<std::size_t>(step),
                             BigInt(0));
    for (std::size_t s = 0; s < coefficients.size(); ++s) {
      next[s] += coefficients[s];
      next[s + static_cast<std::size_t>(step)] += coefficients[s];
    }
    coefficients = std::move(next);
  }
}

void add_scaled(std::vector<BigInt>& into, const std::vector<BigInt>& term,
                const BigInt& scale) {
  if (into.size() < term.size()) into.resize(term.size(), BigInt(0));
  for (std::size_t s = 0; s < term.size(); ++s) into[s] += term[s] * scale;
}

}  // namespace

CycleIndexPolynomial cycle_index_poly(const Permutation& f) {
  std::vector<BigInt> coefficients{BigInt(1)};
  for (int length : cycle_type(f).lengths) {
    multiply_binomial_factor(coefficients, length, 1);
  }
  return CycleIndexPolynomial{std::move(coefficients)};
}

CycleIndexPolynomial agl_cycle_index(int p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
  // (p-1) copies of 1 + x^p for the full cycles.
  std::vector<BigInt> total(static_cast<std::size_t>(p) + 1, BigInt(0));
  total[0] = p - 1;
  total[static_cast<std::size_t>(p)] = p - 1;
  // p phi(i) elements of order i for each divisor i > 1 of p-1, each with one
  // fixed point and (p-1)/i cycles of length i.
  for (int i = 2; i <= p - 1; ++i) {
    if ((p - 1) % i != 0) continue;
    std::vector<BigInt> term{BigInt(1), BigInt(1)};  // (1 + x)
    multiply_binomial_factor(term, i, (p - 1) / i);
    add_scaled(total, term, BigInt(p) * euler_totient(i));
  }
  return CycleIndexPolynomial{std::move(total)};
}

long long euler_totient(long long m) {
  if (m < 1) throw std::invalid_argument("totient needs a positive argument");
  long long result = m;
  long long rest = m;
  for (long long d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      result -= result / d;
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

namespace {

// Rational bracket of pi with denominator 10^15.
const BigInt kPiLowNumerator("3141592653589793");
const BigInt kPiHighNumerator("3141592653589794");
const BigInt kPiDenominator("1000000000000000");

// Decides x > bound and x <= bound for bound = p^3/sqrt(pi(p-1)/4) * 2^{(p-1)/2}
// by comparing x^2 * pi * (p-1) against 4 p^6 2^{p-1}, exactly.
struct BoundComparison {
  bool definitely_greater;
  bool definitely_at_most;
};

BoundComparison compare_with_analytic_bound(const BigInt& x, int p) {
  const BigInt x2 = x * x * (p - 1);
  BigInt rhs = 4;
  rhs *= BigInt(p) * p * p;
  rhs *= BigInt(p) * p * p;
  rhs <<= p - 1;  // times 2^{p-1}
  const BigInt scaled_rhs = rhs * kPiDenominator;
  return {x2 * kPiLowNumerator > scaled_rhs, x2 * kPiHighNumerator <= scaled_rhs};
}

}  // namespace

SubsetCountingReport agl_subset_counting_check(int p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime");
  }
  SubsetCountingReport report;
  report.p = p;
  report.subset_coefficient = agl_cycle_index(p).coefficient((p - 1) / 2);
  report.central_binomial = binomial(p, (p - 1) / 2);
  report.analytic_bound = static_cast<double>(p) * p * p /
                          std::sqrt(M_PI * (p - 1) / 4.0) *
                          std::pow(2.0, (p - 1) / 2.0);
  report.coefficient_within_bound =
      compare_with_analytic_bound(report.subset_coefficient, p)
          .definitely_at_most;
  report.binomial_exceeds_bound =
      compare_with_analytic_bound(report.central_binomial, p)
          .definitely_greater;
  report.chain_holds =
      report.coefficient_within_bound && report.binomial_exceeds_bound;
  return report;
}

}  // namespace permlab
