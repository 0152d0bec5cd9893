#pragma once

#include <optional>
#include <string>

#include "lossy/rational.hpp"

namespace lossy {

enum class orientation { minimize, maximize };

enum class problem_id { cvc, cp, df, pvc, steiner, ola };
std::string problem_name(problem_id p);
problem_id problem_from_name(const std::string& s);
orientation problem_orientation(problem_id p);

// Extended solution value: finite, +inf (infeasible for minimization) or
// -inf (infeasible for maximization).
struct ext_value {
  enum class tag { finite, pos_inf, neg_inf };
  tag t = tag::finite;
  long long v = 0;

  static ext_value finite(long long x) { return {tag::finite, x}; }
  static ext_value pos_inf() { return {tag::pos_inf, 0}; }
  static ext_value neg_inf() { return {tag::neg_inf, 0}; }
  static ext_value infeasible(orientation o) {
    return o == orientation::minimize ? pos_inf() : neg_inf();
  }

  bool is_finite() const { return t == tag::finite; }
  long long finite_value() const;
  std::string str() const;
  bool operator==(const ext_value&) const = default;
};

// Value capping at k+1: solutions beyond the parameter threshold all count
// the same ("min(|S|, k+1)").
long long capped(long long size, long long k);

// Accuracy conversions used throughout: a minimization PSAKS run with
// epsilon uses alpha = 1 + epsilon; a maximization one guarantees a factor
// (1 - epsilon), i.e. alpha = 1/(1-epsilon).
rational alpha_from_eps_min(const rational& eps);
rational alpha_from_eps_max(const rational& eps);

// Performance ratio val/opt as an exact extended fraction. Conventions for
// degenerate optima: 0/0 counts as ratio 1 (a solution matching a zero
// optimum is exact); a positive value against a zero optimum is +inf.
struct ext_ratio {
  bool inf = false;
  long long num = 0;
  long long den = 1;
  static ext_ratio infinite() { return {true, 0, 1}; }
  static ext_ratio of(long long num, long long den);
};

ext_ratio performance_ratio(const ext_value& val, const ext_value& opt, orientation o);
bool ratio_leq(const ext_ratio& a, const ext_ratio& b);
bool ratio_leq(const ext_ratio& a, const rational& b);
bool ratio_geq(const ext_ratio& a, const rational& b);

// Definition of an alpha-approximate pre-processing step:
//   min:  val/opt  <=  alpha * val'/opt'
//   max:  alpha * val/opt  >=  val'/opt'
bool preprocessing_ineq_holds(orientation o, const ext_value& val, const ext_value& opt,
                              const ext_value& val_red, const ext_value& opt_red,
                              const rational& alpha);

// Strictness:
//   min:  val/opt  <=  max(val'/opt', alpha)
//   max:  val/opt  >=  min(val'/opt', 1/alpha)
bool strictness_holds(orientation o, const ext_value& val, const ext_value& opt,
                      const ext_value& val_red, const ext_value& opt_red,
                      const rational& alpha);

// Achieved ratio for reports: (val/opt) / (val'/opt'), orientation-fixed so
// that a violation reads as ratio > alpha for minimization and
// ratio < 1/alpha for maximization.
std::optional<double> achieved_ratio(orientation o, const ext_value& val, const ext_value& opt,
                                     const ext_value& val_red, const ext_value& opt_red);

// One experiment row. Serializes to CSV with a fixed column order.
struct ratio_report {
  std::string instance;
  std::string problem;
  std::string accuracy;
  long long n = 0;
  long long k = 0;
  long long n_reduced = 0;
  long long k_reduced = 0;
  std::optional<long long> opt;
  std::optional<long long> opt_reduced;
  std::optional<long long> val_kernel_sol;
  std::optional<long long> val_lifted;
  std::optional<double> ratio;
  std::string strict_ok = "na";  // "1", "0", "na" or "unverified"

  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace lossy
