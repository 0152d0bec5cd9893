#include "lossy/framework.hpp"

#include <sstream>
#include <stdexcept>

namespace lossy {

std::string problem_name(problem_id p) {
  switch (p) {
    case problem_id::cvc: return "cvc";
    case problem_id::cp: return "cp";
    case problem_id::df: return "df";
    case problem_id::pvc: return "pvc";
    case problem_id::steiner: return "steiner";
    case problem_id::ola: return "ola";
  }
  return "?";
}

problem_id problem_from_name(const std::string& s) {
  if (s == "cvc") return problem_id::cvc;
  if (s == "cp") return problem_id::cp;
  if (s == "df") return problem_id::df;
  if (s == "pvc") return problem_id::pvc;
  if (s == "steiner") return problem_id::steiner;
  if (s == "ola") return problem_id::ola;
  throw std::invalid_argument("unknown problem '" + s + "'");
}

orientation problem_orientation(problem_id p) {
  switch (p) {
    case problem_id::cvc:
    case problem_id::steiner:
    case problem_id::ola:
      return orientation::minimize;
    case problem_id::cp:
    case problem_id::df:
    case problem_id::pvc:
      return orientation::maximize;
  }
  return orientation::minimize;
}

long long ext_value::finite_value() const {
  if (t != tag::finite) throw std::logic_error("ext_value: not finite");
  return v;
}

std::string ext_value::str() const {
  switch (t) {
    case tag::finite: return std::to_string(v);
    case tag::pos_inf: return "inf";
    case tag::neg_inf: return "-inf";
  }
  return "?";
}

long long capped(long long size, long long k) { return size < k + 1 ? size : k + 1; }

rational alpha_from_eps_min(const rational& eps) { return rational(1) + eps; }

rational alpha_from_eps_max(const rational& eps) {
  if (!(rational(0) < eps && eps < rational(1)))
    throw std::invalid_argument("epsilon must be in (0,1)");
  return rational(1) / (rational(1) - eps);
}

ext_ratio ext_ratio::of(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("ext_ratio: nonpositive denominator");
  return {false, num, den};
}

ext_ratio performance_ratio(const ext_value& val, const ext_value& opt, orientation o) {
  if (!opt.is_finite()) {
    // Optimum is itself infeasible (e.g. CVC on a graph with no connected
    // vertex cover): any solution is as good as it gets.
    return ext_ratio::of(1, 1);
  }
  if (!val.is_finite()) return ext_ratio::infinite();
  long long v = val.finite_value(), b = opt.finite_value();
  if (o == orientation::maximize) std::swap(v, b);  // ratio is worst-over-best
  if (b == 0) return v == 0 ? ext_ratio::of(1, 1) : ext_ratio::infinite();
  return ext_ratio::of(v, b);
}

bool ratio_leq(const ext_ratio& a, const ext_ratio& b) {
  if (b.inf) return true;
  if (a.inf) return false;
  return a.num * b.den <= b.num * a.den;
}

bool ratio_leq(const ext_ratio& a, const rational& b) {
  if (a.inf) return false;
  return a.num * b.den <= b.num * a.den;
}

bool ratio_geq(const ext_ratio& a, const rational& b) {
  if (a.inf) return true;
  return a.num * b.den >= b.num * a.den;
}

bool preprocessing_ineq_holds(orientation o, const ext_value& val, const ext_value& opt,
                              const ext_value& val_red, const ext_value& opt_red,
                              const rational& alpha) {
  ext_ratio lhs = performance_ratio(val, opt, o);
  ext_ratio rhs = performance_ratio(val_red, opt_red, o);
  if (rhs.inf) return true;
  if (lhs.inf) return false;
  // lhs <= alpha * rhs, exactly.
  return lhs.num * rhs.den * alpha.den <= alpha.num * rhs.num * lhs.den;
}

bool strictness_holds(orientation o, const ext_value& val, const ext_value& opt,
                      const ext_value& val_red, const ext_value& opt_red,
                      const rational& alpha) {
  ext_ratio lhs = performance_ratio(val, opt, o);
  ext_ratio rhs = performance_ratio(val_red, opt_red, o);
  // Both orientations reduce to: lifted worst-over-best ratio must not
  // exceed max(reduced ratio, alpha).
  return ratio_leq(lhs, rhs) || ratio_leq(lhs, alpha);
}

std::optional<double> achieved_ratio(orientation o, const ext_value& val, const ext_value& opt,
                                     const ext_value& val_red, const ext_value& opt_red) {
  ext_ratio lhs = performance_ratio(val, opt, o);
  ext_ratio rhs = performance_ratio(val_red, opt_red, o);
  if (lhs.inf || rhs.inf) return std::nullopt;
  if (rhs.num == 0) return lhs.num == 0 ? std::optional<double>(1.0) : std::nullopt;
  double r = (double(lhs.num) / double(lhs.den)) / (double(rhs.num) / double(rhs.den));
  // Report the ratio in the orientation of the original definition: for
  // maximization a perfect kernel gives 1, a lossy one gives < 1.
  return o == orientation::minimize ? r : 1.0 / r;
}

std::string ratio_report::csv_header() {
  return "instance,problem,accuracy,n,k,n_reduced,k_reduced,opt,opt_reduced,"
         "val_kernel_sol,val_lifted,ratio,strict_ok";
}

namespace {
std::string opt_str(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : "";
}
}  // namespace

std::string ratio_report::csv_row() const {
  std::ostringstream out;
  out << instance << "," << problem << "," << accuracy << "," << n << "," << k << ","
      << n_reduced << "," << k_reduced << "," << opt_str(opt) << "," << opt_str(opt_reduced)
      << "," << opt_str(val_kernel_sol) << "," << opt_str(val_lifted) << ",";
  if (ratio) {
    std::ostringstream r;
    r.precision(6);
    r << *ratio;
    out << r.str();
  }
  out << "," << strict_ok;
  return out.str();
}

}  // namespace lossy
