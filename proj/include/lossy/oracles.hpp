#pragma once

#include <optional>
#include <stdexcept>

#include "lossy/feasibility.hpp"

namespace lossy {

// Exact solvers used as ground truth by the acceptance harness. They share
// only the value-function definitions with the kernels, never solver logic,
// and refuse instances beyond their budgets instead of approximating.
struct oracle_budget {
  long long max_vertices = 20;      // CVC / PVC subset enumeration
  long long max_cp_vertices = 18;   // cycle packing search
  long long max_string_len = 64;    // disjoint factors DP
  long long max_alphabet = 16;
  long long max_ola_vertices = 9;   // permutation enumeration
  long long max_terminals = 12;     // Dreyfus-Wagner subset DP
};

struct oracle_refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cvc_oracle_result {
  long long value = 0;  // min over connected vertex covers, capped at k+1
  std::optional<std::set<vertex_id>> witness;
};
cvc_oracle_result exact_cvc(const multigraph& g, long long k, const oracle_budget& b = {});

struct cp_oracle_result {
  long long value = 0;  // max disjoint-cycle count, capped at k+1
  std::vector<std::vector<vertex_id>> witness;
};
cp_oracle_result exact_cp(const multigraph& g, long long k, const oracle_budget& b = {});

struct df_oracle_result {
  long long value = 0;
  std::vector<factor> witness;
};
df_oracle_result exact_df(const std::vector<symbol>& s, const oracle_budget& b = {});

struct pvc_oracle_result {
  long long value = 0;
  std::set<vertex_id> witness;
};
pvc_oracle_result exact_pvc(const multigraph& g, long long k, const oracle_budget& b = {});

struct ola_oracle_result {
  long long value = 0;
  std::map<vertex_id, int> witness;
};
ola_oracle_result exact_ola(const multigraph& g, const oracle_budget& b = {});

// Minimum (not necessarily connected) vertex cover; used to parameterize
// structural bounds in tests.
std::set<vertex_id> exact_min_vertex_cover(const multigraph& g, const oracle_budget& b = {});

}  // namespace lossy
