#pragma once

#include "qsnake/exec.hpp"
#include "qsnake/kronecker.hpp"
#include "qsnake/seed.hpp"
#include "qsnake/typea.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qsnake {

/// Calls visit(seed) for the initial seed and every seed reached by a
/// mutation sequence of length <= max_len (prefix order).
void for_each_mutation_sequence(const QuantumSeed& start, int max_len,
                                const std::function<void(const QuantumSeed&)>& visit);

/// verify_quantization on every seed reachable in <= max_len steps.
CheckReport check_quantization(const IntMatrix& btilde, int max_len, const std::string& tag);

/// Route agreement, exchange relations and commutation exponents of x_{n+3}
/// with the frozen variables.
CheckReport check_kronecker_routes(int n_max, Exec exec = Exec::parallel);
CheckReport check_level_counts(int n_max);
CheckReport check_classical_limits(int n_max);
CheckReport check_bar_invariance(int n_max);
CheckReport check_negative_route(int n_max);

/// Per orientation of A_n: all arc expansions have unit coefficients and
/// coincide with the cluster variables found by exchange-graph search.
CheckReport check_typea(int n, Exec exec = Exec::parallel);

CheckReport check_stembridge(int n_max, Exec exec = Exec::parallel);

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown name.
CheckReport run_suite(const std::string& name, int n_max, Exec exec = Exec::parallel);

}  // namespace qsnake
