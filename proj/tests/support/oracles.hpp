#pragma once

// Independent reference implementations used only by the test suite. Each is
// deliberately written with a different algorithm than the library code it
// cross-checks.

#include "mitosiskit/linalg.hpp"
#include "mitosiskit/polynomial.hpp"
#include "mitosiskit/polytope.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mitosiskit::oracles {

// Enumerates vertices by solving every dim-subset of facet equations and
// keeping the feasible, full-rank solutions. Exponential, fine for tests.
std::vector<Vec> brute_force_vertices(int dim, const std::vector<Facet>& facets);

// Antiderivative of p with respect to var.
MultiPoly antiderivative(const MultiPoly& p, int var);

// Integral of p in var from lower to upper (polynomial bounds).
MultiPoly definite_integral(const MultiPoly& p, int var, const MultiPoly& lower,
                            const MultiPoly& upper);

// Euclidean volume of the triangular interlacing pattern with top row
// (l_1,...,l_n), computed by iterated integration row by row. Returns a
// polynomial in n variables.
MultiPoly gz_a_volume_by_integration(int n);

// Same for the symplectic pattern with rows x^1, y^1, x^2, ..., x^n whose
// bounds interleave: x^i_j in [y^{i-1}_{j+1}, y^{i-1}_j] (with y^0 = lambda
// and a zero lower bound at the row end), y^i_j in [x^i_{j+1}, x^i_j].
MultiPoly sgz_volume_by_integration(int n);

// Pipe dreams as subsets of {(row, col) : row, col >= 1}.
using PipeDream = std::set<std::pair<int, int>>;

// Classical mitosis rule on pipe dreams (Knutson-Miller): with
// start_i = min{ j : (i,j) not in D } and J = { j < start_i : (i+1,j) not in D },
// each p in J yields an offspring obtained from D by deleting (i,p) and moving
// (i,j) down to (i+1,j) for every j in J with j < p.
std::set<PipeDream> pipe_dream_mitosis(const PipeDream& d, int i);

// Length generating function of the permutation group on n letters, counted
// via inversions of explicitly enumerated permutations.
std::vector<long> length_histogram_sn(int n);

// Length generating function of the signed permutation group on n letters,
// counted via the closed inversion formula
//   l(w) = #{i<j : w(i)>w(j)} + #{i<=j : -w(i)>w(j)}.
std::vector<long> length_histogram_signed(int n);

// Runs a shell command, captures stdout, and reports the exit status.
struct CommandResult {
  std::string output;
  int status = -1;
};
CommandResult run_command(const std::string& command);

}  // namespace mitosiskit::oracles
