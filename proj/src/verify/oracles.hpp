#pragma once

#include "weylva/fock_module.hpp"
#include "weylva/mode_algebra.hpp"
#include "weylva/weight_modules.hpp"

#include <map>
#include <vector>

namespace weylva::oracle {

// Coefficients of prod_{n>=1} (1 - q^n)^{-2} up to q^max_d, by truncated power-series multiplication.
std::vector<Integer> bipartition_series(int max_d);

// Faithful differential-operator model of the mode algebra: a*_n = x_n, a_m = d/dx_{-m}.
using Monomial = std::map<int, int>;  // variable -> exponent
using Polynomial = std::map<Monomial, Rational>;

Polynomial apply(const ModeElement& e, const Polynomial& p);
// All monomials of total degree <= degree in the given variables.
std::vector<Polynomial> probe_polynomials(const std::vector<int>& variables, int degree);
// True iff e1 and e2 agree on every probe built from the variables they touch.
bool same_operator(const ModeElement& e1, const ModeElement& e2);

// Sum over complete contraction matchings of annihilator word beta against creator word alpha.
Rational wick_full_contraction(const ModeWord& beta, const ModeWord& alpha);

// Free-field mode sums: L_n = sum_{p+q=n} (-q) :a_p a*_q:, J_n = sum_{p+q=n} :a_p a*_q:.
FockVector free_field_virasoro(int n, const FockVector& t);
FockVector free_field_heisenberg(int n, const FockVector& t);

// Dimension of the (d, j) piece by counting fock_basis monomials.
Integer brute_graded_dimension(int d, int j);
std::map<std::pair<int, int>, Integer> brute_graded_table(int max_d, int j_max);

// Dense action matrix of a generator on the window basis; columns are source exponents.
std::vector<std::vector<Rational>> dense_action(const WeylModuleShape& shape, WeylGenerator g);

}  // namespace weylva::oracle
