#pragma once

// Graded lambda-ring operations on the free model, Adams operations, the
// line-element action and sigma-division through the localization.

#include "kdim/atoms.hpp"
#include "kdim/motivic.hpp"
#include "kdim/series.hpp"

#include <string>
#include <vector>

namespace kdim {

using ClassSeries = TruncatedSeries<MotivicClass>;
using LocalizedSeries = TruncatedSeries<LocalizedClass>;

/// lambda_t(a) = sum_m lambda^m(a) t^m up to order N.
/// Throws MissingSymDataError if an atom lacks the needed Sym^m entries.
ClassSeries lambda_t(const MotivicClass& a, unsigned order, const AtomTable& table);
MotivicClass lambda(unsigned m, const MotivicClass& a, const AtomTable& table);

/// psi_1 .. psi_n of a via the Newton recurrence for lambda_t(1) = 1/(1 - t):
/// psi_n = n lambda^n - sum_{i=1}^{n-1} lambda^i psi_(n-i), i.e. t d/dt log lambda_t = sum psi_n t^n.
std::vector<MotivicClass> adams_sequence(unsigned n, const MotivicClass& a, const AtomTable& table);
MotivicClass adams(unsigned n, const MotivicClass& a, const AtomTable& table);

/// prod_I (1 + m_I t)^(a_I) with each m_I a monic monomial in T, L.
struct LineElement {
  struct Factor {
    Exponent monomial;
    long exponent;
  };
  std::vector<Factor> factors;

  /// sigma_t(f) for f = sum_I c_I m_I: the factors (m_I, c_I).
  static LineElement sigma(const TLPoly& f);
  /// f(m^n) = sum_I a_I m_I^n.
  TLPoly power_sum(unsigned n) const;
};

/// prod_I phi(m_I t)^(a_I), truncated at the order of phi.
ClassSeries line_act(const LineElement& e, const ClassSeries& phi);
LocalizedSeries line_act(const LineElement& e, const LocalizedSeries& phi);

/// The unique phi = 1 + sum b_n t^n with sigma_t(f) o phi = psi up to the order.
/// Throws DomainError when some f(m^n) is not a unit times a product of the
/// permitted denominators T, L, L-T, [P^k].
LocalizedSeries solve_sigma_division(const TLPoly& f, const ClassSeries& psi, unsigned order);

LocalizedSeries localize(const ClassSeries& s);

/// Partitions of m with parts in non-increasing order, largest first ([m] first).
std::vector<std::vector<unsigned>> partitions(unsigned m);
std::string partition_label(const std::vector<unsigned>& parts);

struct StratificationReport {
  std::vector<std::vector<unsigned>> parts;
  bool has_data = false;
  bool holds = false;
  MotivicClass symmetric_power;   // lambda^m of the atom
  MotivicClass strata_sum;        // sum over supplied strata
  std::vector<std::string> missing;  // partitions with no supplied stratum
};

/// Compare lambda^m([A]) with the sum of the supplied Sym^alpha strata of A.
StratificationReport sym_power_stratification(const Atom& atom, unsigned m, const AtomTable& table);

}  // namespace kdim
