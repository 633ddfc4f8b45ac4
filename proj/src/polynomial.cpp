#include "khwb/polynomial.hpp"

#include <sstream>

#include "khwb/error.hpp"

namespace khwb {

LaurentPoly kauffman_bracket(const KnotDiagram& d, std::size_t max_states) {
  const int n = d.crossing_count();
  if (n > 31 || (std::size_t(1) << n) > max_states)
    throw GuardError("kauffman_bracket: 2^" + std::to_string(n) + " states exceeds the guard");

  // (q + q^{-1})^c for every possible circle count
  const int max_circles = n + 1 + d.free_circle_count() + 1;
  std::vector<LaurentPoly> weight(max_circles + 1);
  weight[0] = LaurentPoly::monomial(0, 1);
  for (int c = 1; c <= max_circles; ++c) weight[c] = weight[c - 1] * circle_weight();

  LaurentPoly sum;
  const std::uint32_t states = 1u << n;
  for (std::uint32_t s = 0; s < states; ++s) {
    const int ones = __builtin_popcount(s);
    const Resolution r = d.resolve(s);
    LaurentPoly term = weight[r.circle_count].shifted(ones);
    if (ones & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

LaurentPoly jones_unnormalized(const KnotDiagram& d, std::size_t max_states) {
  const int n_minus = d.negative_crossings();
  const int n_plus = d.positive_crossings();
  LaurentPoly p = kauffman_bracket(d, max_states).shifted(n_plus - 2 * n_minus);
  return (n_minus & 1) ? -p : p;
}

Rational vassiliev_extend(const ScalarInvariant& inv, const SingularDiagram& s) {
  const std::size_t m = s.doubled.size();
  Rational total = 0;
  for (std::uint32_t choice = 0; choice < (1u << m); ++choice) {
    KnotDiagram resolved = s.base;
    int switches = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (choice >> i & 1u) {
        resolved = resolved.switched(s.doubled[i]);
        ++switches;
      }
    const Rational v = inv.evaluate(resolved);
    total += (switches & 1) ? -v : v;
  }
  return total;
}

std::vector<Rational> h_expansion(const LaurentPoly& p, int order) {
  if (order < 0 || order > 16) throw GuardError("h_expansion: order must be in 0..16");
  // coefficient of h^m in sum_k c_k e^{kh} is sum_k c_k k^m / m!
  std::vector<Rational> out(order + 1, Rational(0));
  Rational factorial = 1;
  for (int m = 0; m <= order; ++m) {
    if (m > 0) factorial *= m;
    Rational acc = 0;
    for (const auto& [k, c] : p.terms()) {
      Int power = 1;
      for (int t = 0; t < m; ++t) power *= k;
      acc += Rational(c * power);
    }
    out[m] = acc / factorial;
  }
  return out;
}

ScalarInvariant jones_h_coefficient(int m, std::size_t max_states) {
  ScalarInvariant inv;
  inv.name = "jones_h_c" + std::to_string(m);
  inv.evaluate = [m, max_states](const KnotDiagram& d) {
    return h_expansion(jones_unnormalized(d, max_states), m).at(m);
  };
  return inv;
}

ScalarInvariant constant_invariant(Rational value) {
  ScalarInvariant inv;
  inv.name = "constant";
  inv.evaluate = [value](const KnotDiagram&) { return value; };
  return inv;
}

OrderTestReport order_test(const ScalarInvariant& inv, int n,
                           const std::vector<SingularDiagram>& corpus) {
  OrderTestReport report;
  report.order = n;
  for (const SingularDiagram& s : corpus) {
    if (static_cast<int>(s.doubled.size()) != n + 1)
      throw ValidationError("order_test: stratum " + s.id() + " has " +
                            std::to_string(s.doubled.size()) + " double points, expected " +
                            std::to_string(n + 1));
    OrderTestEntry e;
    e.id = s.id();
    e.value = vassiliev_extend(inv, s);
    if (e.value != 0) report.all_zero = false;
    report.entries.push_back(std::move(e));
  }
  std::ostringstream v;
  v << inv.name << " on " << report.entries.size() << " " << (n + 1) << "-singular diagrams: "
    << (report.all_zero ? "all zero, consistent with type <= " + std::to_string(n)
                        : "nonzero witness found, not of type <= " + std::to_string(n));
  report.verdict = v.str();
  return report;
}

}  // namespace khwb
