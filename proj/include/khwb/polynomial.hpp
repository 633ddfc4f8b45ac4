#pragma once

#include <functional>
#include <string>
#include <vector>

#include "khwb/diagram.hpp"
#include "khwb/laurent.hpp"

namespace khwb {

inline constexpr std::size_t kDefaultMaxStates = std::size_t(1) << 14;

// State sum sum_s (-1)^{|s|} q^{|s|} (q + q^{-1})^{circles(s)} over all 2^n
// resolutions.  This is the graded Euler characteristic of the resolution
// cube, computed without building any complex; it serves as the independent
// oracle for the homological route.
LaurentPoly kauffman_bracket(const KnotDiagram& d, std::size_t max_states = kDefaultMaxStates);

// Bracket with the orientation shift (-1)^{n_-} q^{n_+ - 2 n_-} applied.
LaurentPoly jones_unnormalized(const KnotDiagram& d, std::size_t max_states = kDefaultMaxStates);

// A scalar knot invariant with exact rational values.
struct ScalarInvariant {
  std::string name;
  std::function<Rational(const KnotDiagram&)> evaluate;
};

// Skein extension to singular diagrams: alternating sum over the 2^m
// resolutions of the double points, where keeping the base crossing is the
// overcrossing choice and switching it the undercrossing choice, each switch
// contributing a factor -1.
Rational vassiliev_extend(const ScalarInvariant& inv, const SingularDiagram& s);

// Exact rational coefficients c_0..c_order of p(e^h) as a series in h.
std::vector<Rational> h_expansion(const LaurentPoly& p, int order);

// The invariant d -> c_m of h_expansion(jones_unnormalized(d)).
ScalarInvariant jones_h_coefficient(int m, std::size_t max_states = kDefaultMaxStates);
ScalarInvariant constant_invariant(Rational value);

struct OrderTestEntry {
  std::string id;
  Rational value;
};

// Evaluation of inv's skein extension over a corpus of (n+1)-singular
// diagrams; all-zero is consistent with inv having type <= n.
struct OrderTestReport {
  int order = 0;
  std::vector<OrderTestEntry> entries;
  bool all_zero = true;
  std::string verdict;
};

OrderTestReport order_test(const ScalarInvariant& inv, int n,
                           const std::vector<SingularDiagram>& corpus);

}  // namespace khwb
