// Checks the generalized Heinz-logarithmic inequality on one random instance
// and prints both sides for every default norm.

#include <cstdio>

#include "heinzlog/heinzlog.hpp"

int main() {
  using namespace heinzlog;
  Generator gen = trial_generator(2024, 0);
  const PositiveMatrix a = random_positive(4, gen);
  const PositiveMatrix b = random_positive(4, gen);
  const ComplexMatrix x = random_ginibre(4, 4, gen);

  const double s = 0.1, t = 0.4;
  const auto norms = default_norms(4);
  for (const auto& r : check_thm_2_3(a, x, b, s, t, norms))
    std::printf("%-12s lhs=%.6f rhs=%.6f holds=%s\n", r.norm.c_str(), r.lhs, r.rhs,
                r.holds ? "yes" : "no");
}
