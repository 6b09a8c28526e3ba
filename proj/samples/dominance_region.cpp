// Maps where the Heinz mean H_t is strongly dominated by the logarithmic mean:
// prints the ratio-matrix minimum eigenvalue and the best witness per t.

#include <cstdio>

#include "heinzlog/heinzlog.hpp"

int main() {
  using namespace heinzlog;
  SweepConfig c;
  c.num = MeanFamily::Heinz;
  c.den = MeanFamily::Log;
  c.t_grid = make_grid(0.0, 1.0, 0.05);
  c.points = PointGrid{PointLayout::Uniform, 12, 40.0};
  for (const SweepRow& row : sweep_dominance(c).rows)
    std::printf("t=%.2f  grid min eig=% .3e  witness min eig=% .3e  dominated=%s\n", row.t,
                row.min_eigenvalue, row.witness_min_eigenvalue, row.dominates ? "yes" : "no");
}
