// Samples one 2-complex near the subdivision threshold, looks for a K_4^2
// subdivision, and checks whether every 3-cycle of a second sample bounds a disk.

#include <iostream>

#include "mincplx/mincplx.hpp"

int main() {
  using namespace mincplx;

  const int n = 800;
  const double c = preset_c(4, 2);
  const KComplex x = sample_complex(RandomParams::from_c(n, 2, c, 2024));
  std::cout << "X^2(" << n << ", " << x.p() << "): " << x.top_face_count() << " triangles\n";

  FinderConfig config;
  config.c = c;
  if (const auto found = find_topological_minor(x, config)) {
    std::cout << "K_4^2 subdivision with branch vertices";
    for (int v : found->witness.branch) std::cout << ' ' << v;
    std::cout << "; verified: " << std::boolalpha << verify_minor_witness(x, found->witness).ok() << '\n';
    for (const DiskFilling& d : found->witness.fillings)
      std::cout << "  disk on " << d.boundary.str() << ": " << d.faces.size() << " triangles\n";
  } else {
    std::cout << "no subdivision found\n";
  }

  const KComplex y = sample_complex(RandomParams::from_c(300, 2, preset_c(3, 2), 7));
  const FillabilityReport r = all_three_cycles_fillable(y);
  std::cout << "all 3-cycles of X^2(300, " << y.p() << ") fillable: " << r.fillable
            << " (smallest good set " << r.min_good_set << ")\n";
}
