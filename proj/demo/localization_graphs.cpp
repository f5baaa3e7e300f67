// Enumerates the fixed-locus graphs for a small moduli cell and prints
// each component's invariants: canonical encoding, automorphisms, deck
// group, and (once weights are fixed) the divisor chain invariant r.
#include <iostream>

#include "fixedloci/graphs.hpp"

using namespace fixedloci;

int main() {
  const int g = 1, n = 1, big_n = 2, d = 2;
  std::vector<DecoratedGraph> reps = enumerate_graphs(g, n, big_n, d);
  WeightVector w;
  w.lambda = {0, 2, 5};  // one weight per label, pairwise distinct

  std::cout << "cell (g=" << g << ", n=" << n << ", N=" << big_n << ", d=" << d << "): "
            << reps.size() << " graphs\n";
  for (const DecoratedGraph& rep : reps) {
    FixedLocusReport fl = component_descriptor(rep, w);
    std::cout << "  [";
    const std::vector<long long> enc = canonical_encoding(rep);
    for (std::size_t i = 0; i < enc.size(); ++i)
      std::cout << (i ? "," : "") << enc[i];
    std::cout << "]  |Aut| = " << fl.aut_order << "  deck = " << fl.deck_order
              << "  r = " << *fl.r << "\n";
  }
  return 0;
}
