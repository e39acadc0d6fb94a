// Moves a scrambled copy of the pair (e1 - 2f1, -8f1 + e2 - 2f2) back to
// standard position and prints what the isometry does.
//
//   standardize_pair [seed]

#include <cstdlib>
#include <iostream>

#include "k3dh/k3dh.hpp"

using namespace k3dh;

int main(int argc, char** argv) {
  const unsigned long seed = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 7;
  const Lattice& L = make_K3();
  sampling::Rng rng(seed);

  const K3Pair p = pair_from_polynomial({-4, 16, -4});
  const Isometry t = sampling::random_isometry(rng, L, 4, 2);
  const IntVector kappa = t(p.kappa), eta = t(p.eta);

  std::cout << "kappa  " << detail::vec_str(kappa) << "\neta    " << detail::vec_str(eta) << '\n';
  std::cout << "gram   " << L.norm(kappa) << ' ' << L.pairing(kappa, eta) << ' ' << L.norm(eta) << '\n';

  const Isometry g = map_pair_to_standard(L, kappa, eta);
  std::cout << "g(kappa) " << detail::vec_str(g(kappa)) << "\ng(eta)   " << detail::vec_str(g(eta)) << '\n';
  std::cout << "det " << det(g.matrix()) << ", components " << (preserves_components(g) ? "preserved" : "exchanged")
            << '\n';

  for (bool preserve : {true, false}) {
    const Isometry phi = lemma_iso(L, kappa, eta, p.kappa, p.eta, preserve);
    std::cout << (preserve ? "preserve" : "reverse ") << ": phi(kappa') = kappa " << bool_str(phi(p.kappa) == kappa)
              << ", phi(eta') = eta " << bool_str(phi(p.eta) == eta) << '\n';
  }
  return 0;
}
