#pragma once

#include <string>
#include <vector>

#include "rigidcay/conditions.hpp"
#include "rigidcay/nac.hpp"

namespace rigidcay {

/// A generated graph together with its certifying coloring and the counts
/// the construction promises. Construction verifies predicted == actual,
/// that the subgroup-intersection condition backing the family holds, and
/// that the coloring is a good NAC-coloring.
struct FamilyInstance {
  std::string family_name;
  SimpleGraph graph;
  EdgeColoring coloring;
  long long predicted_vertices = 0;
  long long predicted_edges = 0;
  int predicted_regularity = 0;
  /// crt form only: the generating set carried over to Z/n by the Chinese
  /// remainder isomorphism, sorted.
  std::vector<int> translated_generators;
};

/// (Z/qZ)^alpha with the standard basis, q > 2; 2*alpha regular.
FamilyInstance abelian_power_family(int q, int alpha);

/// Product of pairwise coprime cyclic factors with the standard basis.
/// Regularity is the size of the symmetric closure: 2 per factor, 1 per
/// Z/2 factor.
FamilyInstance abelian_crt_family(const std::vector<int>& moduli);

/// crt form with a leading Z/2 factor; odd regularity 2r+1.
FamilyInstance abelian_involution_family(const std::vector<int>& moduli);

/// (Z/nZ) x (Z/n^kZ) with both full coordinate axes as generators.
/// k = 1 gives n^2 vertices, n^3 - n^2 edges, 2n-2 regular.
FamilyInstance dense_abelian_family(int n, int k);

enum class SlVariant { Elementary, Triangular };

/// SL_n(F_p) with super/sub-diagonal transvections (Elementary) or all
/// unipotent upper/lower matrices (Triangular); upper class blue.
FamilyInstance sl_family(int n, int p, SlVariant variant);

/// Cartesian product of the complete Cayley graphs of SL_{n1}(F_{p1}) and
/// SL_{n2}(F_{p2}) with the product coloring.
FamilyInstance sl_product_family(int n1, int p1, int n2, int p2);

/// Paper form of the product family: SL_n(F_p) x SL_{n^k}(F_p).
FamilyInstance sl_product_family_power(int n, int p, int k);

/// A movable r-regular graph with a good-coloring certificate, r >= 2.
/// Even r come from SL_{r/2+1}(F_2) with elementary generators, r = 3 from
/// the Z/2 x Z/3 involution family, and odd r >= 5 add the extra
/// transvection E_{1,3}.
FamilyInstance regularity_construction(int r);

}  // namespace rigidcay
