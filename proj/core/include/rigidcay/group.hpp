#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rigidcay {

/// Structured name of a concrete group. Serializes as `cyclic:6`,
/// `product:(cyclic:4,cyclic:3)` or `sl:2:3`.
struct GroupDescriptor {
  enum class Kind { Cyclic, Product, SpecialLinear };

  Kind kind = Kind::Cyclic;
  int n = 1;                              // cyclic modulus, or SL dimension
  int p = 0;                              // SL field characteristic
  std::vector<GroupDescriptor> factors;   // product only (two entries)

  std::string text() const;
  static GroupDescriptor parse(const std::string& text);
  bool operator==(const GroupDescriptor& other) const;
};

namespace detail {
class GroupImpl;
}

/// Immutable finite group whose elements are addressed by dense integer ids
/// in [0, order()). Ids are stable for the lifetime of the group and
/// deterministic across processes: residues count upward, product ids pair
/// row-major, SL matrices enumerate in lexicographic row-major entry order.
///
/// Copies share the underlying representation; groups are safe to read from
/// several threads at once.
class FiniteGroup {
public:
  FiniteGroup() = default;

  bool valid() const { return impl_ != nullptr; }
  int order() const;
  int identity() const;
  int multiply(int a, int b) const;
  int invert(int a) const;

  const GroupDescriptor& descriptor() const;
  std::string descriptor_text() const;

  /// Human/JSON form of an element: "5", "(1,0)", "[[1,1],[0,1]]".
  std::string element_name(int id) const;
  /// Inverse of element_name. Throws ParseError on bad syntax or a literal
  /// that does not denote an element of this group.
  int element_from_name(const std::string& name) const;

  bool same_group(const FiniteGroup& other) const { return impl_ == other.impl_; }

private:
  explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const detail::GroupImpl> impl_;

  friend FiniteGroup make_cyclic(int n);
  friend FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
  friend FiniteGroup make_sl(int n, int p);
};

/// Z/nZ under addition; identity is residue 0. n >= 1.
FiniteGroup make_cyclic(int n);

/// Componentwise product; element ids enumerate pairs row-major, so
/// id = left_id * g2.order() + right_id.
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);

/// All n x n matrices over F_p with determinant 1, p prime.
FiniteGroup make_sl(int n, int p);

/// Rebuild a group from its descriptor (same ids as the original).
FiniteGroup make_group(const GroupDescriptor& desc);

/// |SL_n(F_p)| by the closed formula (1/(p-1)) * prod_{k<n} (p^n - p^k).
long long sl_order_formula(int n, int p);

/// Id of I + e_{row,col} (0-based indices, row != col) in an SL group.
int sl_transvection(const FiniteGroup& sl, int row, int col);

/// Row-major entries of an SL element.
std::vector<int> sl_matrix_of(const FiniteGroup& sl, int id);

/// Pairing helpers for product groups.
int product_id(const FiniteGroup& product, int left_id, int right_id);
std::pair<int, int> product_parts(const FiniteGroup& product, int id);

/// Identity-free subset of a group; the seed of a Cayley graph.
struct GeneratorSet {
  FiniteGroup group;
  std::vector<int> elements;  // sorted, unique, identity-free
};

/// Validates ids and strips duplicates. Throws InvalidGeneratorError when the
/// identity is included.
GeneratorSet make_generator_set(const FiniteGroup& group, std::vector<int> elements);

/// Smallest subset containing seed plus the identity, closed under multiply
/// and invert. Empty seed yields {identity}.
std::vector<int> subgroup_closure(const FiniteGroup& group, const std::vector<int>& seed);

/// gens together with all inverses; idempotent.
GeneratorSet symmetric_closure(const GeneratorSet& gens);

/// True iff the symmetric closure generates the whole group.
bool is_generating(const GeneratorSet& gens);

/// S = {E_{i,i+1}, E_{i+1,i} : 0 <= i < n-1} in SL_n(F_p).
GeneratorSet elementary_generators(int n, int p);

enum class TriangularSide { Upper, Lower };

/// All unipotent triangular matrices on the given side, minus the identity;
/// exactly p^{n(n-1)/2} - 1 elements.
std::vector<int> triangular_generators(const FiniteGroup& sl, TriangularSide side);
std::vector<int> triangular_generators(int n, int p, TriangularSide side);

bool is_prime(int p);

}  // namespace rigidcay
