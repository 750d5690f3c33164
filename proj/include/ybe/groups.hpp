#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/base.hpp"

namespace ybe {

/// Element of an abelian tuple group: one residue per cyclic factor.
using Element = std::vector<int>;

/// Finite abelian group Z_m1 x ... x Z_mk with componentwise addition.
/// Elements are residue tuples; the canonical integer encoding is mixed-radix
/// with the first coordinate most significant (row-major over the moduli).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> moduli);

  const std::vector<int>& moduli() const { return moduli_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  long long order() const { return order_; }

  Element zero() const { return Element(moduli_.size(), 0); }
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element scalar_mul(long long c, const Element& a) const;
  Element basis_element(int i) const;

  bool contains(const Element& a) const;
  void require(const Element& a) const; // throws std::domain_error

  int encode(const Element& a) const;
  Element decode(int index) const;

  int element_order(const Element& a) const;
  int element_order_by_index(int index) const;

  bool operator==(const AbelianGroup& other) const = default;

 private:
  std::vector<int> moduli_;
  long long order_;
};

/// Permutation of {0, ..., n-1} stored by images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation from_cycle(int n, const std::vector<int>& cycle);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  /// Cycle lengths, descending.
  std::vector<int> cycle_type() const;

  auto operator<=>(const Permutation& other) const = default;

 private:
  std::vector<int> images_;
};

/// Permutation group given by generators, with the full element list
/// computed by breadth-first closure from the identity (generator order as
/// given), so the element ordering is deterministic.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<Permutation> elements);

  int degree() const { return degree_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  int index_of(const Permutation& p) const; // -1 if not a member

 private:
  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

PermGroup generate_perm_group(const std::vector<Permutation>& gens,
                              std::optional<int> degree = std::nullopt);
bool is_transitive(const PermGroup& g);

/// Generic finite group by Cayley table over element indices 0..n-1.
class GroupTable {
 public:
  GroupTable(int order, std::vector<int> table, int identity);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int conjugate(int g, int a) const { return mul(mul(g, a), inverse(g)); }
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  /// Checks associativity, identity and inverse laws. Exhaustive for order
  /// <= 200, strided sampling above. Throws validation_error on failure.
  void check_group_laws() const;

 private:
  int order_;
  std::vector<int> table_;
  int identity_;
  std::vector<int> inverse_;
};

GroupTable table_from_perm_group(const PermGroup& g);

/// Subgroup as a sorted list of element indices.
using SubgroupSet = std::vector<int>;

SubgroupSet closure(const GroupTable& g, const std::vector<int>& gens);

/// All subgroups, deduplicated, sorted by (size, elements). Seeded from
/// cyclic subgroups, closed under pairwise joins.
std::vector<SubgroupSet> subgroups(const GroupTable& g,
                                   const Bounds& bounds = {});

bool is_subgroup(const GroupTable& g, const SubgroupSet& h);
bool is_normal(const GroupTable& g, const SubgroupSet& h);

/// Largest normal subgroup of g contained in h (intersection of conjugates).
SubgroupSet normal_core(const GroupTable& g, const SubgroupSet& h);

/// Cayley table of a subgroup, with local index i <-> global index set[i].
GroupTable subgroup_table(const GroupTable& g, const SubgroupSet& set);

/// Quotient by a normal subgroup. coset_of[x] = index of the coset of x;
/// cosets are numbered by their least member, ascending.
struct Quotient {
  GroupTable table;
  std::vector<int> coset_of;
  std::vector<int> representative;
};
Quotient quotient_table(const GroupTable& g, const SubgroupSet& normal_sub);

/// Additive automorphism stored as the images of the canonical basis.
class AbelianAutomorphism {
 public:
  AbelianAutomorphism(AbelianGroup group, std::vector<Element> images);
  Element apply(const Element& a) const;
  int apply_index(int index) const;
  const std::vector<Element>& basis_images() const { return images_; }
  const AbelianGroup& group() const { return group_; }
  AbelianAutomorphism compose(const AbelianAutomorphism& inner) const;
  AbelianAutomorphism inverse() const;

 private:
  AbelianGroup group_;
  std::vector<Element> images_;
};

/// Every additive automorphism of a, by brute force over basis images.
std::vector<AbelianAutomorphism> abelian_automorphisms(
    const AbelianGroup& a, const Bounds& bounds = {});

/// Holomorph A x| Aut(A). Elements are (translation, automorphism) pairs
/// indexed by t * |Aut| + j; act(e, x) = t + phi_j(x).
class Holomorph {
 public:
  Holomorph(AbelianGroup base, std::vector<AbelianAutomorphism> auts);

  const AbelianGroup& base() const { return base_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int num_auts() const { return static_cast<int>(auts_.size()); }
  int mul(int e1, int e2) const;
  int inverse(int e) const;
  int act(int e, int point) const;
  int translation_of(int e) const { return e / num_auts_; }
  GroupTable to_table() const;

 private:
  AbelianGroup base_;
  std::vector<AbelianAutomorphism> auts_;
  int num_auts_;
  int order_;
  std::vector<int> aut_mul_;     // composition table over automorphism indices
  std::vector<int> aut_inv_;
  std::vector<int> aut_images_;  // aut_images_[j * |A| + x] = phi_j(x)
};

Holomorph holomorph(const AbelianGroup& a, const Bounds& bounds = {});

/// Structure descriptor at desk scale; falls back to `other` with the
/// abelianization attached.
struct GroupDescriptor {
  enum class Kind { cyclic, abelian, dihedral, semidirect_cyclic, other };
  Kind kind = Kind::other;
  long long order = 0;
  std::vector<int> invariant_factors; // abelian: factors; other: abelianization
  int dihedral_n = 0;                 // D_{2n}
  int sd_m = 0;                       // Z_m x| Z_q
  int sd_q = 0;
  int sd_scalar = 0;                  // canonical (minimal) acting scalar
  std::string to_string() const;
  bool operator==(const GroupDescriptor& other) const = default;
};

GroupDescriptor identify_group(const GroupTable& g);
GroupDescriptor identify_group(const PermGroup& g);

/// Invariant factors d_1 | d_2 | ... | d_k of an abelian table group.
std::vector<int> abelian_invariant_factors(const GroupTable& g);

/// A basis of an abelian table group: independent elements whose cyclic
/// subgroups sum directly to the whole group; orders() are the invariant
/// factors ascending.
struct AbelianBasis {
  std::vector<int> elements;
  std::vector<int> orders;
};
AbelianBasis abelian_basis(const GroupTable& g);

struct DihedralSplit {
  SubgroupSet rotations;
  std::vector<int> reflections;
};

/// Rotation/reflection split of a dihedral group D_2n, n >= 3. Order-4
/// groups are never auto-classified as dihedral; pass the designated
/// rotation subgroup explicitly for that case.
DihedralSplit dihedral_split(const GroupTable& g);
DihedralSplit dihedral_split(const GroupTable& g,
                             const SubgroupSet& designated_rotations);

/// All abelian groups of order n up to isomorphism, as prime-power cyclic
/// factor lists (primes ascending, exponents descending within a prime).
std::vector<AbelianGroup> abelian_groups_of_order(int n);

/// Dihedral group D_2n as a table: element 2i is r^i, 2i+1 is r^i s.
GroupTable dihedral_table(int n);
GroupTable cyclic_table(int n);
GroupTable abelian_table(const AbelianGroup& a);
/// Z_m x| Z_q where the generator of Z_q acts by multiplication by scalar.
GroupTable semidirect_cyclic_table(int m, int q, int scalar);

bool tables_isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace ybe
