#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace triadic {

/// A bijection on {0, ..., N-1}, stored as its image array.
///
/// Products compose right-to-left: `(a * b)(i) == a(b(i))`.
class Permutation
{
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t degree);

  /// Builds the permutation i -> f(i); throws if f is not a bijection.
  static Permutation from_function(std::size_t degree, std::function<int(int)> const &f);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const int> images() const noexcept { return images_; }

  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const noexcept;
  bool has_fixed_point() const noexcept;

  /// Least k > 0 with p^k = id.
  std::size_t order() const;

  /// Cycle notation on 0-based points, fixed points omitted; "()" for id.
  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Trusted {};
  Permutation(std::vector<int> images, Trusted) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation operator*(Permutation const &a, Permutation const &b);
};

/// Composition `a` after `b`; throws std::invalid_argument on degree mismatch.
Permutation operator*(Permutation const &a, Permutation const &b);

bool commute(Permutation const &a, Permutation const &b);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// A finite permutation group, held as its full sorted element list.
///
/// Groups compare equal iff they have the same elements.
class PermGroup
{
public:
  /// The trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 0);

  /// Closure of `generators` under composition (breadth-first).
  /// Throws std::invalid_argument if the generator degrees differ from `degree`.
  static PermGroup generate(std::vector<Permutation> const &generators, std::size_t degree);

  /// Same, with the degree taken from the first generator.
  static PermGroup generate(std::vector<Permutation> const &generators);

  /// Wraps an element set after checking that it contains the identity and
  /// is closed under products. Throws std::invalid_argument otherwise.
  static PermGroup from_elements(std::vector<Permutation> elements, std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Permutation> const &elements() const noexcept { return elements_; }
  std::vector<Permutation> const &generators() const noexcept { return generators_; }

  bool contains(Permutation const &p) const;
  bool is_subgroup_of(PermGroup const &other) const;
  bool is_abelian() const;

  /// Exhaustive check that every product of two elements is an element.
  bool is_closed() const;

  /// Every point stabilizer is trivial.
  bool is_semiregular() const;

  /// Points whose stabilizer is nontrivial, ascending.
  std::vector<int> points_with_nontrivial_stabilizer() const;

  std::vector<int> orbit(int point) const;
  PermGroup stabilizer(int point) const;

  /// Orbits ordered by their least point; each orbit ascending.
  std::vector<std::vector<int>> orbits() const;

  friend bool operator==(PermGroup const &a, PermGroup const &b)
  {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

private:
  PermGroup(std::size_t degree, std::vector<Permutation> sorted_elements,
            std::vector<Permutation> generators);

  void check_point(int point) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

inline PermGroup generate(std::vector<Permutation> const &generators, std::size_t degree)
{
  return PermGroup::generate(generators, degree);
}

std::vector<int> orbit(PermGroup const &g, int point);
PermGroup stabilizer(PermGroup const &g, int point);

/// |G| equals the degree and G is transitive.
bool is_simply_transitive(PermGroup const &g);

/// Centralizer in Sym(N) of a semiregular group.
///
/// Picks the least point of each H-orbit as a base point. A centralizing f
/// is fixed by the images of the base points via f(h.b) = h.f(b), so only
/// those assignments are enumerated; Sym(N) is never scanned. Throws
/// std::invalid_argument if H is not semiregular, and std::length_error if
/// more than `max_candidates` assignments would be needed.
PermGroup centralizer_semiregular(PermGroup const &h,
                                  std::size_t max_candidates = 10'000'000);

/// Elements of G commuting with every generator of H. Requires H within G.
PermGroup centralizer_within(PermGroup const &h, PermGroup const &g);

/// A multiplication table on {0, ..., n-1}: `product[a][b]` is ab.
struct CayleyTable
{
  std::vector<std::vector<int>> product;

  std::size_t size() const noexcept { return product.size(); }

  /// Throws std::invalid_argument naming the first failed group axiom
  /// ("closure", "identity", "inverses" or "associativity").
  void validate() const;

  int identity() const;
  int inverse(int a) const;
};

CayleyTable cyclic_table(int n);

/// Dihedral group of order 2n; element k < n is s^k, element n + k is s^k t.
CayleyTable dihedral_table(int n);

/// Symmetric group on {0, ..., n-1}, elements in lexicographic order.
CayleyTable symmetric_table(int n);

struct RegularRepresentations
{
  PermGroup left;  ///< g -> (x -> gx)
  PermGroup right; ///< g -> (x -> xg^-1)
  std::vector<Permutation> left_of;
  std::vector<Permutation> right_of;
};

/// Validates the table, then returns the left and right regular actions.
RegularRepresentations regular_reps(CayleyTable const &table);

struct DihedralWitness
{
  Permutation s;
  Permutation t;
};

/// s^n = 1, t^2 = 1, tst = s^-1, with s of order exactly n and t of order 2.
bool satisfies_dihedral_relations(Permutation const &s, Permutation const &t, std::size_t n);

/// Returns (s, t) with the dihedral relations for n = 12 generating G, or
/// nothing if G is not dihedral of order 24.
std::optional<DihedralWitness> is_dihedral_24(PermGroup const &g);

} // namespace triadic
