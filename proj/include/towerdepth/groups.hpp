#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace td {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation of {0, ..., degree-1}; images[x] is the image of x.
struct Perm {
  std::vector<int> images;

  Perm() = default;
  explicit Perm(std::vector<int> im);
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
  Perm inverse() const;
  /// Disjoint-cycle notation on 1-based points, "()" for the identity.
  std::string cycles() const;

  /// (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images == b.images; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images < b.images; }
};

/// Parses 1-based disjoint-cycle notation such as "(1 2 3)(4 5)" on `degree` points.
Perm parse_cycles(std::string_view text, int degree);

inline constexpr std::size_t kDefaultOrderCap = 5040;

/// A finite permutation group with its full element list in lexicographic order.
class PermGroup {
 public:
  PermGroup() = default;

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Perm& p) const { return index_.count(p.images) > 0; }
  /// Position of p in the element list; throws if absent.
  std::size_t index_of(const Perm& p) const;
  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  std::size_t identity_index() const { return 0; }

  bool is_subgroup_of(const PermGroup& g) const;
  /// Short human-readable summary: order, degree, generators.
  std::string describe() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  friend PermGroup group_closure(const std::vector<Perm>&, int, std::size_t);
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<std::uint32_t> table_;  // mul table, row-major, empty for large groups
};

/// Subgroup generated by `generators` on `degree` points.
PermGroup group_closure(const std::vector<Perm>& generators, int degree, std::size_t order_cap = kDefaultOrderCap);

/// Smallest normal subgroup of g containing k.
PermGroup normal_closure(const PermGroup& k, const PermGroup& g);

struct DoubleCoset {
  Perm representative;              // least element of the cell
  std::vector<std::size_t> members; // indices into g.elements(), increasing
};

/// The partition of g into cells H g K, ordered by representative.
std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& h, const PermGroup& k);

/// Left cosets x H, each given by its least element (ordered).
std::vector<Perm> left_coset_representatives(const PermGroup& g, const PermGroup& h);

bool is_normal(const PermGroup& h, const PermGroup& g);

/// h conjugated by x: x h x^{-1}.
PermGroup conjugate(const PermGroup& h, const Perm& x);

/// Every subgroup of g, sorted by (order, element list).
std::vector<PermGroup> all_subgroups(const PermGroup& g);

// Standard groups.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
PermGroup trivial_group(int degree);
/// Symmetries of a square on 4 points (order 8).
PermGroup dihedral_square();
/// Quaternion group as its left regular representation on 8 points.
PermGroup quaternion_group();
/// Normal Klein four-subgroup of S4.
PermGroup klein_four();

}  // namespace td
