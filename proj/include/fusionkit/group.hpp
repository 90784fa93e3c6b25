#ifndef FUSIONKIT_GROUP_HPP
#define FUSIONKIT_GROUP_HPP

#include <bitset>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "fusionkit/error.hpp"

namespace fusionkit {

constexpr int kMaxElements = 512;
constexpr int kDefaultOrderBound = 400;
constexpr int kPGroupOrderBound = 128;

// Elements of a group are indices 0..n-1 into its multiplication table; 0 is the identity.
using ElementSet = std::bitset<kMaxElements>;

// Images of the points 0..degree-1.
using Perm = std::vector<int>;

Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& perm);

class Group {
public:
  // Elements are sorted by their image tuples, so the identity comes first.
  static Group from_permutations(int degree, const std::vector<Perm>& generators,
                                 int max_order = kDefaultOrderBound);
  // table[a*n+b] = a*b; element 0 must be the identity.
  static Group from_table(int n, std::vector<int16_t> table, std::vector<std::string> labels);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // x^g = g^-1 x g; products are read left to right.
  int conj(int x, int g) const { return mul(mul(inv_[g], x), g); }
  int commutator(int x, int g) const { return mul(inv_[x], conj(x, g)); }
  int element_order(int a) const { return elem_order_[a]; }
  int power(int a, int k) const;

  const std::string& label(int a) const { return labels_[a]; }
  int degree() const { return degree_; }
  bool has_permutations() const { return !perms_.empty(); }
  const Perm& permutation(int a) const { return perms_[a]; }
  int index_of(const Perm& perm) const;  // -1 if absent

  const std::vector<int>& generators() const { return gens_; }
  ElementSet all() const;
  bool same_table(const Group& other) const { return n_ == other.n_ && table_ == other.table_; }

  std::string name;

private:
  void finish();

  int n_ = 0;
  int degree_ = 0;
  std::vector<int16_t> table_;
  std::vector<int16_t> inv_;
  std::vector<int16_t> elem_order_;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
  std::vector<int> gens_;
};

ElementSet closure(const Group& g, const std::vector<int>& gens);
std::vector<int16_t> elements_of(const ElementSet& s, int n);
bool is_subgroup(const Group& g, const ElementSet& s);
bool is_p_group_order(int order, int p);
int p_part(int n, int p);
// Sorted prime divisors.
std::vector<int> prime_divisors(int n);

// Greedy generating set: repeatedly adds the element of largest order not yet covered.
std::vector<int> generating_set(const Group& g, const ElementSet& s);

ElementSet normalizer_set(const Group& g, const ElementSet& within, const ElementSet& h);
ElementSet centralizer_set(const Group& g, const ElementSet& within, const ElementSet& h);

// The Sylow p-subgroup that comes first in the canonical subgroup order.
ElementSet sylow(const Group& g, int p);
// Largest normal subgroup of order prime to p.
ElementSet o_p_prime(const Group& g, int p);

struct SubgroupInfo {
  ElementSet set;
  std::vector<int16_t> elems;
  std::vector<int> gens;
  int order = 0;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return std::hash<ElementSet>()(s); }
};

// Every subgroup of a group, sorted by order and then by element list.
class Lattice {
public:
  explicit Lattice(std::shared_ptr<const Group> group, int max_order = kDefaultOrderBound);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }
  int size() const { return static_cast<int>(subs_.size()); }
  const SubgroupInfo& at(int id) const { return subs_[id]; }
  int order(int id) const { return subs_[id].order; }
  const ElementSet& set(int id) const { return subs_[id].set; }
  const std::vector<int16_t>& elements(int id) const { return subs_[id].elems; }
  const std::vector<int>& gens(int id) const { return subs_[id].gens; }

  int find(const ElementSet& s) const;  // -1 if not a subgroup
  int id_of(const ElementSet& s) const;  // throws NotASubgroup
  int top() const { return size() - 1; }
  int bottom() const { return 0; }
  int cyclic(int x) const { return cyclic_[x]; }

  bool le(int a, int b) const { return (subs_[a].set & ~subs_[b].set).none(); }
  bool contains(int id, int x) const { return subs_[id].set.test(x); }
  int meet(int a, int b) const { return find(subs_[a].set & subs_[b].set); }
  int join(int a, int b) const;
  int join_set(const ElementSet& s) const;

  int normalizer(int q) const { return normalizer_[q]; }
  int centralizer(int q) const { return centralizer_[q]; }
  int centre(int q) const { return meet(q, centralizer_[q]); }
  int normalizer_in(int q, int within) const { return meet(normalizer_[q], within); }
  int centralizer_in(int q, int within) const { return meet(centralizer_[q], within); }
  bool is_normal_in(int q, int in) const { return le(q, in) && le(in, normalizer_[q]); }
  const std::vector<int>& maximal(int q) const { return maximal_[q]; }
  std::vector<int> subgroups_of(int q) const;
  int conjugate(int q, int g) const;

private:
  std::shared_ptr<const Group> group_;
  std::vector<SubgroupInfo> subs_;
  std::unordered_map<ElementSet, int, ElementSetHash> index_;
  std::vector<int> cyclic_;
  std::vector<int> normalizer_;
  std::vector<int> centralizer_;
  std::vector<std::vector<int>> maximal_;
};

// Standalone copy of a subgroup with elements renumbered in increasing order.
struct Embedding {
  std::shared_ptr<const Group> group;
  std::vector<int> to_ambient;
  std::vector<int> from_ambient;  // -1 outside the subgroup
};
Embedding embed_subgroup(const Group& g, const ElementSet& s, const std::string& name);

// Quotient by a normal subgroup; cosets are ordered by their least element.
struct Quotient {
  std::shared_ptr<const Group> group;
  std::vector<int> coset_of;  // -1 outside the numerator
  std::vector<int> rep;
};
Quotient quotient_group(const Group& g, const ElementSet& numerator, const ElementSet& kernel);

Group direct_product_group(const Group& a, const Group& b);

}  // namespace fusionkit

#endif  // FUSIONKIT_GROUP_HPP
