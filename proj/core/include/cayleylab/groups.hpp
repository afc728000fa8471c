#ifndef CAYLEYLAB_GROUPS_HPP
#define CAYLEYLAB_GROUPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <memory>
#include <vector>

#include "cayleylab/perm.hpp"

namespace cayleylab {

class CayleyGraph;

// A bijection of [0, domain_size). Acts on the right like Permutation:
// compose(f, g) applies f first.
class VertexMap {
 public:
  using Index = std::uint16_t;

  VertexMap() = default;
  // Throws InvalidArgument unless `images` is a bijection on its index range.
  explicit VertexMap(std::vector<Index> images);
  static VertexMap identity(size_t domain_size);

  size_t domain_size() const { return images_.size(); }
  Index operator[](size_t v) const { return images_[v]; }
  std::span<const Index> images() const { return images_; }
  bool is_identity() const;
  bool fixes(size_t v) const { return images_[v] == v; }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<Index> images_;
};

VertexMap compose(const VertexMap& f, const VertexMap& g);
VertexMap inverse(const VertexMap& f);
// g^-1 f g.
VertexMap conjugate(const VertexMap& f, const VertexMap& g);

struct VertexMapHash {
  size_t operator()(const VertexMap& f) const noexcept;
};

// Hashed element list backing a materialized PermGroup.
struct ElementStore;

// Element cap for materialized groups. Honors CAYLEYLAB_CAP_ELEMENTS when it
// parses as a positive integer, otherwise 1'000'000.
std::uint64_t default_element_cap();

// A finite permutation group on [0, domain_size).
//
// Always carries a generating set and its order. The element list is
// present when the group was small enough to materialize; membership and
// subgroup queries need it.
class PermGroup {
 public:
  PermGroup() = default;

  // The trivial group on `domain_size` points.
  static PermGroup trivial(size_t domain_size);
  // Wraps an already complete element list (closure is trusted, not
  // recomputed). `elements` must contain the identity.
  static PermGroup from_elements(size_t domain_size,
                                 std::vector<VertexMap> generators,
                                 std::vector<VertexMap> elements);
  // A group known only by generators and order.
  static PermGroup from_order(size_t domain_size,
                              std::vector<VertexMap> generators,
                              std::uint64_t order);

  size_t domain_size() const { return domain_size_; }
  std::uint64_t order() const { return order_; }
  const std::vector<VertexMap>& generators() const { return generators_; }
  bool materialized() const { return store_ != nullptr; }
  // Throws PreconditionError if not materialized.
  const std::vector<VertexMap>& elements() const;
  // Set lookup. Throws PreconditionError if not materialized.
  bool contains(const VertexMap& g) const;

 private:
  friend PermGroup closure(std::span<const VertexMap>, size_t, std::uint64_t);

  size_t domain_size_ = 0;
  std::uint64_t order_ = 0;
  std::vector<VertexMap> generators_;
  // Shared, immutable after construction.
  std::shared_ptr<const ElementStore> store_;
};

// All products of `gens` (Dimino's algorithm). Generators that are already
// in the group generated by their predecessors are dropped from the
// result's generator list. Throws CapExceeded as soon as the element count
// would pass `cap`.
PermGroup closure(std::span<const VertexMap> gens, size_t domain_size,
                  std::uint64_t cap = default_element_cap());

bool contains(const PermGroup& group, const VertexMap& g);

struct NormalityWitness {
  VertexMap conjugator;  // g in G
  VertexMap element;     // n in N
  VertexMap conjugate;   // g^-1 n g, not in N
};

struct SubgroupNormality {
  bool normal = false;
  std::optional<NormalityWitness> witness;
};

// Checks g^-1 n g in N over generators g of G and n of N. N must be
// materialized. Throws PreconditionError when a generator of N lies outside
// G (G materialized) or domains differ.
SubgroupNormality is_normal_in(const PermGroup& sub, const PermGroup& group);

// {g in G : v^g = v}.
PermGroup vertex_stabilizer(const PermGroup& group, size_t v);
// Orbit of v under the generators, ascending.
std::vector<size_t> orbit(const PermGroup& group, size_t v);

// Returns sigma if g is alpha -> alpha * sigma on every vertex of X.
std::optional<Permutation> is_right_translation(const CayleyGraph& graph,
                                                const VertexMap& g);

// Equal order and every generator of each inside the other. Both groups must
// be materialized.
bool same_group(const PermGroup& a, const PermGroup& b);

}  // namespace cayleylab

#endif  // CAYLEYLAB_GROUPS_HPP
