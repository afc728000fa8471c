#include "cayleylab/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <memory>

#include "cayleylab/cayley.hpp"
#include "cayleylab/error.hpp"

namespace cayleylab {

VertexMap::VertexMap(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgument("vertex map is not a bijection");
    }
    seen[v] = true;
  }
}

VertexMap VertexMap::identity(size_t domain_size) {
  if (domain_size > std::numeric_limits<Index>::max()) {
    throw CapExceeded("vertex map domain too large");
  }
  std::vector<Index> images(domain_size);
  for (size_t v = 0; v < domain_size; ++v) images[v] = static_cast<Index>(v);
  return VertexMap(std::move(images));
}

bool VertexMap::is_identity() const {
  for (size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  if (f.domain_size() != g.domain_size()) {
    throw InvalidArgument("vertex map domain mismatch");
  }
  std::vector<VertexMap::Index> images(f.domain_size());
  for (size_t v = 0; v < images.size(); ++v) images[v] = g[f[v]];
  return VertexMap(std::move(images));
}

VertexMap inverse(const VertexMap& f) {
  std::vector<VertexMap::Index> images(f.domain_size());
  for (size_t v = 0; v < images.size(); ++v) {
    images[f[v]] = static_cast<VertexMap::Index>(v);
  }
  return VertexMap(std::move(images));
}

VertexMap conjugate(const VertexMap& f, const VertexMap& g) {
  return compose(compose(inverse(g), f), g);
}

size_t VertexMapHash::operator()(const VertexMap& f) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 14695981039346656037ull;
  for (auto v : f.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

std::uint64_t default_element_cap() {
  constexpr std::uint64_t kDefault = 1'000'000;
  if (const char* env = std::getenv("CAYLEYLAB_CAP_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefault;
}

// Open-addressed set of indices into an element vector. Lookups never
// mutate, so a finished index is safe to share between readers.
class ElementIndex {
 public:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t find(const std::vector<VertexMap>& elems,
                     const VertexMap& x) const {
    if (slots_.empty()) return kEmpty;
    size_t mask = slots_.size() - 1;
    for (size_t s = VertexMapHash{}(x) & mask;; s = (s + 1) & mask) {
      std::uint32_t idx = slots_[s];
      if (idx == kEmpty) return kEmpty;
      if (elems[idx] == x) return idx;
    }
  }

  // elems[idx] must already be stored and absent from the index.
  void insert(const std::vector<VertexMap>& elems, std::uint32_t idx) {
    if (2 * (count_ + 1) > slots_.size()) grow(elems);
    place(elems, idx);
    ++count_;
  }

 private:
  void place(const std::vector<VertexMap>& elems, std::uint32_t idx) {
    size_t mask = slots_.size() - 1;
    size_t s = VertexMapHash{}(elems[idx]) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = idx;
  }

  void grow(const std::vector<VertexMap>& elems) {
    std::vector<std::uint32_t> old = std::move(slots_);
    slots_.assign(std::max<size_t>(16, old.size() * 2), kEmpty);
    for (auto idx : old) {
      if (idx != kEmpty) place(elems, idx);
    }
  }

  std::vector<std::uint32_t> slots_;
  size_t count_ = 0;
};

struct ElementStore {
  std::vector<VertexMap> elements;
  ElementIndex index;

  bool contains(const VertexMap& x) const {
    return index.find(elements, x) != ElementIndex::kEmpty;
  }
  bool add(VertexMap x) {
    if (contains(x)) return false;
    elements.push_back(std::move(x));
    index.insert(elements, static_cast<std::uint32_t>(elements.size() - 1));
    return true;
  }
};

PermGroup PermGroup::trivial(size_t domain_size) {
  return from_elements(domain_size, {}, {VertexMap::identity(domain_size)});
}

PermGroup PermGroup::from_elements(size_t domain_size,
                                   std::vector<VertexMap> generators,
                                   std::vector<VertexMap> elements) {
  auto store = std::make_shared<ElementStore>();
  store->elements.reserve(elements.size());
  for (auto& e : elements) {
    if (e.domain_size() != domain_size) {
      throw InvalidArgument("group element has wrong domain size");
    }
    store->add(std::move(e));
  }
  if (!store->contains(VertexMap::identity(domain_size))) {
    throw InvalidArgument("element list lacks the identity");
  }
  PermGroup g;
  g.domain_size_ = domain_size;
  g.order_ = store->elements.size();
  g.generators_ = std::move(generators);
  g.store_ = std::move(store);
  return g;
}

PermGroup PermGroup::from_order(size_t domain_size,
                                std::vector<VertexMap> generators,
                                std::uint64_t order) {
  PermGroup g;
  g.domain_size_ = domain_size;
  g.order_ = order;
  g.generators_ = std::move(generators);
  return g;
}

const std::vector<VertexMap>& PermGroup::elements() const {
  if (!store_) throw PreconditionError("group is not materialized");
  return store_->elements;
}

bool PermGroup::contains(const VertexMap& g) const {
  if (!store_) throw PreconditionError("group is not materialized");
  if (g.domain_size() != domain_size_) return false;
  return store_->contains(g);
}

bool contains(const PermGroup& group, const VertexMap& g) {
  return group.contains(g);
}

PermGroup closure(std::span<const VertexMap> gens, size_t domain_size,
                  std::uint64_t cap) {
  for (const auto& g : gens) {
    if (g.domain_size() != domain_size) {
      throw InvalidArgument("generator has wrong domain size");
    }
  }
  auto store = std::make_shared<ElementStore>();
  store->add(VertexMap::identity(domain_size));
  std::vector<VertexMap> kept;

  auto overflow = [&] {
    throw CapExceeded("group closure exceeds element cap of " +
                      std::to_string(cap));
  };

  // Dimino: the elements so far form the subgroup H generated by `kept`.
  // Adding g, the new group is a union of right cosets H*r; a coset
  // representative r*s is new exactly when it is not yet an element.
  for (const auto& g : gens) {
    if (store->contains(g)) continue;
    kept.push_back(g);
    const size_t sub_order = store->elements.size();
    std::vector<VertexMap> reps{VertexMap::identity(domain_size)};
    auto add_coset = [&](const VertexMap& r) {
      if (store->elements.size() + sub_order > cap) overflow();
      for (size_t k = 0; k < sub_order; ++k) {
        store->add(compose(store->elements[k], r));
      }
      reps.push_back(r);
    };
    for (size_t pos = 0; pos < reps.size(); ++pos) {
      for (const auto& s : kept) {
        VertexMap x = compose(reps[pos], s);
        if (!store->contains(x)) add_coset(x);
      }
    }
  }

  PermGroup out;
  out.domain_size_ = domain_size;
  out.order_ = store->elements.size();
  out.generators_ = std::move(kept);
  out.store_ = std::move(store);
  return out;
}

SubgroupNormality is_normal_in(const PermGroup& sub, const PermGroup& group) {
  if (sub.domain_size() != group.domain_size()) {
    throw PreconditionError("subgroup and group act on different domains");
  }
  if (!sub.materialized()) {
    throw PreconditionError("normality test needs a materialized subgroup");
  }
  if (group.materialized()) {
    for (const auto& n : sub.generators()) {
      if (!group.contains(n)) {
        throw PreconditionError("subgroup is not contained in the group");
      }
    }
  }
  SubgroupNormality result{true, std::nullopt};
  for (const auto& g : group.generators()) {
    for (const auto& n : sub.generators()) {
      VertexMap c = conjugate(n, g);
      if (!sub.contains(c)) {
        result.normal = false;
        result.witness = NormalityWitness{g, n, std::move(c)};
        return result;
      }
    }
  }
  return result;
}

PermGroup vertex_stabilizer(const PermGroup& group, size_t v) {
  std::vector<VertexMap> fixing;
  for (const auto& g : group.elements()) {
    if (g.fixes(v)) fixing.push_back(g);
  }
  // Dimino over the stabilizer's own elements gives a short generating set.
  return closure(fixing, group.domain_size(), fixing.size());
}

std::vector<size_t> orbit(const PermGroup& group, size_t v) {
  std::vector<bool> seen(group.domain_size(), false);
  std::vector<size_t> queue{v};
  seen[v] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : group.generators()) {
      size_t w = g[queue[head]];
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::optional<Permutation> is_right_translation(const CayleyGraph& graph,
                                                const VertexMap& g) {
  if (g.domain_size() != graph.vertex_count()) return std::nullopt;
  const Permutation sigma = graph.vertex(g[graph.identity_vertex()]);
  for (size_t v = 0; v < g.domain_size(); ++v) {
    auto expected = graph.index_of(compose(graph.vertex(v), sigma));
    if (g[v] != expected) return std::nullopt;
  }
  return sigma;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  if (a.domain_size() != b.domain_size() || a.order() != b.order()) {
    return false;
  }
  if (!a.materialized() && !b.materialized()) {
    throw PreconditionError("group comparison needs a materialized side");
  }
  auto inside = [](const PermGroup& gens_of, const PermGroup& in) {
    for (const auto& g : gens_of.generators()) {
      if (!in.contains(g)) return false;
    }
    return true;
  };
  if (a.materialized() && !inside(b, a)) return false;
  if (b.materialized() && !inside(a, b)) return false;
  return true;
}

}  // namespace cayleylab
