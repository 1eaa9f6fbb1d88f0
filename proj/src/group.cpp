#include "ratgk/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace ratgk {

struct FiniteGroup::Cache {
  std::once_flag orders_once;
  std::vector<std::uint64_t> orders;
  std::vector<ElemId> inverses;
  std::once_flag classes_once;
  ConjugacyClasses classes;
};

FiniteGroup::FiniteGroup(std::shared_ptr<const Realization> impl, std::vector<ElemId> generators, std::string name)
    : impl_(std::move(impl)),
      generators_(std::move(generators)),
      name_(std::move(name)),
      order_(impl_->order()),
      cache_(std::make_shared<Cache>()) {
  for (ElemId g : generators_)
    if (g >= order_) throw GroupError(GroupError::Kind::NotMember, "generator id out of range");
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup out = *this;
  out.name_ = std::move(name);
  return out;
}

ElemId FiniteGroup::mul(ElemId a, ElemId b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  return impl_->multiply(a, b);
}

std::span<const std::uint64_t> FiniteGroup::element_orders() const {
  std::call_once(cache_->orders_once, [this] {
    auto& orders = cache_->orders;
    auto& inverses = cache_->inverses;
    orders.assign(order_, 0);
    inverses.assign(order_, 0);
    for (ElemId g = 0; g < order_; ++g) {
      if (orders[g]) continue;
      // Walk the powers of g once; they give orders and inverses of every
      // power as well.
      std::vector<ElemId> powers{0};
      ElemId x = g;
      while (x != 0) {
        powers.push_back(x);
        x = impl_->multiply(x, g);
      }
      const std::uint64_t n = powers.size();
      for (std::uint64_t k = 1; k < n; ++k) {
        const ElemId y = powers[k];
        if (orders[y] == 0) orders[y] = n / std::gcd(n, k);
        inverses[y] = powers[n - k];
      }
    }
    orders[0] = 1;
    inverses[0] = 0;
  });
  return cache_->orders;
}

std::uint64_t FiniteGroup::element_order(ElemId g) const {
  if (g >= order_) throw GroupError(GroupError::Kind::NotMember, "element id out of range");
  return element_orders()[g];
}

ElemId FiniteGroup::inverse(ElemId g) const {
  element_orders();
  return cache_->inverses[g];
}

ElemId FiniteGroup::power(ElemId g, long long k) const {
  const auto n = static_cast<long long>(element_order(g));
  long long e = ((k % n) + n) % n;
  ElemId result = 0, base = g;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GroupElement FiniteGroup::element(ElemId g) const {
  if (g >= order_) throw GroupError(GroupError::Kind::NotMember, "element id out of range");
  return impl_->element(g);
}

ElemId FiniteGroup::id_of(const GroupElement& g) const {
  auto id = impl_->locate(g);
  if (!id) throw GroupError(GroupError::Kind::NotMember, "element " + g.to_string() + " is not in " + name_);
  return *id;
}

const ConjugacyClasses& FiniteGroup::conjugacy_classes() const {
  std::call_once(cache_->classes_once, [this] {
    auto& cc = cache_->classes;
    constexpr auto kUnset = static_cast<std::uint32_t>(-1);
    cc.class_of.assign(order_, kUnset);
    std::vector<ElemId> gen_inv;
    for (ElemId s : generators_) gen_inv.push_back(inverse(s));
    for (ElemId seed = 0; seed < order_; ++seed) {
      if (cc.class_of[seed] != kUnset) continue;
      const auto idx = static_cast<std::uint32_t>(cc.classes.size());
      std::vector<ElemId> members{seed};
      cc.class_of[seed] = idx;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t k = 0; k < generators_.size(); ++k) {
          const ElemId y = mul(mul(gen_inv[k], members[i]), generators_[k]);
          if (cc.class_of[y] != kUnset) continue;
          cc.class_of[y] = idx;
          members.push_back(y);
        }
      }
      std::sort(members.begin(), members.end());
      cc.classes.push_back(std::move(members));
    }
  });
  return cache_->classes;
}

// ---------------------------------------------------------------------------

std::vector<ElemId> closure(const FiniteGroup& g, std::span<const ElemId> generators) {
  ClosureBuilder builder(g);
  for (ElemId x : generators) builder.add(x);
  return builder.elements();
}

ClosureBuilder::ClosureBuilder(const FiniteGroup& g) : group_(&g), elements_{0}, member_(g.order(), false) {
  member_[0] = true;
}

bool ClosureBuilder::add(ElemId x) {
  if (member_[x]) return false;
  generators_.push_back(x);
  // Old elements are already closed under the old generators, so they only
  // need the new one; new elements need every generator.
  const std::size_t old_size = elements_.size();
  for (std::size_t i = 0; i < old_size; ++i) {
    const ElemId y = group_->mul(elements_[i], x);
    if (!member_[y]) {
      member_[y] = true;
      elements_.push_back(y);
    }
  }
  for (std::size_t i = old_size; i < elements_.size(); ++i)
    for (ElemId s : generators_) {
      const ElemId y = group_->mul(elements_[i], s);
      if (!member_[y]) {
        member_[y] = true;
        elements_.push_back(y);
      }
    }
  return true;
}

Subgroup ClosureBuilder::build() const { return Subgroup::generated_by(*group_, generators_); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<ElemId> sorted, std::vector<ElemId> generators)
    : parent_(std::move(parent)), elements_(std::move(sorted)), generators_(std::move(generators)) {
  member_.assign(parent_.order(), false);
  for (ElemId x : elements_) member_[x] = true;
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const ElemId> generators) {
  ClosureBuilder builder(parent);
  for (ElemId x : generators) {
    if (x >= parent.order()) throw GroupError(GroupError::Kind::NotMember, "generator id out of range");
    builder.add(x);
  }
  std::vector<ElemId> sorted = builder.elements();
  std::sort(sorted.begin(), sorted.end());
  return Subgroup(parent, std::move(sorted), builder.generators());
}

Subgroup Subgroup::from_elements(const FiniteGroup& parent, std::vector<ElemId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<bool> member(parent.order(), false);
  for (ElemId x : elements) {
    if (x >= parent.order()) throw GroupError(GroupError::Kind::NotMember, "element id out of range");
    member[x] = true;
  }
  if (elements.empty() || !member[0]) throw GroupError(GroupError::Kind::NotSubgroup, "subset misses the identity");
  // Greedy generating set, then compare its closure to the given set.
  ClosureBuilder builder(parent);
  for (ElemId x : elements) {
    if (builder.contains(x)) continue;
    builder.add(x);
    if (builder.elements().size() > elements.size())
      throw GroupError(GroupError::Kind::NotSubgroup, "subset is not closed under multiplication");
  }
  for (ElemId x : builder.elements())
    if (!member[x]) throw GroupError(GroupError::Kind::NotSubgroup, "subset is not closed under multiplication");
  return Subgroup(parent, std::move(elements), builder.generators());
}

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<ElemId> all(parent.order());
  std::iota(all.begin(), all.end(), ElemId{0});
  return Subgroup(parent, std::move(all), {parent.generators().begin(), parent.generators().end()});
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return generated_by(parent, {}); }

bool Subgroup::is_normal() const {
  for (ElemId g : parent_.generators())
    for (ElemId h : generators_)
      if (!contains(parent_.conjugate(h, g))) return false;
  return true;
}

}  // namespace ratgk
