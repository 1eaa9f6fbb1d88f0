#include "ratgk/subgroups.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ratgk {

namespace {

constexpr ElemId kAbsent = static_cast<ElemId>(-1);

class RestrictedRealization final : public Realization {
 public:
  RestrictedRealization(FiniteGroup parent, std::vector<ElemId> to_parent)
      : parent_(std::move(parent)), to_parent_(std::move(to_parent)), from_parent_(parent_.order(), kAbsent) {
    for (ElemId i = 0; i < to_parent_.size(); ++i) from_parent_[to_parent_[i]] = i;
  }

  std::size_t order() const override { return to_parent_.size(); }
  ElemId multiply(ElemId a, ElemId b) const override {
    return from_parent_[parent_.mul(to_parent_[a], to_parent_[b])];
  }
  GroupElement element(ElemId id) const override { return parent_.element(to_parent_[id]); }
  std::optional<ElemId> locate(const GroupElement& g) const override {
    auto pid = parent_.find(g);
    if (!pid || from_parent_[*pid] == kAbsent) return std::nullopt;
    return from_parent_[*pid];
  }

 private:
  FiniteGroup parent_;
  std::vector<ElemId> to_parent_;
  std::vector<ElemId> from_parent_;
};

bool is_p_power(std::uint64_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::optional<ElemId> EmbeddedSubgroup::from_parent(ElemId parent_id) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent_id);
  if (it == to_parent.end() || *it != parent_id) return std::nullopt;
  return static_cast<ElemId>(it - to_parent.begin());
}

EmbeddedSubgroup realize(const Subgroup& h, std::string name) {
  std::vector<ElemId> to_parent(h.elements().begin(), h.elements().end());
  auto impl = std::make_shared<RestrictedRealization>(h.parent(), to_parent);
  std::vector<ElemId> gens;
  for (ElemId g : h.generators())
    gens.push_back(static_cast<ElemId>(std::lower_bound(to_parent.begin(), to_parent.end(), g) - to_parent.begin()));
  if (name.empty()) name = "subgroup of order " + std::to_string(h.order()) + " in " + h.parent().name();
  FiniteGroup group(std::move(impl), std::move(gens), std::move(name));
  return EmbeddedSubgroup{std::move(group), h, std::move(to_parent)};
}

Subgroup centralizer(const FiniteGroup& g, std::span<const ElemId> x) {
  for (ElemId e : x)
    if (e >= g.order()) throw GroupError(GroupError::Kind::NotMember, "centralized element is not in the group");
  std::vector<ElemId> out;
  for (ElemId c = 0; c < g.order(); ++c) {
    bool commutes = true;
    for (ElemId e : x)
      if (g.mul(c, e) != g.mul(e, c)) {
        commutes = false;
        break;
      }
    if (commutes) out.push_back(c);
  }
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& x) {
  if (!x.parent().shares_realization(g)) throw GroupError(GroupError::Kind::NotSubgroup, "subgroup of a different group");
  return centralizer(g, x.generators());
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().shares_realization(g)) throw GroupError(GroupError::Kind::NotSubgroup, "subgroup of a different group");
  std::vector<ElemId> out;
  for (ElemId c = 0; c < g.order(); ++c) {
    bool normalizes = true;
    for (ElemId e : h.generators())
      if (!h.contains(g.conjugate(e, c))) {
        normalizes = false;
        break;
      }
    if (normalizes) out.push_back(c);
  }
  return Subgroup::from_elements(g, std::move(out));
}

Subgroup center(const FiniteGroup& g) { return centralizer(g, g.generators()); }

Subgroup normal_closure(const FiniteGroup& g, std::span<const ElemId> seeds, std::span<const ElemId> conjugators) {
  ClosureBuilder builder(g);
  std::vector<ElemId> pending;
  for (ElemId s : seeds)
    if (builder.add(s)) pending.push_back(s);
  while (!pending.empty()) {
    const ElemId x = pending.back();
    pending.pop_back();
    for (ElemId c : conjugators) {
      const ElemId y = g.conjugate(x, c);
      if (builder.add(y)) pending.push_back(y);
    }
  }
  return builder.build();
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<ElemId> comms;
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, comms, gens);
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) { return derived_series(g).back().order() == 1; }

bool is_abelian(const Subgroup& h) {
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (h.parent().mul(gens[i], gens[j]) != h.parent().mul(gens[j], gens[i])) return false;
  return true;
}

Subgroup sylow_subgroup(const FiniteGroup& g, unsigned p) {
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup sylow = Subgroup::trivial(g);
  while (sylow.order() < target) {
    const Subgroup norm = normalizer(g, sylow);
    std::optional<ElemId> extension;
    for (ElemId x : norm.elements()) {
      if (sylow.contains(x)) continue;
      if (sylow.contains(g.power(x, p))) {
        extension = x;
        break;
      }
    }
    // A proper p-subgroup always has p | [N(P):P].
    if (!extension) throw GroupError(GroupError::Kind::Unknown, "Sylow growth stalled");
    std::vector<ElemId> gens(sylow.generators().begin(), sylow.generators().end());
    gens.push_back(*extension);
    sylow = Subgroup::generated_by(g, gens);
  }
  return sylow;
}

std::vector<ElemId> product_set(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = h.parent();
  std::vector<bool> seen(g.order(), false);
  std::vector<ElemId> out;
  for (ElemId a : h.elements())
    for (ElemId b : k.elements()) {
      const ElemId c = g.mul(a, b);
      if (!seen[c]) {
        seen[c] = true;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup p_elements_subgroup(const FiniteGroup& g, unsigned p) {
  std::vector<ElemId> gens;
  for (ElemId x = 1; x < g.order(); ++x)
    if (is_p_power(g.element_order(x), p)) gens.push_back(x);
  ClosureBuilder builder(g);
  for (ElemId x : gens) builder.add(x);
  return builder.build();
}

ElemId twisted_power_factor(const FiniteGroup& g, ElemId a, ElemId x, unsigned n, TwistVariant variant) {
  if (n == 0) throw std::invalid_argument("twisted power needs n >= 1");
  const ElemId step = variant == TwistVariant::Alpha ? a : g.mul(a, a);
  ElemId result = x;
  ElemId conj = 0;  // step^k
  for (unsigned k = 1; k < n; ++k) {
    conj = g.mul(conj, step);
    result = g.mul(g.conjugate(x, conj), result);
  }
  return result;
}

std::vector<ElemId> conjugacy_key(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<ElemId> best(h.elements().begin(), h.elements().end());
  std::vector<ElemId> buf(h.order());
  for (ElemId c = 1; c < g.order(); ++c) {
    std::size_t i = 0;
    for (ElemId e : h.elements()) buf[i++] = g.conjugate(e, c);
    std::sort(buf.begin(), buf.end());
    if (buf < best) best = buf;
  }
  return best;
}

std::vector<Subgroup> subgroup_class_representatives(const FiniteGroup& g) {
  struct Entry {
    Subgroup subgroup;
    std::vector<ElemId> key;
  };
  std::vector<Entry> reps;
  std::set<std::vector<ElemId>> keys;
  std::set<std::vector<ElemId>> seen;

  Subgroup triv = Subgroup::trivial(g);
  keys.insert(conjugacy_key(triv));
  reps.push_back({triv, *keys.begin()});
  seen.insert({0});

  std::vector<bool> covered;
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Subgroup base = reps[r].subgroup;
    covered.assign(g.order(), false);
    for (ElemId x = 0; x < g.order(); ++x) {
      if (covered[x] || base.contains(x)) continue;
      for (ElemId s : base.elements()) covered[g.mul(s, x)] = true;
      ClosureBuilder builder(g);
      for (ElemId s : base.generators()) builder.add(s);
      builder.add(x);
      std::vector<ElemId> sorted = builder.elements();
      std::sort(sorted.begin(), sorted.end());
      if (!seen.insert(sorted).second) continue;
      Subgroup joined = Subgroup::generated_by(g, builder.generators());
      auto key = conjugacy_key(joined);
      if (!keys.insert(key).second) continue;
      reps.push_back({std::move(joined), std::move(key)});
    }
  }
  std::sort(reps.begin(), reps.end(), [](const Entry& a, const Entry& b) {
    if (a.subgroup.order() != b.subgroup.order()) return a.subgroup.order() < b.subgroup.order();
    return a.key < b.key;
  });
  std::vector<Subgroup> out;
  out.reserve(reps.size());
  for (auto& e : reps) out.push_back(std::move(e.subgroup));
  return out;
}

}  // namespace ratgk
