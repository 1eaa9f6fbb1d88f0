#include "ratgk/construct.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace ratgk {

namespace {

constexpr std::size_t kTableThreshold = 1024;

/// Permutation or matrix group stored element by element.
class ConcreteRealization final : public Realization {
 public:
  ConcreteRealization(std::vector<GroupElement> elements, std::unordered_map<std::string, ElemId> index,
                      MultiplicationRule rule)
      : elements_(std::move(elements)), index_(std::move(index)), rule_(rule) {
    const std::size_t n = elements_.size();
    if (n <= kTableThreshold) {
      table_.resize(n * n);
      for (ElemId a = 0; a < n; ++a)
        for (ElemId b = 0; b < n; ++b) table_[a * n + b] = compute(a, b);
    }
  }

  std::size_t order() const override { return elements_.size(); }
  ElemId multiply(ElemId a, ElemId b) const override {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return compute(a, b);
  }
  GroupElement element(ElemId id) const override { return elements_[id]; }
  std::optional<ElemId> locate(const GroupElement& g) const override {
    auto it = index_.find(g.encoding());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  ElemId compute(ElemId a, ElemId b) const {
    return index_.at(multiply_elements(elements_[a], elements_[b]).encoding());
  }
  GroupElement multiply_elements(const GroupElement& a, const GroupElement& b) const { return ratgk::multiply(a, b, rule_); }

  std::vector<GroupElement> elements_;
  std::unordered_map<std::string, ElemId> index_;
  MultiplicationRule rule_;
  std::vector<ElemId> table_;
};

class DirectProductRealization final : public Realization {
 public:
  DirectProductRealization(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {}

  std::size_t order() const override { return g_.order() * h_.order(); }
  ElemId multiply(ElemId a, ElemId b) const override {
    const auto m = static_cast<ElemId>(h_.order());
    return g_.mul(a / m, b / m) * m + h_.mul(a % m, b % m);
  }
  GroupElement element(ElemId id) const override {
    const auto m = static_cast<ElemId>(h_.order());
    return ProductPair{std::make_shared<GroupElement>(g_.element(id / m)),
                       std::make_shared<GroupElement>(h_.element(id % m))};
  }
  std::optional<ElemId> locate(const GroupElement& e) const override {
    if (!e.holds<ProductPair>()) return std::nullopt;
    const auto& pair = e.as<ProductPair>();
    if (!pair.left || !pair.right) return std::nullopt;
    auto a = g_.find(*pair.left);
    auto b = h_.find(*pair.right);
    if (!a || !b) return std::nullopt;
    return static_cast<ElemId>(*a * h_.order() + *b);
  }

 private:
  FiniteGroup g_, h_;
};

class SemidirectRealization final : public Realization {
 public:
  explicit SemidirectRealization(ModuleAction act) : act_(std::move(act)), vsize_(act_.module_size()) {
    const std::size_t s = act_.group().order();
    acted_.resize(s * vsize_);
    for (ElemId t = 0; t < s; ++t)
      for (std::uint64_t v = 0; v < vsize_; ++v)
        acted_[t * vsize_ + v] =
            static_cast<std::uint32_t>(act_.act(FpVector::from_index(act_.prime(), act_.dim(), v), t).index());
  }

  std::size_t order() const override { return act_.group().order() * vsize_; }
  ElemId multiply(ElemId a, ElemId b) const override {
    const ElemId s = static_cast<ElemId>(a / vsize_), t = static_cast<ElemId>(b / vsize_);
    const std::uint64_t v = a % vsize_, w = b % vsize_;
    const std::uint64_t vt = acted_[t * vsize_ + v];
    return static_cast<ElemId>(act_.group().mul(s, t) * vsize_ + add(vt, w));
  }
  GroupElement element(ElemId id) const override {
    return SemidirectPair{std::make_shared<GroupElement>(act_.group().element(static_cast<ElemId>(id / vsize_))),
                          FpVector::from_index(act_.prime(), act_.dim(), id % vsize_)};
  }
  std::optional<ElemId> locate(const GroupElement& e) const override {
    if (!e.holds<SemidirectPair>()) return std::nullopt;
    const auto& pair = e.as<SemidirectPair>();
    if (!pair.acting || pair.vector.dim() != act_.dim() || pair.vector.prime() != act_.prime()) return std::nullopt;
    auto s = act_.group().find(*pair.acting);
    if (!s) return std::nullopt;
    return static_cast<ElemId>(*s * vsize_ + pair.vector.index());
  }

 private:
  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    const auto p = static_cast<std::uint64_t>(act_.prime());
    std::uint64_t out = 0, place = 1;
    for (std::size_t i = 0; i < act_.dim(); ++i) {
      out += ((x % p + y % p) % p) * place;
      x /= p;
      y /= p;
      place *= p;
    }
    return out;
  }

  ModuleAction act_;
  std::uint64_t vsize_;
  std::vector<std::uint32_t> acted_;
};

class QuotientRealization final : public Realization {
 public:
  QuotientRealization(FiniteGroup g, std::vector<ElemId> projection, std::vector<ElemId> reps)
      : g_(std::move(g)), projection_(std::move(projection)), reps_(std::move(reps)) {}

  std::size_t order() const override { return reps_.size(); }
  ElemId multiply(ElemId a, ElemId b) const override { return projection_[g_.mul(reps_[a], reps_[b])]; }
  GroupElement element(ElemId id) const override { return TableIndex{id}; }
  std::optional<ElemId> locate(const GroupElement& e) const override {
    if (!e.holds<TableIndex>() || e.as<TableIndex>().id >= reps_.size()) return std::nullopt;
    return e.as<TableIndex>().id;
  }

 private:
  FiniteGroup g_;
  std::vector<ElemId> projection_;
  std::vector<ElemId> reps_;
};

void check_shapes(const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw GroupError(GroupError::Kind::InconsistentGenerators, "at least one generator is required");
  const GroupElement& first = gens.front();
  for (const auto& g : gens) {
    if (g.holds<Permutation>()) {
      if (!first.holds<Permutation>() || g.as<Permutation>().degree() != first.as<Permutation>().degree())
        throw GroupError(GroupError::Kind::InconsistentGenerators, "generators must be permutations of one degree");
    } else if (g.holds<FpMatrix>()) {
      if (!first.holds<FpMatrix>() || g.as<FpMatrix>().dim() != first.as<FpMatrix>().dim() ||
          g.as<FpMatrix>().prime() != first.as<FpMatrix>().prime())
        throw GroupError(GroupError::Kind::InconsistentGenerators, "generators must be matrices of one size and prime");
      if (!g.as<FpMatrix>().is_invertible())
        throw GroupError(GroupError::Kind::NotInvertible, "matrix generator " + g.to_string() + " is singular");
    } else {
      throw GroupError(GroupError::Kind::InconsistentGenerators, "closure supports permutation and matrix generators");
    }
  }
}

int primitive_root(int p) {
  for (int g = 1; g < p; ++g) {
    int x = 1, k = 0;
    do {
      x = x * g % p;
      ++k;
    } while (x != 1);
    if (k == p - 1) return g;
  }
  return 1;
}

FiniteGroup permutation_group(std::size_t degree, const std::vector<std::vector<std::vector<std::uint32_t>>>& cycle_gens,
                              std::string name) {
  std::vector<GroupElement> gens;
  for (const auto& cycles : cycle_gens) gens.emplace_back(Permutation::from_cycles(degree, cycles));
  return generate_group(gens, {}, std::move(name));
}

std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::uint32_t> iota_cycle(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = from; i < to; ++i) c.push_back(i);
  return c;
}

FiniteGroup quaternion_group() {
  // Units 1, i, j, k as 0..3; element 2*u + s stands for (-1)^s u.
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right_mult = [](int by) {
    std::vector<std::uint32_t> img(8);
    for (int x = 0; x < 8; ++x) {
      const int u = x / 2, s = x % 2;
      img[x] = static_cast<std::uint32_t>(2 * kUnit[u][by] + ((s + kSign[u][by]) % 2));
    }
    return Permutation(std::move(img));
  };
  return generate_group({right_mult(1), right_mult(2)}, {}, "Q8");
}

}  // namespace

FiniteGroup generate_group(const std::vector<GroupElement>& generators, const GroupOptions& options, std::string name) {
  check_shapes(generators);
  std::vector<GroupElement> elements{identity_like(generators.front())};
  std::unordered_map<std::string, ElemId> index{{elements.front().encoding(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& s : generators) {
      GroupElement y = multiply(elements[i], s, options.rule);
      auto enc = y.encoding();
      if (index.contains(enc)) continue;
      if (elements.size() >= options.order_cap)
        throw GroupError(GroupError::Kind::CapExceeded,
                         "group order exceeds the cap of " + std::to_string(options.order_cap));
      index.emplace(std::move(enc), static_cast<ElemId>(elements.size()));
      elements.push_back(std::move(y));
    }
  std::vector<ElemId> gen_ids;
  for (const auto& s : generators) gen_ids.push_back(index.at(s.encoding()));
  if (name.empty()) name = "<" + std::to_string(generators.size()) + " generators>";
  auto impl = std::make_shared<ConcreteRealization>(std::move(elements), std::move(index), options.rule);
  return FiniteGroup(std::move(impl), std::move(gen_ids), std::move(name));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
  if (g.order() * h.order() > order_cap)
    throw GroupError(GroupError::Kind::CapExceeded, "direct product order exceeds the cap of " + std::to_string(order_cap));
  const auto m = static_cast<ElemId>(h.order());
  std::vector<ElemId> gens;
  for (ElemId x : g.generators()) gens.push_back(x * m);
  for (ElemId y : h.generators()) gens.push_back(y);
  auto impl = std::make_shared<DirectProductRealization>(g, h);
  return FiniteGroup(std::move(impl), std::move(gens), g.name() + " x " + h.name());
}

FiniteGroup semidirect_product(const ModuleAction& act, std::size_t order_cap) {
  const std::uint64_t vsize = act.module_size();
  if (vsize * act.group().order() > order_cap)
    throw GroupError(GroupError::Kind::CapExceeded,
                     "semidirect product order exceeds the cap of " + std::to_string(order_cap));
  std::vector<ElemId> gens;
  for (ElemId s : act.group().generators()) gens.push_back(static_cast<ElemId>(s * vsize));
  for (std::size_t i = 0; i < act.dim(); ++i) {
    std::vector<int> e(act.dim(), 0);
    e[i] = 1;
    gens.push_back(static_cast<ElemId>(FpVector(act.prime(), e).index()));
  }
  std::string name = "F" + std::to_string(act.prime()) + "^" + std::to_string(act.dim()) + ":" + act.group().name();
  return FiniteGroup(std::make_shared<SemidirectRealization>(act), std::move(gens), std::move(name));
}

ElemId semidirect_id(const ModuleAction& act, ElemId s, const FpVector& v) {
  return static_cast<ElemId>(s * act.module_size() + v.index());
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().shares_realization(g)) throw GroupError(GroupError::Kind::NotSubgroup, "subgroup of a different group");
  if (!n.is_normal()) throw GroupError(GroupError::Kind::NotNormal, "quotient needs a normal subgroup");
  constexpr ElemId kUnset = static_cast<ElemId>(-1);
  std::vector<ElemId> projection(g.order(), kUnset);
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnset) continue;
    const auto id = static_cast<ElemId>(reps.size());
    reps.push_back(x);
    for (ElemId k : n.elements()) projection[g.mul(k, x)] = id;
  }
  std::vector<ElemId> gens;
  for (ElemId s : g.generators()) {
    const ElemId q = projection[s];
    if (q != 0 && std::find(gens.begin(), gens.end(), q) == gens.end()) gens.push_back(q);
  }
  auto impl = std::make_shared<QuotientRealization>(g, projection, reps);
  FiniteGroup qg(std::move(impl), std::move(gens), g.name() + " / (order " + std::to_string(n.order()) + ")");
  return Quotient{std::move(qg), std::move(projection), std::move(reps)};
}

std::vector<FpMatrix> all_invertible_matrices(int p, std::size_t n) {
  std::vector<FpMatrix> out;
  const std::size_t cells = n * n;
  std::vector<int> digits(cells, 0);
  while (true) {
    FpMatrix m(p, n, digits);
    if (m.is_invertible()) out.push_back(std::move(m));
    std::size_t i = cells;
    while (i > 0 && ++digits[i - 1] == p) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

FiniteGroup general_linear_group(int p, std::size_t n) {
  std::vector<GroupElement> gens;
  FpMatrix diag = FpMatrix::identity(p, n);
  diag.set(0, 0, primitive_root(p));
  gens.emplace_back(diag);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FpMatrix t = FpMatrix::identity(p, n);
      t.set(i, j, 1);
      gens.emplace_back(std::move(t));
    }
  std::size_t expected = 1, pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= static_cast<std::size_t>(p);
  for (std::size_t i = 0, pi = 1; i < n; ++i, pi *= static_cast<std::size_t>(p)) expected *= pn - pi;
  FiniteGroup gl = generate_group(gens, {MultiplicationRule::LeftToRight, std::max(expected, kDefaultOrderCap)},
                                  "GL(" + std::to_string(n) + "," + std::to_string(p) + ")");
  if (gl.order() != expected) throw GroupError(GroupError::Kind::Unknown, "GL generators produced the wrong order");
  return gl;
}

FiniteGroup named_group(std::string_view name) {
  const std::string label(name);
  auto unknown = [&] { return GroupError(GroupError::Kind::Unknown, "unknown named group '" + label + "'"); };
  if (name == "Q8") return quaternion_group();
  if (name == "C3:C4")
    return permutation_group(7, {{{0, 1, 2}}, {{1, 2}, {3, 4, 5, 6}}}, "C3:C4");
  if (name == "SL(2,3)")
    return generate_group({FpMatrix(3, {{1, 1}, {0, 1}}), FpMatrix(3, {{0, 2}, {1, 0}})}, {}, "SL(2,3)");
  if (name == "GL(2,3)")
    return generate_group({FpMatrix(3, {{1, 1}, {0, 1}}), FpMatrix(3, {{0, 2}, {1, 0}}), FpMatrix(3, {{2, 0}, {0, 1}})}, {},
                          "GL(2,3)");
  if (name == "GL(2,5)") return general_linear_group(5, 2);
  if (name.size() < 2) throw unknown();
  const auto n = parse_uint(name.substr(1));
  if (!n || *n == 0) throw unknown();
  const auto k = static_cast<std::uint32_t>(*n);
  switch (name.front()) {
    case 'C':
      return permutation_group(k, {{iota_cycle(0, k)}}, label);
    case 'S':
      if (k > 7) throw unknown();
      if (k == 1) return permutation_group(1, {{}}, label);
      return permutation_group(k, {{{0, 1}}, {iota_cycle(0, k)}}, label);
    case 'A':
      if (k > 7) throw unknown();
      if (k < 3) return permutation_group(k, {{}}, label);
      return permutation_group(k, {{{0, 1, 2}}, {k % 2 ? iota_cycle(0, k) : iota_cycle(1, k)}}, label);
    case 'D': {
      if (k % 2 || k < 6) throw unknown();
      const std::uint32_t m = k / 2;
      std::vector<std::vector<std::uint32_t>> reflection;
      for (std::uint32_t i = 1; i < m - i; ++i) reflection.push_back({i, m - i});
      return permutation_group(m, {{iota_cycle(0, m)}, reflection}, label);
    }
    default:
      throw unknown();
  }
}

std::vector<std::string> named_group_examples() {
  return {"C2", "C6", "S3", "S4", "A4", "A5", "D8", "D10", "Q8", "C3:C4", "SL(2,3)", "GL(2,3)", "GL(2,5)"};
}

}  // namespace ratgk
