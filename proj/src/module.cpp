#include "ratgk/module.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ratgk {

ModuleAction::ModuleAction(FiniteGroup group, int p, std::size_t n, std::vector<FpMatrix> rep)
    : group_(std::move(group)), p_(p), n_(n), rep_(std::move(rep)) {}

void ModuleAction::verify_homomorphism() const {
  const FpMatrix id = FpMatrix::identity(p_, n_);
  if (rep_.size() != group_.order()) throw GroupError(GroupError::Kind::InvalidAction, "one matrix per element required");
  if (rep_[0] != id) throw GroupError(GroupError::Kind::InvalidAction, "identity must act trivially");
  for (ElemId g = 0; g < group_.order(); ++g) {
    if (rep_[g].prime() != p_ || rep_[g].dim() != n_)
      throw GroupError(GroupError::Kind::InvalidAction, "representation matrices differ in shape");
    for (ElemId s : group_.generators())
      if (rep_[group_.mul(g, s)] != rep_[g] * rep_[s])
        throw GroupError(GroupError::Kind::InvalidAction,
                         "representation is not a homomorphism at (" + std::to_string(g) + ", " + std::to_string(s) + ")");
  }
}

ModuleAction ModuleAction::from_generator_images(const FiniteGroup& group, const std::vector<FpMatrix>& images) {
  const auto gens = group.generators();
  if (images.size() != gens.size()) throw GroupError(GroupError::Kind::InvalidAction, "one image per generator required");
  if (images.empty()) {
    throw GroupError(GroupError::Kind::InvalidAction, "cannot infer the module of a group without generators");
  }
  const int p = images.front().prime();
  const std::size_t n = images.front().dim();
  for (const auto& m : images) {
    if (m.prime() != p || m.dim() != n) throw GroupError(GroupError::Kind::InvalidAction, "generator images differ in shape");
    if (!m.is_invertible()) throw GroupError(GroupError::Kind::NotInvertible, "generator image is singular");
  }
  std::vector<FpMatrix> rep(group.order());
  std::vector<bool> assigned(group.order(), false);
  rep[0] = FpMatrix::identity(p, n);
  assigned[0] = true;
  std::vector<ElemId> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElemId g = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const ElemId h = group.mul(g, gens[k]);
      if (assigned[h]) continue;
      assigned[h] = true;
      rep[h] = rep[g] * images[k];
      queue.push_back(h);
    }
  }
  if (queue.size() != group.order()) throw GroupError(GroupError::Kind::InvalidAction, "generators do not generate the group");
  ModuleAction act(group, p, n, std::move(rep));
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (act.rep_[gens[k]] != images[k])
      throw GroupError(GroupError::Kind::InvalidAction, "generator images violate the group relations");
  act.verify_homomorphism();
  return act;
}

ModuleAction ModuleAction::natural(const FiniteGroup& matrix_group) {
  std::vector<FpMatrix> rep;
  rep.reserve(matrix_group.order());
  for (ElemId g = 0; g < matrix_group.order(); ++g) {
    GroupElement e = matrix_group.element(g);
    if (!e.holds<FpMatrix>()) throw GroupError(GroupError::Kind::InvalidAction, "natural action needs a matrix group");
    rep.push_back(e.as<FpMatrix>());
  }
  return from_matrices(matrix_group, std::move(rep));
}

ModuleAction ModuleAction::from_matrices(const FiniteGroup& group, std::vector<FpMatrix> rep) {
  if (rep.empty()) throw GroupError(GroupError::Kind::InvalidAction, "empty representation");
  const int p = rep.front().prime();
  const std::size_t n = rep.front().dim();
  ModuleAction act(group, p, n, std::move(rep));
  act.verify_homomorphism();
  return act;
}

std::uint64_t ModuleAction::module_size() const {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n_; ++i) s *= static_cast<std::uint64_t>(p_);
  return s;
}

Subgroup ModuleAction::kernel() const {
  const FpMatrix id = FpMatrix::identity(p_, n_);
  std::vector<ElemId> out;
  for (ElemId g = 0; g < group_.order(); ++g)
    if (rep_[g] == id) out.push_back(g);
  return Subgroup::from_elements(group_, std::move(out));
}

ModuleAction ModuleAction::change_basis(const FpMatrix& change) const {
  const FpMatrix inv = change.inverse();
  std::vector<FpMatrix> rep;
  rep.reserve(rep_.size());
  for (const auto& m : rep_) rep.push_back(inv * m * change);
  return from_matrices(group_, std::move(rep));
}

ModuleAction ModuleAction::direct_sum(const ModuleAction& other) const {
  if (!other.group_.shares_realization(group_) || other.p_ != p_)
    throw GroupError(GroupError::Kind::InvalidAction, "direct sum needs the same group and prime");
  std::vector<FpMatrix> rep;
  rep.reserve(rep_.size());
  for (ElemId g = 0; g < group_.order(); ++g) rep.push_back(FpMatrix::block_diagonal(rep_[g], other.rep_[g]));
  return from_matrices(group_, std::move(rep));
}

// ---------------------------------------------------------------------------

std::vector<FpVector> orbit(const ModuleAction& act, const FpVector& v) {
  if (v.dim() != act.dim() || v.prime() != act.prime())
    throw std::invalid_argument("vector dimension does not match the module");
  std::vector<bool> seen(act.module_size(), false);
  std::vector<FpVector> out{v};
  seen[v.index()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (ElemId s : act.group().generators()) {
      FpVector w = act.act(out[i], s);
      const auto idx = w.index();
      if (seen[idx]) continue;
      seen[idx] = true;
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end(), [](const FpVector& a, const FpVector& b) { return a.index() < b.index(); });
  return out;
}

Subgroup stabilizer(const ModuleAction& act, const FpVector& v) {
  if (v.dim() != act.dim() || v.prime() != act.prime())
    throw std::invalid_argument("vector dimension does not match the module");
  std::vector<ElemId> out;
  for (ElemId g = 0; g < act.group().order(); ++g)
    if (act.act(v, g) == v) out.push_back(g);
  return Subgroup::from_elements(act.group(), std::move(out));
}

std::vector<std::vector<FpVector>> nonzero_orbits(const ModuleAction& act) {
  std::vector<bool> seen(act.module_size(), false);
  std::vector<std::vector<FpVector>> out;
  for (std::uint64_t idx = 1; idx < act.module_size(); ++idx) {
    if (seen[idx]) continue;
    auto o = orbit(act, FpVector::from_index(act.prime(), act.dim(), idx));
    for (const auto& w : o) seen[w.index()] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<ElemId> right_transversal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<bool> covered(g.order(), false);
  std::vector<ElemId> reps;
  for (ElemId t = 0; t < g.order(); ++t) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (ElemId x : h.elements()) covered[g.mul(x, t)] = true;
  }
  return reps;
}

InducedModule induce_module(const ModuleAction& inner, const EmbeddedSubgroup& h) {
  if (!inner.group().shares_realization(h.group))
    throw GroupError(GroupError::Kind::NotSubgroup, "inner module must act through the embedded subgroup");
  const FiniteGroup& s = h.image.parent();
  const std::vector<ElemId> transversal = right_transversal(h.image);
  const std::size_t blocks = transversal.size();
  const std::size_t d = inner.dim();
  const std::size_t n = blocks * d;

  std::vector<std::uint32_t> block_of(s.order());
  for (std::size_t j = 0; j < blocks; ++j)
    for (ElemId x : h.image.elements()) block_of[s.mul(x, transversal[j])] = static_cast<std::uint32_t>(j);

  std::vector<FpMatrix> rep;
  rep.reserve(s.order());
  for (ElemId g = 0; g < s.order(); ++g) {
    std::vector<int> m(n * n, 0);
    for (std::size_t i = 0; i < blocks; ++i) {
      const ElemId y = s.mul(transversal[i], g);
      const std::size_t j = block_of[y];
      const ElemId x = s.mul(y, s.inverse(transversal[j]));
      const FpMatrix& blk = inner.rep(*h.from_parent(x));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) m[(i * d + a) * n + (j * d + b)] = blk.at(a, b);
    }
    rep.emplace_back(inner.prime(), n, std::move(m));
  }
  return InducedModule{ModuleAction::from_matrices(s, std::move(rep)), transversal, d};
}

bool is_simple_module(const ModuleAction& act) {
  if (act.dim() == 0) return false;
  std::vector<bool> seen(act.module_size(), false);
  for (std::uint64_t idx = 1; idx < act.module_size(); ++idx) {
    if (seen[idx]) continue;
    // The span of an orbit is the submodule the vector generates; one
    // vector per orbit suffices.
    auto o = orbit(act, FpVector::from_index(act.prime(), act.dim(), idx));
    for (const auto& w : o) seen[w.index()] = true;
    if (rank(o) != act.dim()) return false;
  }
  return true;
}

bool brauer_character_is_rational(const ModuleAction& act) {
  const auto& classes = act.group().conjugacy_classes();
  for (const auto& cls : classes.classes) {
    const FpMatrix& m = act.rep(cls.front());
    const std::uint64_t k = m.order();
    if (k % static_cast<std::uint64_t>(act.prime()) == 0)
      throw std::domain_error("the prime divides the order of an acting matrix");
    const FpPolynomial cp = m.charpoly();
    for (std::uint64_t e = 2; e < k; ++e) {
      if (std::gcd(e, k) != 1) continue;
      if (m.power(static_cast<long long>(e)).charpoly() != cp) return false;
    }
  }
  return true;
}

EigenvectorWitnesses eigenvector_property(const ModuleAction& act) {
  if (act.prime() != 5) throw std::invalid_argument("eigenvector property is defined for GF(5)-modules");
  EigenvectorWitnesses out;
  out.holds = true;
  for (std::uint64_t idx = 0; idx < act.module_size(); ++idx) {
    const FpVector v = FpVector::from_index(act.prime(), act.dim(), idx);
    const FpVector target = v.scaled(2);
    std::optional<ElemId> found;
    for (ElemId g = 0; g < act.group().order(); ++g)
      if (act.act(v, g) == target) {
        found = g;
        break;
      }
    if (!found) {
      out.holds = false;
      out.counterexample = v;
      out.witness.clear();
      return out;
    }
    out.witness.emplace(idx, *found);
  }
  return out;
}

}  // namespace ratgk
