#include "ratgk/element.hpp"

#include <sstream>
#include <stdexcept>

namespace ratgk {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("permutation image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img = identity(degree).images_;
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw std::invalid_argument("cycle point out of range");
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = next.images_[images_[i]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::uint32_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

namespace {

void put_u32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

void put_blob(std::string& out, const std::string& blob) {
  put_u32(out, static_cast<std::uint32_t>(blob.size()));
  out += blob;
}

}  // namespace

std::string GroupElement::encoding() const {
  std::string out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          out.push_back('P');
          put_u32(out, static_cast<std::uint32_t>(x.degree()));
          for (auto img : x.images()) put_u32(out, img);
        } else if constexpr (std::is_same_v<T, FpMatrix>) {
          out.push_back('M');
          put_u32(out, static_cast<std::uint32_t>(x.prime()));
          put_u32(out, static_cast<std::uint32_t>(x.dim()));
          for (int d : x.entries()) out.push_back(static_cast<char>(d));
        } else if constexpr (std::is_same_v<T, SemidirectPair>) {
          out.push_back('S');
          put_blob(out, x.acting ? x.acting->encoding() : std::string());
          put_u32(out, static_cast<std::uint32_t>(x.vector.prime()));
          put_u32(out, static_cast<std::uint32_t>(x.vector.dim()));
          for (int d : x.vector.entries()) out.push_back(static_cast<char>(d));
        } else if constexpr (std::is_same_v<T, ProductPair>) {
          out.push_back('D');
          put_blob(out, x.left ? x.left->encoding() : std::string());
          put_blob(out, x.right ? x.right->encoding() : std::string());
        } else {
          out.push_back('T');
          put_u32(out, x.id);
        }
      },
      payload_);
  return out;
}

std::string GroupElement::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Permutation>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, FpMatrix>) {
          return x.to_string();
        } else if constexpr (std::is_same_v<T, SemidirectPair>) {
          return "(" + (x.acting ? x.acting->to_string() : std::string("?")) + ", " + x.vector.to_string() + ")";
        } else if constexpr (std::is_same_v<T, ProductPair>) {
          return "(" + (x.left ? x.left->to_string() : std::string("?")) + ", " +
                 (x.right ? x.right->to_string() : std::string("?")) + ")";
        } else {
          return "#" + std::to_string(x.id);
        }
      },
      payload_);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b, MultiplicationRule rule) {
  const GroupElement& first = rule == MultiplicationRule::LeftToRight ? a : b;
  const GroupElement& second = rule == MultiplicationRule::LeftToRight ? b : a;
  if (first.holds<Permutation>() && second.holds<Permutation>())
    return first.as<Permutation>().then(second.as<Permutation>());
  if (first.holds<FpMatrix>() && second.holds<FpMatrix>()) return first.as<FpMatrix>() * second.as<FpMatrix>();
  throw std::invalid_argument("concrete multiplication needs two permutations or two matrices");
}

GroupElement identity_like(const GroupElement& like) {
  if (like.holds<Permutation>()) return Permutation::identity(like.as<Permutation>().degree());
  if (like.holds<FpMatrix>()) {
    const auto& m = like.as<FpMatrix>();
    return FpMatrix::identity(m.prime(), m.dim());
  }
  throw std::invalid_argument("identity_like needs a permutation or matrix");
}

}  // namespace ratgk
