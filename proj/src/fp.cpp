#include "ratgk/fp.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ratgk {

int inverse_mod(int value, int p) {
  value = mod_p(value, p);
  if (value == 0) throw std::domain_error("zero has no inverse modulo p");
  // Fermat: value^(p-2)
  long long result = 1, base = value;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

// ---------------------------------------------------------------------------
// FpVector

FpVector::FpVector(int p, std::vector<int> entries) : p_(p), v_(std::move(entries)) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("modulus must be prime");
  for (auto& x : v_) x = mod_p(x, p_);
}

FpVector FpVector::zero(int p, std::size_t dim) { return FpVector(p, std::vector<int>(dim, 0)); }

bool FpVector::is_zero() const {
  for (int x : v_)
    if (x != 0) return false;
  return true;
}

FpVector FpVector::operator+(const FpVector& other) const {
  if (other.p_ != p_ || other.dim() != dim()) throw std::invalid_argument("vector shape mismatch");
  FpVector out = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) out.v_[i] = (v_[i] + other.v_[i]) % p_;
  return out;
}

FpVector FpVector::scaled(int scalar) const {
  FpVector out = *this;
  for (auto& x : out.v_) x = mod_p(static_cast<long long>(x) * scalar, p_);
  return out;
}

std::uint64_t FpVector::index() const {
  std::uint64_t idx = 0;
  for (int x : v_) idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(x);
  return idx;
}

FpVector FpVector::from_index(int p, std::size_t dim, std::uint64_t index) {
  std::vector<int> digits(dim, 0);
  for (std::size_t i = dim; i-- > 0;) {
    digits[i] = static_cast<int>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  return FpVector(p, std::move(digits));
}

std::string FpVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

FpVector operator*(const FpVector& v, const FpMatrix& m) {
  if (v.prime() != m.prime() || v.dim() != m.dim()) throw std::invalid_argument("vector/matrix shape mismatch");
  const std::size_t n = m.dim();
  const int p = m.prime();
  std::vector<int> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int vi = v[i];
    if (vi == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] = (out[j] + vi * m.at(i, j)) % p;
  }
  return FpVector(p, std::move(out));
}

// ---------------------------------------------------------------------------
// FpPolynomial

int FpPolynomial::evaluate(int x) const {
  long long acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
  return mod_p(acc, p);
}

std::string FpPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(int p, std::size_t n, std::vector<int> row_major) : p_(p), n_(n), a_(std::move(row_major)) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("modulus must be prime");
  if (a_.size() != n * n) throw std::invalid_argument("matrix entry count is not n*n");
  for (auto& x : a_) x = mod_p(x, p_);
}

FpMatrix::FpMatrix(int p, std::initializer_list<std::initializer_list<int>> rows) : p_(p), n_(rows.size()) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("modulus must be prime");
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("matrix must be square");
    for (int x : row) a_.push_back(mod_p(x, p_));
  }
}

FpMatrix FpMatrix::identity(int p, std::size_t n) { return scalar(p, n, 1); }

FpMatrix FpMatrix::scalar(int p, std::size_t n, int value) {
  std::vector<int> a(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = value;
  return FpMatrix(p, n, std::move(a));
}

FpMatrix FpMatrix::block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("block primes differ");
  const std::size_t n = a.n_ + b.n_;
  std::vector<int> m(n * n, 0);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) m[i * n + j] = a.at(i, j);
  for (std::size_t i = 0; i < b.n_; ++i)
    for (std::size_t j = 0; j < b.n_; ++j) m[(a.n_ + i) * n + a.n_ + j] = b.at(i, j);
  return FpMatrix(a.p_, n, std::move(m));
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (rhs.p_ != p_ || rhs.n_ != n_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out = scalar(p_, n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const int aik = a_[i * n_ + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        out.a_[i * n_ + j] = (out.a_[i * n_ + j] + aik * rhs.a_[k * n_ + j]) % p_;
    }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  if (rhs.p_ != p_ || rhs.n_ != n_) throw std::invalid_argument("matrix shape mismatch");
  FpMatrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = mod_p(a_[i] - rhs.a_[i], p_);
  return out;
}

FpMatrix FpMatrix::power(long long k) const {
  FpMatrix base = k < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  FpMatrix result = identity(p_, n_);
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

int FpMatrix::determinant() const {
  std::vector<int> m = a_;
  long long det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[pivot * n_ + j], m[col * n_ + j]);
      det = p_ - det;
    }
    const int pv = m[col * n_ + col];
    det = det * pv % p_;
    const int inv = inverse_mod(pv, p_);
    for (std::size_t r = col + 1; r < n_; ++r) {
      const int f = m[r * n_ + col] * inv % p_;
      if (f == 0) continue;
      for (std::size_t j = col; j < n_; ++j) m[r * n_ + j] = mod_p(m[r * n_ + j] - f * m[col * n_ + j], p_);
    }
  }
  return mod_p(det, p_);
}

FpMatrix FpMatrix::inverse() const {
  std::vector<int> m = a_;
  std::vector<int> inv = identity(p_, n_).a_;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("matrix is singular");
    for (std::size_t j = 0; j < n_; ++j) {
      std::swap(m[pivot * n_ + j], m[col * n_ + j]);
      std::swap(inv[pivot * n_ + j], inv[col * n_ + j]);
    }
    const int s = inverse_mod(m[col * n_ + col], p_);
    for (std::size_t j = 0; j < n_; ++j) {
      m[col * n_ + j] = m[col * n_ + j] * s % p_;
      inv[col * n_ + j] = inv[col * n_ + j] * s % p_;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col) continue;
      const int f = m[r * n_ + col];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        m[r * n_ + j] = mod_p(m[r * n_ + j] - f * m[col * n_ + j], p_);
        inv[r * n_ + j] = mod_p(inv[r * n_ + j] - f * inv[col * n_ + j], p_);
      }
    }
  }
  return FpMatrix(p_, n_, std::move(inv));
}

std::uint64_t FpMatrix::order() const {
  if (!is_invertible()) throw std::domain_error("singular matrix has no multiplicative order");
  const FpMatrix id = identity(p_, n_);
  FpMatrix x = *this;
  std::uint64_t k = 1;
  while (x != id) {
    x = x * *this;
    ++k;
  }
  return k;
}

FpPolynomial FpMatrix::charpoly() const {
  // Similarity-reduce to upper Hessenberg form, then expand along the
  // subdiagonal.
  const std::size_t n = n_;
  std::vector<int> h = a_;
  auto H = [&](std::size_t r, std::size_t c) -> int& { return h[r * n + c]; };
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && H(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(H(piv, c), H(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(H(r, piv), H(r, j + 1));
    }
    const int inv = inverse_mod(H(j + 1, j), p_);
    for (std::size_t r = j + 2; r < n; ++r) {
      const int f = H(r, j) * inv % p_;
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) H(r, c) = mod_p(H(r, c) - f * H(j + 1, c), p_);
      for (std::size_t c = 0; c < n; ++c) H(c, j + 1) = (H(c, j + 1) + f * H(c, r)) % p_;
    }
  }

  // polys[k] = charpoly of the leading k x k block.
  std::vector<std::vector<int>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t c = k - 1;
    std::vector<int> next(k + 1, 0);
    // (x - h_cc) * polys[k-1]
    for (std::size_t i = 0; i < polys[k - 1].size(); ++i) {
      next[i + 1] = (next[i + 1] + polys[k - 1][i]) % p_;
      next[i] = mod_p(next[i] - H(c, c) * polys[k - 1][i], p_);
    }
    long long prod = 1;
    for (std::size_t i = c; i-- > 0;) {
      prod = prod * H(i + 1, i) % p_;
      const long long coef = prod * H(i, c) % p_;
      if (coef == 0) continue;
      for (std::size_t t = 0; t < polys[i].size(); ++t)
        next[t] = mod_p(next[t] - coef * polys[i][t], p_);
    }
    polys[k] = std::move(next);
  }
  return FpPolynomial{p_, polys[n]};
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t rank(std::span<const FpVector> vectors) {
  if (vectors.empty()) return 0;
  const int p = vectors.front().prime();
  const std::size_t n = vectors.front().dim();
  std::vector<std::vector<int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.entries().begin(), v.entries().end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const int inv = inverse_mod(rows[r][col], p);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const int f = rows[i][col] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) rows[i][j] = mod_p(rows[i][j] - f * rows[r][j], p);
    }
    ++r;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(static_cast<unsigned>(d));
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (unsigned p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t part = 1;
  while (n && n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace ratgk
