#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ratgk {

/// Reduces an arbitrary integer into [0, p).
constexpr int mod_p(long long value, int p) {
  long long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

/// Multiplicative inverse of a nonzero residue modulo a prime.
int inverse_mod(int value, int p);

/// Row vector over GF(p).
class FpVector {
 public:
  FpVector() = default;
  FpVector(int p, std::vector<int> entries);
  static FpVector zero(int p, std::size_t dim);

  int prime() const { return p_; }
  std::size_t dim() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  std::span<const int> entries() const { return v_; }

  bool is_zero() const;
  FpVector operator+(const FpVector& other) const;
  FpVector scaled(int scalar) const;

  /// Index of the vector in the base-p enumeration of GF(p)^n (first entry
  /// most significant).
  std::uint64_t index() const;
  static FpVector from_index(int p, std::size_t dim, std::uint64_t index);

  std::string to_string() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;
  friend auto operator<=>(const FpVector&, const FpVector&) = default;

 private:
  int p_ = 2;
  std::vector<int> v_;
};

/// Polynomial over GF(p), coefficients stored from the constant term up.
struct FpPolynomial {
  int p = 2;
  std::vector<int> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  int evaluate(int x) const;
  std::string to_string() const;

  friend bool operator==(const FpPolynomial&, const FpPolynomial&) = default;
};

/// Square matrix over GF(p). Vectors are rows and act by right
/// multiplication, so w * (A * B) == (w * A) * B.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, std::size_t n, std::vector<int> row_major);
  FpMatrix(int p, std::initializer_list<std::initializer_list<int>> rows);

  static FpMatrix identity(int p, std::size_t n);
  static FpMatrix scalar(int p, std::size_t n, int value);
  static FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);

  int prime() const { return p_; }
  std::size_t dim() const { return n_; }
  int at(std::size_t row, std::size_t col) const { return a_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, int value) { a_[row * n_ + col] = mod_p(value, p_); }
  std::span<const int> entries() const { return a_; }

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix power(long long k) const;

  int determinant() const;
  bool is_invertible() const { return determinant() != 0; }
  /// Throws std::domain_error when singular.
  FpMatrix inverse() const;
  /// Multiplicative order; the matrix must be invertible.
  std::uint64_t order() const;

  /// Monic characteristic polynomial det(xI - A), via Hessenberg reduction.
  FpPolynomial charpoly() const;

  /// Row-major base-p digit sequence.
  std::string to_string() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  int p_ = 2;
  std::size_t n_ = 0;
  std::vector<int> a_;
};

FpVector operator*(const FpVector& v, const FpMatrix& m);

/// Rank of a list of vectors of the same dimension.
std::size_t rank(std::span<const FpVector> vectors);

bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, unsigned p);

}  // namespace ratgk
