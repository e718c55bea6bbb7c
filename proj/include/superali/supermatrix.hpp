#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superali/errors.hpp"
#include "superali/superscalar.hpp"

namespace superali {

/// Block format (m|n): rows/columns 0..m-1 are even slots, m..m+n-1 odd slots.
struct Format {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t total() const { return m + n; }
  friend bool operator==(const Format& a, const Format& b) { return a.m == b.m && a.n == b.n; }
  friend bool operator!=(const Format& a, const Format& b) { return !(a == b); }
};

/// Supermatrix in standard format with SuperScalar entries.
///
/// A homogeneous matrix of parity p has entries of parity p in the diagonal
/// blocks and p+1 in the off-diagonal blocks. Matrices over a supercommutative
/// coefficient algebra multiply by the ordinary row-column rule; all sign
/// bookkeeping lives in the entry products.
class SuperMatrix {
public:
  SuperMatrix() = default;

  explicit SuperMatrix(Format fmt, const GeneratorTable* tab = nullptr)
      : fmt_(fmt), tab_(tab),
        e_(static_cast<std::size_t>(fmt.total()) * fmt.total(), SuperScalar(Rational(0), tab)) {}

  static SuperMatrix identity(Format fmt, const GeneratorTable* tab = nullptr) {
    SuperMatrix r(fmt, tab);
    for (std::uint32_t i = 0; i < fmt.total(); ++i) r.at(i, i) = SuperScalar(rat(1), tab);
    r.declared_ = Parity::even;
    return r;
  }

  Format format() const { return fmt_; }
  const GeneratorTable* table() const { return tab_; }

  Parity slot_parity(std::uint32_t i, std::uint32_t j) const {
    return static_cast<Parity>(((i >= fmt_.m) + (j >= fmt_.m)) & 1);
  }

  const SuperScalar& at(std::uint32_t i, std::uint32_t j) const { return e_[i * fmt_.total() + j]; }
  SuperScalar& at(std::uint32_t i, std::uint32_t j) { return e_[i * fmt_.total() + j]; }

  std::optional<Parity> declared_parity() const { return declared_; }
  void declare_parity(Parity p) { declared_ = p; }

  bool is_zero() const {
    for (const auto& s : e_)
      if (!s.is_zero()) return false;
    return true;
  }

  /// Parity as a homogeneous element of Mat(m|n): declared if set, otherwise
  /// inferred from the nonzero entries; nullopt when inhomogeneous.
  std::optional<Parity> parity() const {
    if (declared_) return declared_;
    std::optional<Parity> p;
    for (std::uint32_t i = 0; i < fmt_.total(); ++i) {
      for (std::uint32_t j = 0; j < fmt_.total(); ++j) {
        const SuperScalar& s = at(i, j);
        if (s.is_zero()) continue;
        auto ep = s.parity();
        if (!ep) return std::nullopt;
        Parity mp = parity_add(*ep, slot_parity(i, j));
        if (!p) p = mp;
        else if (*p != mp) return std::nullopt;
      }
    }
    return p ? p : std::optional<Parity>(Parity::even);
  }

  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    check_formats(a, b);
    SuperMatrix r(a.fmt_, a.tab_ ? a.tab_ : b.tab_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
  }

  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    check_formats(a, b);
    SuperMatrix r(a.fmt_, a.tab_ ? a.tab_ : b.tab_);
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
  }

  friend SuperMatrix operator-(const SuperMatrix& a) {
    SuperMatrix r = a;
    for (auto& s : r.e_) s = -s;
    return r;
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    check_formats(a, b);
    SuperMatrix r(a.fmt_, a.tab_ ? a.tab_ : b.tab_);
    std::uint32_t N = a.fmt_.total();
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t k = 0; k < N; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::uint32_t j = 0; j < N; ++j) {
          if (b.at(k, j).is_zero()) continue;
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
      }
    return r;
  }

  /// Left multiplication by a scalar.
  friend SuperMatrix operator*(const SuperScalar& c, const SuperMatrix& a) {
    SuperMatrix r(a.fmt_, a.tab_ ? a.tab_ : c.table());
    for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
    return r;
  }

  friend SuperMatrix operator*(const Rational& c, const SuperMatrix& a) {
    SuperMatrix r = a;
    for (auto& s : r.e_) s = s * c;
    return r;
  }

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.fmt_ != b.fmt_) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k)
      if (!(a.e_[k] == b.e_[k])) return false;
    return true;
  }
  friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }

  SuperMatrix pow(std::uint32_t k) const {
    SuperMatrix r = identity(fmt_, tab_);
    for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
    if (declared_ && k > 0)
      r.declared_ = static_cast<Parity>((static_cast<int>(*declared_) * k) & 1);
    return r;
  }

  /// str X = tr A - (-1)^p tr D for homogeneous X of parity p.
  SuperScalar supertrace() const {
    auto p = parity();
    if (!p) throw parity_error("supertrace needs a parity-homogeneous matrix");
    SuperScalar trA(Rational(0), tab_), trD(Rational(0), tab_);
    for (std::uint32_t i = 0; i < fmt_.m; ++i) trA = trA + at(i, i);
    for (std::uint32_t i = fmt_.m; i < fmt_.total(); ++i) trD = trD + at(i, i);
    return is_odd(*p) ? trA + trD : trA - trD;
  }

  /// Trace of the off-diagonal block of a matrix of shape (A B; B A).
  SuperScalar queer_trace() const {
    if (fmt_.m != fmt_.n) throw format_mismatch_error("queer trace needs format (n|n)");
    std::uint32_t n = fmt_.m;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (!(at(i, j) == at(n + i, n + j)) || !(at(i, n + j) == at(n + i, j)))
          throw format_mismatch_error("matrix does not have the (A B; B A) shape");
      }
    SuperScalar t(Rational(0), tab_);
    for (std::uint32_t i = 0; i < n; ++i) t = t + at(i, n + i);
    return t;
  }

  /// (A B; C D) -> (A^t, -C^t; B^t, D^t).
  SuperMatrix supertranspose() const {
    SuperMatrix r(fmt_, tab_);
    std::uint32_t m = fmt_.m, N = fmt_.total();
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j) {
        bool ri = i >= m, rj = j >= m;
        if (!ri && !rj) r.at(i, j) = at(j, i);
        else if (ri && rj) r.at(i, j) = at(j, i);
        else if (!ri && rj) r.at(i, j) = -at(j, i);  // -C^t block
        else r.at(i, j) = at(j, i);                  // B^t block
      }
    r.declared_ = declared_;
    return r;
  }

  /// (A B; C D) -> (D C; B A), landing in format (n|m).
  SuperMatrix pi_conjugate() const {
    std::uint32_t m = fmt_.m, n = fmt_.n, N = fmt_.total();
    SuperMatrix r(Format{n, m}, tab_);
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j)
        r.at(i, j) = at((i + m) % N, (j + m) % N);
    r.declared_ = declared_;
    return r;
  }

  /// Determinant over the even commutative part; throws if any entry is odd.
  SuperScalar det_even() const {
    std::uint32_t N = fmt_.total();
    for (const auto& s : e_) {
      auto p = s.parity();
      if (!p || is_odd(*p)) throw parity_error("det_even needs even-parity entries");
    }
    // Laplace over column subsets, memoized; row index = N - popcount(cols)
    std::map<std::uint64_t, SuperScalar> memo;
    return det_block(0, N, (1ull << N) - 1, memo);
  }

  /// Classical adjugate-based inverse for even matrices whose determinant has
  /// an invertible constant part.
  SuperMatrix inverse_even() const {
    std::uint32_t N = fmt_.total();
    SuperScalar d = det_even();
    SuperScalar dinv = d.invert_unipotent();
    SuperMatrix r(fmt_, tab_);
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j) {
        SuperScalar c = cofactor(j, i);
        r.at(i, j) = c * dinv;
      }
    return r;
  }

  /// Ber(A B; C D) = det(A - B D^{-1} C) det(D)^{-1} for an even matrix with
  /// invertible D block.
  SuperScalar berezinian() const {
    auto p = parity();
    if (!p || is_odd(*p)) throw parity_error("berezinian needs an even matrix");
    std::uint32_t m = fmt_.m, n = fmt_.n;
    if (n == 0) return det_even();
    SuperMatrix D = square_block(fmt_.m, n);
    SuperScalar detD = D.det_even();
    if (rat_is_zero(detD.constant_term()))
      throw not_invertible_error("D block is not invertible");
    if (m == 0) return detD.invert_unipotent();
    SuperMatrix Dinv = D.inverse_even();
    // S = A - B D^{-1} C, entrywise over the rectangular blocks
    SuperMatrix S = square_block(0, m);
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t k = 0; k < n; ++k)
          for (std::uint32_t l = 0; l < n; ++l)
            S.at(i, j) = S.at(i, j) - at(i, m + k) * Dinv.at(k, l) * at(m + l, j);
    return S.det_even() * detD.invert_unipotent();
  }

  /// Square diagonal block at offset i0, copied into a purely even container.
  SuperMatrix square_block(std::uint32_t i0, std::uint32_t size) const {
    SuperMatrix r(Format{size, 0}, tab_);
    for (std::uint32_t i = 0; i < size; ++i)
      for (std::uint32_t j = 0; j < size; ++j) r.at(i, j) = at(i0 + i, i0 + j);
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (std::uint32_t i = 0; i < fmt_.total(); ++i) {
      s += i ? "\n[" : "[";
      for (std::uint32_t j = 0; j < fmt_.total(); ++j) {
        if (j) s += ", ";
        s += at(i, j).to_string();
      }
      s += "]";
    }
    return s;
  }

private:
  static void check_formats(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.fmt_ != b.fmt_) throw format_mismatch_error("matrix formats differ");
    if (a.tab_ && b.tab_ && a.tab_ != b.tab_)
      throw table_mismatch_error("matrices over different generator tables");
  }

  SuperScalar det_block(std::uint32_t row, std::uint32_t N, std::uint64_t cols,
                        std::map<std::uint64_t, SuperScalar>& memo) const {
    if (cols == 0) return SuperScalar(rat(1), tab_);
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    SuperScalar acc(Rational(0), tab_);
    int sign = 1;
    for (std::uint32_t j = 0; j < N; ++j) {
      if (!(cols & (1ull << j))) continue;
      if (!at(row, j).is_zero()) {
        SuperScalar sub = det_block(row + 1, N, cols & ~(1ull << j), memo);
        SuperScalar term = at(row, j) * sub;
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;  // flips per active column
    }
    memo.emplace(cols, acc);
    return acc;
  }

  SuperScalar cofactor(std::uint32_t i, std::uint32_t j) const {
    std::uint32_t N = fmt_.total();
    SuperMatrix sub(Format{N - 1, 0}, tab_);
    std::uint32_t r = 0;
    for (std::uint32_t a = 0; a < N; ++a) {
      if (a == i) continue;
      std::uint32_t c = 0;
      for (std::uint32_t b = 0; b < N; ++b) {
        if (b == j) continue;
        sub.at(r, c) = at(a, b);
        ++c;
      }
      ++r;
    }
    SuperScalar d = N == 1 ? SuperScalar(rat(1), tab_) : sub.det_even();
    return ((i + j) & 1) ? -d : d;
  }

  Format fmt_;
  const GeneratorTable* tab_ = nullptr;
  std::vector<SuperScalar> e_;
  std::optional<Parity> declared_;
};

/// Nondegenerate bilinear form given by its Gram matrix.
struct BilinearForm {
  SuperMatrix gram;
  Parity parity;
};

/// B X + (-1)^{p(X) p(B)} X^{st} B = 0.
inline bool preserves_form(const BilinearForm& B, const SuperMatrix& X) {
  auto p = X.parity();
  if (!p) throw parity_error("preserves_form needs a parity-homogeneous matrix");
  SuperMatrix lhs = B.gram * X;
  SuperMatrix rhs = X.supertranspose() * B.gram;
  bool flip = is_odd(*p) && is_odd(B.parity);
  return (flip ? lhs - rhs : lhs + rhs).is_zero();
}

} // namespace superali
