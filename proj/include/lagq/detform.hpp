#pragma once

// Determinant and composition-sum representations of L_n^{(alpha,beta)}(z)
// at q = 1.
//
// The polynomial equals the determinant of an n x n lower Hessenberg matrix
// with unit superdiagonal. Column j (1-indexed) carries the order index
// s = n - j + 1: the diagonal entry is B_{s,1} - z/s, the entries below it
// are B_{s, i-j+1}, and everything above the superdiagonal is zero. The
// determinant of such a matrix satisfies the leading-principal-minor
// recurrence
//
//   d_0 = 1,   d_i = sum_{j=1}^{i} (-1)^{i-j} M(i,j) d_{j-1},
//
// which costs O(n^2) polynomial products instead of a cofactor blowup.
//
// Expanding the same determinant yields the composition-sum form
//
//   L_n = sum_{k=1}^{n} (-1)^{n-k}
//         sum_{t_1+...+t_k = n, t_i >= 1} a_0^{(t_1)} a_{t_1}^{(t_2)}
//                                         ... a_{t_1+...+t_{k-1}}^{(t_k)}
//
// with a_j^{(l)} = B_{l+j, l} - (z/(j+1)) [l = 1]. The sum runs over all
// 2^(n-1) integer compositions of n, so the order is capped.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lagq/laguerre.hpp"
#include "lagq/poly.hpp"
#include "lagq/recurrence.hpp"

namespace lagq {

// Lower Hessenberg matrix of polynomials with unit superdiagonal.
// Entries are 0-indexed; the structural shape (zeros above the
// superdiagonal, ones on it) is fixed at construction.
struct HessenbergMatrix {
  explicit HessenbergMatrix(int size_in)
      : size(size_in), cells(static_cast<std::size_t>(size_in) * static_cast<std::size_t>(size_in)) {
    if (size < 1) throw std::invalid_argument("HessenbergMatrix: size must be positive");
    for (int i = 0; i + 1 < size; ++i) at(i, i + 1) = Poly{1};
  }

  Poly& at(int i, int j) { return cells[static_cast<std::size_t>(i) * size + j]; }
  const Poly& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * size + j]; }

  int size;
  std::vector<Poly> cells;
};

inline HessenbergMatrix build_matrix(const CoeffTable& table, int n) {
  if (n < 1) throw std::invalid_argument("build_matrix: n must be positive");
  HessenbergMatrix m(n);
  for (int j = 0; j < n; ++j) {
    const int s = n - j;  // order index of column j
    m.at(j, j) = Poly{table.b(s, 1), Rational(-1, s)};
    for (int i = j + 1; i < n; ++i) m.at(i, j) = Poly(table.b(s, i - j + 1));
  }
  return m;
}

inline HessenbergMatrix build_matrix(const Params& params, int n) {
  return build_matrix(CoeffTable(params), n);
}

// Exact determinant via the leading-principal-minor recurrence; valid for
// any lower Hessenberg matrix whose superdiagonal entries are all 1.
inline Poly hessenberg_det(const HessenbergMatrix& m) {
  std::vector<Poly> d(static_cast<std::size_t>(m.size) + 1);
  d[0] = Poly{1};
  for (int i = 1; i <= m.size; ++i) {
    Poly acc;
    for (int j = 1; j <= i; ++j) {
      Poly term = m.at(i - 1, j - 1) * d[static_cast<std::size_t>(j - 1)];
      acc = (i - j) % 2 == 0 ? acc + term : acc - term;
    }
    d[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return d[static_cast<std::size_t>(m.size)];
}

inline LaguerreResult laguerre_det(const CoeffTable& table, int n) {
  if (n < 0) throw std::domain_error("laguerre_det: n must be nonnegative");
  // Empty determinant: L_0 = 1.
  Poly p = n == 0 ? Poly{1} : hessenberg_det(build_matrix(table, n));
  return {table.params(), n, std::move(p), Method::determinant};
}

inline LaguerreResult laguerre_det(const Params& params, int n) {
  detail::require_q1(params, "laguerre_det");
  return laguerre_det(CoeffTable(params), n);
}

using Composition = std::vector<int>;

// Lazy enumeration of the k-part compositions of n in lexicographic order.
// An out-of-range k yields an empty range.
class CompositionRange {
 public:
  class iterator {
   public:
    using value_type = Composition;
    using reference = const Composition&;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(int n, int k) {
      if (k >= 1 && k <= n) {
        parts_.assign(static_cast<std::size_t>(k), 1);
        parts_.back() = n - k + 1;
      }
    }

    reference operator*() const { return parts_; }

    iterator& operator++() {
      const int k = static_cast<int>(parts_.size());
      int suffix = 0;
      for (int idx = k - 1; idx >= 1; --idx) {
        suffix += parts_[static_cast<std::size_t>(idx)];
        // parts_[idx-1] can take one unit from the suffix iff the suffix can
        // still fill its slots with parts >= 1 afterwards.
        if (suffix >= k - idx + 1) {
          parts_[static_cast<std::size_t>(idx - 1)] += 1;
          for (int t = idx; t < k - 1; ++t) parts_[static_cast<std::size_t>(t)] = 1;
          parts_.back() = suffix - 1 - (k - 1 - idx);
          return *this;
        }
      }
      parts_.clear();  // past the last composition
      return *this;
    }

    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const iterator& a, const iterator& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

   private:
    Composition parts_;
  };

  CompositionRange(int n, int k) : n_(n), k_(k) {
    if (n < 1) throw std::invalid_argument("compositions: n must be positive");
  }

  iterator begin() const { return iterator(n_, k_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int k_;
};

inline CompositionRange compositions(int n, int k) { return CompositionRange(n, k); }

// a_j^{(l)} = B_{l+j, l} - (z/(j+1)) [l = 1]: degree 1 exactly when l = 1,
// constant otherwise.
inline Poly a_term(const CoeffTable& table, int j, int ell) {
  if (j < 0 || ell < 1) throw std::out_of_range("a_term: requires j >= 0 and ell >= 1");
  Rational b = table.b(ell + j, ell);
  if (ell == 1) return Poly{std::move(b), Rational(-1, j + 1)};
  return Poly(std::move(b));
}

inline Poly a_term(const Params& params, int j, int ell) {
  detail::require_q1(params, "a_term");
  return a_term(CoeffTable(params), j, ell);
}

struct CompositionExpansion {
  Poly poly;
  std::uint64_t term_count = 0;  // compositions consumed; 2^(n-1) at order n
};

// Depth-first expansion over all compositions of n, reusing the partial
// prefix product along each branch so every edge costs one polynomial
// multiplication.
inline CompositionExpansion composition_expansion(const CoeffTable& table, int n) {
  CompositionExpansion out;
  if (n == 0) {
    out.poly = Poly{1};
    return out;
  }
  struct Rec {
    const CoeffTable& table;
    int n;
    CompositionExpansion& e;
    void operator()(int prefix, const Poly& product, int parts) const {
      for (int ell = 1; ell <= n - prefix; ++ell) {
        Poly next = product * a_term(table, prefix, ell);
        if (prefix + ell == n) {
          e.poly = (n - parts - 1) % 2 == 0 ? e.poly + next : e.poly - next;
          ++e.term_count;
        } else {
          (*this)(prefix + ell, next, parts + 1);
        }
      }
    }
  };
  Rec rec{table, n, out};
  rec(0, Poly{1}, 0);
  return out;
}

inline constexpr int kDefaultCompositionCap = 14;

inline LaguerreResult laguerre_composition(const Params& params, int n,
                                           int cap = kDefaultCompositionCap) {
  detail::require_q1(params, "laguerre_composition");
  if (n < 0) throw std::domain_error("laguerre_composition: n must be nonnegative");
  if (n > cap)
    throw std::length_error("laguerre_composition: n = " + std::to_string(n) +
                            " exceeds the composition cap " + std::to_string(cap) +
                            " (2^(n-1) terms)");
  CoeffTable table(params);
  CompositionExpansion e = composition_expansion(table, n);
  return {params, n, std::move(e.poly), Method::composition};
}

}  // namespace lagq
