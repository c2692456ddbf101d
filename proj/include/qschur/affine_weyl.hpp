#pragma once

// Extended affine symmetric group of type GL_D.
//
// Conventions used throughout the library:
//  * an element w is a bijection of Z with w(i + D) = w(i) + D, stored by its
//    window (w(1), ..., w(D));
//  * the product is composition of functions, (x * y)(i) = x(y(i));
//  * the simple reflection s_i (i in [0, D-1]) swaps i + kD and i + 1 + kD;
//  * rho is the length-zero rotation i -> i + 1;
//  * the group acts on flag symbols on the right by precomposition,
//    (p)w = p o w, so ((p)x)y = (p)(x * y).

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qschur {

class AffinePermutation {
public:
  AffinePermutation() = default;
  /// Throws std::invalid_argument unless the window entries are pairwise
  /// distinct modulo D.
  explicit AffinePermutation(std::vector<int> window);

  static AffinePermutation identity(int rank);
  static AffinePermutation simple(int rank, int i);
  /// rho^k.
  static AffinePermutation rotation(int rank, int k);
  /// i -> i + D*mu_i on the window.
  static AffinePermutation translation(const std::vector<int>& mu);

  int rank() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// w(i) for any integer i.
  int operator()(int i) const;
  /// Index k with w = rho^k * (Coxeter part): sum_i (w(i) - i) / D.
  int rotation_class() const;

  AffinePermutation inverse() const;
  /// w * s_i (swap window positions i, i+1).
  AffinePermutation times_simple(int i) const;
  /// s_i * w (swap values congruent to i, i+1).
  AffinePermutation simple_times(int i) const;

  friend AffinePermutation operator*(const AffinePermutation& x, const AffinePermutation& y);
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation&, const AffinePermutation&) = default;

  /// "D=4;[2,5,3,4]".
  std::string to_text() const;
  static AffinePermutation parse(const std::string& text);

private:
  std::vector<int> window_;
};

int length(const AffinePermutation& w);

/// True when l(w s_i) = l(w) + 1.
bool right_ascent(const AffinePermutation& w, int i);
/// True when l(s_i w) = l(w) + 1.
bool left_ascent(const AffinePermutation& w, int i);

/// w = rho^rotation * s_{letters[0]} * s_{letters[1]} * ... with
/// letters.size() == length(w).
struct ReducedWord {
  int rotation = 0;
  std::vector<int> letters;
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

ReducedWord reduced_word(const AffinePermutation& w);
AffinePermutation from_word(int rank, const ReducedWord& word);

enum class BruhatResult { less_or_equal, not_less_or_equal, incomparable_classes };

BruhatResult bruhat_leq(const AffinePermutation& x, const AffinePermutation& y);

/// Young subgroup S_lambda of a dominant symbol: the maximal runs of equal
/// values, as 1-based inclusive position intervals.
struct YoungSubgroup {
  int rank = 0;
  std::vector<std::pair<int, int>> blocks;
  /// Simple reflections generating the subgroup.
  std::vector<int> generators() const;
  std::size_t order() const;
};

/// Requires a weakly increasing window (not checked against [1, n]).
YoungSubgroup young_subgroup(const std::vector<int>& dominant_values);

/// Unique minimal-length element of S_lambda w S_mu.
AffinePermutation min_double_coset_rep(const std::vector<int>& lambda, const AffinePermutation& w,
                                       const std::vector<int>& mu);

/// All elements of S_lambda rep S_mu, sorted.
std::vector<AffinePermutation> enumerate_double_coset(const std::vector<int>& lambda,
                                                      const std::vector<int>& mu,
                                                      const AffinePermutation& rep);

} // namespace qschur
