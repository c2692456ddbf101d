#pragma once

// Periodic flag symbols, periodic matrices and their statistics.

#include "qschur/affine_weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

/// A function p: Z -> Z with p(j + D) = p(j) + n, stored by (p(1), ..., p(D)).
class FlagSymbol {
public:
  FlagSymbol() = default;
  FlagSymbol(int n, std::vector<int> values);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }
  /// p(k) for any integer k.
  int operator()(int k) const;
  /// Replace p(k) (and its periodic translates) by `value` at position k.
  FlagSymbol with_value(int k, int value) const;

  /// Multiplicities #p^{-1}(i), i in [1, n].
  std::vector<int> weight() const;
  /// 1 <= p(1) <= ... <= p(D) <= n.
  bool is_dominant() const;
  /// The dominant symbol in the orbit of p under the affine symmetric group.
  FlagSymbol dominant() const;
  /// Positions k in Z (not reduced mod D) with p(k) == value.
  std::vector<int> preimage(int value) const;

  friend bool operator==(const FlagSymbol&, const FlagSymbol&) = default;
  friend auto operator<=>(const FlagSymbol&, const FlagSymbol&) = default;

  /// "n=2;D=2;[2,1]".
  std::string to_text() const;
  static FlagSymbol parse(const std::string& text);

private:
  int n_ = 1;
  std::vector<int> values_;
};

/// The dominant symbol with the given weight.
FlagSymbol dominant_from_weight(const std::vector<int>& weight);
std::vector<FlagSymbol> dominant_symbols(int n, int rank);
/// All symbols with every window value in [lo, hi].
std::vector<FlagSymbol> flag_symbols_in_window(int n, int rank, int lo, int hi);
/// Nonnegative integer vectors of length n summing to total.
std::vector<std::vector<int>> compositions(int total, int parts);

/// (p)w = p o w.
FlagSymbol act_on_flag_symbol(const FlagSymbol& p, const AffinePermutation& w);

/// Minimal-length w with (lambda)w = p, lambda the dominant representative.
AffinePermutation min_coset_rep(const FlagSymbol& p);
/// All w with (lambda)w = p.
std::vector<AffinePermutation> coset_elements(const FlagSymbol& p);

int x_stat(const FlagSymbol& p);

/// N-valued Z x Z matrix with s(i + n, j + n) = s(i, j), stored on rows [1, n].
class PeriodicMatrix {
public:
  using Key = std::pair<int, int>;

  PeriodicMatrix() = default;
  /// Entries given with arbitrary row index; they are shifted into rows
  /// [1, n] and summed. Zero entries are dropped; negatives are rejected.
  PeriodicMatrix(int n, const std::vector<std::tuple<int, int, int>>& entries);

  int n() const { return n_; }
  /// Total mass sum_{i in [1,n], j} s(i, j).
  int rank() const { return rank_; }
  int at(int i, int j) const;
  const std::map<Key, int>& entries() const { return entries_; }

  /// Row sums over rows [1, n]; this is the weight of the left symbol.
  std::vector<int> row_weight() const;
  /// Column sums for columns [1, n].
  std::vector<int> col_weight() const;
  FlagSymbol row_dominant() const { return dominant_from_weight(row_weight()); }
  FlagSymbol col_dominant() const { return dominant_from_weight(col_weight()); }

  /// Sum of s(i, j) * (i - j); equals sum(window of p) - sum(window of mu)
  /// for any p in the class of the matrix.
  int shift_degree() const;

  PeriodicMatrix transpose() const;
  /// Entrywise s + t / s - t; returns nullopt if a negative entry appears.
  friend PeriodicMatrix operator+(const PeriodicMatrix& a, const PeriodicMatrix& b);
  std::optional<PeriodicMatrix> minus(const PeriodicMatrix& b) const;

  friend bool operator==(const PeriodicMatrix&, const PeriodicMatrix&) = default;
  friend auto operator<=>(const PeriodicMatrix&, const PeriodicMatrix&) = default;

  std::string to_text() const;

private:
  int n_ = 1;
  int rank_ = 0;
  std::map<Key, int> entries_;
};

/// ^delta lambda: diagonal matrix with the weight of lambda.
PeriodicMatrix diagonal_matrix(const FlagSymbol& lambda);
/// Identity-pattern matrix s_ij = delta_ij (rank n).
PeriodicMatrix identity_matrix(int n);

int y_stat(const PeriodicMatrix& s);

/// s_ij = #{k in Z / DZ : p(k) = i, q(k) = j}.
PeriodicMatrix matrix_of_pair(const FlagSymbol& p, const FlagSymbol& q);

/// Flag symbols p in the orbit of the row dominant with matrix_of_pair(p, mu) = s,
/// mu = s.col_dominant(). Sorted.
std::vector<FlagSymbol> flags_of_matrix(const PeriodicMatrix& s);
/// Number of flags returned by flags_of_matrix (a product of multinomials).
std::size_t flags_of_matrix_count(const PeriodicMatrix& s);

/// (e_i, f_i) matrices for lambda and residue i in [0, n-1]; nullopt when
/// #lambda^{-1}(i) == 0 (a negative entry would appear).
std::optional<std::pair<PeriodicMatrix, PeriodicMatrix>> generator_matrices(const FlagSymbol& lambda, int residue);

bool is_aperiodic(const PeriodicMatrix& s);

enum class OrderHint { definitely_not_leq, consistent, equal };
/// Diagonal necessary condition for t <= s. Throws on shape mismatch.
OrderHint order_hint(const PeriodicMatrix& t, const PeriodicMatrix& s);

/// All periodic matrices in block (lambda, mu) whose support satisfies
/// |j - i| <= band. Sorted.
std::vector<PeriodicMatrix> matrices_in_band(const FlagSymbol& lambda, const FlagSymbol& mu, int band);
/// All periodic matrices of total mass `rank` with |j - i| <= band.
std::vector<PeriodicMatrix> matrices_in_band(int n, int rank, int band);

/// Residue in [1, n] representing index i modulo n.
int residue_index(int i, int n);

} // namespace qschur
