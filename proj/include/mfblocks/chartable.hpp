#pragma once

// Ordinary character tables: exact computation by the Dixon-Schneider
// method, validation of supplied tables, and Murnaghan-Nakayama values for
// symmetric groups.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfblocks/cyclo.hpp"
#include "mfblocks/perm_group.hpp"

namespace mfb {

struct ClassInfo {
  std::string label;
  std::optional<Perm> rep;  // 0-based; present for computed tables
  std::int64_t size = 1;
  std::int64_t element_order = 1;
};

class CharacterTable {
 public:
  CharacterTable() = default;
  // Runs every invariant check; throws Schema "OrthogonalityFailure" or
  // "SchemaError" on violation.
  CharacterTable(std::int64_t order, std::int64_t exponent, std::vector<ClassInfo> classes,
                 std::vector<std::vector<CycloNum>> chars, std::shared_ptr<const PermGroup> group = nullptr);

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int num_chars() const { return static_cast<int>(chars_.size()); }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  const std::vector<std::vector<CycloNum>>& chars() const { return chars_; }
  const CycloNum& value(int chi, int k) const { return chars_[chi][k]; }
  std::int64_t degree(int chi) const { return degrees_[chi]; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  // class containing the inverses of class k
  int inverse_class(int k) const { return inverse_class_[k]; }
  // present when the table was computed from (or attached to) a group whose
  // class order matches the columns
  const std::shared_ptr<const PermGroup>& group() const { return group_; }
  bool is_rational_row(int chi) const;
  // row of the trivial character
  int trivial_index() const { return trivial_; }

  friend bool operator==(const CharacterTable& a, const CharacterTable& b);

 private:
  void verify();

  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<ClassInfo> classes_;
  std::vector<std::vector<CycloNum>> chars_;
  std::vector<std::int64_t> degrees_;
  std::vector<int> inverse_class_;
  int trivial_ = 0;
  std::shared_ptr<const PermGroup> group_;
};

// Smallest prime r = 1 (mod exponent) with r > 2 sqrt(order).
std::int64_t dixon_prime(std::int64_t order, std::int64_t exponent);

// Class multiplication coefficients: a[j][i][l] = #{x in C_j : x^-1 g_l in C_i}.
std::vector<std::vector<std::vector<std::int64_t>>> class_multiplication_coefficients(const PermGroup& G);

CharacterTable dixon_schneider(std::shared_ptr<const PermGroup> G);

// Row order used everywhere: (degree, entries in canonical CycloNum order).
void sort_rows(std::vector<std::vector<CycloNum>>& rows);

// Character value of S_n at cycle type mu via rim-hook removal on beta-sets.
// Partitions are weakly decreasing positive parts.
Integer mn_value(const std::vector<int>& lambda, const std::vector<int>& mu);
// Cycle type of a permutation, weakly decreasing.
std::vector<int> cycle_type(const Perm& p);

}  // namespace mfb
