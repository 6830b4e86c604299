#pragma once

// Partition combinatorics for symmetric and alternating groups: ell-cores,
// ell-bar cores of strict partitions, conjugation, and block reports for
// S_n and A_n with optional cross-checks against computed character tables.

#include <optional>
#include <string>
#include <vector>

#include "mfblocks/blocks.hpp"
#include "mfblocks/certify.hpp"
#include "mfblocks/json_io.hpp"

namespace mfb {

// Weakly decreasing positive parts; the empty partition is {}.
using Partition = std::vector<int>;

// Throws Domain "NotPartition" unless parts are positive and weakly decreasing.
void check_partition(const Partition& p);
int size_of(const Partition& p);
std::string partition_label(const Partition& p);  // "[3,1,1]", "[]"

// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);

Partition conjugate(const Partition& p);
bool is_symmetric(const Partition& p);

// Beta-set with k beads: {p_i + k - i}, i = 1..k, k >= number of parts.
std::vector<int> beta_set(const Partition& p, int k);
Partition from_beta_set(std::vector<int> beta);

// Every partition obtained by removing one ell-rim-hook, in order of the
// moved bead.
std::vector<Partition> removable_rim_hooks(const Partition& p, int ell);
// Abacus computation; equals repeated rim-hook removal in any order.
Partition ell_core(const Partition& p, int ell);
int ell_weight(const Partition& p, int ell);

struct SpinLabel {
  Partition parts;  // strictly decreasing

  // Throws Domain "NotStrict".
  explicit SpinLabel(Partition p);
  // (n - number of parts) mod 2
  int parity() const;
};

void check_strict(const Partition& p);
int parity(const Partition& strict);  // Domain "NotStrict"

// Results of one bar removal: drop a part equal to ell, lower a part by ell
// when the result is a new positive part, or drop two parts summing to ell.
// ell odd (Domain "EllEven"), p strict (Domain "NotStrict").
std::vector<Partition> removable_bars(const Partition& p, int ell);
Partition bar_core(const Partition& p, int ell);

// Row i of an S_n table labelled by the partition whose Murnaghan-Nakayama
// values match it. Requires class representatives. Throws Internal when a
// row matches no partition.
std::vector<Partition> label_symmetric_table(const CharacterTable& t, int n);

struct SnBlockEntry {
  Partition core;
  std::vector<Partition> chars;
  int weight = 0;
  int defect = 0;  // nu_ell((ell w)!)
  std::string verdict = "1";
  Criterion criterion = Criterion::RationalCharacterSum;
};

struct SnBlockReport {
  int n = 0;
  int ell = 2;
  std::vector<SnBlockEntry> blocks;  // ordered by first partition
  bool table_checked = false;        // compared with the computed table
  bool table_agrees = false;         // grouping and defects equal
};

// Combinatorial report; for n <= check_limit the S_n table is computed and
// compared.
SnBlockReport sn_block_report(int n, int ell, int check_limit = 7);

struct AnCharLabel {
  Partition lambda;  // the smaller of lambda, conjugate(lambda)
  int sign = 0;      // +1 / -1 for the two constituents of a split restriction, 0 otherwise

  std::string label() const;
  friend bool operator==(const AnCharLabel&, const AnCharLabel&) = default;
  friend auto operator<=>(const AnCharLabel&, const AnCharLabel&) = default;
};

struct AnBlockEntry {
  std::vector<AnCharLabel> chars;  // sorted
  std::vector<Partition> sn_cores; // cores of the covering S_n blocks
  int defect = 0;
  std::string verdict = "1";
  Criterion criterion = Criterion::RationalCharacterSum;
  std::vector<AnCharLabel> witness;  // characters whose sum is rational, or the defect-zero character
  bool verified = false;  // grouping, defect and criterion matched the table
};

struct AnReport {
  int n = 0;
  int ell = 2;
  std::vector<AnBlockEntry> blocks;
  bool table_checked = false;
  bool table_agrees = false;
};

// Per-block verdicts for A_n (n >= 2) following the split of the S_n blocks.
// Self-conjugate lambda restricts to two conjugate characters that share a
// block unless the S_n block has defect zero; other lambda restrict
// irreducibly. For n <= check_limit each prediction is compared with the
// computed A_n table and certify_mf.
AnReport an_mf_report(int n, int ell, int check_limit = 7);

// Strict partitions grouped by ell-bar core (ell odd); combinatorial only.
struct SpinGroup {
  Partition bar_core;
  std::vector<SpinLabel> labels;
};
std::vector<SpinGroup> spin_bar_core_groups(int n, int ell);

json sn_report_to_json(const SnBlockReport& r);
json an_report_to_json(const AnReport& r);

}  // namespace mfb
