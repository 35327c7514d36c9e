#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pr/vertex.hpp"

namespace pr {

/// A finite poset on elements 0..k-1 with the order stored as a full k×k
/// reflexive/antisymmetric/transitive matrix, validated on construction.
class FinitePoset {
 public:
  static FinitePoset from_leq(std::uint32_t k, std::vector<std::uint8_t> leq);

  std::uint32_t size() const { return k_; }
  bool leq(std::uint32_t a, std::uint32_t b) const { return leq_[a * k_ + b] != 0; }
  bool strictly_less(std::uint32_t a, std::uint32_t b) const { return a != b && leq(a, b); }
  bool comparable(std::uint32_t a, std::uint32_t b) const { return leq(a, b) || leq(b, a); }

  /// Number of elements comparable to e (excluding e itself).
  std::uint32_t related_count(std::uint32_t e) const;
  std::uint32_t downset_size(std::uint32_t e) const;
  std::uint32_t upset_size(std::uint32_t e) const;

  /// A linear extension chosen most-constrained-first: among the elements
  /// whose predecessors are all placed, pick the one with the most comparable
  /// partners (ties by index).
  std::vector<std::uint32_t> search_order() const;

 private:
  std::uint32_t k_ = 0;
  std::vector<std::uint8_t> leq_;
};

/// Named families and file loading.
///   boolean:n     subsets of [n] ordered by inclusion; element id = bit pattern
///   chain:k       total order on k elements
///   antichain:k   no relations
///   fork:n        element 0 below an antichain 1..n
///   diamond:n     element 0 below antichain 1..n below element n+1
///   truncated:n:s:t   layers s..t of boolean:n, elements in (size,lex) order
///   file:<path>   explicit relation file
FinitePoset make_poset(std::string_view spec);

/// Relation file: line 1 `k=<int>`, then lines `i<j` (0-indexed). The
/// transitive closure is computed on load; the result must satisfy the
/// partial-order axioms.
FinitePoset poset_from_file(const std::string& path);
FinitePoset poset_from_relations(std::uint32_t k,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& rels);

/// Exact isomorphism test; |P| ≤ 12. Candidate classes are refined by
/// (downset, upset) sizes and neighbor signatures before backtracking.
bool poset_isomorphic(const FinitePoset& a, const FinitePoset& b);

/// Elements of truncated:n:s:t as subsets, in (size,lex) order; element i of
/// the poset corresponds to subsets[i].
std::vector<Vertex> truncated_lattice_elements(std::uint32_t n, std::uint32_t s, std::uint32_t t);

}  // namespace pr
