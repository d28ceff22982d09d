#pragma once

#include <optional>

#include "affsl2/catalog.hpp"

namespace affsl2 {

/// An embedding rho ⊂ pi of a relation leading term, with the witness
/// (m, n) for rho = pi_{m.alpha}(n).
struct Embedding {
  ColoredPartition rho;
  ColoredPartition pi;
  int m = 0;
  int n = 0;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// All embeddings of level-k leading terms in pi, complete and duplicate
/// free, ordered by (n, m).
std::vector<Embedding> find_embeddings(const ColoredPartition& pi, int k);

enum class PairTag { Identical, Disjoint, Linked, Exceptional };

/// Match of one of the fourteen unlinked families: index 1..14 and the
/// instantiated parameters (a, b, c as applicable; unused ones -1), with
/// the anchor degree j of the pattern.
struct FamilyMatch {
  int family = 0;
  int j = 0;
  int a = -1, b = -1, c = -1;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

struct PairClass {
  PairTag tag = PairTag::Disjoint;
  std::vector<FamilyMatch> families;  // nonempty iff Exceptional
};

/// Classifies a pair of embeddings in pi = rho1 ∪ rho2: disjoint supports,
/// linked through a chain of embeddings with shorter pairwise unions, or
/// one of the fourteen exceptional families.  Throws if the pair is
/// neither linked nor matched by any family (which would contradict the
/// classification this implements).
PairClass classify_pair(const Embedding& e1, const Embedding& e2, int k);

/// True iff a chain rho1 = s_1, ..., s_t = rho2 of embeddings in pi
/// exists with l(s_{i-1} ∪ s_i) < l(rho1 ∪ rho2) throughout.
bool linked(const Embedding& e1, const Embedding& e2, int k);

/// The extended linkage for Lambda-dependent leading terms: chain steps
/// may alternatively have both one-sided differences contained in
/// {y(0), x(-1)}.  The embedding pool is all of lt(R-bar v_Lambda).
bool yx1_linked(const ColoredPartition& rho1, const ColoredPartition& rho2,
                int k0, int k1);

/// One entry of the length-(k+2) catalog: the partition and its stated
/// number of embeddings.
struct K2Entry {
  ColoredPartition pi;
  int embedding_count = 0;
};

/// The closed-form catalog of colored partitions of length k+2 admitting
/// two or more embeddings, materialized at anchor degree j for the three
/// shape cases j^{k+2}, (j-1)^a j^b, (j-1) j^k (j+1).
std::vector<K2Entry> length_k2_catalog(int k, int j);

/// Dual pairing of the exceptional families.
int dual_family(int family);

}  // namespace affsl2
