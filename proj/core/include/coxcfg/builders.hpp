#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxcfg/incidence.hpp"
#include "coxcfg/subset.hpp"

namespace coxcfg {

/// The Cox configuration on {0..n-1}: even subsets are points, odd subsets are
/// blocks, and a point lies on a block when one covers the other.
/// Labels are the subsets (see to_string(Subset)); 3 <= n <= 16.
IncidenceStructure cox(int n);

/// Index of a subset among the points (even) or blocks (odd) of cox(n).
Index cox_index(int n, Subset s);

/// Named points and blocks of the Steiner-Miquel configuration in matrix order:
/// points q_A, q_{12}, q_{13}, q_{14}, q_{23}, q_{24}, q_{34}, q_B and blocks
/// A_1..A_4, B_1..B_4, each with the subset of {1,2,3,4} it stands for.
struct SteinerMiquelLabels {
  std::vector<std::pair<std::string, Subset>> points;
  std::vector<std::pair<std::string, Subset>> blocks;
};
SteinerMiquelLabels steiner_miquel_labels();

/// Combinatorial Grassmannian G(n,k): k-subsets as points, tops T(b) for
/// (k+1)-subsets b as blocks. Requires 1 < k+1 < n.
IncidenceStructure grassmannian(int n, int k);

/// Clique structure K-dagger(n,k): k-subsets with tops T(b) and stars S(h),
/// h a (k-1)-subset. Blocks are labelled by b or h and ordered canonically.
IncidenceStructure k_dagger(int n, int k);

enum class CliqueKind { Star, Top };

struct Clique {
  CliqueKind kind = CliqueKind::Star;
  Subset center;                // u for a star S(u), U for a top T(U)
  std::vector<Subset> members;  // canonical order
};

/// Maximal cliques of the collinearity graph on (k+1)-subsets, where two
/// (k+1)-subsets are adjacent when they share k elements. Stars first, then
/// tops, each in canonical order of the centre.
std::vector<Clique> max_cliques_grassmann(int n, int k);

/// Per-layer record of the completion of G(n,2) to the Cox configuration.
struct CompletionLayer {
  int layer = 0;               // subset size produced by this step
  bool points = true;          // produced points (else blocks)
  std::size_t created = 0;     // objects created
  std::string rule;            // which completion rule produced them
};

struct CompletionResult {
  IncidenceStructure structure;
  std::vector<CompletionLayer> layers;
};

/// Completes the generalized Desargues configuration G(n,2) to a structure
/// isomorphic to cox(n), working only with incidences of the layers built so
/// far. Each created object also receives the subset it corresponds to, so
/// the result carries Cox labels. Requires 4 <= n <= 12.
CompletionResult gras2cox_with_report(int n);
IncidenceStructure gras2cox(int n);

/// Blocks through a point with the point removed, on the points of rank >= 2.
struct Residual {
  IncidenceStructure structure;
  bool pairwise_meeting = false;  // every two residual blocks share a point
};
Residual residual_at_point(const IncidenceStructure& s, Index point);

/// Residual of cox(n) at a subset p, with the block count seen against the
/// count n - |p| that the generalized Veblen description quotes.
struct CoxResidual {
  Residual residual;
  std::size_t blocks_through = 0;
  std::size_t quoted_count = 0;
};
CoxResidual residual_at_point(int n, Subset p);

/// Blocks sharing no point with block d.
std::vector<Index> disjoint_blocks(const IncidenceStructure& s, Index d);

/// cox(4) without block d and its unique disjoint partner.
IncidenceStructure miquel_substructure(Subset d);

/// One member tau_A(cox(X_i)) of a decomposition family.
struct DecompositionMember {
  int family = 1;
  Subset ground;       // X_i
  Subset translation;  // A, a subset of X_{3-i}
};

struct Decomposition {
  std::vector<DecompositionMember> family1;
  std::vector<DecompositionMember> family2;
  /// Per flag of cox(n) (in IncidenceStructure::flags() order): members holding it,
  /// as indices into family1 followed by family2.
  std::vector<std::vector<std::size_t>> flag_members;
  bool covers = false;       // every flag lies in at least one member
  bool unique = false;       // every flag lies in exactly one member
  bool transversal = false;  // members of different families share exactly one element
};

/// Splits cox(n) along a partition {0..n-1} = X1 + X2 into the families
/// { tau_A(cox(X_i)) : A subset of X_{3-i} }. Throws if X1, X2 is not a partition
/// into nonempty parts.
Decomposition decompose(int n, Subset x1, Subset x2);

/// Simple undirected graph with labelled vertices.
struct Graph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

/// Bipartite incidence graph: points then blocks, labelled as in the structure.
Graph levi_graph(const IncidenceStructure& s);
/// Subsets of {0..n-1}, joined when they differ in one element.
Graph hypercube(int n);
/// Same vertex labels and the same edges between labels.
bool same_labelled_graph(const Graph& a, const Graph& b);

}  // namespace coxcfg
