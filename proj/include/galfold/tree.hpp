#ifndef GALFOLD_TREE_HPP
#define GALFOLD_TREE_HPP

#include <map>
#include <vector>

#include "galfold/error.hpp"

namespace galfold {

/// End of the marked apartment of the tree: toward decreasing levels (Minus)
/// or increasing levels (Plus).
enum class TreeEnd { Minus, Plus };

/// Edge of the tree given by its two vertex ids.
struct TreeEdge {
  int u, v;
  friend bool operator==(const TreeEdge& a, const TreeEdge& b) {
    return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  }
};

struct TreeApartment {
  std::vector<int> vertices;  // consecutive vertices adjacent, no backtracking
};

/// Thick affine building of type A1~ at desk scale: a (q+1)-regular tree
/// truncated at radius R around the base edge, with a marked apartment (a
/// bi-infinite path, truncated) and its two ends. Edges are the alcoves,
/// vertices the panels. Immutable after construction.
class TreeBuilding {
 public:
  /// q >= 2, R <= 12 (Errc::BudgetExceeded / Errc::InvalidArgument).
  static TreeBuilding build(int q, int radius);

  int q() const { return q_; }
  int radius() const { return radius_; }
  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool on_apartment(int v) const { return level_of_.count(v) > 0; }
  /// Integer coordinate along the marked apartment (a_i at level i).
  long apartment_level(int v) const;
  int apartment_vertex(long level) const;
  /// Vertices of A in level order, levels -R .. R+1.
  const std::vector<int>& apartment_path() const { return apartment_; }
  TreeEdge base_edge() const { return {apartment_vertex(0), apartment_vertex(1)}; }
  /// Edges of A ordered by level.
  std::vector<TreeEdge> apartment_edges() const;

  bool is_leaf(int v) const { return dist_to_base_.at(v) >= radius_; }
  int dist_to_base(int v) const { return dist_to_base_.at(v); }

  int dist(int u, int v) const;
  std::vector<int> geodesic(int u, int v) const;

  /// Nearest vertex of the marked apartment on any geodesic from v into A.
  int confluence(int v) const;

  /// Witness for the union lemma: an apartment containing both x and the
  /// anchor (an edge of A, or an end of A). Deterministic.
  TreeApartment apartment_through(int x, const TreeEdge& anchor) const;
  TreeApartment apartment_through(int x, TreeEnd anchor) const;

  /// Retraction onto A based at the alcove c (an edge of A): the image of x
  /// under the apartment isomorphism fixing the intersection. Returns the
  /// level of the image vertex.
  long retract_at_alcove(const TreeEdge& c, int x) const;

  /// Retraction from infinity based at an end of A; the image is the vertex
  /// of A at the Busemann level of x. Errc::MarginExceeded when x is within
  /// 2 of the truncation boundary.
  long retract_from_end(TreeEnd xi, int x) const;

  bool within_end_margin(int v) const {
    return dist_to_base_.at(v) <= radius_ - 2;
  }

  /// First edge c of A (by level) with r_{A,c}(d) = rho_{A,xi}(d).
  /// Errc::NoWitness if none exists (must not happen within margin).
  TreeEdge compat_witness(TreeEnd xi, int d) const;

  struct RetractionSpec {
    enum Kind { AtAlcove, FromEnd } kind;
    TreeEdge alcove;  // for AtAlcove
    TreeEnd end;      // for FromEnd
  };

  /// Partition of the (margin-restricted, for end retractions) vertex set by
  /// equal image; keys are image levels, parts sorted.
  std::map<long, std::vector<int>> fiber_partition(const RetractionSpec& spec) const;

 private:
  TreeBuilding() = default;

  int q_ = 0;
  int radius_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_to_base_;
  std::vector<int> apartment_;          // ids, levels -R .. R+1
  std::map<int, long> level_of_;        // id -> level for apartment vertices
  std::vector<int> conf_;               // nearest apartment vertex
  std::vector<int> dconf_;              // distance to it
};

}  // namespace galfold

#endif  // GALFOLD_TREE_HPP
