#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace triadic {

struct Edge
{
  int a = 0; ///< smaller endpoint
  int b = 0; ///< larger endpoint
  std::string label;

  friend bool operator==(Edge const &, Edge const &) = default;
  friend auto operator<=>(Edge const &, Edge const &) = default;
};

struct Face
{
  std::array<int, 3> vertices{}; ///< ascending
  std::string label;

  friend bool operator==(Face const &, Face const &) = default;
};

/// Thrown when a derived graph fails a structural check.
class StructuralError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Undirected graph with labeled vertices and edges and optional triangular
/// faces. No self-loops; at most one edge per vertex pair; every face side
/// is an edge.
class LabeledGraph
{
public:
  explicit LabeledGraph(std::string name = "g") : name_(std::move(name)) {}

  int add_vertex(std::string label);

  /// Adds {a, b}. Re-adding an identical edge is a no-op returning false;
  /// a self-loop or a second label on the same pair throws StructuralError.
  bool add_edge(int a, int b, std::string label);

  void add_face(int a, int b, int c, std::string label);

  std::string const &name() const noexcept { return name_; }
  std::size_t vertex_count() const noexcept { return vertex_labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::vector<std::string> const &vertex_labels() const noexcept { return vertex_labels_; }
  std::vector<Face> const &faces() const noexcept { return faces_; }

  /// Edges sorted by (a, b, label).
  std::vector<Edge> sorted_edges() const;

  std::optional<std::string> edge_label(int a, int b) const;
  std::size_t degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// The neighbor of v across the edge with this label, if unique.
  std::optional<int> neighbor_via(int v, std::string const &label) const;

  std::optional<int> find_vertex(std::string const &label) const;

  /// Faces containing v, in face order.
  std::vector<std::size_t> faces_at(int v) const;

private:
  void check_vertex(int v) const;

  std::string name_;
  std::vector<std::string> vertex_labels_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
};

inline constexpr const char *kFifth = "fifth";
inline constexpr const char *kMajorThird = "majorThird";
inline constexpr const char *kMinorThird = "minorThird";

/// The torus Tonnetz: pitch-class vertices, fifth/third edges, and one
/// triangular face per consonant triad (faces in canonical triad order).
LabeledGraph build_tonnetz();

/// Triad vertices (canonical order) joined by P, L and R edges.
LabeledGraph build_chickenwire();

/// Interval type of a Tonnetz edge {x, y}.
std::string interval_label(int x, int y);

/// Label of the dual edge crossing a Tonnetz edge of the given type:
/// fifth -> P, minorThird -> L, majorThird -> R.
std::string dual_label(std::string const &interval);

/// Faces of the Tonnetz become vertices; faces sharing an edge are joined.
/// Every dual edge label is checked against the P/L/R action, and the result
/// is checked to be label-preserving isomorphic to build_chickenwire() via
/// the face-to-triad correspondence. Throws StructuralError on mismatch.
LabeledGraph dual_of_tonnetz();

/// First mismatch between g and h under vertex map `map` (g-vertex -> h-vertex),
/// or nothing if `map` is a label-preserving isomorphism.
std::optional<std::string> isomorphism_mismatch(LabeledGraph const &g, LabeledGraph const &h,
                                                std::vector<int> const &map);

/// Walk from C alternating R and L edges: 25 vertices, closing at C.
std::vector<int> beethoven_path(LabeledGraph const &chickenwire);

std::string export_dot(LabeledGraph const &g);
std::string export_json(LabeledGraph const &g);

} // namespace triadic
