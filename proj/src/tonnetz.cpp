#include "triadic/tonnetz.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "triadic/neo_riemann.hpp"
#include "triadic/triads.hpp"

namespace triadic {

namespace {

std::string op_label(PlrOp op) { return std::string(1, to_char(op)); }

std::string dot_escape(std::string const &s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// LabeledGraph

void LabeledGraph::check_vertex(int v) const
{
  if (v < 0 || static_cast<std::size_t>(v) >= vertex_labels_.size())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph " + name_);
}

int LabeledGraph::add_vertex(std::string label)
{
  vertex_labels_.push_back(std::move(label));
  return static_cast<int>(vertex_labels_.size()) - 1;
}

bool LabeledGraph::add_edge(int a, int b, std::string label)
{
  check_vertex(a);
  check_vertex(b);
  if (a == b)
    throw StructuralError("self-loop at vertex " + vertex_labels_[static_cast<std::size_t>(a)]);
  if (a > b)
    std::swap(a, b);
  if (auto existing = edge_label(a, b)) {
    if (*existing == label)
      return false;
    throw StructuralError("edge " + std::to_string(a) + "-" + std::to_string(b) +
                          " already labeled " + *existing + ", not " + label);
  }
  edges_.push_back({a, b, std::move(label)});
  return true;
}

void LabeledGraph::add_face(int a, int b, int c, std::string label)
{
  std::array<int, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  for (auto [x, y] : {std::pair{v[0], v[1]}, std::pair{v[1], v[2]}, std::pair{v[0], v[2]}}) {
    if (!edge_label(x, y))
      throw StructuralError("face " + label + " side " + std::to_string(x) + "-" +
                            std::to_string(y) + " is not an edge");
  }
  faces_.push_back({v, std::move(label)});
}

std::vector<Edge> LabeledGraph::sorted_edges() const
{
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> LabeledGraph::edge_label(int a, int b) const
{
  if (a > b)
    std::swap(a, b);
  for (auto const &e : edges_) {
    if (e.a == a && e.b == b)
      return e.label;
  }
  return std::nullopt;
}

std::size_t LabeledGraph::degree(int v) const
{
  check_vertex(v);
  return static_cast<std::size_t>(std::count_if(
    edges_.begin(), edges_.end(), [v](Edge const &e) { return e.a == v || e.b == v; }));
}

std::vector<int> LabeledGraph::neighbors(int v) const
{
  check_vertex(v);
  std::vector<int> out;
  for (auto const &e : edges_) {
    if (e.a == v)
      out.push_back(e.b);
    else if (e.b == v)
      out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> LabeledGraph::neighbor_via(int v, std::string const &label) const
{
  check_vertex(v);
  std::optional<int> found;
  for (auto const &e : edges_) {
    if (e.label != label || (e.a != v && e.b != v))
      continue;
    if (found)
      return std::nullopt;
    found = e.a == v ? e.b : e.a;
  }
  return found;
}

std::optional<int> LabeledGraph::find_vertex(std::string const &label) const
{
  auto it = std::find(vertex_labels_.begin(), vertex_labels_.end(), label);
  if (it == vertex_labels_.end())
    return std::nullopt;
  return static_cast<int>(it - vertex_labels_.begin());
}

std::vector<std::size_t> LabeledGraph::faces_at(int v) const
{
  check_vertex(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    auto const &f = faces_[i].vertices;
    if (std::find(f.begin(), f.end(), v) != f.end())
      out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tonnetz and chicken-wire torus

std::string interval_label(int x, int y)
{
  switch (mod12(y - x)) {
  case 5:
  case 7: return kFifth;
  case 4:
  case 8: return kMajorThird;
  case 3:
  case 9: return kMinorThird;
  default:
    throw std::invalid_argument("pitch classes " + std::to_string(x) + " and " +
                                std::to_string(y) + " are not adjacent in the Tonnetz");
  }
}

std::string dual_label(std::string const &interval)
{
  if (interval == kFifth)
    return "P";
  if (interval == kMinorThird)
    return "L";
  if (interval == kMajorThird)
    return "R";
  throw std::invalid_argument("unknown Tonnetz edge type " + interval);
}

LabeledGraph build_tonnetz()
{
  LabeledGraph g("tonnetz");
  for (int x = 0; x < 12; ++x)
    g.add_vertex(std::to_string(x));
  for (int x = 0; x < 12; ++x) {
    g.add_edge(x, mod12(x + 7), kFifth);
    g.add_edge(x, mod12(x + 4), kMajorThird);
    g.add_edge(x, mod12(x + 3), kMinorThird);
  }
  for (auto const &y : triad_table())
    g.add_face(y[0].value(), y[1].value(), y[2].value(), format_name(y));
  return g;
}

LabeledGraph build_chickenwire()
{
  LabeledGraph g("chickenwire");
  for (auto const &y : triad_table())
    g.add_vertex(format_name(y));
  for (auto const &y : triad_table()) {
    for (auto op : kPlrOps)
      g.add_edge(y.index(), plr_apply(op, y).index(), op_label(op));
  }
  return g;
}

std::optional<std::string> isomorphism_mismatch(LabeledGraph const &g, LabeledGraph const &h,
                                                std::vector<int> const &map)
{
  if (g.vertex_count() != h.vertex_count() || map.size() != g.vertex_count())
    return "vertex counts differ";
  if (g.edge_count() != h.edge_count())
    return "edge counts differ: " + std::to_string(g.edge_count()) + " vs " +
           std::to_string(h.edge_count());

  std::vector<bool> hit(map.size(), false);
  for (int v : map) {
    if (v < 0 || static_cast<std::size_t>(v) >= map.size() || hit[static_cast<std::size_t>(v)])
      return "vertex map is not a bijection";
    hit[static_cast<std::size_t>(v)] = true;
  }

  for (auto const &e : g.sorted_edges()) {
    const int a = map[static_cast<std::size_t>(e.a)];
    const int b = map[static_cast<std::size_t>(e.b)];
    auto other = h.edge_label(a, b);
    if (!other || *other != e.label) {
      return "edge " + g.vertex_labels()[static_cast<std::size_t>(e.a)] + "-" +
             g.vertex_labels()[static_cast<std::size_t>(e.b)] + " (" + e.label + ") maps to " +
             (other ? "edge labeled " + *other : std::string("a non-edge"));
    }
  }
  return std::nullopt;
}

LabeledGraph dual_of_tonnetz()
{
  const auto tonnetz = build_tonnetz();
  auto const &faces = tonnetz.faces();

  LabeledGraph dual("tonnetz_dual");
  for (auto const &f : faces)
    dual.add_vertex(f.label);

  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(faces[i].vertices.begin(), faces[i].vertices.end(),
                            faces[j].vertices.begin(), faces[j].vertices.end(),
                            std::back_inserter(shared));
      if (shared.size() != 2)
        continue;
      auto interval = tonnetz.edge_label(shared[0], shared[1]);
      if (!interval)
        throw StructuralError("faces " + faces[i].label + " and " + faces[j].label +
                              " share a non-edge");
      dual.add_edge(static_cast<int>(i), static_cast<int>(j), dual_label(*interval));
    }
  }

  // Face i corresponds to the triad whose pitch set it is.
  std::vector<int> map(faces.size(), -1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (auto const &y : triad_table()) {
      std::array<int, 3> set{};
      auto ps = y.pitch_set();
      for (std::size_t k = 0; k < 3; ++k)
        set[k] = ps[k].value();
      if (set == faces[i].vertices)
        map[i] = y.index();
    }
  }

  for (auto const &e : dual.sorted_edges()) {
    const auto from = ConsonantTriad::from_index(map[static_cast<std::size_t>(e.a)]);
    const auto to = ConsonantTriad::from_index(map[static_cast<std::size_t>(e.b)]);
    const auto op = PlrWord::parse(e.label).letters().front();
    if (plr_apply(op, from) != to) {
      throw StructuralError("dual edge " + e.label + " between " + format_name(from) + " and " +
                            format_name(to) + " does not match the operation");
    }
  }

  if (auto mismatch = isomorphism_mismatch(dual, build_chickenwire(), map))
    throw StructuralError("dual of the Tonnetz is not the chicken-wire torus: " + *mismatch);
  return dual;
}

std::vector<int> beethoven_path(LabeledGraph const &chickenwire)
{
  auto start = chickenwire.find_vertex("C");
  if (!start)
    throw std::invalid_argument("graph has no vertex labeled C");

  std::vector<int> path{*start};
  for (int step = 0; step < 24; ++step) {
    const std::string label = step % 2 == 0 ? "R" : "L";
    auto next = chickenwire.neighbor_via(path.back(), label);
    if (!next) {
      auto const &here = chickenwire.vertex_labels()[static_cast<std::size_t>(path.back())];
      throw std::invalid_argument("vertex " + here + " has no unique " + label + " edge");
    }
    path.push_back(*next);
  }
  return path;
}

// ---------------------------------------------------------------------------
// Export

std::string export_dot(LabeledGraph const &g)
{
  std::ostringstream os;
  os << "graph " << g.name() << " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << dot_escape(g.vertex_labels()[v]) << "\"];\n";
  for (auto const &e : g.sorted_edges())
    os << "  " << e.a << " -- " << e.b << " [label=\"" << dot_escape(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_json(LabeledGraph const &g)
{
  using ordered_json = nlohmann::ordered_json;
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    j["vertices"].push_back({{"id", v}, {"label", g.vertex_labels()[v]}});
  j["edges"] = ordered_json::array();
  for (auto const &e : g.sorted_edges())
    j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"label", e.label}});
  j["faces"] = ordered_json::array();
  for (auto const &f : g.faces())
    j["faces"].push_back({{"vertices", f.vertices}, {"label", f.label}});
  return j.dump(2) + "\n";
}

} // namespace triadic
