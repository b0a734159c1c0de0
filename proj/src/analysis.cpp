#include "triadic/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "triadic/error.hpp"

namespace triadic {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string render_row(std::array<int, 3> const &v)
{
  return "<" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
         ">";
}

std::array<int, 3> prime_form(std::array<int, 3> const &set)
{
  std::array<int, 3> best{12, 12, 12};
  for (int n = 0; n < 12; ++n) {
    for (int sign : {1, -1}) {
      std::array<int, 3> t{};
      for (std::size_t k = 0; k < 3; ++k)
        t[k] = mod12(sign * set[k] + n);
      std::sort(t.begin(), t.end());
      for (std::size_t k = 0; k < 3; ++k) {
        std::array<int, 3> rot{0, mod12(t[(k + 1) % 3] - t[k]), mod12(t[(k + 2) % 3] - t[k])};
        std::sort(rot.begin(), rot.end());
        best = std::min(best, rot);
      }
    }
  }
  return best;
}

std::string spelling(Progression const &p, std::size_t i, ConsonantTriad const &y)
{
  return i < p.spellings.size() ? p.spellings[i] : format_name(y);
}

auto rank_key(ParsimonyRow const &r)
{
  return std::make_tuple(r.excluded, r.max_disp, r.sum_disp, r.rep);
}

} // namespace

// ---------------------------------------------------------------------------
// Progressions

Progression parse_progression(std::string_view text, std::optional<std::string> source)
{
  Progression p;
  p.source = std::move(source);

  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view row = text.substr(pos, end - pos);

    std::size_t i = 0;
    while (i < row.size()) {
      while (i < row.size() && is_blank(row[i]))
        ++i;
      if (i >= row.size() || row[i] == '#')
        break;
      std::size_t j = i;
      while (j < row.size() && !is_blank(row[j]))
        ++j;
      const std::string token(row.substr(i, j - i));
      try {
        p.triads.push_back(parse_name(token));
        p.spellings.push_back(token);
      } catch (ParseError const &) {
        throw ParseError((p.source ? *p.source + ":" : std::string()) + std::to_string(line) +
                           ":" + std::to_string(i + 1) + ": unknown chord '" + token + "'",
                         token, line, i + 1);
      }
      i = j;
    }

    if (end == text.size())
      break;
    pos = end + 1;
    ++line;
  }

  if (p.triads.empty())
    throw ParseError((p.source ? *p.source + ": " : std::string()) + "empty progression", "");
  return p;
}

Progression load_progression(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_progression(buf.str(), path.filename().string());
}

std::vector<TransformationStep> analyze(Progression const &p)
{
  if (p.triads.size() < 2)
    throw std::invalid_argument("analysis needs at least two chords");

  std::vector<TransformationStep> steps;
  for (std::size_t i = 0; i + 1 < p.triads.size(); ++i) {
    TransformationStep s{p.triads[i], p.triads[i + 1], find_ti(p.triads[i], p.triads[i + 1]),
                         find_plr(p.triads[i], p.triads[i + 1]), std::nullopt};
    for (auto const &y : triad_table()) {
      if (ti_on_triad(s.ti, y) != s.plr(y)) {
        s.divergence = y;
        break;
      }
    }
    steps.push_back(s);
  }
  return steps;
}

std::string analysis_to_text(Progression const &p, std::vector<TransformationStep> const &steps)
{
  std::ostringstream os;
  if (p.source)
    os << "# " << *p.source << '\n';
  os << std::left << std::setw(6) << "from" << std::setw(6) << "to" << std::setw(7) << "T/I"
     << std::setw(14) << "PLR" << "differs at\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto const &s = steps[i];
    std::string plr = s.plr.to_string();
    if (auto op = as_single_op(s.plr))
      plr += " (= " + std::string(1, to_char(*op)) + ")";
    os << std::setw(6) << spelling(p, i, s.from) << std::setw(6) << spelling(p, i + 1, s.to)
       << std::setw(7) << s.ti.to_string() << std::setw(14) << plr
       << (s.divergence ? format_name(*s.divergence) : std::string("-")) << '\n';
  }
  return os.str();
}

std::string analysis_to_json(Progression const &p, std::vector<TransformationStep> const &steps)
{
  ordered_json j;
  j["steps"] = ordered_json::array();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto const &s = steps[i];
    j["steps"].push_back({{"from", spelling(p, i, s.from)},
                          {"to", spelling(p, i + 1, s.to)},
                          {"ti", s.ti.to_string()},
                          {"plr", s.plr.to_string()}});
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Commutative squares

SquareReport verify_square(ConsonantTriad const &top_left, TIElement horizontal,
                           PlrWord const &vertical)
{
  SquareReport r{top_left,
                 horizontal,
                 vertical,
                 ti_on_triad(horizontal, top_left),
                 vertical(top_left),
                 vertical(ti_on_triad(horizontal, top_left)),
                 ti_on_triad(horizontal, vertical(top_left))};
  return r;
}

std::string SquareReport::to_text() const
{
  const auto name = [](ConsonantTriad const &y) { return format_name(y, NameStyle::Conventional); };
  const std::string w = vertical.empty() ? "1" : vertical.to_string();
  std::ostringstream os;
  os << name(top_left) << " --" << horizontal.to_string() << "--> " << name(top_right) << '\n'
     << "|" << w << "            |" << w << '\n'
     << name(bottom_left) << " --" << horizontal.to_string() << "--> "
     << name(bottom_right_via_left) << '\n'
     << "down then across: " << name(bottom_right_via_left)
     << ", across then down: " << name(bottom_right_via_top) << '\n'
     << "commutes: " << (commutes() ? "yes" : "no") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Beethoven and Ives

Progression beethoven_sequence()
{
  Progression p;
  p.source = "beethoven";
  ConsonantTriad y = ConsonantTriad::major(PitchClass(0));
  p.triads.push_back(y);
  for (auto op : beethoven_labels()) {
    y = plr_apply(op, y);
    p.triads.push_back(y);
  }
  for (auto const &t : p.triads)
    p.spellings.push_back(format_name(t, NameStyle::Conventional));
  return p;
}

std::vector<PlrOp> beethoven_labels()
{
  std::vector<PlrOp> out;
  for (int i = 0; i < 24; ++i)
    out.push_back(i % 2 == 0 ? PlrOp::R : PlrOp::L);
  return out;
}

int signed_motion(PitchClass from, PitchClass to)
{
  const int d = mod12(to.value() - from.value());
  return d > 6 ? d - 12 : d;
}

DualMotionReport ives_dual_motion_report()
{
  DualMotionReport r;
  r.word = PlrWord::parse("LR");

  std::set<int> major, minor;
  for (auto const &y : triad_table()) {
    const int m = signed_motion(y.root(), r.word(y).root());
    (y.is_major() ? major : minor).insert(m);
  }
  if (major.size() == 1)
    r.major_motion = *major.begin();
  if (minor.size() == 1)
    r.minor_motion = *minor.begin();

  for (auto name : {"D", "a", "C"}) {
    const auto y = parse_name(name);
    r.examples.emplace_back(y, r.word(y));
  }
  return r;
}

std::string DualMotionReport::to_text() const
{
  auto motion = [](std::optional<int> const &m) {
    if (!m)
      return std::string("not uniform");
    return (*m > 0 ? "+" : "") + std::to_string(*m) + " semitones";
  };
  std::ostringstream os;
  os << word.to_string() << " root motion on major triads: " << motion(major_motion) << '\n'
     << word.to_string() << " root motion on minor triads: " << motion(minor_motion) << '\n';
  for (auto const &[from, to] : examples) {
    const int m = signed_motion(from.root(), to.root());
    os << "  " << word.to_string() << "(" << format_name(from) << ") = " << format_name(to)
       << "  (root " << from.root().value() << " -> " << to.root().value() << ", "
       << (m > 0 ? "+" : "") << m << ")\n";
  }
  os << "opposite motion on opposite parities: " << (dualistic() ? "yes" : "no") << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsimony

int moving_voice_displacement(PlrOp op, std::array<PitchClass, 3> const &y)
{
  const auto moved = contextual_inversion(op, y);
  const auto k = static_cast<std::size_t>(moving_position(op));
  return circ_dist(y[k], moved[k]);
}

ParsimonyStudy parsimony_study()
{
  ParsimonyStudy study;
  study.merge_rule =
    "per T/I class keep the representative with least (maxDisp, sumDisp), ties to the "
    "lexicographically least <0,a,b>; class <0,4,8> excluded from ranking";

  for (int a = 1; a <= 11; ++a) {
    for (int b = a + 1; b <= 11; ++b) {
      ParsimonyRow row;
      row.rep = {0, a, b};
      const std::array<PitchClass, 3> y{PitchClass(0), PitchClass(a), PitchClass(b)};
      for (std::size_t k = 0; k < 3; ++k)
        row.displacements[k] = moving_voice_displacement(kPlrOps[k], y);
      row.max_disp = *std::max_element(row.displacements.begin(), row.displacements.end());
      row.sum_disp = row.displacements[0] + row.displacements[1] + row.displacements[2];
      row.class_prime = prime_form(row.rep);
      row.excluded = row.class_prime == std::array<int, 3>{0, 4, 8};
      study.representatives.push_back(row);
    }
  }

  std::map<std::array<int, 3>, ParsimonyRow> best;
  std::map<std::array<int, 3>, int> sizes;
  for (auto const &row : study.representatives) {
    ++sizes[row.class_prime];
    auto it = best.find(row.class_prime);
    if (it == best.end() || rank_key(row) < rank_key(it->second))
      best[row.class_prime] = row;
  }
  for (auto &[prime, row] : best) {
    row.class_size = sizes[prime];
    study.classes.push_back(row);
  }
  std::sort(study.classes.begin(), study.classes.end(),
            [](auto const &x, auto const &y) { return rank_key(x) < rank_key(y); });
  return study;
}

ParsimonyRow const *ParsimonyStudy::find_class(std::array<int, 3> const &prime) const
{
  for (auto const &r : classes) {
    if (r.class_prime == prime)
      return &r;
  }
  return nullptr;
}

ParsimonyRow const *ParsimonyStudy::find_representative(std::array<int, 3> const &rep) const
{
  for (auto const &r : representatives) {
    if (r.rep == rep)
      return &r;
  }
  return nullptr;
}

std::string ParsimonyStudy::to_text() const
{
  std::ostringstream os;
  os << std::left << std::setw(10) << "class" << std::setw(10) << "rep" << std::setw(4) << "P"
     << std::setw(4) << "L" << std::setw(4) << "R" << std::setw(5) << "max" << std::setw(5)
     << "sum" << "note\n";
  for (auto const &r : classes) {
    std::ostringstream line;
    line << std::left << std::setw(10) << render_row(r.class_prime) << std::setw(10)
         << render_row(r.rep)
       << std::setw(4) << r.displacements[0] << std::setw(4) << r.displacements[1]
       << std::setw(4) << r.displacements[2] << std::setw(5) << r.max_disp << std::setw(5)
       << r.sum_disp << (r.excluded ? "excluded (trivial)" : "");
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << '\n';
  }
  os << "merge: " << merge_rule << '\n';
  return os.str();
}

std::string ParsimonyStudy::to_json() const
{
  auto row_json = [](ParsimonyRow const &r) {
    return ordered_json{{"classRep", r.rep},
                        {"classPrime", r.class_prime},
                        {"displacements", r.displacements},
                        {"maxDisp", r.max_disp},
                        {"sumDisp", r.sum_disp},
                        {"classSize", r.class_size},
                        {"excluded", r.excluded}};
  };
  ordered_json j;
  j["metadata"] = {{"mergeRule", merge_rule}, {"distance", "circular semitone distance"}};
  j["classes"] = ordered_json::array();
  for (auto const &r : classes)
    j["classes"].push_back(row_json(r));
  j["representatives"] = ordered_json::array();
  for (auto const &r : representatives)
    j["representatives"].push_back(row_json(r));
  return j.dump(2) + "\n";
}

} // namespace triadic
