#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triadic/neo_riemann.hpp"
#include "triadic/triads.hpp"

namespace triadic {

struct Progression
{
  std::vector<ConsonantTriad> triads;
  std::vector<std::string> spellings; ///< tokens as written, parallel to `triads`
  std::optional<std::string> source;
};

/// Whitespace-separated chord names; a token starting with '#' comments out
/// the rest of its line. Throws ParseError (with 1-based line and column)
/// on an unknown token or when no chord is present.
Progression parse_progression(std::string_view text, std::optional<std::string> source = {});

/// Reads and parses a progression file; `source` is set to the file name.
Progression load_progression(std::filesystem::path const &path);

struct TransformationStep
{
  ConsonantTriad from;
  ConsonantTriad to;
  TIElement ti;
  DihedralNormalForm plr;
  /// First triad (canonical order) on which `ti` and `plr` disagree;
  /// empty when the two coincide as permutations.
  std::optional<ConsonantTriad> divergence;
};

/// The unique T/I and PLR transformations between consecutive chords.
/// Throws std::invalid_argument for fewer than two chords.
std::vector<TransformationStep> analyze(Progression const &p);

/// Chords are shown as spelled in the progression.
std::string analysis_to_text(Progression const &p, std::vector<TransformationStep> const &steps);
std::string analysis_to_json(Progression const &p, std::vector<TransformationStep> const &steps);

/// Corners of a square with a T/I element across and a PLR word down.
struct SquareReport
{
  ConsonantTriad top_left;
  TIElement horizontal;
  PlrWord vertical;
  ConsonantTriad top_right;
  ConsonantTriad bottom_left;
  ConsonantTriad bottom_right_via_top;  ///< vertical(horizontal(top_left))
  ConsonantTriad bottom_right_via_left; ///< horizontal(vertical(top_left))

  bool commutes() const noexcept { return bottom_right_via_top == bottom_right_via_left; }

  std::string to_text() const;
};

SquareReport verify_square(ConsonantTriad const &top_left, TIElement horizontal,
                           PlrWord const &vertical);

/// C, a, F, d, ... , e, C: R and L applied alternately from C (25 entries).
Progression beethoven_sequence();

/// Edge labels along the Beethoven sequence: R, L, R, ... (24 entries).
std::vector<PlrOp> beethoven_labels();

/// Signed root motion in semitones, normalized to -5..6.
int signed_motion(PitchClass from, PitchClass to);

struct DualMotionReport
{
  PlrWord word;
  /// Root motion when it is the same on every triad of that parity.
  std::optional<int> major_motion;
  std::optional<int> minor_motion;
  std::vector<std::pair<ConsonantTriad, ConsonantTriad>> examples;

  /// Minor motion is the negative of major motion.
  bool dualistic() const noexcept
  {
    return major_motion && minor_motion && *major_motion == -*minor_motion;
  }

  std::string to_text() const;
};

/// Root motion of LR on all majors and all minors, with D, a and C as examples.
DualMotionReport ives_dual_motion_report();

struct ParsimonyRow
{
  std::array<int, 3> rep{};           ///< ordered <0, a, b>
  std::array<int, 3> displacements{}; ///< moving-voice motion under the P, L, R analogues
  int max_disp = 0;
  int sum_disp = 0;
  std::array<int, 3> class_prime{}; ///< least T/I form of the set
  int class_size = 1;               ///< representatives merged into this row
  bool excluded = false;
};

struct ParsimonyStudy
{
  std::vector<ParsimonyRow> representatives; ///< every <0,a,b>, 0<a<b<=11
  std::vector<ParsimonyRow> classes;         ///< one per T/I class; ranked, excluded last
  std::string merge_rule;

  ParsimonyRow const *find_class(std::array<int, 3> const &prime) const;
  ParsimonyRow const *find_representative(std::array<int, 3> const &rep) const;

  std::string to_text() const;
  std::string to_json() const;
};

/// Moving-voice displacement of the contextual inversion `op` on an
/// arbitrary ordered triple.
int moving_voice_displacement(PlrOp op, std::array<PitchClass, 3> const &y);

ParsimonyStudy parsimony_study();

} // namespace triadic
