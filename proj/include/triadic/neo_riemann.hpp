#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triadic/perm_group.hpp"
#include "triadic/pitch_space.hpp"
#include "triadic/triads.hpp"

namespace triadic {

// Componentwise T/I action -------------------------------------------------

/// Applies g to each tone of the ordered triple.
ConsonantTriad ti_on_triad(TIElement g, ConsonantTriad const &y);

// Contextual inversions ----------------------------------------------------

enum class PlrOp : std::uint8_t { P, L, R };

inline constexpr std::array<PlrOp, 3> kPlrOps = {PlrOp::P, PlrOp::L, PlrOp::R};

char to_char(PlrOp op) noexcept;

/// Positions (0-based) of the two tones an operation keeps fixed as a set.
constexpr std::array<int, 2> preserved_positions(PlrOp op) noexcept
{
  switch (op) {
  case PlrOp::P: return {0, 2};
  case PlrOp::L: return {1, 2};
  case PlrOp::R: return {0, 1};
  }
  return {0, 2};
}

/// Position of the voice that moves.
constexpr int moving_position(PlrOp op) noexcept
{
  switch (op) {
  case PlrOp::P: return 1;
  case PlrOp::L: return 0;
  case PlrOp::R: return 2;
  }
  return 1;
}

/// The contextual inversion index y_i + y_j of `op` on an ordered triple.
constexpr int contextual_index(PlrOp op, std::array<PitchClass, 3> const &y) noexcept
{
  const auto [i, j] = preserved_positions(op);
  return mod12(y[static_cast<std::size_t>(i)].value() + y[static_cast<std::size_t>(j)].value());
}

/// Applies I_{y_i + y_j} componentwise. Defined for any ordered triple.
constexpr std::array<PitchClass, 3> contextual_inversion(PlrOp op,
                                                         std::array<PitchClass, 3> const &y) noexcept
{
  const auto g = TIElement::I(contextual_index(op, y));
  return {g(y[0]), g(y[1]), g(y[2])};
}

ConsonantTriad plr_apply(PlrOp op, ConsonantTriad const &y);
ConsonantTriad p_apply(ConsonantTriad const &y);
ConsonantTriad l_apply(ConsonantTriad const &y);
ConsonantTriad r_apply(ConsonantTriad const &y);

/// Endpoints of the axis of inversion on a 24-tick clock (half semitones).
struct InversionAxis
{
  int first = 0;
  int second = 0;

  friend bool operator==(InversionAxis const &, InversionAxis const &) = default;
};

/// The axis through (y_i+y_j)/2 and (y_i+y_j)/2 + 6 on the 12-clock,
/// reported in 24-tick units: ticks (y_i+y_j) mod 12 and that plus 12.
InversionAxis inversion_axis(PlrOp op, ConsonantTriad const &y);

// Words --------------------------------------------------------------------

/// A word in P, L, R, evaluated right-to-left ("LR" applies R first).
class PlrWord
{
public:
  PlrWord() = default;
  explicit PlrWord(std::vector<PlrOp> letters) : letters_(std::move(letters)) {}

  /// Accepts the empty string or any string over {P, L, R}.
  static PlrWord parse(std::string_view text);

  std::vector<PlrOp> const &letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  ConsonantTriad operator()(ConsonantTriad const &y) const;

  /// Concatenation: (a * b)(y) == a(b(y)).
  friend PlrWord operator*(PlrWord const &a, PlrWord const &b);
  PlrWord pow(std::size_t k) const;

  std::string to_string() const;

  friend bool operator==(PlrWord const &, PlrWord const &) = default;

private:
  std::vector<PlrOp> letters_;
};

ConsonantTriad word_apply(PlrWord const &w, ConsonantTriad const &y);

/// s^k t^e with s = LR and t = L; t^e is applied first.
struct DihedralNormalForm
{
  int k = 0;
  bool e = false;

  /// "1", "s", "s^k", "t", "s t", "s^k t".
  std::string to_string() const;

  /// Ordinal in 0..23: k + 12e.
  int ordinal() const noexcept { return k + (e ? 12 : 0); }
  static DihedralNormalForm from_ordinal(int i) noexcept { return {i % 12, i >= 12}; }

  ConsonantTriad operator()(ConsonantTriad const &y) const;

  friend bool operator==(DihedralNormalForm const &, DihedralNormalForm const &) = default;
};

/// The element of the PLR-group acting identically to `w` on all triads.
DihedralNormalForm word_normal_form(PlrWord const &w);

/// P, L or R if the normal form equals that single operation.
std::optional<PlrOp> as_single_op(DihedralNormalForm const &nf);

// Permutations on the canonical triad indexing ------------------------------

Permutation triad_permutation(TIElement g);
Permutation triad_permutation(PlrOp op);
Permutation triad_permutation(PlrWord const &w);
Permutation triad_permutation(DihedralNormalForm const &nf);

// Transitivity -------------------------------------------------------------

/// All T/I elements taking y to z (exhaustive scan).
std::vector<TIElement> ti_solutions(ConsonantTriad const &y, ConsonantTriad const &z);

/// All normal forms taking y to z (exhaustive scan).
std::vector<DihedralNormalForm> plr_solutions(ConsonantTriad const &y, ConsonantTriad const &z);

/// The unique T/I element with g(y) = z.
TIElement find_ti(ConsonantTriad const &y, ConsonantTriad const &z);

/// The unique PLR element with (s^k t^e)(y) = z.
DihedralNormalForm find_plr(ConsonantTriad const &y, ConsonantTriad const &z);

// Uniform triadic transformations ------------------------------------------

enum class Sign : std::uint8_t { Plus, Minus };

/// <sigma, t+, t->: transposes major roots by t+, minor roots by t-, and
/// flips parity iff sigma is Minus.
struct Utt
{
  Sign sigma = Sign::Plus;
  int tplus = 0;
  int tminus = 0;

  constexpr Utt() = default;
  constexpr Utt(Sign s, int tp, int tm) : sigma(s), tplus(mod12(tp)), tminus(mod12(tm)) {}

  std::string to_string() const;

  friend bool operator==(Utt const &, Utt const &) = default;
};

constexpr ConsonantTriad utt_apply(Utt const &u, ConsonantTriad const &y) noexcept
{
  const Parity out = u.sigma == Sign::Plus ? y.parity() : opposite(y.parity());
  const int shift = y.is_major() ? u.tplus : u.tminus;
  return ConsonantTriad::of(y.root() + shift, out);
}

inline constexpr Utt kParallelUtt{Sign::Minus, 0, 0};
inline constexpr Utt kLeadingToneUtt{Sign::Minus, 4, 8};
inline constexpr Utt kRelativeUtt{Sign::Minus, 9, 3};
inline constexpr Utt kDominantUtt{Sign::Plus, 5, 5};
/// The diatonic mediant; carried as a named value only.
inline constexpr Utt kMediantUtt{Sign::Minus, 9, 8};

constexpr Utt transposition_utt(int n) noexcept { return Utt{Sign::Plus, n, n}; }

/// All 288 field triples, Plus before Minus, then by t+, then t-.
std::vector<Utt> all_utts();

Permutation triad_permutation(Utt const &u);

} // namespace triadic
