#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triadic/pitch_space.hpp"

namespace triadic {

enum class Parity : std::uint8_t { Major, Minor };

constexpr Parity opposite(Parity p) noexcept
{
  return p == Parity::Major ? Parity::Minor : Parity::Major;
}

inline constexpr int kNumTriads = 24;

/// A major or minor triad as an ordered pitch-class triple.
///
/// Majors are <r, r+4, r+7>; minors are I_n<0,4,7> = <n, n-4, n-7>, whose
/// root is the last component. Every value of this type satisfies one of
/// the two shapes.
class ConsonantTriad
{
public:
  /// C major.
  constexpr ConsonantTriad() noexcept
    : tones_{PitchClass(0), PitchClass(4), PitchClass(7)}
  {}

  /// Throws std::invalid_argument if the triple is not consonant.
  static ConsonantTriad from_tones(PitchClass y1, PitchClass y2, PitchClass y3);
  static ConsonantTriad from_tones(std::array<PitchClass, 3> const &tones)
  {
    return from_tones(tones[0], tones[1], tones[2]);
  }

  static constexpr bool is_consonant(PitchClass y1, PitchClass y2, PitchClass y3) noexcept
  {
    const int a = mod12(y2.value() - y1.value());
    const int b = mod12(y3.value() - y1.value());
    return (a == 4 && b == 7) || (a == 8 && b == 5);
  }

  static constexpr ConsonantTriad major(PitchClass root) noexcept
  {
    return ConsonantTriad(root, root + 4, root + 7);
  }
  static constexpr ConsonantTriad minor(PitchClass root) noexcept
  {
    return ConsonantTriad(root + 7, root + 3, root);
  }
  static constexpr ConsonantTriad of(PitchClass root, Parity parity) noexcept
  {
    return parity == Parity::Major ? major(root) : minor(root);
  }

  /// Canonical index: 0-11 are T_n<0,4,7>, 12-23 are I_n<0,4,7>.
  static constexpr ConsonantTriad from_index(int i) noexcept
  {
    const PitchClass n(i % 12);
    return i < 12 ? ConsonantTriad(n, n + 4, n + 7) : ConsonantTriad(n, n - 4, n - 7);
  }

  constexpr int index() const noexcept
  {
    return (is_major() ? 0 : 12) + tones_[0].value();
  }

  constexpr std::array<PitchClass, 3> const &tones() const noexcept { return tones_; }
  constexpr PitchClass operator[](std::size_t i) const noexcept { return tones_[i]; }

  constexpr bool is_major() const noexcept
  {
    return mod12(tones_[1].value() - tones_[0].value()) == 4;
  }
  constexpr Parity parity() const noexcept { return is_major() ? Parity::Major : Parity::Minor; }
  constexpr PitchClass root() const noexcept { return is_major() ? tones_[0] : tones_[2]; }

  /// Tones as an ascending, duplicate-free list.
  std::vector<PitchClass> pitch_set() const;

  constexpr friend bool operator==(ConsonantTriad const &, ConsonantTriad const &) noexcept = default;

  constexpr friend auto operator<=>(ConsonantTriad const &a, ConsonantTriad const &b) noexcept
  {
    return a.index() <=> b.index();
  }

private:
  constexpr ConsonantTriad(PitchClass y1, PitchClass y2, PitchClass y3) noexcept
    : tones_{y1, y2, y3}
  {}

  std::array<PitchClass, 3> tones_;
};

constexpr PitchClass root(ConsonantTriad const &y) noexcept { return y.root(); }
constexpr Parity parity(ConsonantTriad const &y) noexcept { return y.parity(); }

/// The 24 consonant triads in canonical order.
std::array<ConsonantTriad, kNumTriads> const &triad_table();

/// Pitch classes shared by both triads, ascending.
std::vector<PitchClass> common_tones(ConsonantTriad const &y, ConsonantTriad const &z);

enum class Accidental : std::uint8_t { Natural, Sharp, Flat };

struct TriadName
{
  char letter = 'C'; // 'A'..'G'
  Accidental accidental = Accidental::Natural;
  Parity parity = Parity::Major;

  PitchClass root() const noexcept;
  ConsonantTriad triad() const noexcept { return ConsonantTriad::of(root(), parity); }

  /// Upper case for major, lower case for minor; '#' or 'b'.
  std::string to_string() const;

  friend bool operator==(TriadName const &, TriadName const &) = default;
};

enum class NameStyle {
  Compact,      ///< first spelling of the triad table: "C#", "a#"
  Verbose,      ///< every spelling: "C#/Db", "a#/bb"
  Conventional, ///< usual key-signature spelling: "Db", "bb", "f#"
};

std::string format_name(ConsonantTriad const &y, NameStyle style = NameStyle::Compact);

/// Parses `[A-Ga-g](#|b)?` or a literal triple `<p,q,r>` (0 <= p,q,r <= 11).
/// Throws ParseError naming the offending token.
ConsonantTriad parse_name(std::string_view text);

/// Parses the letter form only, preserving the spelling.
TriadName parse_triad_name(std::string_view text);

std::string format_tones(ConsonantTriad const &y);

} // namespace triadic
