#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace triadic {

/// Reduces an arbitrary integer to its residue in {0,...,11}.
constexpr int mod12(int x) noexcept
{
  int r = x % 12;
  return r < 0 ? r + 12 : r;
}

/// An equal-tempered pitch class, counted in semitones above C.
class PitchClass
{
public:
  constexpr PitchClass() noexcept = default;
  constexpr explicit PitchClass(int semitones) noexcept
    : value_(static_cast<std::uint8_t>(mod12(semitones)))
  {}

  constexpr int value() const noexcept { return value_; }

  constexpr friend bool operator==(PitchClass, PitchClass) noexcept = default;
  constexpr friend auto operator<=>(PitchClass, PitchClass) noexcept = default;

  constexpr PitchClass operator+(int n) const noexcept { return PitchClass(value_ + n); }
  constexpr PitchClass operator-(int n) const noexcept { return PitchClass(value_ - n); }
  constexpr PitchClass operator-() const noexcept { return PitchClass(-int{value_}); }

private:
  std::uint8_t value_ = 0;
};

enum class TIKind : std::uint8_t { Transposition, Inversion };

/// An element T_n or I_n of the transposition/inversion group.
///
/// Composition is right-to-left: `a * b` applies `b` first.
class TIElement
{
public:
  constexpr TIElement() noexcept = default;
  constexpr TIElement(TIKind kind, int index) noexcept
    : kind_(kind), index_(static_cast<std::uint8_t>(mod12(index)))
  {}

  static constexpr TIElement T(int n) noexcept { return {TIKind::Transposition, n}; }
  static constexpr TIElement I(int n) noexcept { return {TIKind::Inversion, n}; }
  static constexpr TIElement identity() noexcept { return T(0); }

  /// Elements 0-11 are T_0..T_11, 12-23 are I_0..I_11.
  static constexpr TIElement from_ordinal(int k) noexcept
  {
    return k < 12 ? T(k) : I(k - 12);
  }

  constexpr TIKind kind() const noexcept { return kind_; }
  constexpr int index() const noexcept { return index_; }
  constexpr bool is_inversion() const noexcept { return kind_ == TIKind::Inversion; }
  constexpr int ordinal() const noexcept { return (is_inversion() ? 12 : 0) + index_; }

  constexpr PitchClass operator()(PitchClass x) const noexcept
  {
    return is_inversion() ? PitchClass(index_ - x.value()) : PitchClass(x.value() + index_);
  }

  constexpr friend bool operator==(TIElement, TIElement) noexcept = default;
  constexpr friend auto operator<=>(TIElement, TIElement) noexcept = default;

  /// Renders as "T_n" or "I_n".
  std::string to_string() const;

private:
  TIKind kind_ = TIKind::Transposition;
  std::uint8_t index_ = 0;
};

constexpr PitchClass tn_apply(int n, PitchClass x) noexcept { return TIElement::T(n)(x); }
constexpr PitchClass in_apply(int n, PitchClass x) noexcept { return TIElement::I(n)(x); }

constexpr TIElement ti_compose(TIElement a, TIElement b) noexcept
{
  const int m = a.index();
  const int n = b.index();
  if (!a.is_inversion())
    return b.is_inversion() ? TIElement::I(m + n) : TIElement::T(m + n);
  return b.is_inversion() ? TIElement::T(m - n) : TIElement::I(m - n);
}

constexpr TIElement operator*(TIElement a, TIElement b) noexcept { return ti_compose(a, b); }

constexpr TIElement ti_invert(TIElement a) noexcept
{
  return a.is_inversion() ? a : TIElement::T(-a.index());
}

/// Shortest distance around the pitch-class clock, in semitones (0-6).
constexpr int circ_dist(PitchClass x, PitchClass y) noexcept
{
  const int d = mod12(x.value() - y.value());
  return d > 6 ? 12 - d : d;
}

} // namespace triadic
