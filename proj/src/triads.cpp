#include "triadic/triads.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "triadic/error.hpp"

namespace triadic {

namespace {

// Spellings by root pitch class, sharp spelling first.
constexpr std::array<std::string_view, 12> kSharpNames = {
  "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};
constexpr std::array<std::string_view, 12> kFlatNames = {
  "", "Db", "", "Eb", "", "", "Gb", "", "Ab", "", "Bb", ""};

constexpr std::array<bool, 12> kConventionalMajorFlat = {
  false, true, false, true, false, false, true, false, true, false, true, false};
constexpr std::array<bool, 12> kConventionalMinorFlat = {
  false, false, false, true, false, false, false, false, false, false, true, false};

int natural_pitch(char upper)
{
  switch (upper) {
  case 'C': return 0;
  case 'D': return 2;
  case 'E': return 4;
  case 'F': return 5;
  case 'G': return 7;
  case 'A': return 9;
  case 'B': return 11;
  default: return -1;
  }
}

std::string lowered(std::string_view s)
{
  std::string out(s);
  for (auto &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

ConsonantTriad parse_literal(std::string_view text)
{
  auto fail = [&](std::string const &why) -> ParseError {
    return ParseError("invalid triad literal '" + std::string(text) + "': " + why,
                      std::string(text));
  };

  if (text.size() < 7 || text.front() != '<' || text.back() != '>')
    throw fail("expected <p,q,r>");

  std::string_view body = text.substr(1, text.size() - 2);
  std::array<PitchClass, 3> tones;
  for (std::size_t k = 0; k < 3; ++k) {
    auto comma = body.find(',');
    if ((k < 2) != (comma != std::string_view::npos))
      throw fail("expected exactly three components");
    std::string_view field = k < 2 ? body.substr(0, comma) : body;

    int v = -1;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw fail("component '" + std::string(field) + "' is not an integer");
    if (v < 0 || v > 11)
      throw fail("component " + std::to_string(v) + " outside 0-11");
    tones[k] = PitchClass(v);

    if (k < 2)
      body.remove_prefix(comma + 1);
  }

  if (!ConsonantTriad::is_consonant(tones[0], tones[1], tones[2]))
    throw fail("not a consonant triad");
  return ConsonantTriad::from_tones(tones);
}

} // namespace

ConsonantTriad ConsonantTriad::from_tones(PitchClass y1, PitchClass y2, PitchClass y3)
{
  if (!is_consonant(y1, y2, y3)) {
    throw std::invalid_argument("<" + std::to_string(y1.value()) + "," +
                                std::to_string(y2.value()) + "," +
                                std::to_string(y3.value()) + "> is not a consonant triad");
  }
  return ConsonantTriad(y1, y2, y3);
}

std::vector<PitchClass> ConsonantTriad::pitch_set() const
{
  std::vector<PitchClass> out(tones_.begin(), tones_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::array<ConsonantTriad, kNumTriads> const &triad_table()
{
  static const auto table = [] {
    std::array<ConsonantTriad, kNumTriads> t;
    for (int i = 0; i < kNumTriads; ++i)
      t[i] = ConsonantTriad::from_index(i);
    return t;
  }();
  return table;
}

std::vector<PitchClass> common_tones(ConsonantTriad const &y, ConsonantTriad const &z)
{
  auto a = y.pitch_set();
  auto b = z.pitch_set();
  std::vector<PitchClass> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PitchClass TriadName::root() const noexcept
{
  int pc = natural_pitch(letter);
  if (accidental == Accidental::Sharp)
    ++pc;
  else if (accidental == Accidental::Flat)
    --pc;
  return PitchClass(pc);
}

std::string TriadName::to_string() const
{
  std::string out(1, parity == Parity::Major
                       ? letter
                       : static_cast<char>(std::tolower(static_cast<unsigned char>(letter))));
  if (accidental == Accidental::Sharp)
    out += '#';
  else if (accidental == Accidental::Flat)
    out += 'b';
  return out;
}

std::string format_name(ConsonantTriad const &y, NameStyle style)
{
  const int r = y.root().value();
  const bool major = y.is_major();
  auto cased = [major](std::string_view s) {
    return major ? std::string(s) : lowered(s);
  };

  switch (style) {
  case NameStyle::Compact:
    return cased(kSharpNames[r]);
  case NameStyle::Verbose:
    if (kFlatNames[r].empty())
      return cased(kSharpNames[r]);
    return cased(kSharpNames[r]) + "/" + cased(kFlatNames[r]);
  case NameStyle::Conventional: {
    const bool flat = major ? kConventionalMajorFlat[r] : kConventionalMinorFlat[r];
    return cased(flat ? kFlatNames[r] : kSharpNames[r]);
  }
  }
  return cased(kSharpNames[r]);
}

TriadName parse_triad_name(std::string_view text)
{
  auto fail = [&] {
    return ParseError("invalid chord name '" + std::string(text) + "'", std::string(text));
  };
  if (text.empty() || text.size() > 2)
    throw fail();

  const char c = text[0];
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (natural_pitch(upper) < 0 || !std::isalpha(static_cast<unsigned char>(c)))
    throw fail();

  TriadName name;
  name.letter = upper;
  name.parity = (c == upper) ? Parity::Major : Parity::Minor;
  if (text.size() == 2) {
    if (text[1] == '#')
      name.accidental = Accidental::Sharp;
    else if (text[1] == 'b')
      name.accidental = Accidental::Flat;
    else
      throw fail();
  }
  return name;
}

ConsonantTriad parse_name(std::string_view text)
{
  if (!text.empty() && text.front() == '<')
    return parse_literal(text);
  return parse_triad_name(text).triad();
}

std::string format_tones(ConsonantTriad const &y)
{
  return "<" + std::to_string(y[0].value()) + "," + std::to_string(y[1].value()) + "," +
         std::to_string(y[2].value()) + ">";
}

} // namespace triadic
