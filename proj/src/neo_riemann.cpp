#include "triadic/neo_riemann.hpp"

#include <stdexcept>

#include "triadic/error.hpp"

namespace triadic {

namespace {

Permutation permutation_of(auto const &f)
{
  return Permutation::from_function(kNumTriads, [&](int i) {
    return f(ConsonantTriad::from_index(i)).index();
  });
}

// Normal-form permutations, indexed by DihedralNormalForm::ordinal().
std::array<Permutation, 24> const &normal_form_table()
{
  static const auto table = [] {
    std::array<Permutation, 24> t;
    for (int i = 0; i < 24; ++i)
      t[static_cast<std::size_t>(i)] = triad_permutation(DihedralNormalForm::from_ordinal(i));
    return t;
  }();
  return table;
}

} // namespace

ConsonantTriad ti_on_triad(TIElement g, ConsonantTriad const &y)
{
  return ConsonantTriad::from_tones(g(y[0]), g(y[1]), g(y[2]));
}

char to_char(PlrOp op) noexcept
{
  switch (op) {
  case PlrOp::P: return 'P';
  case PlrOp::L: return 'L';
  case PlrOp::R: return 'R';
  }
  return '?';
}

ConsonantTriad plr_apply(PlrOp op, ConsonantTriad const &y)
{
  return ConsonantTriad::from_tones(contextual_inversion(op, y.tones()));
}

ConsonantTriad p_apply(ConsonantTriad const &y) { return plr_apply(PlrOp::P, y); }
ConsonantTriad l_apply(ConsonantTriad const &y) { return plr_apply(PlrOp::L, y); }
ConsonantTriad r_apply(ConsonantTriad const &y) { return plr_apply(PlrOp::R, y); }

InversionAxis inversion_axis(PlrOp op, ConsonantTriad const &y)
{
  const int ticks = contextual_index(op, y.tones());
  return {ticks, ticks + 12};
}

PlrWord PlrWord::parse(std::string_view text)
{
  std::vector<PlrOp> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'P': letters.push_back(PlrOp::P); break;
    case 'L': letters.push_back(PlrOp::L); break;
    case 'R': letters.push_back(PlrOp::R); break;
    default:
      throw ParseError("invalid letter '" + std::string(1, text[i]) + "' in word '" +
                         std::string(text) + "' (expected P, L or R)",
                       std::string(text), 0, i + 1);
    }
  }
  return PlrWord(std::move(letters));
}

ConsonantTriad PlrWord::operator()(ConsonantTriad const &y) const
{
  ConsonantTriad out = y;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out = plr_apply(*it, out);
  return out;
}

PlrWord operator*(PlrWord const &a, PlrWord const &b)
{
  auto letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return PlrWord(std::move(letters));
}

PlrWord PlrWord::pow(std::size_t k) const
{
  PlrWord out;
  for (std::size_t i = 0; i < k; ++i)
    out = out * *this;
  return out;
}

std::string PlrWord::to_string() const
{
  std::string out;
  for (auto op : letters_)
    out += to_char(op);
  return out;
}

ConsonantTriad word_apply(PlrWord const &w, ConsonantTriad const &y) { return w(y); }

std::string DihedralNormalForm::to_string() const
{
  std::string out;
  if (k == 1)
    out = "s";
  else if (k > 1)
    out = "s^" + std::to_string(k);
  if (e)
    out += out.empty() ? "t" : " t";
  return out.empty() ? "1" : out;
}

ConsonantTriad DihedralNormalForm::operator()(ConsonantTriad const &y) const
{
  ConsonantTriad out = e ? l_apply(y) : y;
  for (int i = 0; i < k; ++i)
    out = l_apply(r_apply(out));
  return out;
}

DihedralNormalForm word_normal_form(PlrWord const &w)
{
  const auto p = triad_permutation(w);
  auto const &table = normal_form_table();
  for (int i = 0; i < 24; ++i) {
    if (table[static_cast<std::size_t>(i)] == p)
      return DihedralNormalForm::from_ordinal(i);
  }
  throw std::logic_error("word " + w.to_string() + " matches no dihedral normal form");
}

std::optional<PlrOp> as_single_op(DihedralNormalForm const &nf)
{
  for (auto op : kPlrOps) {
    if (word_normal_form(PlrWord({op})) == nf)
      return op;
  }
  return std::nullopt;
}

Permutation triad_permutation(TIElement g)
{
  return permutation_of([g](ConsonantTriad const &y) { return ti_on_triad(g, y); });
}

Permutation triad_permutation(PlrOp op)
{
  return permutation_of([op](ConsonantTriad const &y) { return plr_apply(op, y); });
}

Permutation triad_permutation(PlrWord const &w)
{
  return permutation_of([&w](ConsonantTriad const &y) { return w(y); });
}

Permutation triad_permutation(DihedralNormalForm const &nf)
{
  return permutation_of([&nf](ConsonantTriad const &y) { return nf(y); });
}

Permutation triad_permutation(Utt const &u)
{
  return permutation_of([&u](ConsonantTriad const &y) { return utt_apply(u, y); });
}

std::vector<TIElement> ti_solutions(ConsonantTriad const &y, ConsonantTriad const &z)
{
  std::vector<TIElement> out;
  for (int i = 0; i < 24; ++i) {
    const auto g = TIElement::from_ordinal(i);
    if (ti_on_triad(g, y) == z)
      out.push_back(g);
  }
  return out;
}

std::vector<DihedralNormalForm> plr_solutions(ConsonantTriad const &y, ConsonantTriad const &z)
{
  std::vector<DihedralNormalForm> out;
  auto const &table = normal_form_table();
  for (int i = 0; i < 24; ++i) {
    if (table[static_cast<std::size_t>(i)](y.index()) == z.index())
      out.push_back(DihedralNormalForm::from_ordinal(i));
  }
  return out;
}

TIElement find_ti(ConsonantTriad const &y, ConsonantTriad const &z)
{
  auto sols = ti_solutions(y, z);
  if (sols.size() != 1)
    throw std::logic_error("T/I action is not simply transitive on " + format_tones(y) +
                           " -> " + format_tones(z));
  return sols.front();
}

DihedralNormalForm find_plr(ConsonantTriad const &y, ConsonantTriad const &z)
{
  auto sols = plr_solutions(y, z);
  if (sols.size() != 1)
    throw std::logic_error("PLR action is not simply transitive on " + format_tones(y) +
                           " -> " + format_tones(z));
  return sols.front();
}

std::string Utt::to_string() const
{
  return std::string("<") + (sigma == Sign::Plus ? '+' : '-') + "," + std::to_string(tplus) +
         "," + std::to_string(tminus) + ">";
}

std::vector<Utt> all_utts()
{
  std::vector<Utt> out;
  out.reserve(288);
  for (auto sigma : {Sign::Plus, Sign::Minus}) {
    for (int tp = 0; tp < 12; ++tp) {
      for (int tm = 0; tm < 12; ++tm)
        out.emplace_back(sigma, tp, tm);
    }
  }
  return out;
}

} // namespace triadic
