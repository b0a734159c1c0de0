#include "triadic/duality.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace triadic {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Permutation> ti_generators()
{
  return {triad_permutation(TIElement::T(1)), triad_permutation(TIElement::I(0))};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void add(std::vector<NamedCheck> &checks, std::string name, bool passed, std::string detail = {})
{
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool every(std::vector<NamedCheck> const &checks)
{
  return std::all_of(checks.begin(), checks.end(), [](auto const &c) { return c.passed; });
}

std::optional<NamedCheck> first_failed(std::vector<NamedCheck> const &checks)
{
  for (auto const &c : checks) {
    if (!c.passed)
      return c;
  }
  return std::nullopt;
}

void render_checks(std::ostream &os, std::vector<NamedCheck> const &checks)
{
  std::size_t width = 0;
  for (auto const &c : checks)
    width = std::max(width, c.name.size());
  for (auto const &c : checks) {
    os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty())
      os << std::string(width - c.name.size() + 2, ' ') << c.detail;
    os << '\n';
  }
}

ordered_json checks_json(std::vector<NamedCheck> const &checks)
{
  ordered_json out = ordered_json::object();
  for (auto const &c : checks)
    out[c.name] = c.passed;
  return out;
}

std::string describe_witness(DihedralWitness const &w)
{
  return "s=" + w.s.to_cycle_string() + " t=" + w.t.to_cycle_string();
}

} // namespace

// ---------------------------------------------------------------------------
// Groups

PermGroup build_ti_group() { return PermGroup::generate(ti_generators(), kNumTriads); }

PermGroup build_plr_group()
{
  return PermGroup::generate({triad_permutation(PlrOp::P), triad_permutation(PlrOp::L),
                              triad_permutation(PlrOp::R)},
                             kNumTriads);
}

PermGroup build_lr_group()
{
  return PermGroup::generate({triad_permutation(PlrOp::L), triad_permutation(PlrOp::R)},
                             kNumTriads);
}

PermGroup build_transposition_group()
{
  return PermGroup::generate({triad_permutation(TIElement::T(1))}, kNumTriads);
}

PermGroup build_U()
{
  std::vector<Permutation> perms;
  for (auto const &u : all_utts())
    perms.push_back(triad_permutation(u));
  return PermGroup::from_elements(std::move(perms), kNumTriads);
}

ConsonantTriad quasi_utt_apply(QuasiUtt const &q, ConsonantTriad const &y)
{
  const Parity out = q.sigma == Sign::Plus ? y.parity() : opposite(y.parity());
  const int r = y.root().value();
  const int moved = y.is_major() ? q.major_sign * r + q.major_shift
                                 : q.minor_sign * r + q.minor_shift;
  return ConsonantTriad::of(PitchClass(moved), out);
}

Permutation triad_permutation(QuasiUtt const &q)
{
  return Permutation::from_function(kNumTriads, [&q](int i) {
    return quasi_utt_apply(q, ConsonantTriad::from_index(i)).index();
  });
}

PermGroup build_Q()
{
  std::vector<Permutation> perms;
  perms.reserve(1152);
  for (auto sigma : {Sign::Plus, Sign::Minus}) {
    for (int us : {1, -1}) {
      for (int vs : {1, -1}) {
        for (int a = 0; a < 12; ++a) {
          for (int b = 0; b < 12; ++b)
            perms.push_back(triad_permutation(QuasiUtt{sigma, us, a, vs, b}));
        }
      }
    }
  }
  return PermGroup::from_elements(std::move(perms), kNumTriads);
}

PermGroup build_U_with_inversions()
{
  auto gens = build_U().elements();
  gens.push_back(triad_permutation(TIElement::I(0)));
  return PermGroup::generate(gens, kNumTriads);
}

std::optional<Utt> utt_of(Permutation const &p)
{
  for (auto const &u : all_utts()) {
    if (triad_permutation(u) == p)
      return u;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Duality

DualityReport verify_duality()
{
  DualityReport r;
  auto &checks = r.checks_;

  const auto ti = build_ti_group();
  const auto plr = build_plr_group();
  const auto lr = build_lr_group();
  r.ti_order_ = ti.order();
  r.plr_order_ = plr.order();

  add(checks, "ti_order_24", ti.order() == 24, "|T/I| = " + std::to_string(ti.order()));
  add(checks, "plr_order_24", plr.order() == 24, "|PLR| = " + std::to_string(plr.order()));
  add(checks, "lr_generates_plr", lr == plr, "|<L,R>| = " + std::to_string(lr.order()));

  const auto perm_l = triad_permutation(PlrOp::L);
  const auto perm_r = triad_permutation(PlrOp::R);
  const auto perm_p = triad_permutation(PlrOp::P);
  const auto s = perm_l * perm_r;
  add(checks, "lr_order_12", s.order() == 12, "ord(LR) = " + std::to_string(s.order()));
  add(checks, "plr_relations_s_LR_t_L", satisfies_dihedral_relations(s, perm_l, 12),
      "s^12 = t^2 = 1, tst = s^-1");
  add(checks, "ti_relations_s_T1_t_I0",
      satisfies_dihedral_relations(triad_permutation(TIElement::T(1)),
                                   triad_permutation(TIElement::I(0)), 12),
      "s^12 = t^2 = 1, tst = s^-1");
  add(checks, "p_equals_r_lr3", perm_r * s.pow(3) == perm_p, "R(LR)^3 = P");

  r.ti_witness_ = is_dihedral_24(ti);
  r.plr_witness_ = is_dihedral_24(plr);
  add(checks, "ti_dihedral_24", r.ti_witness_.has_value(),
      r.ti_witness_ ? describe_witness(*r.ti_witness_) : "no witness");
  add(checks, "plr_dihedral_24", r.plr_witness_.has_value(),
      r.plr_witness_ ? describe_witness(*r.plr_witness_) : "no witness");

  const bool ti_st = is_simply_transitive(ti);
  const bool plr_st = is_simply_transitive(plr);
  r.both_simply_transitive_ = ti_st && plr_st;
  add(checks, "ti_simply_transitive", ti_st);
  add(checks, "plr_simply_transitive", plr_st);

  bool generators_commute = true;
  for (auto const &g : ti_generators()) {
    for (auto op : kPlrOps)
      generators_commute = generators_commute && commute(g, triad_permutation(op));
  }
  add(checks, "plr_commute_with_T1_I0", generators_commute);

  std::size_t pairs = 0;
  bool all_commute = true;
  for (auto const &g : ti.elements()) {
    for (auto const &h : plr.elements()) {
      ++pairs;
      all_commute = all_commute && commute(g, h);
    }
  }
  r.pair_checks_ = pairs;
  r.all_pairs_commute_ = all_commute && pairs == 576;
  add(checks, "all_pairs_commute", r.all_pairs_commute_,
      std::to_string(pairs) + " pairs on 24 triads");

  const auto c_ti = centralizer_semiregular(ti);
  const auto c_plr = centralizer_semiregular(plr);
  r.plr_centralizes_ti_ = c_ti == plr;
  r.ti_centralizes_plr_ = c_plr == ti;
  add(checks, "centralizer_of_ti_is_plr", r.plr_centralizes_ti_,
      "|C(T/I)| = " + std::to_string(c_ti.order()));
  add(checks, "centralizer_of_plr_is_ti", r.ti_centralizes_plr_,
      "|C(PLR)| = " + std::to_string(c_plr.order()));

  for (int i = 0; i < 24; ++i) {
    const auto g = TIElement::from_ordinal(i);
    if (plr.contains(triad_permutation(g)))
      r.intersection_.push_back(g);
  }
  std::string names;
  for (auto const &g : r.intersection_)
    names += (names.empty() ? "" : ", ") + g.to_string();
  add(checks, "intersection_contains_identity",
      !r.intersection_.empty() && r.intersection_.front() == TIElement::identity(),
      "shared elements {" + names + "}");

  return r;
}

bool DualityReport::all_passed() const { return every(checks_); }
std::optional<NamedCheck> DualityReport::first_failure() const { return first_failed(checks_); }

std::string DualityReport::to_text() const
{
  std::ostringstream os;
  os << "T/I and PLR duality\n"
     << "  |T/I| = " << ti_order_ << ", |PLR| = " << plr_order_ << '\n'
     << "  both simply transitive: " << yes_no(both_simply_transitive_) << '\n'
     << "  C(T/I) = PLR: " << yes_no(plr_centralizes_ti_)
     << ", C(PLR) = T/I: " << yes_no(ti_centralizes_plr_) << '\n'
     << "  commuting pairs: " << pair_checks_ << " checked, all commute: "
     << yes_no(all_pairs_commute_) << '\n';
  render_checks(os, checks_);
  os << (all_passed() ? "all checks passed\n" : "VERIFICATION FAILED\n");
  return os.str();
}

std::string DualityReport::to_json() const
{
  ordered_json j;
  j["ti_order"] = ti_order_;
  j["plr_order"] = plr_order_;
  j["both_simply_transitive"] = both_simply_transitive_;
  j["ti_centralizes_plr"] = ti_centralizes_plr_;
  j["plr_centralizes_ti"] = plr_centralizes_ti_;
  j["all_pairs_commute"] = all_pairs_commute_;
  j["pair_checks"] = pair_checks_;
  auto witness = [](std::optional<DihedralWitness> const &w) {
    return w ? ordered_json{{"s", w->s.images()}, {"t", w->t.images()}} : ordered_json(nullptr);
  };
  j["dihedral_witnesses"] = {{"ti", witness(ti_witness_)}, {"plr", witness(plr_witness_)}};
  ordered_json inter = ordered_json::array();
  for (auto const &g : intersection_)
    inter.push_back(g.to_string());
  j["intersection"] = inter;
  j["checks"] = checks_json(checks_);
  j["all_passed"] = all_passed();
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Uniform triadic transformations

HookReport verify_hook()
{
  HookReport r;
  auto &checks = r.checks_;

  const auto ti = build_ti_group();
  const auto plr = build_plr_group();
  const auto trans = build_transposition_group();
  const auto u = build_U();
  const auto q = build_Q();
  const auto u_inv = build_U_with_inversions();
  r.u_order_ = u.order();
  r.q_order_ = q.order();
  r.u_with_inversions_order_ = u_inv.order();

  add(checks, "u_order_288", u.order() == 288, "|U| = " + std::to_string(u.order()));
  add(checks, "q_order_1152", q.order() == 1152, "|Q| = " + std::to_string(q.order()));
  add(checks, "q_contains_u", u.is_subgroup_of(q));
  add(checks, "q_contains_ti", ti.is_subgroup_of(q));
  add(checks, "u_excludes_inversions", !u.contains(triad_permutation(TIElement::I(0))));
  add(checks, "closure_u_i0_order_576", u_inv.order() == 576,
      "|<U, I_0>| = " + std::to_string(u_inv.order()));

  add(checks, "plr_named_utts",
      triad_permutation(PlrOp::P) == triad_permutation(kParallelUtt) &&
        triad_permutation(PlrOp::L) == triad_permutation(kLeadingToneUtt) &&
        triad_permutation(PlrOp::R) == triad_permutation(kRelativeUtt),
      "P=<-,0,0> L=<-,4,8> R=<-,9,3>");
  bool tn_ok = true;
  for (int n = 0; n < 12; ++n)
    tn_ok = tn_ok && triad_permutation(TIElement::T(n)) == triad_permutation(transposition_utt(n));
  add(checks, "transpositions_are_utts", tn_ok, "T_n = <+,n,n>");
  add(checks, "u_contains_plr", plr.is_subgroup_of(u));

  const auto c_trans = centralizer_semiregular(trans);
  add(checks, "a_centralizer_of_transpositions_is_u", c_trans == u,
      "|C(T)| = " + std::to_string(c_trans.order()));
  const auto c_ti_q = centralizer_within(ti, q);
  add(checks, "b_centralizer_of_ti_in_q_is_plr", c_ti_q == plr,
      "|C_Q(T/I)| = " + std::to_string(c_ti_q.order()));
  const auto c_plr_q = centralizer_within(plr, q);
  add(checks, "c_centralizer_of_plr_in_q_is_ti", c_plr_q == ti,
      "|C_Q(PLR)| = " + std::to_string(c_plr_q.order()));
  const auto c_trans_q = centralizer_within(trans, q);
  add(checks, "d_centralizer_of_transpositions_in_q_is_u", c_trans_q == u,
      "|C_Q(T)| = " + std::to_string(c_trans_q.order()));
  add(checks, "q_duality_agrees_with_sym",
      c_ti_q == centralizer_semiregular(ti) && c_plr_q == centralizer_semiregular(plr));

  // Wreath structure: the parity-preserving half is Z12 x Z12, normal in U,
  // and swapped coordinatewise by conjugation with P.
  std::vector<Permutation> plus;
  for (auto const &x : all_utts()) {
    if (x.sigma == Sign::Plus)
      plus.push_back(triad_permutation(x));
  }
  const auto plus_group = PermGroup::from_elements(plus, kNumTriads);
  const auto a = triad_permutation(Utt{Sign::Plus, 1, 0});
  const auto b = triad_permutation(Utt{Sign::Plus, 0, 1});
  const auto ab = PermGroup::generate({a, b}, kNumTriads);
  const bool direct_product = plus_group.order() == 144 && plus_group.is_abelian() &&
                              a.order() == 12 && b.order() == 12 && ab == plus_group;
  add(checks, "e_plus_half_is_z12_x_z12", direct_product,
      "order " + std::to_string(plus_group.order()) + ", generated by <+,1,0>, <+,0,1>");

  bool normal = true;
  for (auto const &g : u.elements()) {
    const auto ginv = g.inverse();
    for (auto const &x : {a, b})
      normal = normal && plus_group.contains(g * x * ginv);
  }
  add(checks, "e_plus_half_is_normal", normal);

  const auto p = triad_permutation(kParallelUtt);
  bool swaps = true;
  for (int i = 0; i < 12; ++i) {
    for (int j = 0; j < 12; ++j) {
      swaps = swaps && p * triad_permutation(Utt{Sign::Plus, i, j}) * p ==
                         triad_permutation(Utt{Sign::Plus, j, i});
    }
  }
  add(checks, "e_conjugation_by_p_swaps", swaps, "P<+,a,b>P = <+,b,a> for all a, b");

  return r;
}

bool HookReport::all_passed() const { return every(checks_); }
std::optional<NamedCheck> HookReport::first_failure() const { return first_failed(checks_); }

std::string HookReport::to_text() const
{
  std::ostringstream os;
  os << "Uniform triadic transformations\n"
     << "  |U| = " << u_order_ << ", |Q| = " << q_order_
     << ", |<U, I_0>| = " << u_with_inversions_order_ << '\n';
  render_checks(os, checks_);
  os << (all_passed() ? "all checks passed\n" : "VERIFICATION FAILED\n");
  return os.str();
}

std::string HookReport::to_json() const
{
  ordered_json j;
  j["u_order"] = u_order_;
  j["q_order"] = q_order_;
  j["u_with_inversions_order"] = u_with_inversions_order_;
  j["checks"] = checks_json(checks_);
  j["all_passed"] = all_passed();
  return j.dump(2) + "\n";
}

} // namespace triadic
