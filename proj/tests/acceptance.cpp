// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "support.hpp"
#include "triadic/analysis.hpp"
#include "triadic/cli.hpp"
#include "triadic/duality.hpp"
#include "triadic/tonnetz.hpp"

using namespace triadic;

namespace {

struct Outcome
{
  bool ok = true;
  std::string why;

  void require(bool cond, std::string const &what)
  {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

std::string cli(std::vector<std::string> const &args)
{
  std::ostringstream out, err;
  triadic::cli::run(args, out, err);
  return out.str();
}

Outcome group_orders()
{
  Outcome o;
  o.require(build_ti_group().order() == 24, "|T/I| != 24");
  o.require(build_plr_group().order() == 24, "|PLR| != 24");
  const auto lr = PermGroup::generate({triad_permutation(PlrOp::L), triad_permutation(PlrOp::R)});
  o.require(lr.order() == 24, "|<L,R>| != 24");
  o.require(lr == build_plr_group(), "<L,R> != PLR");
  return o;
}

Outcome dihedral_structure()
{
  Outcome o;
  for (auto const &[name, g] : {std::pair{"T/I", build_ti_group()}, std::pair{"PLR", build_plr_group()}}) {
    const auto w = is_dihedral_24(g);
    o.require(w.has_value(), std::string(name) + " not dihedral");
    if (!w)
      continue;
    const auto id = Permutation::identity(24);
    o.require(w->s.pow(12) == id, std::string(name) + ": s^12 != 1");
    o.require(w->t * w->t == id, std::string(name) + ": t^2 != 1");
    o.require(w->t * w->s * w->t == w->s.inverse(), std::string(name) + ": tst != s^-1");
    o.require(PermGroup::generate({w->s, w->t}) == g, std::string(name) + ": <s,t> != G");
  }
  o.require(triad_permutation(PlrWord::parse("LR")).order() == 12, "ord(LR) != 12");
  return o;
}

Outcome p_identity()
{
  Outcome o;
  o.require(triad_permutation(PlrWord::parse("RLRLRLR")) == triad_permutation(PlrOp::P),
            "R(LR)^3 != P");
  o.require(oracle::word_images("RLRLRLR") == oracle::word_images("P"), "oracle disagrees");
  return o;
}

Outcome beethoven()
{
  Outcome o;
  std::istringstream in(oracle::slurp(std::string(TRIADIC_DATA_DIR) + "/beethoven.prog"));
  std::vector<std::string> fixture;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string w;
    while (words >> w && w[0] != '#')
      fixture.push_back(w);
  }
  const auto p = beethoven_sequence();
  o.require(p.spellings == fixture, "sequence differs from fixture");
  o.require(p.triads.size() == 25 && p.triads.front() == p.triads.back(), "does not return to C");
  o.require(std::set<ConsonantTriad>(p.triads.begin(), p.triads.end() - 1).size() == 24,
            "not all 24 triads visited once");
  int y = oracle::index_of("C");
  for (std::size_t i = 0; i + 1 < p.triads.size(); ++i) {
    y = oracle::neighbor(i % 2 == 0 ? 'R' : 'L', y);
    o.require(p.triads[i + 1].index() == y, "step " + std::to_string(i + 1) + " disagrees with oracle");
  }
  const auto cw = build_chickenwire();
  std::vector<std::string> walk;
  for (int v : beethoven_path(cw))
    walk.push_back(format_name(ConsonantTriad::from_index(v), NameStyle::Conventional));
  o.require(walk == fixture, "graph walk differs from fixture");
  return o;
}

Outcome duality()
{
  Outcome o;
  const auto ti = build_ti_group();
  const auto plr = build_plr_group();
  o.require(centralizer_semiregular(ti) == plr, "C(T/I) != PLR");
  o.require(centralizer_semiregular(plr) == ti, "C(PLR) != T/I");
  int pairs = 0;
  for (auto const &g : ti.elements()) {
    for (auto const &h : plr.elements()) {
      ++pairs;
      for (int y = 0; y < 24; ++y)
        o.require(g(h(y)) == h(g(y)), "a pair fails to commute");
    }
  }
  o.require(pairs == 576, "pair count != 576");
  return o;
}

Outcome simple_transitivity()
{
  Outcome o;
  for (auto const &y : triad_table()) {
    for (auto const &z : triad_table()) {
      int ti = 0, plr = 0;
      for (int k = 0; k < 24; ++k) {
        ti += ti_on_triad(TIElement::from_ordinal(k), y) == z;
        plr += DihedralNormalForm::from_ordinal(k)(y) == z;
      }
      o.require(ti == 1 && plr == 1, format_name(y) + "->" + format_name(z) + " not unique");
      o.require(ti_on_triad(find_ti(y, z), y) == z && find_plr(y, z)(y) == z,
                "find_* wrong on " + format_name(y) + "->" + format_name(z));
    }
  }
  return o;
}

Outcome hook()
{
  Outcome o;
  const auto u = build_U();
  const auto q = build_Q();
  const auto ti = build_ti_group();
  const auto plr = build_plr_group();
  o.require(u.order() == 288, "|U| != 288");
  o.require(q.order() == 1152, "|Q| != 1152");
  o.require(centralizer_semiregular(build_transposition_group()) == u, "C(T) != U");
  o.require(centralizer_within(ti, q) == plr, "C_Q(T/I) != PLR");
  o.require(centralizer_within(plr, q) == ti, "C_Q(PLR) != T/I");
  const auto p = triad_permutation(kParallelUtt);
  for (int a = 0; a < 12; ++a) {
    for (int b = 0; b < 12; ++b) {
      o.require(p * triad_permutation(Utt{Sign::Plus, a, b}) * p ==
                  triad_permutation(Utt{Sign::Plus, b, a}),
                "P<+,a,b>P != <+,b,a>");
    }
  }
  return o;
}

Outcome cayley()
{
  Outcome o;
  for (auto const &[name, table] : {std::pair{"D12", dihedral_table(12)},
                                    std::pair{"Z12", cyclic_table(12)},
                                    std::pair{"S3", symmetric_table(3)}}) {
    const auto rr = regular_reps(table);
    o.require(centralizer_semiregular(rr.left) == rr.right, std::string(name) + ": C(left) != right");
    o.require(centralizer_semiregular(rr.right) == rr.left, std::string(name) + ": C(right) != left");
  }
  return o;
}

Outcome graphs()
{
  Outcome o;
  const auto t = build_tonnetz();
  o.require(t.vertex_count() == 12 && t.edge_count() == 36 && t.faces().size() == 24,
            "Tonnetz counts");
  for (int v = 0; v < 12; ++v)
    o.require(t.faces_at(v).size() == 6, "vertex not in 6 faces");
  std::set<std::string> at_zero;
  for (auto i : t.faces_at(0))
    at_zero.insert(format_name(parse_name(t.faces()[i].label), NameStyle::Conventional));
  o.require(at_zero == std::set<std::string>{"a", "C", "c", "Ab", "f", "F"}, "faces at 0");
  try {
    const auto d = dual_of_tonnetz();
    std::vector<int> id(24);
    std::iota(id.begin(), id.end(), 0);
    const auto why = isomorphism_mismatch(d, build_chickenwire(), id);
    o.require(!why, why.value_or(""));
  } catch (StructuralError const &e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome musical_examples()
{
  Outcome o;
  auto corners = [](SquareReport const &s) {
    std::vector<std::string> out;
    for (auto const &y : {s.top_left, s.top_right, s.bottom_left, s.bottom_right_via_top})
      out.push_back(format_name(y, NameStyle::Conventional));
    return out;
  };
  const auto pach = verify_square(parse_name("D"), TIElement::T(7), PlrWord::parse("R"));
  const auto wag = verify_square(parse_name("Ab"), TIElement::T(5), PlrWord::parse("R"));
  const auto ives = verify_square(parse_name("D"), TIElement::I(6), PlrWord::parse("LR"));
  o.require(corners(pach) == std::vector<std::string>{"D", "A", "b", "f#"} && pach.commutes(),
            "Pachelbel");
  o.require(corners(wag) == std::vector<std::string>{"Ab", "Db", "f", "bb"} && wag.commutes(),
            "Wagner");
  o.require(corners(ives) == std::vector<std::string>{"D", "a", "G", "e"} && ives.commutes(),
            "Ives");
  const auto r = ives_dual_motion_report();
  o.require(r.major_motion == 5 && r.minor_motion == -5, "LR root motion not +5/-5");
  return o;
}

Outcome parsimony()
{
  Outcome o;
  const auto s = parsimony_study();
  // Independent brute force over all <0,a,b>, merged by T/I class.
  // Class key: least sorted image of {0,a,b} under all 24 T/I elements.
  auto class_of = [](int a, int b) {
    std::vector<int> best{12, 12, 12};
    for (int n = 0; n < 12; ++n) {
      for (int sign : {1, -1}) {
        std::vector<int> t{oracle::mod(n), oracle::mod(sign * a + n), oracle::mod(sign * b + n)};
        std::sort(t.begin(), t.end());
        best = std::min(best, t);
      }
    }
    return best;
  };
  std::map<std::vector<int>, int> best_max;
  std::array<int, 3> consonant{};
  for (int a = 1; a <= 11; ++a) {
    for (int b = a + 1; b <= 11; ++b) {
      const int keep[3][3] = {{0, 2, 1}, {1, 2, 0}, {0, 1, 2}};
      const int y[3] = {0, a, b};
      std::array<int, 3> d{};
      for (int op = 0; op < 3; ++op) {
        const int m = oracle::mod(y[keep[op][0]] + y[keep[op][1]] - 2 * y[keep[op][2]]);
        d[static_cast<std::size_t>(op)] = std::min(m, 12 - m);
      }
      const int mx = *std::max_element(d.begin(), d.end());
      const auto cls = class_of(a, b);
      auto it = best_max.find(cls);
      if (it == best_max.end() || mx < it->second)
        best_max[cls] = mx;
      if (a == 4 && b == 7)
        consonant = d;
      const auto *row = s.find_representative({0, a, b});
      o.require(row && row->displacements == d, "row <0," + std::to_string(a) + "," +
                                                  std::to_string(b) + "> differs from oracle");
    }
  }
  const auto cons_class = class_of(4, 7);
  const int cons_max = best_max.at(cons_class);
  o.require(best_max.size() == 12, "expected 12 trichord classes");
  for (auto const &[cls, mx] : best_max) {
    if (cls == cons_class || cls == class_of(4, 8))
      continue;
    o.require(mx > cons_max, "a non-consonant class ties or beats the consonant class");
  }
  std::multiset<int> ms(consonant.begin(), consonant.end());
  o.require(ms == std::multiset<int>{1, 1, 2}, "consonant displacements != {1,1,2}");
  o.require(s.find_representative({0, 1, 3})->max_disp > cons_max, "<0,1,3> not larger");
  o.require(s.classes.front().class_prime == std::array<int, 3>{0, 3, 7}, "library ranking");
  return o;
}

Outcome determinism()
{
  Outcome o;
  auto golden = [](std::string const &n) {
    return oracle::slurp(std::string(TRIADIC_GOLDEN_DIR) + "/" + n);
  };
  o.require(cli({"table"}) == golden("table.txt"), "table golden");
  o.require(cli({"beethoven"}) == golden("beethoven.txt"), "beethoven golden");
  for (std::string g : {"tonnetz", "chickenwire"}) {
    o.require(cli({"graph", "--which", g, "--format", "dot"}) == golden(g + ".dot"), g + " dot golden");
    o.require(cli({"graph", "--which", g, "--format", "json"}) == golden(g + ".json"),
              g + " json golden");
  }
  const std::vector<std::vector<std::string>> all{
    {"table"},       {"apply", "--word", "RLR", "--chord", "C"}, {"find", "--from", "C", "--to", "c"},
    {"duality"},     {"hook"},
    {"graph", "--which", "tonnetz", "--format", "dot"},
    {"analyze", std::string(TRIADIC_DATA_DIR) + "/pachelbel.prog"},
    {"beethoven"},   {"parsimony"}};
  for (auto const &args : all) {
    auto with_json = args;
    with_json.push_back("--json");
    o.require(cli(args) == cli(args), args[0] + " not repeatable");
    o.require(cli(with_json) == cli(with_json), args[0] + " --json not repeatable");
  }
  return o;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"group orders", group_orders},
    {"dihedral structure", dihedral_structure},
    {"P identity", p_identity},
    {"Beethoven sequence", beethoven},
    {"duality", duality},
    {"simple transitivity", simple_transitivity},
    {"uniform transformations", hook},
    {"Cayley dual groups", cayley},
    {"graph duality", graphs},
    {"musical examples", musical_examples},
    {"parsimony", parsimony},
    {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.ok)
      std::cout << ": " << o.why;
    std::cout << '\n';
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
