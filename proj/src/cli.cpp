#include "triadic/cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "triadic/analysis.hpp"
#include "triadic/duality.hpp"
#include "triadic/error.hpp"
#include "triadic/neo_riemann.hpp"
#include "triadic/tonnetz.hpp"
#include "triadic/triads.hpp"

namespace triadic::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(ordered_json const &j) { return j.dump(2) + "\n"; }

std::string parity_name(Parity p) { return p == Parity::Major ? "major" : "minor"; }

std::string plr_with_op(DihedralNormalForm const &nf)
{
  std::string s = nf.to_string();
  if (auto op = as_single_op(nf))
    s += " (= " + std::string(1, to_char(*op)) + ")";
  return s;
}

std::string table_text()
{
  std::ostringstream os;
  os << std::left << std::setw(4) << "n" << std::setw(10) << "T_n<0,4,7>" << std::setw(8) << ""
     << std::setw(10) << "I_n<0,4,7>" << '\n';
  for (int n = 0; n < 12; ++n) {
    const auto &maj = triad_table()[static_cast<std::size_t>(n)];
    const auto &min = triad_table()[static_cast<std::size_t>(n + 12)];
    os << std::setw(4) << n << std::setw(10) << format_tones(maj) << std::setw(8)
       << format_name(maj, NameStyle::Verbose) << std::setw(10) << format_tones(min)
       << format_name(min, NameStyle::Verbose) << '\n';
  }
  return os.str();
}

std::string table_json()
{
  ordered_json j;
  j["triads"] = ordered_json::array();
  for (auto const &y : triad_table()) {
    j["triads"].push_back({{"index", y.index()},
                           {"tones", {y[0].value(), y[1].value(), y[2].value()}},
                           {"name", format_name(y)},
                           {"parity", parity_name(y.parity())},
                           {"root", y.root().value()}});
  }
  return dump(j);
}

template <class Report>
int emit_report(Report const &r, bool json, std::ostream &out, std::ostream &err)
{
  out << (json ? r.to_json() : r.to_text());
  if (auto f = r.first_failure()) {
    err << "check failed: " << f->name << '\n';
    return 1;
  }
  return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Neo-Riemannian triad transformations and their dual groups", "triadic"};
  app.require_subcommand(1);

  bool json = false;
  auto add_json = [&json](CLI::App *sub) {
    sub->add_flag("--json", json, "structured output");
  };

  auto *table = app.add_subcommand("table", "the 24 consonant triads");
  add_json(table);

  std::string word, chord;
  auto *apply = app.add_subcommand("apply", "apply a P/L/R word (right to left) to a triad");
  apply->add_option("--word", word, "word over P, L, R, e.g. RLR")->required();
  apply->add_option("--chord", chord, "triad name, e.g. C, f#, Bb")->required();
  add_json(apply);

  std::string from, to;
  auto *find = app.add_subcommand("find", "unique T/I and PLR transformations between triads");
  find->add_option("--from", from)->required();
  find->add_option("--to", to)->required();
  add_json(find);

  auto *duality = app.add_subcommand("duality", "verify the T/I and PLR groups are dual");
  add_json(duality);

  auto *hook = app.add_subcommand("hook", "verify uniform triadic transformation claims");
  add_json(hook);

  std::string which = "tonnetz", format = "dot";
  auto *graph = app.add_subcommand("graph", "export the Tonnetz or chicken-wire graph");
  graph->add_option("--which", which)->check(CLI::IsMember({"tonnetz", "chickenwire"}));
  graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  add_json(graph);

  std::string file;
  auto *analyze_cmd = app.add_subcommand("analyze", "transformations along a progression file");
  analyze_cmd->add_option("file", file)->required();
  add_json(analyze_cmd);

  auto *beethoven = app.add_subcommand("beethoven", "the R/L cycle through all 24 triads");
  add_json(beethoven);

  auto *parsimony = app.add_subcommand("parsimony", "moving-voice displacement by trichord class");
  add_json(parsimony);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (CLI::ParseError const &e) {
    return app.exit(e, out, err);
  }

  try {
    if (*table) {
      out << (json ? table_json() : table_text());
    } else if (*apply) {
      const auto w = PlrWord::parse(word);
      const auto y = parse_name(chord);
      const auto z = word_apply(w, y);
      const auto nf = word_normal_form(w);
      if (json) {
        out << dump({{"word", w.to_string()},
                     {"chord", format_name(y)},
                     {"result", format_name(z)},
                     {"tones", format_tones(z)},
                     {"normalForm", nf.to_string()}});
      } else {
        out << (w.empty() ? "1" : w.to_string()) << "(" << format_name(y)
            << ") = " << format_name(z) << " " << format_tones(z)
            << "\nnormal form: " << plr_with_op(nf) << '\n';
      }
    } else if (*find) {
      const auto y = parse_name(from);
      const auto z = parse_name(to);
      const auto ti = find_ti(y, z);
      const auto nf = find_plr(y, z);
      if (json) {
        out << dump({{"from", format_name(y)},
                     {"to", format_name(z)},
                     {"ti", ti.to_string()},
                     {"plr", nf.to_string()}});
      } else {
        out << "T/I: " << ti.to_string() << "   PLR: " << plr_with_op(nf) << '\n';
      }
    } else if (*duality) {
      return emit_report(verify_duality(), json, out, err);
    } else if (*hook) {
      return emit_report(verify_hook(), json, out, err);
    } else if (*graph) {
      const auto g = which == "tonnetz" ? build_tonnetz() : build_chickenwire();
      out << (json || format == "json" ? export_json(g) : export_dot(g));
    } else if (*analyze_cmd) {
      const auto p = load_progression(file);
      const auto steps = analyze(p);
      out << (json ? analysis_to_json(p, steps) : analysis_to_text(p, steps));
    } else if (*beethoven) {
      const auto p = beethoven_sequence();
      const auto labels = beethoven_labels();
      if (json) {
        ordered_json j;
        j["sequence"] = p.spellings;
        j["labels"] = ordered_json::array();
        for (auto op : labels)
          j["labels"].push_back(std::string(1, to_char(op)));
        out << dump(j);
      } else {
        for (std::size_t i = 0; i < p.spellings.size(); ++i)
          out << (i ? " " : "") << p.spellings[i];
        out << '\n';
        for (std::size_t i = 0; i < labels.size(); ++i)
          out << (i ? " " : "") << to_char(labels[i]);
        out << '\n';
      }
    } else if (*parsimony) {
      const auto study = parsimony_study();
      out << (json ? study.to_json() : study.to_text());
    }
  } catch (ParseError const &e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

} // namespace triadic::cli
