// oligo: command-line front end for decorated permutation groups.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "oligo/dsl.hpp"
#include "oligo/error.hpp"
#include "oligo/io.hpp"
#include "oligo/oracle.hpp"
#include "oligo/series.hpp"

using namespace oligo;

namespace
{

enum Exit
{
  Ok = 0,
  Invalid = 1,
  Syntax = 2,
  Mismatch = 3,
  Resource = 4
};

void emit(Json const &j)
{
  std::cout << j.dump() << '\n';
}

DecoratedGroup load_input(std::string const &path, int k, FiniteGroup &group)
{
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (Json::parse_error const &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  // Either a plain group or a decorated group to be truncated first.
  if (j.is_object() && j.contains("F_generators"))
    group = truncate(decorated_from_json(j), k).group;
  else
    group = group_from_json(j);
  return recognize(group, k);
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Decorated permutation groups: validation, Hilbert series, brute-force checks"};
  app.require_subcommand(1);

  std::string expr;
  int n = 0, k = 0, t = 0, degree = 0, max_domain = 1;
  std::uint64_t max_order = 1000;
  std::string input;
  std::vector<std::string> gens;

  auto *validate_cmd = app.add_subcommand("validate", "check the decorated-group constraints");
  validate_cmd->add_option("expr", expr, "group expression")->required();
  auto *series_cmd = app.add_subcommand("series", "Hilbert series in N[z] / prod(1 - z^d) form");
  series_cmd->add_option("expr", expr, "group expression")->required();
  auto *profile_cmd = app.add_subcommand("profile", "profile values 0..n");
  profile_cmd->add_option("expr", expr, "group expression")->required();
  profile_cmd->add_option("--n", n, "largest subset size")->required()->check(CLI::NonNegativeNumber);
  auto *dimension_cmd = app.add_subcommand("dimension", "algebraic dimension and growth rate");
  dimension_cmd->add_option("expr", expr, "group expression")->required();
  auto *verify_cmd = app.add_subcommand("verify", "compare the series with brute force on a truncation");
  verify_cmd->add_option("expr", expr, "group expression")->required();
  verify_cmd->add_option("--k", k, "copies per block")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", n, "largest subset size")->required()->check(CLI::NonNegativeNumber);
  auto *tower_cmd = app.add_subcommand("tower", "towers of the truncation, one per superblock");
  tower_cmd->add_option("expr", expr, "group expression")->required();
  tower_cmd->add_option("--k", k, "copies per block")->required()->check(CLI::PositiveNumber);
  tower_cmd->add_option("--t", t, "last tower level")->required()->check(CLI::NonNegativeNumber);
  auto *recognize_cmd = app.add_subcommand("recognize", "recover decorated data from a truncation");
  recognize_cmd->add_option("--input", input, "JSON group, or decorated group to truncate")
    ->required();
  recognize_cmd->add_option("--k", k, "copies per block")->required()->check(CLI::PositiveNumber);
  auto *blocks_cmd = app.add_subcommand("blocks", "all block systems of a finite group");
  blocks_cmd->add_option("gens", gens, "generators in cycle notation")->required();
  blocks_cmd->add_option("--degree", degree, "domain size (default: largest point + 1)");
  auto *enumerate_cmd = app.add_subcommand("enumerate", "decorated groups up to isomorphism");
  enumerate_cmd->add_option("--max-domain", max_domain, "largest |U|")->check(CLI::Range(0, 6));
  enumerate_cmd->add_option("--max-order", max_order, "largest |F|");
  auto *data_cmd = app.add_subcommand("data", "decorated group as JSON");
  data_cmd->add_option("expr", expr, "group expression")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return Syntax;
  }

  try {
    if (*validate_cmd) {
      auto const delta = parse_decorated(expr);
      auto const v = validate(delta);
      Json out;
      out["valid"] = v.empty();
      out["violations"] = to_json(v);
      emit(out);
      return v.empty() ? Ok : Invalid;
    }
    if (*series_cmd) {
      auto const delta = parse_decorated(expr);
      require_valid(delta);
      emit(to_json(hilbert_form(delta), hilbert_series(delta)));
    } else if (*profile_cmd) {
      auto const delta = parse_decorated(expr);
      require_valid(delta);
      Json out;
      out["profile"] = to_json(profile_values(delta, n));
      emit(out);
    } else if (*dimension_cmd) {
      auto const delta = parse_decorated(expr);
      require_valid(delta);
      Json out;
      out["algebraic_dimension"] = algebraic_dimension(delta);
      out["growth_rate"] = growth_rate(delta);
      emit(out);
    } else if (*verify_cmd) {
      auto const report = verify_profile(parse_decorated(expr), k, n);
      emit(to_json(report));
      return report.match ? Ok : Mismatch;
    } else if (*tower_cmd) {
      auto const delta = parse_decorated(expr);
      auto const trunc = truncate(delta, k);
      Json towers = Json::array();
      for (std::size_t j = 0; j < trunc.copies.size(); ++j) {
        if (trunc.copies[j].empty())
          continue;
        auto const sb = superblock(trunc, j);
        Json levels = Json::array();
        for (auto const &h : tower(sb.group, sb.blocks, t)) {
          Json level = group_to_json(h);
          level["order"] = to_json(h.order());
          levels.push_back(level);
        }
        Json e;
        e["block"] = j;
        e["tower"] = levels;
        towers.push_back(e);
      }
      Json out;
      out["towers"] = towers;
      emit(out);
    } else if (*recognize_cmd) {
      FiniteGroup group;
      emit(to_json(load_input(input, k, group)));
    } else if (*blocks_cmd) {
      FiniteGroup const g = FiniteGroup::from_cycles(gens, degree);
      Json out;
      out["degree"] = g.degree();
      out["block_systems"] = to_json(all_block_systems(g));
      emit(out);
    } else if (*enumerate_cmd) {
      auto const all = enumerate(max_domain, max_order);
      Json list = Json::array();
      for (auto const &d : all)
        list.push_back(to_json(d));
      Json out;
      out["count"] = all.size();
      out["groups"] = list;
      emit(out);
    } else if (*data_cmd) {
      emit(to_json(parse_decorated(expr)));
    }
    return Ok;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return Syntax;
  } catch (SizeLimitError const &e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return Resource;
  } catch (FalsifiedPropertyError const &e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return Mismatch;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return Invalid;
  }
}
