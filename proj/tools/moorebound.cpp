#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "moore/bounds.hpp"
#include "moore/check.hpp"
#include "moore/graph_io.hpp"
#include "moore/kautz.hpp"
#include "moore/moore_tree.hpp"
#include "moore/render.hpp"

namespace {

using moore::FormulaChoice;
using moore::OutputFormat;

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::plain},
    {"csv", OutputFormat::csv},
    {"json", OutputFormat::json},
    {"markdown", OutputFormat::markdown},
};

const std::map<std::string, FormulaChoice> kFormulas{
    {"corrected", FormulaChoice::corrected},
    {"old", FormulaChoice::old},
    {"both", FormulaChoice::both},
};

struct Options {
  int z = 0;
  int r = 0;
  int k = 1;
  int kmax = 20;
  FormulaChoice formula = FormulaChoice::corrected;
  bool levels = false;
  OutputFormat format = OutputFormat::plain;
  std::string tree_format = "mixed";
  std::string file;
  std::string out;
  bool expect_moore = false;
  bool normalize_digons = false;
};

int cmd_bound(const Options& opt) {
  moore::BoundReport rep = moore::bound_report({opt.z, opt.r, opt.k});
  moore::render_bound_report(std::cout, rep, opt.formula, opt.levels, opt.format);
  return 0;
}

int cmd_table(const Options& opt) {
  moore::render_table(std::cout, opt.z, opt.r, opt.kmax, opt.format);
  return 0;
}

int cmd_compare(const Options& opt) {
  return moore::run_compare(std::cout, opt.kmax, opt.format);
}

int cmd_tree(const Options& opt) {
  moore::MooreTree tree = moore::moore_tree({opt.z, opt.r, opt.k});
  if (opt.tree_format == "dot")
    moore::write_dot(std::cout, tree.graph);
  else
    moore::write_mixed(std::cout, tree.graph);
  return 0;
}

int cmd_check(const Options& opt) {
  moore::MixedGraph g = moore::read_mixed_file(opt.file);
  if (opt.normalize_digons) g = moore::digons_to_undirected(g);
  moore::CheckReport rep = moore::check_moore(g);
  moore::render_check_report(std::cout, rep, opt.format);
  if (opt.expect_moore && !rep.attains_bound) {
    std::cerr << "graph does not attain the bound\n";
    return 1;
  }
  return 0;
}

int cmd_kautz(const Options& opt) {
  moore::MixedGraph g = moore::kautz_mixed(opt.z);
  if (opt.out.empty()) {
    moore::write_mixed(std::cout, g);
    return 0;
  }
  std::ofstream fh(opt.out);
  if (!fh) {
    std::cerr << "error: cannot write '" << opt.out << "'\n";
    return 2;
  }
  moore::write_mixed(fh, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moore bounds for mixed graphs: exact values, trees, and verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  CLI::App* bound = app.add_subcommand("bound", "bound for one (z, r, k)");
  bound->add_option("--z", opt.z, "max directed out-degree")->required()
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--r", opt.r, "max undirected degree")->required()
      ->check(CLI::NonNegativeNumber);
  bound->add_option("--k", opt.k, "diameter")->required()
      ->check(CLI::PositiveNumber);
  bound->add_option("--formula", opt.formula, "which formula to print")
      ->transform(CLI::CheckedTransformer(kFormulas, CLI::ignore_case));
  bound->add_flag("--levels", opt.levels, "include the distance-partition counts");
  add_format(bound);

  CLI::App* table = app.add_subcommand("table", "bounds for k = 1..kmax");
  table->add_option("--z", opt.z)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--r", opt.r)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--kmax", opt.kmax)->required()->check(CLI::PositiveNumber);
  add_format(table);

  CLI::App* compare = app.add_subcommand(
      "compare", "emit the (1,1) and (2,1) comparison series and verify them");
  compare->add_option("--kmax", opt.kmax)->check(CLI::PositiveNumber);
  add_format(compare);

  CLI::App* tree = app.add_subcommand("tree", "emit the labelled maximal tree");
  tree->add_option("--z", opt.z)->required()->check(CLI::NonNegativeNumber);
  tree->add_option("--r", opt.r)->required()->check(CLI::NonNegativeNumber);
  tree->add_option("--k", opt.k)->required()->check(CLI::PositiveNumber);
  tree->add_option("--format", opt.tree_format, "dot or mixed")
      ->check(CLI::IsMember({"dot", "mixed"}));

  CLI::App* check = app.add_subcommand("check", "verify a graph file against the bound");
  check->add_option("--file", opt.file, "graph in 'mixed' format")->required();
  check->add_flag("--expect-moore", opt.expect_moore,
                  "exit 0 only if the graph attains the bound");
  check->add_flag("--normalize-digons", opt.normalize_digons,
                  "convert opposite arc pairs to undirected edges first");
  add_format(check);

  CLI::App* kautz = app.add_subcommand("kautz", "generate the mixed Kautz graph");
  kautz->add_option("--z", opt.z)->required()->check(CLI::PositiveNumber);
  kautz->add_option("--out", opt.out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(opt);
    if (table->parsed()) return cmd_table(opt);
    if (compare->parsed()) return cmd_compare(opt);
    if (tree->parsed()) return cmd_tree(opt);
    if (check->parsed()) return cmd_check(opt);
    if (kautz->parsed()) return cmd_kautz(opt);
  } catch (const moore::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
