#include <iostream>

#include "CLI11.hpp"
#include "vcwl/cli.hpp"

int main(int argc, char** argv) {
  vcwl::JobSpec spec;
  CLI::App app{"Componentwise linearity of ideals in Veronese rings"};
  app.footer("Environment:\n  VCWL_CACHE_DIR   cache directory (default $XDG_CACHE_HOME/vcwl or ~/.cache/vcwl)\n"
             "Exit status: 0 definitive result, 2 inconclusive at the chosen bounds, 1 error.");
  app.add_option("command", spec.command, "present | hilbert | gin | contract | betti | cwl-check | koszul-table | "
                                          "proper-seq | prop-checks")
      ->required()
      ->check(CLI::IsMember(vcwl::commands()));
  app.add_option("-n", spec.n, "number of variables of R")->required()->check(CLI::Range(1, 8));
  app.add_option("-c", spec.c, "Veronese degree")->required()->check(CLI::Range(1, 8));
  std::string ideal;
  std::string file;
  auto* ideal_opt = app.add_option("--ideal", ideal, "generators, comma-separated, all in x or all in t");
  auto* file_opt = app.add_option("--ideal-file", file, "file holding the generators")->check(CLI::ExistingFile);
  ideal_opt->excludes(file_opt);
  app.add_option("--imax", spec.imax, "largest homological degree")->check(CLI::NonNegativeNumber);
  int jmax = -1;
  auto* jmax_opt = app.add_option("--jmax", jmax, "largest internal degree (default from a regularity bound)")
                       ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", spec.seed, "seed for generic choices");
  app.add_option("--bound", spec.bound, "coefficient bound B for random draws")->check(CLI::PositiveNumber);
  std::string format = "table";
  app.add_option("--format", format, "table | records")->check(CLI::IsMember({"table", "records"}));
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "neither read nor write the on-disk cache");
  CLI11_PARSE(app, argc, argv);

  if (*ideal_opt) spec.ideal_text = ideal;
  if (*file_opt) spec.ideal_file = file;
  if (*jmax_opt) spec.jmax = jmax;
  spec.format = format == "records" ? vcwl::OutputFormat::Records : vcwl::OutputFormat::Table;
  spec.use_cache = !no_cache;
  return vcwl::run_command(spec, std::cout, std::cerr);
}
