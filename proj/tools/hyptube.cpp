#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyptube/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hyptube::Error(hyptube::ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tube radius and insulator checks for closed geodesics in hyperbolic 3-manifolds"};
  app.require_subcommand(1);

  hyptube::RunConfig config;
  std::string path;
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-word-length", config.max_word_length, "Word-length horizon")
        ->capture_default_str();
    cmd->add_option("--cutoff", config.cutoff, "Ortholength cutoff")->capture_default_str();
    cmd->add_option("--tol", config.tol, "Numerical tolerance")->capture_default_str();
    cmd->add_option("--budget", config.budget, "Triple budget")->capture_default_str();
    cmd->add_option("--seed", config.seed, "Seed of the raster cross-check")->capture_default_str();
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  for (const char* name : {"info", "spectrum", "tube", "insulator", "check"}) {
    CLI::App* cmd = app.add_subcommand(name);
    cmd->add_option("file", path, "Group file")->required()->check(CLI::ExistingFile);
    cmd->add_option_function<std::string>(
        "--geodesic", [&](const std::string& g) { config.geodesic = g; },
        "Named geodesic (default: the first)");
    add_common(cmd);
  }
  CLI::App* table = app.add_subcommand("lemma120", "Visual angle of a geodesic against distance");
  table->add_option("--from", config.from)->capture_default_str();
  table->add_option("--to", config.to)->capture_default_str();
  table->add_option("--step", config.step)->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hyptube::exit_code::kInputError;
  }
  config.format = format == "json" ? hyptube::OutputFormat::Json : hyptube::OutputFormat::Text;
  const std::string command = app.get_subcommands().front()->get_name();

  std::optional<hyptube::GroupFile> file;
  if (command != "lemma120") {
    try {
      file = hyptube::parse_group_file(read_file(path));
    } catch (const hyptube::Error& e) {
      std::cerr << path << ": " << e.what() << '\n';
      return hyptube::exit_code_for(e.kind());
    }
  }

  const hyptube::RunResult result = hyptube::run(command, file, config);
  (result.exit_code > hyptube::exit_code::kInconclusive ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
