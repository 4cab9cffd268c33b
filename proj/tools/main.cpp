#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "commands.hpp"

namespace {

std::string read_input(const std::string& file) {
  if (file.empty() || file == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const bianchi::cli::CommandResult& result) {
  if (!result.payload.is_null()) std::cout << result.payload.dump() << '\n';
  for (const std::string& line : result.diagnostics) std::cerr << line << '\n';
  return result.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = bianchi::cli;
  CLI::App app{"Atkin-Lehner cosets of SL_2(O_K) and their image in SO_0(1,3)"};
  app.require_subcommand(1);

  std::int64_t m = 0;
  std::int64_t d = 0;
  std::string file;

  auto* vd = app.add_subcommand("vd", "Atkin-Lehner involution V_d");
  vd->add_option("--m", m, "squarefree m of K = Q(sqrt(-m))")->required();
  vd->add_option("--d", d, "squarefree divisor of |d_K|")->required();

  auto* index = app.add_subcommand("index", "index of SL_2(O_K) in its maximal discrete extension");
  index->add_option("--m", m)->required();

  auto* table = app.add_subcommand("table", "Cayley table of the coset labels");
  table->add_option("--m", m)->required();

  auto* classify = app.add_subcommand("classify", "membership and coset label of a matrix");
  auto* phi = app.add_subcommand("phi", "image of a matrix in SO_0(V, q)");
  auto* lift = app.add_subcommand("lift", "lift an orthogonal map back to the extended group");
  for (auto* sub : {classify, phi, lift}) {
    sub->add_option("--file", file, "JSON input (default: standard input)");
  }

  std::vector<std::int64_t> ms;
  long height = 2;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--m", ms, "field parameter, repeatable")->required();
  verify->add_option("--height", height, "enumeration height")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (vd->parsed()) return emit(cli::cmd_vd(m, d));
    if (index->parsed()) return emit(cli::cmd_index(m));
    if (table->parsed()) return emit(cli::cmd_table(m));
    if (classify->parsed()) return emit(cli::cmd_classify(read_input(file)));
    if (phi->parsed()) return emit(cli::cmd_phi(read_input(file)));
    if (lift->parsed()) return emit(cli::cmd_lift(read_input(file)));
    if (verify->parsed()) return emit(cli::cmd_verify(ms, height, seed));
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 1;
}
