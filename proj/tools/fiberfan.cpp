#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "fiberfan/commands.hpp"
#include "fiberfan/error.hpp"
#include "fiberfan/parallel.hpp"

namespace {

std::size_t env_cap() {
  const char* v = std::getenv("FIBERFAN_CAP");
  if (v == nullptr || *v == '\0') return 1000000;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw fiberfan::Error(fiberfan::ErrorCode::ParseError, "FIBERFAN_CAP must be a positive integer");
  }
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber fans, strings and secondary fans with exact arithmetic"};
  app.set_version_flag("--version", "fiberfan 0.1.0");

  std::string command, input, out, dot;
  std::string format = "json";
  std::size_t jobs = 1;
  std::optional<std::size_t> cap;
  fiberfan::Options opt;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(fiberfan::command_names()));
  app.add_option("input", input, "Input JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("--witness", opt.witness, "Covector on the kernel, e.g. \"1,-1/2\"");
  app.add_option("--point", opt.point, "Point of the image polytope");
  app.add_option("--faces", opt.faces, "Faces as label lists, e.g. \"0 1;2 3\"");
  app.add_option("--delta", opt.delta, "Cones by name or ray indices, e.g. \"s12,[0]\"");
  app.add_option("--sublattice", opt.sublattice, "Sublattice basis, e.g. \"(0,1)\"");
  app.add_option("--kind", opt.kind, "What to enumerate")
      ->check(CLI::IsMember({"strings", "costrings", "virtual-cells", "virtual-cones", "triangulations"}));
  app.add_flag("--all-vertices", opt.all_vertices, "Only triangulations using every point");
  app.add_option("--cap", cap, "Enumeration node cap (default: FIBERFAN_CAP or 1000000)")
      ->check(CLI::PositiveNumber);
  app.add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "dot"}));
  app.add_option("-o,--out", out, "Report file (default: stdout)");
  app.add_option("--dot", dot, "Also write the command's graph as DOT");

  CLI11_PARSE(app, argc, argv);

  try {
    opt.cap = cap ? *cap : env_cap();
    fiberfan::set_jobs(jobs);
    fiberfan::Input in = fiberfan::parse_input(input);
    fiberfan::CommandResult r = fiberfan::run_command(command, in, opt);

    if (format == "dot" || !dot.empty()) {
      if (!r.graph) throw fiberfan::Error(fiberfan::ErrorCode::SchemaError, command + " produces no graph");
    }
    const std::string dot_text = r.graph ? fiberfan::emit_dot(*r.graph, in.name + " " + command, r.graph_labels) : "";
    const std::string main_text = format == "dot" ? dot_text : fiberfan::emit_json(r.report);
    if (!write_text(out, main_text)) throw fiberfan::Error(fiberfan::ErrorCode::ParseError, "cannot write " + out);
    if (!dot.empty() && !write_text(dot, dot_text)) {
      throw fiberfan::Error(fiberfan::ErrorCode::ParseError, "cannot write " + dot);
    }
    return r.ok ? 0 : 2;
  } catch (const fiberfan::Error& e) {
    std::cerr << "fiberfan: " << fiberfan::error_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fiberfan: " << e.what() << "\n";
    return 1;
  }
}
