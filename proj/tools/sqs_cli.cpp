#include "sqs_cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sqs/constructs.hpp"
#include "sqs/design_io.hpp"
#include "sqs/groups.hpp"
#include "sqs/kmsearch.hpp"
#include "sqs/perm_io.hpp"
#include "sqs/screen.hpp"

namespace sqs::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Design load_design(const std::string& path) {
  try {
    return parse_design(read_text(path));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

PermGroup load_group(const std::string& spec, const std::string& generator_file) {
  if (!generator_file.empty()) {
    auto gens = parse_generators(read_text(generator_file));
    if (gens.empty()) throw UsageError(generator_file + ": no generators");
    const std::size_t degree = gens.front().degree();
    return PermGroup(degree, std::move(gens));
  }
  return build_group(parse_group_spec(spec));
}

std::string images(const Permutation& p) {
  std::string s;
  for (Point x : p.images()) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner quadruple systems: construction, verification, search and screening", "sqs"};
  app.require_subcommand(1);

  std::string name, file, file2, output, group_spec, generators, out_dir;
  Point point = 0;
  std::uint32_t max_d = 10, max_q = 128;
  bool json = false;

  auto* construct = app.add_subcommand("construct", "Write a design: boolean:d, pgl:d, netto:q, netto3:q, ag3lines:d");
  construct->add_option("name", name, "Construction name")->required();
  construct->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check the Steiner property (SQS for k=4, triple system for k=3)");
  verify->add_option("file", file, "Design file")->required();

  auto* derive = app.add_subcommand("derive", "Derived design at a point");
  derive->add_option("file", file, "Design file")->required();
  derive->add_option("--point", point, "Point to derive at")->required();
  derive->add_option("-o,--output", output, "Output file (default stdout)");

  auto* flagtrans = app.add_subcommand("flagtrans", "Is the group flag-transitive on the design?");
  flagtrans->add_option("file", file, "Design file")->required();
  auto* group_opt = flagtrans->add_option("--group", group_spec, "Group spec, e.g. AGL(3,2) or PSL(2,7)");
  flagtrans->add_option("--generators", generators, "Generator file")->excludes(group_opt);

  auto* iso = app.add_subcommand("iso", "Are two designs isomorphic?");
  iso->add_option("file1", file, "First design file")->required();
  iso->add_option("file2", file2, "Second design file")->required();

  auto* search = app.add_subcommand("search", "Find all flag-transitive SQS invariant under a group");
  auto* search_group = search->add_option("--group", group_spec, "Group spec");
  search->add_option("--generators", generators, "Generator file")->excludes(search_group);
  search->add_option("--out-dir", out_dir, "Directory for design files");

  auto* screen = app.add_subcommand("screen", "Arithmetic screening of the 2-transitive group list");
  screen->add_option("--max-d", max_d, "Largest affine dimension (3..16)");
  screen->add_option("--max-q", max_q, "Largest field order (4..1024)");
  screen->add_flag("--json", json, "Machine-readable report");
  screen->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*construct) {
      emit(format_design(sqs::construct(parse_construction(name))), output, out);
      return kSuccess;
    }
    if (*verify) {
      auto d = load_design(file);
      SteinerVerdict verdict;
      if (d.k() == 4) {
        verdict = verify_sqs(d);
      } else if (d.k() == 3) {
        verdict = verify_sts(d);
      } else {
        throw UsageError("verify supports k = 3 or k = 4");
      }
      if (verdict) {
        out << "true\n";
        return kSuccess;
      }
      out << "false witness=";
      for (std::size_t i = 0; i < verdict.witness.size(); ++i) out << (i ? "," : "") << verdict.witness[i];
      out << " covered=" << verdict.witness_cover_count << "\n";
      return kFalse;
    }
    if (*derive) {
      auto d = load_design(file);
      if (point >= d.v()) throw UsageError("point " + std::to_string(point) + " out of range");
      emit(format_design(derived_design(d, point)), output, out);
      return kSuccess;
    }
    if (*flagtrans) {
      if (group_spec.empty() && generators.empty()) throw UsageError("flagtrans needs --group or --generators");
      auto d = load_design(file);
      auto g = load_group(group_spec, generators);
      if (g.degree() != d.v()) throw UsageError("group degree differs from the design's v");
      if (!preserves_design(g, d)) {
        out << "false (not an automorphism group)\n";
        return kFalse;
      }
      const bool ok = is_flag_transitive(d, g);
      out << (ok ? "true" : "false") << "\n";
      return ok ? kSuccess : kFalse;
    }
    if (*iso) {
      auto d1 = load_design(file);
      auto d2 = load_design(file2);
      if (auto map = are_isomorphic(d1, d2)) {
        out << "isomorphic\n" << images(*map) << "\n";
        return kSuccess;
      }
      out << "not isomorphic\n";
      return kFalse;
    }
    if (*search) {
      if (group_spec.empty() && generators.empty()) throw UsageError("search needs --group or --generators");
      auto g = load_group(group_spec, generators);
      auto designs = find_flag_transitive_sqs(g);
      if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < designs.size(); ++i) {
        if (out_dir.empty()) {
          out << format_design(designs[i]);
        } else {
          auto path = std::filesystem::path(out_dir) / ("design_" + std::to_string(i) + ".json");
          write_design_file(path, designs[i]);
          out << path.string() << "\n";
        }
      }
      out << "found=" << designs.size() << "\n";
      return designs.empty() ? kFalse : kSuccess;
    }
    if (*screen) {
      auto report = run_screen(max_d, max_q);
      emit(json ? format_report_json(report) : format_report_text(report), output, out);
      return kSuccess;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace sqs::cli
