#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "irrtri/audit.hpp"
#include "irrtri/contraction.hpp"
#include "irrtri/enumeration.hpp"
#include "irrtri/generators.hpp"
#include "irrtri/io.hpp"

namespace irrtri::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input = "-";
  std::string policy = "first";
  std::uint64_t seed = 0;
  std::string generator;
  int g = 0;
  int b = 1;
  std::uint64_t diagonal_seed = 0;
  int refine_steps = 0;
  int rows = 3;
  int cols = 3;
  std::string surface;
  int max_vertices = 8;
  bool irreducible = false;
  int jobs = 1;
  int time_budget = 0;
  int conn_samples = 0;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::malformed_input, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_triangulation:
    case ErrorCode::not_irreducible:
    case ErrorCode::no_such_edge:
    case ErrorCode::linking_edge:
      return kFailed;
    default:
      return kUsage;
  }
}

Triangulation generate(const Options& o, std::ostream& err) {
  Triangulation t;
  if (o.generator == "figure1") {
    err << "diagonal-seed " << o.diagonal_seed << "\n";
    t = figure1({o.g, o.b, o.diagonal_seed});
  } else if (o.generator == "octahedron") {
    t = octahedron();
  } else if (o.generator == "icosahedron") {
    t = icosahedron();
  } else if (o.generator == "grid-torus") {
    t = grid_torus(o.rows, o.cols);
  } else if (o.generator == "grid-klein") {
    t = grid_klein_bottle(o.rows, o.cols);
  } else {
    t = canonical_surface(parse_surface_name(o.generator));
  }
  if (o.refine_steps > 0) {
    err << "seed " << o.seed << "\n";
    t = refine(t, o.refine_steps, o.seed);
  }
  return t;
}

int dispatch(const std::string& command, const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (command == "generate") {
    out << write_tri(generate(o, err));
    return kOk;
  }
  if (command == "enumerate") {
    EnumSpec spec;
    spec.target = named_surface(o.surface);
    spec.max_vertices = o.max_vertices;
    spec.irreducible_only = o.irreducible;
    spec.time_budget = std::chrono::seconds(o.time_budget);
    auto catalog = enumerate(spec, o.jobs);
    out << write_catalog(catalog);
    err << "classes " << catalog.entries.size() << "\n";
    err << "complete " << (catalog.complete ? "true" : "false") << "\n";
    return kOk;
  }

  const std::string text = slurp(o.input, in);
  if (command == "validate") {
    auto report = validate(parse_tri(text));
    if (report.valid()) {
      out << "valid\n";
      return kOk;
    }
    out << report.summary() << "\n";
    return kFailed;
  }

  const Triangulation t = read_tri(text);
  if (command == "classify") {
    out << classify_surface(t).to_string() << "\n";
  } else if (command == "canon") {
    out << canonical_form(t) << "\n";
  } else if (command == "edges") {
    for (const auto& rec : classify_edges(t)) {
      out << rec.endpoints.u << " " << rec.endpoints.v << " "
          << (rec.kind == EdgeKind::boundary ? "boundary" : "interior") << (rec.linking ? " linking" : "")
          << "\n";
    }
  } else if (command == "contractible") {
    for (Edge e : contractible_edges(t)) out << e.u << " " << e.v << "\n";
  } else if (command == "reduce") {
    ReductionPolicy policy = ReductionPolicy::first();
    if (o.policy == "random") {
      policy = ReductionPolicy::random(o.seed);
    }
    err << "seed " << o.seed << "\n";
    auto reduction = reduce_to_irreducible(t, policy);
    out << write_tri(reduction.result);
    err << write_trace(reduction.trace);
  } else if (command == "audit") {
    auto report = audit(t);
    out << write_report(report);
    bool ok = report.passed();
    if (o.conn_samples > 0) {
      err << "seed " << o.seed << "\n";
      auto conn = check_4connectivity_bounds(t, o.conn_samples, o.seed);
      err << write_report(conn);
      ok = ok && conn.passed();
    }
    return ok ? kOk : kFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangulated surfaces: validation, contraction, generation, enumeration and bound audits"};
  app.name("irrtri");
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) { sub->add_option("file", o.input, "TriFile path, '-' for stdin")->required(); };

  input(app.add_subcommand("validate", "check the surface axioms"));
  input(app.add_subcommand("classify", "print 'orientable|nonorientable g b chi'"));
  input(app.add_subcommand("edges", "list edges with kind and linking flag"));
  input(app.add_subcommand("contractible", "list contractible edges"));
  input(app.add_subcommand("canon", "print the canonical form"));

  auto* reduce = app.add_subcommand("reduce", "contract edges until irreducible");
  input(reduce);
  reduce->add_option("--policy", o.policy, "first or random")->check(CLI::IsMember({"first", "random"}));
  reduce->add_option("--seed", o.seed, "seed for the random policy");

  auto* gen = app.add_subcommand("generate", "print a generated triangulation");
  gen->add_option("name", o.generator,
                  "figure1, sphere_min, disk_min, projective_min, torus_k7, octahedron, icosahedron, grid-torus, grid-klein")
      ->required();
  gen->add_option("--g", o.g, "Euler genus (figure1)");
  gen->add_option("--b", o.b, "boundary components (figure1)");
  gen->add_option("--diagonal-seed", o.diagonal_seed, "diagonal choice (figure1)");
  gen->add_option("--refine-steps", o.refine_steps, "random refinement steps")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", o.seed, "refinement seed");
  gen->add_option("--rows", o.rows, "grid rows");
  gen->add_option("--cols", o.cols, "grid columns");

  auto* en = app.add_subcommand("enumerate", "print a catalog of triangulations");
  en->add_option("--surface", o.surface, "sphere, disk, projective, torus, klein, annulus, mobius, pants")->required();
  en->add_option("--max-vertices", o.max_vertices, "vertex cap");
  en->add_flag("--irreducible", o.irreducible, "keep irreducible triangulations only");
  en->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  en->add_option("--time-budget", o.time_budget, "seconds, 0 = unlimited")->check(CLI::NonNegativeNumber);

  auto* au = app.add_subcommand("audit", "run the bound checks on an irreducible triangulation");
  input(au);
  au->add_option("--conn-samples", o.conn_samples, "also run the 4-connectivity checks with this many samples");
  au->add_option("--seed", o.seed, "sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, o, in, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace irrtri::cli
