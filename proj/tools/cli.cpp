#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "spext/enumeration.hpp"
#include "spext/families.hpp"
#include "spext/io.hpp"
#include "spext/random_graphs.hpp"
#include "spext/spectral.hpp"
#include "spext/transforms.hpp"

namespace spext::cli {

namespace {

struct Settings {
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::string format = "text";
  unsigned jobs = 0;

  std::string input;
  std::string output = "-";
  std::string trace_path;
  std::string counterexample_path = "counterexample.txt";

  Vertex u = -1;
  Vertex v = -1;
  std::vector<Vertex> moved;

  std::string family;
  int n = 0;
  std::string class_name;
  std::string enumerate_out = "graphs";
  std::string check = "extremal";
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

double default_tol() {
  if (const char* env = std::getenv("SPEXT_TOL")) {
    char* end = nullptr;
    double t = std::strtod(env, &end);
    if (end != env && *end == '\0' && t > 0.0) return t;
  }
  return kDefaultTol;
}

Graph load_graph(const std::string& path, Io& io) {
  if (path == "-") return read_edge_list(io.in);
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  try {
    return read_edge_list(f);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

// Writes to the named file, or to io.out for "-".
template <class Fn>
void emit(const std::string& path, Io& io, Fn&& write) {
  if (path == "-") {
    write(io.out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write(f);
}

// Human-readable reports go to stdout unless stdout carries a graph.
std::ostream& report_stream(const Settings& s, Io& io) { return s.output == "-" ? io.err : io.out; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_rho(const Settings& s, Io& io) {
  Graph g = load_graph(s.input, io);
  PerronResult p = spectral_radius(g, s.tol);
  if (s.format == "json") {
    io.out << nlohmann::ordered_json{{"rho", p.rho},
                             {"residual", p.residual},
                             {"iterations", p.iterations},
                             {"vector", p.vector}}
                  .dump()
           << '\n';
  } else {
    io.out << std::setprecision(15) << "rho " << p.rho << "\nresidual " << p.residual
           << "\niterations " << p.iterations << '\n';
  }
  return kOk;
}

int cmd_classify(const Settings& s, Io& io) {
  Graph g = load_graph(s.input, io);
  nlohmann::ordered_json j{{"n", g.order()},
                   {"m", g.size()},
                   {"connected", is_connected(g)},
                   {"cactus", is_cactus(g)},
                   {"unicyclic", is_unicyclic(g)},
                   {"odd_cycle", is_odd_cycle_graph(g)},
                   {"max_edge_cactus", is_max_edge_cactus(g)},
                   {"edge_maximal_cactus", is_edge_maximal_cactus(g)},
                   {"t", t_count(g)},
                   {"max_degree", max_degree(g)}};
  if (s.format == "json") {
    io.out << j.dump() << '\n';
    return kOk;
  }
  for (const char* key : {"n", "m", "connected", "cactus", "unicyclic", "odd_cycle",
                          "max_edge_cactus", "edge_maximal_cactus", "t", "max_degree"})
    io.out << key << ' ' << j[key].dump() << '\n';
  return kOk;
}

int cmd_switch(const Settings& s, Io& io) {
  Graph g = load_graph(s.input, io);
  Graph h = sigma_switch(g, s.u, s.v, s.moved);
  PerronResult before = spectral_radius(g, s.tol);
  PerronResult after = spectral_radius(h, s.tol);
  emit(s.output, io, [&](std::ostream& o) { write_edge_list(o, h); });
  bool hypothesis = before.vector[s.u] >= before.vector[s.v];
  auto& rep = report_stream(s, io);
  if (s.format == "json") {
    rep << nlohmann::ordered_json{{"rho_before", before.rho},
                          {"rho_after", after.rho},
                          {"x_u_ge_x_v", hypothesis},
                          {"order", to_string(compare_rho(after, before, s.tol))}}
               .dump()
        << '\n';
  } else {
    rep << std::setprecision(15) << "rho_before " << before.rho << "\nrho_after " << after.rho
        << "\nx_u_ge_x_v " << yes_no(hypothesis) << "\norder "
        << to_string(compare_rho(after, before, s.tol)) << '\n';
  }
  return kOk;
}

int finish_trace(const Settings& s, Io& io, const TransformTrace& t) {
  emit(s.output, io, [&](std::ostream& o) { write_edge_list(o, t.result); });
  if (!s.trace_path.empty())
    emit(s.trace_path, io, [&](std::ostream& o) { o << to_json(t).dump() << '\n'; });
  double rho0 = spectral_radius(t.initial, s.tol).rho;
  double rho1 = t.steps.empty() ? rho0 : t.steps.back().rho_after;
  auto& rep = report_stream(s, io);
  if (s.format == "json") {
    rep << nlohmann::ordered_json{{"steps", t.steps.size()}, {"rho_initial", rho0}, {"rho_final", rho1}}
               .dump()
        << '\n';
  } else {
    rep << std::setprecision(15) << "steps " << t.steps.size() << "\nrho_initial " << rho0
        << "\nrho_final " << rho1 << '\n';
  }
  return kOk;
}

int cmd_maximize(const Settings& s, Io& io) {
  AscentOptions opts;
  opts.tol = s.tol;
  return finish_trace(s, io, maximize_cactus(load_graph(s.input, io), opts));
}

int cmd_ascent(const Settings& s, Io& io) {
  AscentOptions opts;
  opts.tol = s.tol;
  return finish_trace(s, io, unicyclic_ascent(load_graph(s.input, io), opts));
}

int cmd_family(const Settings& s, Io& io) {
  Rng rng(s.seed);
  Graph g;
  if (s.family == "hn")
    g = extremal_cactus(s.n);
  else if (s.family == "k1nplus")
    g = star_plus_edge(s.n);
  else if (s.family == "star")
    g = star_graph(s.n);
  else if (s.family == "cycle")
    g = cycle_graph(s.n);
  else if (s.family == "path")
    g = path_graph(s.n);
  else if (s.family == "random-cactus")
    g = random_cactus(s.n, rng);
  else if (s.family == "random-unicyclic")
    g = random_unicyclic(s.n, rng);
  else
    throw PreconditionError("unknown family " + s.family);
  emit(s.output, io, [&](std::ostream& o) { write_edge_list(o, g); });
  return kOk;
}

GraphClass require_class(const std::string& name) {
  auto c = parse_graph_class(name);
  if (!c) throw PreconditionError("unknown class " + name);
  return *c;
}

EnumerationOptions enumeration_options(const Settings& s) {
  EnumerationOptions opts;
  opts.jobs = s.jobs;
  opts.tol = s.tol;
  return opts;
}

int cmd_enumerate(const Settings& s, Io& io) {
  GraphClass c = require_class(s.class_name);
  auto opts = enumeration_options(s);
  if (s.enumerate_out == "graphs") {
    auto graphs = enumerate_class(s.n, c, opts);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (i) io.out << '\n';
      write_edge_list(io.out, graphs[i]);
    }
    return kOk;
  }
  ClassReport r = class_report(s.n, c, opts);
  if (s.enumerate_out == "csv")
    io.out << kReportCsvHeader << '\n' << report_csv_row(r) << '\n';
  else if (s.enumerate_out == "json")
    io.out << to_json(r).dump() << '\n';
  else
    throw PreconditionError("unknown --out " + s.enumerate_out);
  return kOk;
}

int cmd_verify(const Settings& s, Io& io) {
  auto opts = enumeration_options(s);
  if (s.check == "odd-cycle-cactus") {
    verify_odd_cycle_implies_cactus(s.n, opts);
    io.out << "odd-cycle graphs are cacti for n=" << s.n << ": confirmed\n";
    return kOk;
  }
  if (s.check != "extremal") throw PreconditionError("unknown --check " + s.check);
  ClassReport r = verify_extremal(s.n, require_class(s.class_name), opts);
  if (s.format == "json")
    io.out << to_json(r).dump() << '\n';
  else
    io.out << std::setprecision(15) << to_string(r.class_name) << " n=" << r.n
           << ": unique maximizer confirmed, rho " << r.max_rho << " over " << r.iso_class_count
           << " classes\n";
  return kOk;
}

int write_counterexample(const Settings& s, Io& io, const std::string& what, const Graph& g) {
  io.err << "verification failed: " << what << '\n';
  try {
    emit(s.counterexample_path, io, [&](std::ostream& o) { write_edge_list(o, g); });
    io.err << "counterexample written to " << s.counterexample_path << '\n';
  } catch (const Error& e) {
    io.err << e.what() << '\n';
  }
  return kVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Io io{in, out, err};
  Settings s;
  s.tol = default_tol();

  CLI::App app{"Spectral radius ascent and extremal verification for cacti and unicyclic graphs",
               "spext"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", s.tol, "Eigensolver residual tolerance (env SPEXT_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "Seed for random families");
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", s.jobs, "Worker threads (0 = all cores)");

  auto* rho = app.add_subcommand("rho", "Spectral radius and Perron vector residual");
  rho->add_option("file", s.input, "Edge-list file, - for stdin")->required();

  auto* classify = app.add_subcommand("classify", "Class predicates, t(G) and max degree");
  classify->add_option("file", s.input)->required();

  auto* sw = app.add_subcommand("switch", "Move edges v-s to u-s for s in S");
  sw->add_option("file", s.input)->required();
  sw->add_option("--u", s.u)->required();
  sw->add_option("--v", s.v)->required();
  sw->add_option("--s", s.moved)->required()->delimiter(',');
  sw->add_option("--out", s.output, "Where to write the switched graph");

  auto* maximize = app.add_subcommand("maximize", "Ascend a connected cactus to the extremal cactus");
  maximize->add_option("file", s.input)->required();
  maximize->add_option("--trace", s.trace_path, "Write the JSON trace here");
  maximize->add_option("--out", s.output, "Where to write the final graph");

  auto* ascent = app.add_subcommand("ascent", "Ascend a unicyclic graph to the star plus one edge");
  ascent->add_option("file", s.input)->required();
  ascent->add_option("--trace", s.trace_path, "Write the JSON trace here");
  ascent->add_option("--out", s.output, "Where to write the final graph");

  auto* family = app.add_subcommand("family", "Write a named construction");
  family->add_option("name", s.family)
      ->required()
      ->check(CLI::IsMember(
          {"hn", "k1nplus", "star", "cycle", "path", "random-cactus", "random-unicyclic"}));
  family->add_option("--n", s.n)->required();
  family->add_option("--out", s.output);

  auto* enumerate = app.add_subcommand("enumerate", "List a class up to isomorphism, or report on it");
  enumerate->add_option("--n", s.n)->required();
  enumerate->add_option("--class", s.class_name)->required();
  enumerate->add_option("--out", s.enumerate_out, "graphs, csv or json")
      ->check(CLI::IsMember({"graphs", "csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Check an extremal theorem exhaustively");
  verify->add_option("--n", s.n)->required();
  verify->add_option("--class", s.class_name);
  verify->add_option("--check", s.check, "extremal or odd-cycle-cactus")
      ->check(CLI::IsMember({"extremal", "odd-cycle-cactus"}));
  verify->add_option("--counterexample", s.counterexample_path,
                     "Where to write a counterexample graph");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*rho) return cmd_rho(s, io);
    if (*classify) return cmd_classify(s, io);
    if (*sw) return cmd_switch(s, io);
    if (*maximize) return cmd_maximize(s, io);
    if (*ascent) return cmd_ascent(s, io);
    if (*family) return cmd_family(s, io);
    if (*enumerate) return cmd_enumerate(s, io);
    if (*verify) {
      if (s.check == "extremal" && s.class_name.empty())
        throw PreconditionError("verify --check extremal needs --class");
      return cmd_verify(s, io);
    }
  } catch (const VerificationFailure& e) {
    return write_counterexample(s, io, e.what(), e.counterexample());
  } catch (const TheoremViolation& e) {
    return write_counterexample(s, io, e.what(), e.before());
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kNoConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace spext::cli
