#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>

#include "gale/error.hpp"
#include "gale/io.hpp"
#include "gale/reductions.hpp"
#include "gale/service.hpp"
#include "gale/solver.hpp"
#include "gale/verifier.hpp"

namespace gale::cli {

namespace {

std::atomic<bool> stop_requested{false};

extern "C" void on_signal(int)
{
  stop_requested = true;
}

struct InputArgs
{
  std::string file;
  std::string preset_token;
  std::vector<std::string> play;
};

void add_input_options(CLI::App* cmd, InputArgs& in)
{
  cmd->add_option("file", in.file, "Facet file (text or JSON)");
  cmd->add_option("--preset", in.preset_token, "Preset token, e.g. boundary:5 or counterexample-disk");
  cmd->add_option("--play", in.play, "Apply a move before analysis, vertex names comma-separated (repeatable)");
}

std::vector<std::string> split_names(const std::string& s)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(item);
  return out;
}

NamedComplex load_input(const InputArgs& in)
{
  if (in.file.empty() == in.preset_token.empty())
    throw InputError("give exactly one input: a facet file or --preset");
  NamedComplex nc;
  if (!in.preset_token.empty()) {
    Preset p = preset(in.preset_token);
    nc = {p.name, p.complex};
  } else {
    nc = read_complex_file(in.file);
  }
  for (const auto& move : in.play) {
    const Face f = nc.complex.face(split_names(move));
    nc.complex = delete_cofaces(nc.complex, f);
  }
  return nc;
}

std::string default_cache_path()
{
  const char* env = std::getenv("GALE_CACHE");
  return env ? env : "";
}

void load_cache(TranspositionTable& table, const std::string& path, std::ostream& err, std::size_t* loaded = nullptr)
{
  if (path.empty() || !std::filesystem::exists(path))
    return;
  try {
    const std::size_t n = table.load(path);
    if (loaded)
      *loaded = n;
  } catch (const CacheError& e) {
    err << "warning: ignoring cache: " << e.what() << '\n';
  }
}

std::string describe_faces(const Complex& x, const std::vector<Face>& list)
{
  if (list.empty())
    return "none";
  std::string s;
  for (Face f : list)
    s += (s.empty() ? "" : " ") + x.describe(f);
  return s;
}

int cmd_solve(const InputArgs& in, bool moves, bool show_grundy, bool no_reduce, bool stats, int threads,
              const std::string& cache_file, std::ostream& out, std::ostream& err)
{
  const NamedComplex nc = load_input(in);
  SolveOptions options;
  options.reduce = !no_reduce;
  options.threads = threads;
  Solver solver(options);
  load_cache(solver.table(), cache_file, err);

  const SolveReport report = solver.solve(nc.complex);
  out << (report.value == PositionValue::Win ? "WIN (first player wins)" : "LOSS (second player wins)")
      << '\n';
  if (show_grundy)
    out << "grundy: " << report.grundy << '\n';
  if (moves)
    out << "winning moves: " << describe_faces(nc.complex, report.winning_moves) << '\n';
  if (stats) {
    out << "states explored: " << report.states_explored << '\n';
    out << "table entries: " << report.table_entries << '\n';
    out << "time: " << report.elapsed_ms << " ms\n";
  }
  if (!cache_file.empty())
    solver.table().save(cache_file);
  return kOk;
}

int cmd_reduce(const InputArgs& in, std::ostream& out)
{
  const NamedComplex nc = load_input(in);
  auto [reduced, trace] = reduce_fully(nc.complex);
  out << "# input\n" << format_facet_text(nc.complex);
  out << "# trace\n";
  if (trace.steps.empty())
    out << "# no binary star found\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "# step " << i + 1 << ": binary star (" << s.x_name << "," << s.y_name << "), facets "
        << s.facets_before << " -> " << s.facets_after << '\n';
  }
  out << "# result\n" << format_facet_text(reduced);
  return kOk;
}

int cmd_verify(const std::string& target, int max_n, int threads, const std::string& report_file,
               bool timing, std::ostream& out, std::ostream& err)
{
  VerifyOptions options;
  options.solver.threads = threads;
  Verifier verifier(options);

  VerificationReport report;
  auto check_range = [&](int lo, int hi) {
    if (max_n < lo || max_n > hi) {
      err << "error: --max-n for '" << target << "' must be in " << lo << ".." << hi << '\n';
      return false;
    }
    return true;
  };

  if (target == "gale") {
    if (!check_range(1, 6))
      return kUsage;
    report = verifier.gale(max_n);
  } else if (target == "complement") {
    if (!check_range(2, 6))
      return kUsage;
    report = verifier.complement_up_to(max_n);
  } else if (target == "sizes") {
    if (!check_range(3, 6))
      return kUsage;
    report.title = "opening sizes, n = 3.." + std::to_string(max_n);
    for (int n = 3; n <= max_n; ++n)
      report.append(verifier.opening_sizes(n));
  } else if (target == "paper") {
    report = verifier.all();
  } else {
    err << "error: unknown verify target '" << target << "' (gale|complement|sizes|paper)\n";
    return kUsage;
  }

  out << report.to_text(timing);
  if (!report_file.empty()) {
    std::ofstream os(report_file);
    os << report.to_json(timing).dump(2) << '\n';
  }
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_serve(const std::string& host, int port, const std::string& cache_file, const std::string& snapshot,
              int threads, std::ostream& out, std::ostream& err)
{
  SolveOptions options;
  options.threads = threads;
  GameService service(options);
  std::size_t loaded = 0;
  load_cache(service.solver().table(), cache_file, err, &loaded);
  service.set_cache_entries_loaded(loaded);

  httplib::Server server;
  service.bind(server);
  // port 0 picks a free port
  const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    err << "error: cannot bind " << host << ":" << port << '\n';
    return kBindFailure;
  }

  stop_requested = false;
  auto previous_int = std::signal(SIGINT, on_signal);
  auto previous_term = std::signal(SIGTERM, on_signal);
  std::thread watcher([&] {
    while (!stop_requested)
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
    server.stop();
  });

  out << "listening on http://" << host << ":" << bound << " (cache entries loaded: " << loaded << ")"
      << std::endl;
  server.listen_after_bind();
  stop_requested = true;
  watcher.join();
  std::signal(SIGINT, previous_int);
  std::signal(SIGTERM, previous_term);

  if (!cache_file.empty())
    service.solver().table().save(cache_file);
  if (!snapshot.empty())
    service.save_snapshot(snapshot);
  out << "stopped" << std::endl;
  return kOk;
}

}  // namespace

void request_stop()
{
  stop_requested = true;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Solver and verifier for the subset take-away game"};
  app.require_subcommand(1);

  InputArgs solve_in;
  bool moves = false, show_grundy = false, no_reduce = false, stats = false;
  int threads = 1;
  std::string cache_file = default_cache_path();
  auto* solve = app.add_subcommand("solve", "Classify a position as WIN or LOSS for the player to move");
  add_input_options(solve, solve_in);
  solve->add_flag("--moves", moves, "List winning moves");
  solve->add_flag("--grundy", show_grundy, "Print the Grundy value");
  solve->add_flag("--no-reduce", no_reduce, "Disable binary-star preprocessing");
  solve->add_flag("--stats", stats, "Print search statistics");
  solve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  solve->add_option("--cache-file", cache_file, "Solver cache to load and update (default $GALE_CACHE)");

  InputArgs reduce_in;
  auto* reduce = app.add_subcommand("reduce", "Strip binary stars and print the trace");
  add_input_options(reduce, reduce_in);

  std::string target;
  int max_n = 6;
  std::string report_file;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a batch of recorded checks");
  verify->add_option("target", target, "gale | complement | sizes | paper")->required();
  verify->add_option("--max-n", max_n, "Largest n to check");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--report", report_file, "Write the JSON report here");
  verify->add_flag("--no-timing", no_timing, "Omit timing lines");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string snapshot;
  auto* serve = app.add_subcommand("serve", "Run the game service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--cache-file", cache_file, "Solver cache loaded at start, saved at exit (default $GALE_CACHE)");
  serve->add_option("--snapshot", snapshot, "Write all sessions here at shutdown");
  serve->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed())
      return cmd_solve(solve_in, moves, show_grundy, no_reduce, stats, threads, cache_file, out, err);
    if (reduce->parsed())
      return cmd_reduce(reduce_in, out);
    if (verify->parsed())
      return cmd_verify(target, max_n, threads, report_file, !no_timing, out, err);
    if (serve->parsed())
      return cmd_serve(host, port, cache_file, snapshot, threads, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gale::cli
