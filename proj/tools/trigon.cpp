#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trigon/bounds.hpp"
#include "trigon/errors.hpp"
#include "trigon/faces.hpp"
#include "trigon/geometry.hpp"
#include "trigon/render.hpp"
#include "trigon/search.hpp"
#include "trigon/wiring.hpp"

namespace {

using nlohmann::json;
using namespace trigon;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_parameter, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(Errc::invalid_parameter, "cannot write " + path);
}

std::optional<long> env_precision() {
  const char* v = std::getenv("TRIGON_PRECISION");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long p = std::strtol(v, &end, 10);
  if (*end || p < 16 || p > kMaxPrecision)
    throw Error(Errc::invalid_parameter,
                "TRIGON_PRECISION must be an integer in 16.." +
                    std::to_string(kMaxPrecision));
  return p;
}

// ----- search -----

struct SearchArgs {
  int n = 0;
  long target = 0;
  long budget = 0;
  int max_columns = 0;
  bool has_target = false, has_budget = false, has_max_columns = false;
  bool exhaustive = false;
  int threads = 1;
  std::string out;
  bool as_json = false;
};

int run_search(const SearchArgs& a) {
  SearchConfig cfg;
  cfg.n = a.n;
  if (a.has_target) cfg.target = a.target;
  if (a.has_budget) cfg.budget = a.budget;
  if (a.has_max_columns) cfg.max_columns = a.max_columns;
  cfg.exhaustive = a.exhaustive;
  cfg.parallel_width = a.threads;

  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult r = depth_first_search(cfg);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();

  if (!a.out.empty() && r.witness)
    write_file(a.out, write_diagram(*r.witness));

  if (a.as_json) {
    json j{{"n", a.n},
           {"best", r.best_count},
           {"nodes", r.nodes_visited},
           {"complete", r.complete},
           {"time_ms", ms}};
    if (r.witness) j["witness"] = write_diagram(*r.witness);
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("best=%ld\n", r.best_count);
    std::printf("nodes=%llu\n", r.nodes_visited);
    std::printf("complete=%s\n", r.complete ? "true" : "false");
    std::printf("time_ms=%lld\n", static_cast<long long>(ms));
  }
  if (cfg.target && r.best_count < *cfg.target) return 1;
  return 0;
}

// ----- count -----

struct CountArgs {
  std::string in;
  bool as_json = false;
};

int run_count(const CountArgs& a) {
  const WiringDiagram d = read_diagram(read_file(a.in));
  if (is_complete(d)) {
    const FaceReport rep = count_triangles(d);
    if (a.as_json) {
      json j{{"complete", true},
             {"triangles", rep.triangle_count},
             {"used", rep.used.size()},
             {"unused", rep.unused.size()}};
      j["contact"] = json::array();
      for (int w = 1; w <= d.n(); ++w) j["contact"].push_back(rep.wire_contact[w]);
      std::cout << j.dump(2) << "\n";
    } else {
      std::printf("triangles=%ld used=%zu unused=%zu\n", rep.triangle_count,
                  rep.used.size(), rep.unused.size());
      std::string contact;
      for (int w = 1; w <= d.n(); ++w) {
        if (w > 1) contact += ',';
        contact += std::to_string(rep.wire_contact[w]);
      }
      std::printf("contact=%s\n", contact.c_str());
    }
  } else {
    const PartialReport rep = partial_report(d);
    if (a.as_json) {
      json j{{"complete", false},
             {"triangles", rep.closed_triangles},
             {"provably_unused", rep.provably_unused}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::printf("incomplete triangles=%ld unused=%ld\n",
                  rep.closed_triangles, rep.provably_unused);
    }
  }
  return 0;
}

// ----- bounds -----

struct BoundsArgs {
  int n = 0;
  bool has_n = false;
  std::string range;
  bool as_json = false;
};

std::string known_text(const BoundRecord& r) {
  if (r.exact && r.known_lower) return std::to_string(*r.known_lower);
  if (r.known_lower && r.known_upper)
    return std::to_string(*r.known_lower) + ".." +
           std::to_string(*r.known_upper);
  if (r.known_upper) return "<=" + std::to_string(*r.known_upper);
  return "?";
}

int run_bounds(const BoundsArgs& a) {
  int lo = a.n, hi = a.n;
  if (!a.range.empty()) {
    const auto dots = a.range.find("..");
    bool ok = dots != std::string::npos;
    if (ok) {
      try {
        lo = std::stoi(a.range.substr(0, dots));
        hi = std::stoi(a.range.substr(dots + 2));
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || lo > hi)
      throw Error(Errc::invalid_parameter,
                  "--range wants <a>..<b> with a <= b");
  }

  json rows = json::array();
  for (int n = lo; n <= hi; ++n) {
    std::vector<BoundRecord> recs;
    try {
      recs = known_values(n);
    } catch (const Error& e) {
      if (e.code() != Errc::no_data) throw;
    }
    for (const Setting setting : {Setting::affine, Setting::projective}) {
      const char* name = setting == Setting::affine ? "affine" : "projective";
      const long long formula = formula_upper(n, setting);
      const BoundRecord* pseudo = nullptr;
      const BoundRecord* lines = nullptr;
      for (const BoundRecord& r : recs) {
        if (r.setting != setting) continue;
        (r.kind == Kind::pseudolines ? pseudo : lines) = &r;
      }
      if (a.as_json) {
        json j{{"n", n}, {"setting", name}, {"formula", formula}};
        for (const BoundRecord* r : {pseudo, lines}) {
          if (!r) continue;
          json k;
          if (r->known_lower) k["lower"] = *r->known_lower;
          if (r->known_upper) k["upper"] = *r->known_upper;
          k["exact"] = r->exact;
          k["stretchable"] = r->stretchable;
          k["below_bound"] = r->below_bound;
          k["previously_known"] = r->previously_known;
          j[r->kind == Kind::pseudolines ? "pseudolines" : "lines"] = k;
        }
        rows.push_back(j);
      } else if (pseudo) {
        std::printf("n=%d %s formula=%lld pseudolines=%s lines=%s\n", n, name,
                    formula, known_text(*pseudo).c_str(),
                    known_text(*lines).c_str());
      } else {
        std::printf("n=%d %s formula=%lld\n", n, name, formula);
      }
    }
  }
  if (a.as_json) std::cout << rows.dump(2) << "\n";
  return 0;
}

// ----- duplicate -----

struct DuplicateArgs {
  std::string seed;
  int iterations = 0;
  std::string eps;
  long precision = 0;
  bool has_precision = false;
  std::string out;
  bool as_json = false;
};

int run_duplicate(const DuplicateArgs& a) {
  const Seed seed = a.seed == "hex7" ? Seed::hexagonal7 : Seed::simmons15;
  const long base = seed == Seed::hexagonal7 ? 6 : 14;

  mpq_class eps;
  if (!a.eps.empty()) {
    eps = parse_rational(a.eps);
  } else {
    // Matches iterate_duplication: small enough for every round.
    const long n_final = base << a.iterations;
    mpz_class cube;
    mpz_ui_pow_ui(cube.get_mpz_t(), static_cast<unsigned long>(n_final), 3);
    eps = mpq_class(mpz_class(1), cube);
  }

  LineArrangement arr =
      seed == Seed::hexagonal7 ? hexagonal7(eps) : simmons15(eps);
  long start_prec = kDefaultPrecision;
  if (const auto p = env_precision()) start_prec = *p;
  if (a.has_precision) start_prec = a.precision;
  if (start_prec < 16 || start_prec > kMaxPrecision)
    throw Error(Errc::invalid_parameter, "--precision must be 16.." +
                                             std::to_string(kMaxPrecision));
  arr.precision = std::max(arr.precision, start_prec);

  json rounds = json::array();
  const auto report = [&](const LineArrangement& x) {
    const FaceReport rep = count_triangles(to_wiring(x));
    if (a.as_json)
      rounds.push_back(json{{"n", x.lines.size()},
                            {"triangles", rep.triangle_count},
                            {"precision", x.precision}});
    else
      std::printf("n=%zu triangles=%ld precision=%ld\n", x.lines.size(),
                  rep.triangle_count, x.precision);
  };
  report(arr);
  for (int r = 0; r < a.iterations; ++r) {
    arr = duplicate(arr);
    report(arr);
  }

  if (!a.out.empty()) {
    write_file(a.out, write_arrangement(arr));
    write_file(a.out + ".wd", write_diagram(to_wiring(arr)));
  }
  if (a.as_json) {
    json j{{"seed", a.seed}, {"rounds", rounds}};
    if (!a.out.empty()) {
      j["arrangement_file"] = a.out;
      j["diagram_file"] = a.out + ".wd";
    }
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

// ----- render -----

struct RenderArgs {
  std::string in;
  std::string out;
  RenderOptions opt;
  bool no_labels = false;
};

bool looks_like_arrangement(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string first;
    row >> first;
    return first == "lines";
  }
  return false;
}

int run_render(RenderArgs a) {
  const std::string text = read_file(a.in);
  a.opt.label_wires = !a.no_labels;
  const std::string svg =
      looks_like_arrangement(text)
          ? render_arrangement_svg(read_arrangement(text), a.opt)
          : render_diagram_svg(read_diagram(text), a.opt);
  write_file(a.out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangles in arrangements of pseudolines: search, counting, "
               "certified constructions, bounds, rendering"};
  app.require_subcommand(1);

  SearchArgs sa;
  CLI::App* search = app.add_subcommand(
      "search", "Depth-first search for diagrams with many triangles");
  search->add_option("--n", sa.n, "Number of wires")->required();
  auto* opt_target =
      search->add_option("--target", sa.target, "Stop once this many triangles are found");
  auto* opt_budget = search->add_option(
      "--budget", sa.budget, "Prune prefixes with more provably unused segments");
  auto* opt_maxcol =
      search->add_option("--max-columns", sa.max_columns, "Column cap");
  search->add_flag("--exhaustive", sa.exhaustive,
                   "Visit everything; ignore early exits");
  search->add_option("--threads", sa.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", sa.out, "Write the best diagram here");
  search->add_flag("--json", sa.as_json, "JSON output");

  CountArgs ca;
  CLI::App* count =
      app.add_subcommand("count", "Count triangles in a diagram file");
  count->add_option("--in", ca.in, "Diagram file")->required();
  count->add_flag("--json", ca.as_json, "JSON output");

  BoundsArgs ba;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Upper bounds and known values");
  auto* opt_bn = bounds->add_option("--n", ba.n, "Single n");
  auto* opt_br = bounds->add_option("--range", ba.range, "Range a..b");
  opt_bn->excludes(opt_br);
  bounds->add_flag("--json", ba.as_json, "JSON output");

  DuplicateArgs da;
  CLI::App* dup = app.add_subcommand(
      "duplicate", "Grow a certified arrangement by repeated duplication");
  dup->add_option("--seed", da.seed, "Starting arrangement")
      ->required()
      ->check(CLI::IsMember({"hex7", "simmons15"}));
  dup->add_option("--iterations", da.iterations, "Number of doubling rounds")
      ->check(CLI::NonNegativeNumber);
  dup->add_option("--eps", da.eps,
                  "Anchor offset for the seed (rational, e.g. 1/13824)");
  auto* opt_prec =
      dup->add_option("--precision", da.precision, "Starting precision in bits");
  dup->add_option("--out", da.out,
                  "Arrangement file; the wiring diagram goes to <out>.wd");
  dup->add_flag("--json", da.as_json, "JSON output");

  RenderArgs ra;
  CLI::App* render =
      app.add_subcommand("render", "Draw a diagram or arrangement as SVG");
  render->add_option("--in", ra.in, "Diagram or arrangement file")->required();
  render->add_option("--out", ra.out, "SVG path")->required();
  render->add_option("--width", ra.opt.width, "Pixel width");
  render->add_option("--height", ra.opt.height, "Pixel height (0: auto)");
  render->add_option("--margin", ra.opt.margin, "Pixel margin");
  render->add_flag("--highlight", ra.opt.highlight_triangles,
                   "Shade triangle faces");
  render->add_flag("--no-labels", ra.no_labels, "Skip wire labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  sa.has_target = opt_target->count() > 0;
  sa.has_budget = opt_budget->count() > 0;
  sa.has_max_columns = opt_maxcol->count() > 0;
  ba.has_n = opt_bn->count() > 0;
  da.has_precision = opt_prec->count() > 0;
  if (bounds->parsed() && !ba.has_n && ba.range.empty()) {
    std::cerr << "error: bounds wants --n or --range\n";
    return 2;
  }

  try {
    if (search->parsed()) return run_search(sa);
    if (count->parsed()) return run_count(ca);
    if (bounds->parsed()) return run_bounds(ba);
    if (dup->parsed()) return run_duplicate(da);
    if (render->parsed()) return run_render(ra);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::precision_insufficient ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
