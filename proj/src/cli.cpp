#include "secreg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "secreg/paperref.hpp"
#include "secreg/parser.hpp"

namespace secreg {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::uint32_t characteristic = kDefaultPrime;
  bool char_given = false;
  std::uint64_t seed = 0;
  std::string format;  // empty: from -o extension, else text
  std::string output;
  bool quiet = false;
};

// Surface tag written by construct after the ring header, so secant and
// verify know what the ideal is:  "# surface type2 a=3 b=5 f=<form>".
const char* kTagPrefix = "# surface ";

std::string surface_tag(const SurfaceSpec& s) {
  std::string t = kTagPrefix;
  switch (s.kind) {
    case SurfaceKind::TypeI: return t + "type1 d=" + std::to_string(s.d);
    case SurfaceKind::TypeII:
      return t + "type2 a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) + " f=" + s.f;
    case SurfaceKind::Scroll: {
      t += "scroll ";
      for (std::size_t i = 0; i < s.scroll.size(); ++i) t += (i ? "," : "") + std::to_string(s.scroll[i]);
      return t;
    }
  }
  return t;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

struct Loaded {
  Ideal I;
  std::optional<Surface> surface;  // rebuilt from the tag, same ideal
};

std::optional<Surface> surface_from_tag(const std::string& line, std::uint32_t p) {
  std::istringstream in(line.substr(std::string(kTagPrefix).size()));
  std::string kind;
  in >> kind;
  std::map<std::string, std::string> kv;
  std::string rest;
  if (kind == "scroll") {
    in >> rest;
    Surface S;
    S.spec.kind = SurfaceKind::Scroll;
    S.spec.scroll = parse_int_list(rest);
    S.I = scroll_ideal(S.spec.scroll, p);
    return S;
  }
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("bad surface tag '" + line + "'", 0);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  try {
    if (kind == "type1") return type1_surface(std::stoi(kv.at("d")), p);
    if (kind == "type2") return type2_surface(std::stoi(kv.at("a")), std::stoi(kv.at("b")), kv.at("f"), p);
  } catch (const std::out_of_range&) {
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("bad surface tag '" + line + "'", 0);
}

Loaded load(const std::string& path, const Globals& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::istringstream is(text);
  Loaded L{read_ideal(is), std::nullopt};
  std::uint32_t p = L.I.ring()->characteristic();
  if (g.char_given && g.characteristic != p)
    throw UsageError("--char " + std::to_string(g.characteristic) + " does not match the file's characteristic " +
                     std::to_string(p));
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(kTagPrefix, 0) != 0) continue;
    L.surface = surface_from_tag(line, p);
    // Work in the surface's ring so the extremal plane lives in the same ring.
    const RingPtr& R = L.surface->I.ring();
    std::vector<Poly> gens;
    for (const auto& f : L.I.generators()) gens.push_back(f.in_ring(R));
    L.I = Ideal(R, gens);
    if (!ideal_equal(L.surface->I, L.I)) throw PreconditionError("surface tag does not describe the ideal in " + path);
    L.surface->I = L.I;
    break;
  }
  return L;
}

const Surface& require_surface(const Loaded& L, const std::string& cmd) {
  if (!L.surface || L.surface->spec.kind == SurfaceKind::Scroll)
    throw UsageError(cmd + " needs a type1/type2 ideal file written by 'secreg construct'");
  return *L.surface;
}

Format output_format(const Globals& g) {
  if (!g.format.empty()) return parse_format(g.format);
  auto ends = [&](const std::string& ext) {
    return g.output.size() >= ext.size() && g.output.compare(g.output.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends(".json")) return Format::Json;
  if (ends(".csv")) return Format::Csv;
  return Format::Text;
}

void emit(const std::string& data, const Globals& g, std::ostream& out) {
  if (g.output.empty() || g.output == "-") {
    out << data;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + g.output);
  f << data;
  if (!f) throw ComputationError("write failed: " + g.output);
}

std::string render_report(const VerificationReport& r, Format f) {
  switch (f) {
    case Format::Json: return dump(report_json(r));
    case Format::Csv: return report_csv(r);
    case Format::Text: return report_text(r);
  }
  return {};
}

void check_char_supported(std::uint32_t p) {
  if (p == 0)
    throw ComputationError("characteristic 0 is not supported by the command line tools; use a prime such as 32003");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"secreg: surfaces of maximal sectional regularity"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::optional<std::uint64_t> seed_opt;
  std::uint32_t ch = kDefaultPrime;
  auto* char_opt = app.add_option("--char", ch, "field characteristic (prime; default 32003)");
  app.add_option("--seed", seed_opt, "seed for every random choice (default 0, or $SECREG_SEED)");
  app.add_option("--format", g.format, "text, json or csv (default text, or from the -o extension)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", g.output, "output file (default stdout)");
  app.add_flag("-q,--quiet", g.quiet, "no progress lines");

  // construct
  auto* cmd_construct = app.add_subcommand("construct", "build a surface ideal and write it as an ideal file");
  std::optional<int> t1_d;
  bool t2 = false, random_f = false;
  int a = 0, b = 0;
  std::string f, scroll, example;
  auto* o_t1 = cmd_construct->add_option("--type1", t1_d, "type I surface of degree d");
  auto* o_t2 = cmd_construct->add_flag("--type2", t2, "type II surface from -a, -b and --f");
  cmd_construct->add_option("-a", a, "scroll parameter a");
  cmd_construct->add_option("-b", b, "scroll parameter b");
  cmd_construct->add_option("--f", f, "binary form of degree b in s, t");
  cmd_construct->add_flag("--random-f", random_f, "draw a generic f from the seed");
  auto* o_sc = cmd_construct->add_option("--scroll", scroll, "rational normal scroll, e.g. 1,1,1");
  auto* o_ex = cmd_construct->add_option("--example", example, "a table example: t1-8 t1-9 t1-10 7.3 7.4(1) ...");
  o_t1->excludes(o_t2)->excludes(o_sc)->excludes(o_ex);
  o_t2->excludes(o_sc)->excludes(o_ex);
  o_sc->excludes(o_ex);

  std::string file;
  auto* betti = app.add_subcommand("betti", "graded Betti table of S/I");
  betti->add_option("file", file, "ideal file")->required();

  auto* coh = app.add_subcommand("cohomology", "h^i(I_X(j)) table, e and N");
  coh->add_option("file", file, "ideal file")->required();
  std::optional<int> lo, hi;
  coh->add_option("--lo", lo, "first twist (default -(d+2))");
  coh->add_option("--hi", hi, "last twist (default d-r+4)");

  auto* inv = app.add_subcommand("invariants", "reg, sreg, depth, tau, e, N, sectional genus, classifier case");
  inv->add_option("file", file, "ideal file")->required();

  int lines = 20;
  auto* sec = app.add_subcommand("secant", "sample extremal secant lines");
  sec->add_option("file", file, "ideal file written by construct")->required();
  sec->add_option("--lines", lines, "number of lines")->check(CLI::PositiveNumber);

  bool no_exact = false;
  auto* ver = app.add_subcommand("verify", "check every applicable closed-form claim on one surface");
  ver->add_option("file", file, "ideal file written by construct")->required();
  ver->add_option("--lines", lines, "number of secant lines")->check(CLI::PositiveNumber);
  ver->add_flag("--no-exactness", no_exact, "skip the graded-rank exactness check");

  auto* demo = app.add_subcommand("demo-paper", "verify all table examples and the classifier");

  std::vector<std::string> argv_s{"secreg"};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_s) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "secreg: " << e.what() << "\n";
    return kExitUsage;
  }

  auto progress = [&](const std::string& m) {
    if (!g.quiet) err << "[secreg] " << m << std::endl;
  };

  try {
    g.characteristic = ch;
    g.char_given = char_opt->count() > 0;
    if (seed_opt) {
      g.seed = *seed_opt;
    } else if (const char* env = std::getenv("SECREG_SEED")) {
      try {
        std::size_t used = 0;
        g.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("SECREG_SEED is not an unsigned integer: '") + env + "'");
      }
    }
    Format fmt = output_format(g);

    if (cmd_construct->parsed()) {
      check_char_supported(g.characteristic);
      Surface S;
      if (t1_d) {
        S = type1_surface(*t1_d, g.characteristic);
      } else if (t2) {
        if (random_f == !f.empty()) throw UsageError("--type2 needs exactly one of --f and --random-f");
        Poly form = random_f ? random_binary_form(b, g.seed, g.characteristic)
                             : parse_poly(f, binary_ring(g.characteristic));
        S = type2_surface(a, b, form);
      } else if (!scroll.empty()) {
        S.spec.kind = SurfaceKind::Scroll;
        S.spec.scroll = parse_int_list(scroll);
        S.I = scroll_ideal(S.spec.scroll, g.characteristic);
      } else if (!example.empty()) {
        S = construct(paper_example(example), g.characteristic);
      } else {
        throw UsageError("construct needs one of --type1, --type2, --scroll, --example");
      }
      std::ostringstream o;
      write_ideal(o, S.I);
      std::string text = o.str();
      auto nl = text.find('\n');
      text.insert(nl + 1, surface_tag(S.spec) + "\n");
      emit(text, g, out);
      return kExitOk;
    }

    if (demo->parsed()) {
      check_char_supported(g.characteristic);
      if (g.characteristic != kDefaultPrime)
        throw UsageError("demo-paper runs over the default field only (--char 32003)");
      VerificationReport r = demo_paper(g.seed, progress);
      emit(render_report(r, fmt), g, out);
      if (!r.passed()) {
        for (const auto& c : r.claims)
          if (c.verdict == Verdict::Fail) err << "secreg: failed claim " << c.claim << "\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    Loaded L = load(file, g);
    const Ideal& I = L.I;

    if (betti->parsed()) {
      progress("resolving");
      BettiTable B = betti_numbers(I);
      std::string s = fmt == Format::Json ? dump(betti_json(B)) : fmt == Format::Csv ? betti_csv(B) : betti_text(B);
      emit(s, g, out);
      return kExitOk;
    }

    if (coh->parsed()) {
      HilbertSeries H = hilbert_series(I);
      if (H.dim != 3) throw PreconditionError("cohomology needs a surface (projective dimension 2)");
      int r = I.ring()->nvars() - 1;
      auto win = default_window(H.degree(), r);
      int l = lo.value_or(win.first), h = hi.value_or(win.second);
      if (l > h) throw UsageError("--lo must not exceed --hi");
      progress("deficiency modules");
      CohomologyTable T = sheaf_cohomology_table(I, l, h, g.seed);
      std::string s = fmt == Format::Json  ? dump(cohomology_json(T))
                      : fmt == Format::Csv ? cohomology_csv(T)
                                           : cohomology_text(T);
      emit(s, g, out);
      return kExitOk;
    }

    if (inv->parsed()) {
      std::optional<Ideal> Y;
      if (L.surface && L.surface->L) Y = union_with_plane(I, *L.surface->L);
      progress("invariants");
      InvariantReport rep = compute_invariants(I, Y, g.seed);
      std::string s = fmt == Format::Json  ? dump(invariants_json(rep))
                      : fmt == Format::Csv ? invariants_csv(rep)
                                           : invariants_text(rep);
      emit(s, g, out);
      return kExitOk;
    }

    if (sec->parsed()) {
      const Surface& S = require_surface(L, "secant");
      progress("sampling " + std::to_string(lines) + " lines");
      auto samples = sample_secant_lines(S.spec, I, lines, g.seed);
      PrimeField F = field_of<PrimeField>(*I.ring());
      PluckerSpan span = samples.size() >= 2 ? plucker_span(samples, F) : PluckerSpan{};
      SecantReport rep = secant_report(samples, span, g.seed);
      std::string s = fmt == Format::Json  ? dump(secant_json(rep))
                      : fmt == Format::Csv ? secant_csv(rep)
                                           : secant_text(rep);
      emit(s, g, out);
      return kExitOk;
    }

    if (ver->parsed()) {
      const Surface& S = require_surface(L, "verify");
      ArtifactOptions opt;
      opt.seed = g.seed;
      opt.lines = lines;
      opt.exactness = !no_exact;
      opt.progress = progress;
      VerificationReport r = verify_surface(S.spec, collect_artifacts(S, opt));
      emit(render_report(r, fmt), g, out);
      if (!r.passed()) {
        for (const auto& c : r.claims)
          if (c.verdict == Verdict::Fail) err << "secreg: failed claim " << c.claim << "\n";
        return kExitVerification;
      }
      return kExitOk;
    }
    throw UsageError("no command");
  } catch (const UsageError& e) {
    err << "secreg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "secreg: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "secreg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "secreg: computation failed: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace secreg
