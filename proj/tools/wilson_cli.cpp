// Command-line front end: construct designs, analyse them, run the
// verification suites and research scans. JSON goes to stdout, a short
// human summary to stderr.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wilson/catalog.hpp"
#include "wilson/complex.hpp"
#include "wilson/error.hpp"
#include "wilson/green.hpp"
#include "wilson/incidence.hpp"
#include "wilson/io.hpp"
#include "wilson/mld.hpp"
#include "wilson/morphism.hpp"
#include "wilson/report.hpp"
#include "wilson/search.hpp"
#include "wilson/wmonoid.hpp"

namespace {

  using namespace wilson;

  constexpr int exit_ok      = 0;
  constexpr int exit_failed  = 1;
  constexpr int exit_usage   = 2;

  struct Globals {
    std::uint64_t seed       = 1;
    unsigned      parallel   = 1;
    std::size_t   max_points = 9;
    std::string   command_line;
  };

  EnumerateOptions enumerate_options(Globals const& g) {
    return EnumerateOptions{g.max_points, g.parallel, g.seed};
  }

  // FNV-1a; only used to tag reports with the input they were run on.
  std::string digest(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return "fnv1a64:" + out.str();
  }

  void emit(Json& report, Globals const& g) {
    report["command"] = g.command_line;
    std::cout << report.dump(2) << "\n";
  }

  LatinSquare parse_latin(std::string const& text) {
    if (text.starts_with("cyclic")) {
      std::size_t m = 0;
      try {
        m = std::stoul(text.substr(6));
      } catch (std::exception const&) {
        throw Error(Errc::bad_params, "expected cyclic<m>, got " + text);
      }
      return LatinSquare::cyclic(m);
    }
    throw Error(Errc::bad_params, "unknown Latin square '" + text + "'");
  }

  std::vector<Block> parse_base_blocks(std::string const& text) {
    std::vector<Block> out;
    std::stringstream  in(text);
    std::string        part;
    while (std::getline(in, part, ',')) {
      std::stringstream ps(part);
      Block             b;
      long long         p = 0;
      while (ps >> p) {
        if (p < 0) {
          throw Error(Errc::bad_params, "negative point in base block");
        }
        b.push_back(static_cast<Point>(p));
      }
      if (!ps.eof()) {
        throw Error(Errc::bad_params, "could not parse base block '" + part + "'");
      }
      out.push_back(std::move(b));
    }
    return out;
  }

  //! A design file, in PBD or GDD form, or a catalog name.
  struct LoadedDesign {
    Pbd         design;
    std::string digest;
    std::string source;
  };

  LoadedDesign load_design(std::string const& where) {
    if (!std::filesystem::exists(where)) {
      if (auto named = named_design(where)) {
        return {*named, digest(format_pbd(*named)), where};
      }
      throw Error(Errc::parse_error, "no such file or catalog design: " + where);
    }
    std::string const text = read_text_file(where);
    DesignText const  dt   = parse_design_text(text);
    if (dt.kind == "gdd") {
      return {gdd_to_pbd(parse_gdd(text)), digest(text), where};
    }
    return {parse_pbd(text), digest(text), where};
  }

  // construct -----------------------------------------------------------

  struct ConstructArgs {
    std::string family;
    std::size_t n = 0;
    unsigned    q = 2;
    std::size_t l = 3;
    std::size_t d = 1;
    std::size_t v = 0;
    std::string latin = "cyclic6";
    std::string base;
    std::string out;
  };

  int cmd_construct(ConstructArgs const& a, Globals const& g) {
    std::string text;
    std::size_t points = 0;
    std::size_t blocks = 0;
    auto        need_n = [&] {
      if (a.n == 0) {
        throw Error(Errc::bad_params, a.family + " needs --n");
      }
    };
    if (a.family == "td3") {
      Gdd const gdd = td3_from_latin(parse_latin(a.latin));
      text          = format_gdd(gdd);
      points        = gdd.v;
      blocks        = gdd.blocks.size();
    } else {
      std::optional<Pbd> x;
      if (a.family == "complete") {
        need_n();
        x = complete_graph(a.n);
      } else if (a.family == "near-pencil") {
        need_n();
        x = near_pencil(a.n);
      } else if (a.family == "projective") {
        need_n();
        x = projective_space(static_cast<unsigned>(a.n), a.q);
      } else if (a.family == "affine") {
        need_n();
        x = affine_space(static_cast<unsigned>(a.n), a.q);
      } else if (a.family == "hall6") {
        x = hall_plane6();
      } else if (a.family == "pbd-z") {
        x = pbd_z7();
      } else if (a.family == "sts21") {
        x = sts21();
      } else if (a.family == "sts19") {
        x = wilson_sts19(parse_latin(a.latin));
      } else if (a.family == "cyclic-sts") {
        if (a.v == 0 || a.base.empty()) {
          throw Error(Errc::bad_params, "cyclic-sts needs --v and --base");
        }
        x = cyclic_sts(a.v, parse_base_blocks(a.base));
      } else if (a.family == "mld") {
        x = mld_design(a.l, a.d).design;
      } else {
        throw Error(Errc::bad_params, "unknown family '" + a.family + "'");
      }
      text   = format_pbd(*x);
      points = x->size();
      blocks = x->blocks().size();
    }
    if (a.out.empty()) {
      std::cout << text;
    } else {
      write_text_file(a.out, text);
      Json r;
      r["family"] = a.family;
      r["points"] = points;
      r["blocks"] = blocks;
      r["file"]   = a.out;
      r["digest"] = digest(text);
      emit(r, g);
    }
    std::cerr << a.family << ": " << points << " points, " << blocks << " blocks\n";
    return exit_ok;
  }

  // analyze -------------------------------------------------------------

  struct AnalyzeArgs {
    std::string input;
    bool        subsystems = false;
    bool        epsilon    = false;
    bool        brsc       = false;
    bool        monoid     = false;
    bool        eggbox     = false;
    std::string export_elements;
  };

  Json subset_list(std::vector<Subset> const& family) {
    Json arr = Json::array();
    for (Subset s : family) {
      arr.push_back(members(s));
    }
    return arr;
  }

  int cmd_analyze(AnalyzeArgs const& a, Globals const& g) {
    LoadedDesign const in = load_design(a.input);
    Pbd const&         x  = in.design;
    Json               r;
    r["input"]  = in.source;
    r["digest"] = in.digest;
    r["points"] = x.size();
    r["blocks"] = x.blocks().size();
    if (auto k = x.uniform_block_size()) {
      r["block_size"] = *k;
    } else {
      r["block_size"] = nullptr;
    }
    std::cerr << in.source << ": " << x.size() << " points, " << x.blocks().size() << " blocks\n";

    if (a.subsystems) {
      MooreFamily const subs = subsystems(x);
      Json              s    = lattice_stats(subs);
      s["subsystem_free"]    = is_subsystem_free(x);
      if (subs.members().size() <= 256) {
        s["list"] = subset_list(subs.members());
      }
      r["subsystems"] = std::move(s);
      std::cerr << "  subsystems: " << subs.members().size() << "\n";
    }
    if (a.epsilon) {
      MooreFamily const eps = epsilon(matroid_from_pbd(x));
      Json              e   = lattice_stats(eps);
      e["equals_subsystems"] = eps == subsystems(x);
      r["epsilon"]           = std::move(e);
      std::cerr << "  epsilon: " << eps.members().size() << " members\n";
    }
    if (a.brsc) {
      // The complex whose lattice of flats is the subsystem lattice.
      MooreFamily const       subs = subsystems(x);
      LatticeView const       lattice(subs);
      SimplicialComplex const s = transversals(subs, lattice.height());
      Json                    b;
      b["rank"]    = rank(s);
      b["pure"]    = is_pure(s);
      b["matroid"] = is_matroid(s);
      b["graded"]  = is_graded_lattice(lattice);
      b["facets"]  = subset_list(s.facets());
      r["brsc"]    = std::move(b);
      std::cerr << "  brsc: " << s.facets().size() << " facets\n";
    }
    if (a.monoid || a.eggbox || !a.export_elements.empty()) {
      WilsonMonoid const w = enumerate_wilson(x, enumerate_options(g));
      if (a.monoid) {
        r["monoid"] = to_json(summarize_monoid(w));
      }
      if (a.eggbox) {
        FiniteMonoid const m = w.as_monoid();
        r["eggbox"]          = eggbox(m, green_relations(m));
      }
      if (!a.export_elements.empty()) {
        std::string text;
        for (auto const& f : w.elements()) {
          text += format_map(f) + "\n";
        }
        write_text_file(a.export_elements, text);
        r["elements_file"] = a.export_elements;
      }
      std::cerr << "  |W| = " << w.size() << "\n";
    }
    emit(r, g);
    return exit_ok;
  }

  // verify --------------------------------------------------------------

  struct VerifyArgs {
    std::string suite;
    std::size_t l = 3;
    std::size_t d = 2;
    std::string design = "fano";
  };

  struct SuiteResult {
    bool pass = true;
    Json items = Json::array();

    void add(Json item, bool ok) {
      item["pass"] = ok;
      pass         = pass && ok;
      items.push_back(std::move(item));
    }
  };

  SuiteResult erection_equivalence() {
    SuiteResult out;
    for (auto const& [name, x] : erection_catalog()) {
      MooreFamily const eps  = epsilon(matroid_from_pbd(x));
      MooreFamily const subs = subsystems(x);
      Json              item{{"design", name}, {"epsilon", eps.members().size()},
                             {"subsystems", subs.members().size()}};
      if (eps != subs) {
        for (Subset s : eps.members()) {
          if (!subs.contains(s)) {
            item["witness"] = members(s);
            break;
          }
        }
      }
      out.add(std::move(item), eps == subs);
    }
    return out;
  }

  SuiteResult morphism_equivalence() {
    SuiteResult out;
    std::vector<NamedDesign> designs;
    for (auto const& nd : erection_catalog()) {
      if (nd.design.size() <= 6) {
        designs.push_back(nd);
      }
    }
    designs.push_back({"fano", projective_space(2, 2)});
    for (auto const& [name, x] : designs) {
      std::size_t const  v = x.size();
      MorphismTester const tester(x, x);
      std::vector<Point> t(v, 0);
      std::uint64_t      checked = 0;
      std::uint64_t      agree   = 0;
      std::optional<PartialMap> witness;
      // Odometer over (v+1)^v tables; digit v stands for undefined.
      std::vector<std::size_t> digits(v, 0);
      while (true) {
        for (std::size_t i = 0; i < v; ++i) {
          t[i] = digits[i] == v ? PartialMap::undefined : static_cast<Point>(digits[i]);
        }
        PartialMap const f(v, v, t);
        bool const       a = tester.is_morphism(f);
        bool const       b = is_morphism_blockwise(f, x, x);
        ++checked;
        agree += a ? 1 : 0;
        if (a != b && !witness) {
          witness = f;
        }
        std::size_t i = 0;
        while (i < v && ++digits[i] == v + 1) {
          digits[i++] = 0;
        }
        if (i == v) {
          break;
        }
      }
      Json item{{"design", name}, {"maps", checked}, {"morphisms", agree}};
      if (witness) {
        item["witness"] = format_map(*witness);
      }
      out.add(std::move(item), !witness);
    }
    return out;
  }

  SuiteResult hull_suite(Pbd const& x, std::string const& name, Globals const& g) {
    SuiteResult        out;
    WilsonMonoid const w    = enumerate_wilson(x, enumerate_options(g));
    ReesMatrix const   r    = rees_structure(x, true);
    std::uint64_t const hull = translational_hull_size(r);
    out.add(Json{{"design", name},
                 {"rows", r.rows.size()},
                 {"columns", r.columns.size()},
                 {"reduced", r.is_reduced()},
                 {"hull", hull},
                 {"monoid", w.size()}},
            hull == w.size());
    return out;
  }

  SuiteResult bibd_uniform(Globals const& g) {
    SuiteResult out;
    std::vector<NamedDesign> designs{{"k4", complete_graph(4)},
                                     {"k5", complete_graph(5)},
                                     {"fano", projective_space(2, 2)},
                                     {"ag23", affine_space(2, 3)}};
    for (auto const& [name, x] : designs) {
      WilsonMonoid const w = enumerate_wilson(x, enumerate_options(g));
      std::optional<PartialMap> witness;
      for (auto const& f : w.elements()) {
        if (f.image() == 0) {
          continue;
        }
        bool ok = is_open_morphism(f, x, x);
        if (ok) {
          try {
            ok = cardinality(f.domain()) == degree(f, x) * f.rank();
          } catch (Error const&) {
            ok = false;
          }
        }
        if (!ok) {
          witness = f;
          break;
        }
      }
      Json item{{"design", name}, {"monoid", w.size()}};
      if (witness) {
        item["witness"] = format_map(*witness);
      }
      // With 2-blocks every partial map is a morphism, so fibers need not be
      // uniform; those items pass when the counterexample is found.
      bool const pairs_only = x.uniform_block_size() == 2U;
      item["expect"]        = pairs_only ? "counterexample" : "uniform";
      out.add(std::move(item), pairs_only ? witness.has_value() : !witness);
    }
    return out;
  }

  int cmd_verify(VerifyArgs const& a, Globals const& g) {
    Json r;
    r["suite"] = a.suite;
    bool pass  = false;
    if (a.suite == "greenw") {
      GreenwReport const rep = verify_greenw(a.l, a.d, enumerate_options(g));
      r["report"]            = to_json(rep);
      pass                   = rep.pass();
      for (auto const& c : rep.clauses) {
        std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name << "\n";
      }
    } else if (a.suite == "complexity-lemmas") {
      ComplexityReport const rep = verify_complexity_lemmas(a.l, a.d, enumerate_options(g));
      r["report"]                = to_json(rep);
      pass                       = rep.pass();
      for (auto const& c : rep.clauses) {
        std::cerr << (c.pass ? "  ok   " : "  FAIL ") << c.name << "\n";
      }
    } else {
      SuiteResult res;
      if (a.suite == "erection-equivalence") {
        res = erection_equivalence();
      } else if (a.suite == "morphism-equivalence") {
        res = morphism_equivalence();
      } else if (a.suite == "hull") {
        LoadedDesign const in = load_design(a.design);
        res                   = hull_suite(in.design, in.source, g);
      } else if (a.suite == "bibd-uniform") {
        res = bibd_uniform(g);
      } else {
        throw Error(Errc::bad_params, "unknown suite '" + a.suite + "'");
      }
      r["items"] = res.items;
      pass       = res.pass;
      for (auto const& item : res.items) {
        std::cerr << (item["pass"].get<bool>() ? "  ok   " : "  FAIL ") << item.dump() << "\n";
      }
    }
    r["pass"] = pass;
    emit(r, g);
    std::cerr << a.suite << ": " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? exit_ok : exit_failed;
  }

  // scan ----------------------------------------------------------------

  int cmd_scan(std::vector<std::string> const& inputs, Globals const& g) {
    Json results = Json::array();
    for (auto const& path : inputs) {
      LoadedDesign const in  = load_design(path);
      WilsonMonoid const w   = enumerate_wilson(in.design, enumerate_options(g));
      FiniteMonoid const m   = w.as_monoid();
      JClassPoset const  pos = green_relations(m);
      auto const         reg = regular_elements(m, pos);
      std::size_t const  non = w.size() - reg.size();
      Json               item{{"input", in.source},
                              {"digest", in.digest},
                              {"points", in.design.size()},
                              {"monoid", w.size()},
                              {"non_regular", non}};
      if (non > 0) {
        std::vector<bool> is_reg(w.size(), false);
        for (Index i : reg) {
          is_reg[i] = true;
        }
        for (Index i = 0; i < w.size(); ++i) {
          if (!is_reg[i]) {
            item["example"] = format_map(w.element(i));
            break;
          }
        }
      }
      std::cerr << in.source << ": |W| = " << w.size() << ", non-regular " << non << "\n";
      results.push_back(std::move(item));
    }
    Json r;
    r["scan"]    = "non-regular";
    r["results"] = std::move(results);
    emit(r, g);
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  for (int i = 0; i < argc; ++i) {
    g.command_line += (i == 0 ? "wilson" : std::string(" ") + argv[i]);
  }

  CLI::App app{"Pairwise balanced designs, their subsystem lattices and Wilson monoids"};
  app.require_subcommand(1);
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--parallel", g.parallel, "Worker threads")->capture_default_str()->check(CLI::Range(1U, 256U));
  app.add_option("--max-points", g.max_points, "Largest design to enumerate a monoid for")->capture_default_str();

  ConstructArgs ca;
  auto*         construct = app.add_subcommand("construct", "Write a design file");
  construct->add_option("family", ca.family, "complete, near-pencil, projective, affine, hall6, td3, pbd-z, sts21, "
                                             "sts19, cyclic-sts or mld")
      ->required();
  construct->add_option("--n", ca.n, "Order or dimension");
  construct->add_option("--q", ca.q, "Field order");
  construct->add_option("--l", ca.l, "Size of the big block of M(l,d)");
  construct->add_option("--d", ca.d, "Number of extra points of M(l,d)");
  construct->add_option("--v", ca.v, "Number of points for cyclic-sts");
  construct->add_option("--base", ca.base, "Base blocks for cyclic-sts, e.g. \"0 1 4,0 2 7\"");
  construct->add_option("--latin", ca.latin, "Latin square, cyclic<m>");
  construct->add_option("-o,--out", ca.out, "Output file (stdout if omitted)");

  AnalyzeArgs aa;
  auto*       analyze = app.add_subcommand("analyze", "Analyse a design file or catalog design");
  analyze->add_option("input", aa.input, "Design file or catalog name")->required();
  analyze->add_flag("--subsystems", aa.subsystems, "Subsystem lattice");
  analyze->add_flag("--epsilon", aa.epsilon, "Erection family of the matroid");
  analyze->add_flag("--brsc", aa.brsc, "Complex of the subsystem lattice");
  analyze->add_flag("--monoid", aa.monoid, "Wilson monoid summary");
  analyze->add_flag("--eggbox", aa.eggbox, "J-classes of the Wilson monoid");
  analyze->add_option("--export-elements", aa.export_elements, "Write the monoid elements as map lines");

  VerifyArgs va;
  auto*      verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", va.suite, "erection-equivalence, morphism-equivalence, greenw, complexity-lemmas, "
                                        "hull or bibd-uniform")
      ->required();
  verify->add_option("--l", va.l, "l for M(l,d)");
  verify->add_option("--d", va.d, "d for M(l,d)");
  verify->add_option("--design", va.design, "Design file or catalog name for hull");

  std::vector<std::string> scan_inputs;
  auto* scan = app.add_subcommand("scan", "Count non-regular elements of the Wilson monoids of the given designs");
  scan->add_option("inputs", scan_inputs, "Design files or catalog names")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*construct) {
      return cmd_construct(ca, g);
    }
    if (*analyze) {
      return cmd_analyze(aa, g);
    }
    if (*verify) {
      return cmd_verify(va, g);
    }
    return cmd_scan(scan_inputs, g);
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    Json r{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.witness().empty()) {
      r["witness"] = e.witness();
    }
    emit(r, g);
    return exit_usage;
  }
}
