#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "coxcfg/axioms.hpp"
#include "coxcfg/builders.hpp"
#include "coxcfg/io.hpp"
#include "coxcfg/miquel.hpp"
#include "coxcfg/realization.hpp"
#include "coxcfg/symmetry.hpp"

namespace coxcfg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty()) throw UsageError("--in is required");
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw UsageError("cannot write " + path);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("COXCFG_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("COXCFG_SEED is not an unsigned integer: ") + env);
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct StructureArgs {
  std::string kind = "cox";
  int n = 4;
  int k = 2;
  std::string in;
};

void add_structure_options(CLI::App* app, StructureArgs& a) {
  app->add_option("--structure", a.kind, "cox, grassmann, kdagger or gras2cox")
      ->check(CLI::IsMember({"cox", "grassmann", "kdagger", "gras2cox"}));
  app->add_option("--n", a.n, "ground set size");
  app->add_option("--k", a.k, "subset size for grassmann and kdagger");
  app->add_option("--in", a.in, "structure JSON instead of a built structure (- for stdin)");
}

IncidenceStructure build_structure(const std::string& kind, int n, int k) {
  if (kind == "cox") return cox(n);
  if (kind == "grassmann") return grassmannian(n, k);
  if (kind == "kdagger") return k_dagger(n, k);
  return gras2cox(n);
}

IncidenceStructure load_structure(const StructureArgs& a, std::istream& in) {
  if (!a.in.empty()) return structure_from_json(read_input(a.in, in));
  return build_structure(a.kind, a.n, a.k);
}

Realization load_realization(const std::string& path, std::istream& in) {
  return realization_from_json(read_input(path, in));
}

std::string permutation_text(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p(i) + 1);
  return s + "]";
}

std::string map_text(const CoxMap& g) {
  return "(" + permutation_text(g.phi) + ", " + to_string(g.translation) + ")";
}

// ---- build

void add_build(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("build", "build an incidence structure");
  auto kind = std::make_shared<std::string>();
  auto n = std::make_shared<int>(4);
  auto k = std::make_shared<int>(2);
  auto format = std::make_shared<std::string>("json");
  auto labels = std::make_shared<std::string>("canonical");
  auto out = std::make_shared<std::string>();
  sub->add_option("kind", *kind, "cox, grassmann, kdagger or gras2cox")
      ->required()
      ->check(CLI::IsMember({"cox", "grassmann", "kdagger", "gras2cox"}));
  sub->add_option("--n", *n, "ground set size");
  sub->add_option("--k", *k, "subset size");
  sub->add_option("--format", *format)->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--labels", *labels, "csv row/column order")->check(CLI::IsMember({"canonical", "steiner-miquel"}));
  sub->add_option("--out", *out);
  sub->callback([=] {
    auto s = build_structure(*kind, *n, *k);
    std::string text;
    if (*format == "csv") {
      text = incidence_csv(s, *labels == "steiner-miquel" ? MatrixOrder::SteinerMiquel : MatrixOrder::Canonical);
    } else {
      text = structure_to_json(s);
    }
    write_output(*out, text, io.out);
  });
}

// ---- check

void add_check(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("check", "check the chain axioms or the Miquel axiom");
  auto what = std::make_shared<std::string>();
  auto sa = std::make_shared<StructureArgs>();
  auto variant = std::make_shared<std::string>("strong");
  auto budget = std::make_shared<std::size_t>(kDefaultMiquelBudget);
  auto drop_block = std::make_shared<std::string>();
  auto drop_flag = std::make_shared<std::vector<std::string>>();
  sub->add_option("what", *what, "axioms or miquel")->required()->check(CLI::IsMember({"axioms", "miquel"}));
  add_structure_options(sub, *sa);
  sub->add_option("--variant", *variant)->check(CLI::IsMember({"strong", "weak"}));
  sub->add_option("--budget", *budget, "instance budget for the Miquel enumeration");
  sub->add_option("--delete-block", *drop_block, "remove this block, keeping its points");
  sub->add_option("--delete-flag", *drop_flag, "remove one incidence: POINT BLOCK")->expected(2);
  sub->callback([=] {
    auto s = load_structure(*sa, io.in);
    if (!drop_block->empty()) s = without_block(s, s.block_index(*drop_block));
    if (!drop_flag->empty()) s = without_flag(s, s.point_index((*drop_flag)[0]), s.block_index((*drop_flag)[1]));

    bool failed = false;
    if (*what == "axioms") {
      for (auto c : {Condition::I, Condition::II, Condition::III, Condition::IV, Condition::V}) {
        auto w = check_condition(s, c);
        io.out << "condition " << to_string(c) << ": " << (w ? "fails" : "holds") << "\n";
        if (w) {
          io.err << describe(s, *w) << "\n";
          failed = true;
        }
      }
    } else {
      auto v = *variant == "weak" ? MiquelVariant::Weak : MiquelVariant::Strong;
      auto m = check_miquel(s, v, *budget);
      io.out << "miquel (" << to_string(v) << "): " << to_string(m.status) << "; " << m.instances_checked
             << " instances checked (one per dihedral orbit); " << m.counterexamples.size()
             << " counterexamples\n";
      for (const auto& c : m.counterexamples) io.err << describe(s, c) << "\n";
      failed = m.status != MiquelStatus::Pass;
    }
    if (failed) throw CheckFailed("");
  });
}

// ---- levi

void add_levi(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("levi", "Levi graph as DOT");
  auto sa = std::make_shared<StructureArgs>();
  auto compare = std::make_shared<bool>(false);
  auto out = std::make_shared<std::string>();
  add_structure_options(sub, *sa);
  sub->add_flag("--compare-hypercube", *compare, "compare with Q_n as labelled graphs");
  sub->add_option("--out", *out, "DOT file (stdout when omitted and not comparing)");
  sub->callback([=] {
    auto g = levi_graph(load_structure(*sa, io.in));
    if (!*compare || !out->empty()) write_output(*out, graph_to_dot(g, "levi"), io.out);
    if (*compare) {
      bool same = same_labelled_graph(g, hypercube(sa->n));
      io.out << "levi graph equals Q_" << sa->n << ": " << yes_no(same) << "\n";
      if (!same) throw CheckFailed("");
    }
  });
}

// ---- aut

void add_aut(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("aut", "automorphism and correlation groups");
  auto mode = std::make_shared<std::string>();
  auto sa = std::make_shared<StructureArgs>();
  sub->add_option("mode", *mode, "group, brute, flag-orbit or stabilizer")
      ->required()
      ->check(CLI::IsMember({"group", "brute", "flag-orbit", "stabilizer"}));
  add_structure_options(sub, *sa);
  sub->callback([=] {
    const int n = sa->n;
    bool ok = true;
    if (*mode == "group") {
      auto g = full_group(n);
      io.out << "order: " << g.order << "\ncollineations: " << g.collineation_order << "\ngenerators:";
      for (const auto& x : g.generators) io.out << " " << map_text(x);
      io.out << "\ncollineation generators:";
      for (const auto& x : g.collineation_generators) io.out << " " << map_text(x);
      io.out << "\n";
    } else if (*mode == "brute") {
      auto s = load_structure(*sa, io.in);
      auto autos = brute_force_automorphisms(s);
      if (sa->in.empty() && sa->kind == "cox") {
        auto corr = brute_force_correlations(s);
        std::uint64_t expect = factorial(n) << (n - 1);
        bool aut_ok = autos.size() == expect;
        bool all_ok = autos.size() + corr.size() == 2 * expect;
        io.out << autos.size() << "; matches S_n ⋉ C_2^{n-1}: " << yes_no(aut_ok) << "\n";
        io.out << autos.size() + corr.size() << " with correlations; matches S_n ⋉ C_2^n: " << yes_no(all_ok)
               << "\n";
        if (n <= 5) {
          std::vector<IncidenceMap> gen_autos, gen_corr;
          for_each_element(n, [&](const CoxMap& g) {
            (g.is_collineation() ? gen_autos : gen_corr).push_back(to_incidence_map(n, g));
          });
          std::sort(gen_autos.begin(), gen_autos.end());
          std::sort(gen_corr.begin(), gen_corr.end());
          bool same = gen_autos == autos && gen_corr == corr;
          io.out << "element-wise equal to the (phi, A) group: " << yes_no(same) << "\n";
          ok = ok && same;
        }
        ok = ok && aut_ok && all_ok;
      } else if (sa->in.empty() && sa->kind == "kdagger" && n == 2 * sa->k) {
        bool match = autos.size() == 2 * factorial(n);
        io.out << autos.size() << "; matches 2·n!: " << yes_no(match) << "\n";
        ok = match;
      } else {
        io.out << autos.size() << "\n";
      }
    } else if (*mode == "flag-orbit") {
      auto orbit = flag_orbit(n, {Subset{}, Subset::singleton(0)});
      std::uint64_t expect = static_cast<std::uint64_t>(n) << (n - 1);
      io.out << "orbit of ({}, {1}): " << orbit.size() << "; flags: " << expect << "; transitive: "
             << yes_no(orbit.size() == expect) << "\n";
      ok = orbit.size() == expect;
    } else {
      auto st = stabilizer_of_empty(n);
      io.out << "stabilizer of {}: " << st.elements.size() << "; equals the permutation maps: "
             << yes_no(st.matches_permutations) << "\n";
      ok = st.matches_permutations;
    }
    if (!ok) throw CheckFailed("");
  });
}

// ---- decompose

void add_decompose(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("decompose", "split cox(n) into translated copies of cox(X1) and cox(X2)");
  auto n = std::make_shared<int>(6);
  auto split = std::make_shared<std::vector<int>>();
  sub->add_option("--n", *n);
  sub->add_option("--split", *split, "sizes |X1|,|X2|; X1 takes the smallest elements")
      ->required()
      ->expected(2)
      ->delimiter(',');
  sub->callback([=] {
    const int a = (*split)[0], b = (*split)[1];
    if (a < 1 || b < 1 || a + b != *n) throw UsageError("--split must give two positive sizes summing to n");
    Subset x1 = Subset::full(a);
    Subset x2 = Subset::full(*n) - x1;
    auto d = decompose(*n, x1, x2);
    for (const auto* fam : {&d.family1, &d.family2}) {
      for (const auto& m : *fam) {
        io.out << "family " << m.family << ": tau_" << to_string(m.translation) << " cox(" << to_string(m.ground)
               << ")\n";
      }
    }
    io.out << "family sizes: " << d.family1.size() << " + " << d.family2.size() << " = "
           << d.family1.size() + d.family2.size() << "\n";
    io.out << "every flag in exactly one member: " << yes_no(d.unique) << "\n";
    io.out << "members of different families share exactly one subset: " << yes_no(d.transversal) << "\n";
    if (!d.unique) throw CheckFailed("");
  });
}

// ---- realizations

void add_realize(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("realize", "exact realization of cox(n) by circles");
  auto n = std::make_shared<int>(4);
  auto seed = std::make_shared<std::uint64_t>();
  auto cap = std::make_shared<int>(kDefaultRealizeCap);
  auto out = std::make_shared<std::string>();
  auto* seed_opt = sub->add_option("--seed", *seed, "defaults to COXCFG_SEED or the built-in seed");
  sub->add_option("--n", *n)->required();
  sub->add_option("--cap", *cap, "largest n accepted");
  sub->add_option("--out", *out);
  sub->callback([=] {
    std::uint64_t s = seed_opt->count() ? *seed : default_seed();
    write_output(*out, realization_to_json(realize(*n, s, *cap)), io.out);
  });
}

void add_extend(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("extend", "add one element to a realization");
  auto in = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>();
  auto cap = std::make_shared<int>(kDefaultRealizeCap);
  auto out = std::make_shared<std::string>();
  sub->add_option("--in", *in, "realization JSON (- for stdin)")->required();
  auto* seed_opt = sub->add_option("--seed", *seed);
  sub->add_option("--cap", *cap);
  sub->add_option("--out", *out);
  sub->callback([=] {
    auto r = load_realization(*in, io.in);
    auto report = verify(r);
    if (!report.clean()) {
      io.err << summary(report) << "\n";
      throw CheckFailed("input realization does not verify");
    }
    r.set_verified(true);
    std::uint64_t s = seed_opt->count() ? *seed : default_seed();
    write_output(*out, realization_to_json(extend(r, s, *cap)), io.out);
  });
}

void report_defects(const VerificationReport& r, std::ostream& err) {
  auto list = [&](const char* what, const std::vector<std::pair<Subset, Subset>>& v) {
    for (const auto& [a, b] : v) err << what << " " << to_string(a) << " " << to_string(b) << "\n";
  };
  for (Subset s : r.missing) err << "missing " << to_string(s) << "\n";
  list("defect", r.incidence_defects);
  list("accidental", r.accidental_incidences);
  list("coincident-points", r.coincident_points);
  list("coincident-circles", r.coincident_circles);
  if (!r.empty_at_infinity) err << "{} is not at infinity\n";
}

void add_verify(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("verify", "exact verification of a realization");
  auto in = std::make_shared<std::string>("-");
  sub->add_option("--in", *in, "realization JSON (- for stdin, the default)");
  sub->callback([=] {
    auto report = verify(load_realization(*in, io.in));
    io.out << summary(report) << "\n";
    if (!report.clean()) {
      report_defects(report, io.err);
      throw CheckFailed("");
    }
  });
}

void add_export(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("export", "convert a realization or structure file");
  auto format = std::make_shared<std::string>();
  auto in = std::make_shared<std::string>("-");
  auto out = std::make_shared<std::string>();
  auto radius = std::make_shared<std::string>("1");
  auto labels = std::make_shared<std::string>("canonical");
  sub->add_option("format", *format, "svg, sphere-json, dot or csv")
      ->required()
      ->check(CLI::IsMember({"svg", "sphere-json", "dot", "csv"}));
  sub->add_option("--in", *in, "realization JSON, or structure JSON for dot/csv");
  sub->add_option("--out", *out);
  sub->add_option("--radius", *radius, "sphere radius, a rational");
  sub->add_option("--labels", *labels)->check(CLI::IsMember({"canonical", "steiner-miquel"}));
  sub->callback([=] {
    std::string text = read_input(*in, io.in);
    bool is_realization = text.find("\"circles\"") != std::string::npos;
    std::string result;
    if (*format == "svg" || *format == "sphere-json") {
      if (!is_realization) throw UsageError(*format + " needs a realization");
      auto r = realization_from_json(text);
      if (*format == "svg") {
        result = realization_to_svg(r);
      } else {
        mpq_class rho;
        if (rho.set_str(*radius, 10) != 0 || (rho.canonicalize(), rho <= 0)) {
          throw UsageError("--radius must be a positive rational");
        }
        result = sphere_to_json(stereographic(r, rho));
      }
    } else {
      auto s = is_realization ? cox(realization_from_json(text).n()) : structure_from_json(text);
      if (*format == "dot") {
        result = graph_to_dot(levi_graph(s), "levi");
      } else {
        result = incidence_csv(s, *labels == "steiner-miquel" ? MatrixOrder::SteinerMiquel : MatrixOrder::Canonical);
      }
    }
    write_output(*out, result, io.out);
  });
}

void add_cross_ratio(CLI::App& app, Io io) {
  auto* sub = app.add_subcommand("cross-ratio", "exact cross ratio of four points on a realized circle");
  auto in = std::make_shared<std::string>("-");
  auto circle = std::make_shared<std::string>();
  auto points = std::make_shared<std::vector<std::string>>();
  auto perm = std::make_shared<std::vector<int>>();
  sub->add_option("--in", *in, "realization JSON (- for stdin)");
  sub->add_option("--circle", *circle, "circle label, e.g. {1}");
  sub->add_option("--points", *points, "four point labels on the circle")->expected(4)->allow_extra_args(false);
  sub->add_option("--permutation", *perm,
                  "1-based images, e.g. 1,2,4,3,5: list line cross ratios the relabeling changes")
      ->delimiter(',');
  sub->callback([=] {
    auto r = load_realization(*in, io.in);
    if (!perm->empty()) {
      std::vector<int> images;
      for (int i : *perm) images.push_back(i - 1);
      auto witnesses = cross_ratio_obstructions(r, Permutation(images));
      for (const auto& w : witnesses) {
        Subset line = Subset::singleton(w.i);
        io.out << "on " << to_string(line) << ": ({}, " << to_string(line.with(w.j[0])) << "; "
               << to_string(line.with(w.j[1])) << ", " << to_string(line.with(w.j[2])) << ") " << w.before.get_str()
               << " -> " << w.after.get_str() << "\n";
      }
      io.out << witnesses.size() << " changed cross ratios\n";
      return;
    }
    if (circle->empty() || points->size() != 4) throw UsageError("give --circle and four --points, or --permutation");
    Subset c = parse_subset(*circle);
    std::vector<InvPoint> z;
    for (const auto& p : *points) {
      Subset s = parse_subset(p);
      if (!r.circle(c).passes_through(r.point(s))) throw UsageError(p + " is not on " + *circle);
      z.push_back(r.point(s));
    }
    io.out << cross_ratio(z[0], z[1], z[2], z[3]).get_str() << "\n";
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cox configurations: construction, checks, symmetry and exact circle realizations", "coxcfg"};
  app.require_subcommand(1);
  Io io{in, out, err};
  add_build(app, io);
  add_check(app, io);
  add_levi(app, io);
  add_aut(app, io);
  add_decompose(app, io);
  add_realize(app, io);
  add_extend(app, io);
  add_verify(app, io);
  add_export(app, io);
  add_cross_ratio(app, io);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const CheckFailed& e) {
    if (*e.what()) err << e.what() << "\n";
    return kCheckFailed;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace coxcfg::cli
