#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "cominrule/io.hpp"
#include "cominrule/verify.hpp"

using namespace cominrule;
using nlohmann::json;

namespace {

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

struct Options {
  std::string space;
  std::string lam, mu, nu;
  bool json = false;
  bool strict = false;
  bool count = false;
  int size = -1;
  int threads = 0;
  std::string file;
  std::string suite;
  std::uint64_t seed = 1;
  std::string inject = "none";
  std::string format = "json";
};

void set_threads(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("COMINRULE_THREADS")) n = std::atoi(env);
  }
  if (n > 0) omp_set_num_threads(n);
}

int run_coeff(const Options& o) {
  auto s = Space::make(o.space);
  Shape lam = s->parse(o.lam), mu = s->parse(o.mu), nu = s->parse(o.nu);
  if (o.strict && structural_zero(lam, mu, nu)) {
    std::cerr << "structural zero: "
              << (nu.contains(lam) ? "|lam| + |mu| = " + std::to_string(lam.size() + mu.size()) +
                                         " but |nu| = " + std::to_string(nu.size())
                                   : std::string("lam is not inside nu"))
              << '\n';
    return kExitMath;
  }
  std::int64_t c = lrc(lam, mu, nu, *s);
  if (o.json) {
    std::cout << json{{"space", s->spec().str()},
                      {"lam", shape_to_json(lam)},
                      {"mu", shape_to_json(mu)},
                      {"nu", shape_to_json(nu)},
                      {"c", c}}
                     .dump()
              << '\n';
  } else {
    std::cout << c << '\n';
  }
  return 0;
}

int run_expand(const Options& o) {
  auto s = Space::make(o.space);
  auto e = product_expand(s->parse(o.lam), s->parse(o.mu), *s);
  std::cout << expansion_to_json(e).dump() << '\n';
  return 0;
}

int run_shapes(const Options& o) {
  auto s = Space::make(o.space);
  json out = json::array();
  for (const Shape& sh : s->shapes()) {
    if (o.size >= 0 && sh.size() != o.size) continue;
    if (o.json) {
      out.push_back(shape_to_json(sh));
    } else {
      std::cout << print_shape(sh) << '\n';
    }
  }
  if (o.json) std::cout << out.dump() << '\n';
  return 0;
}

int run_syt(const Options& o) {
  auto s = Space::make(o.space);
  SkewShape skew(o.lam.empty() ? Shape::empty(s->poset()) : s->parse(o.lam), s->parse(o.nu));
  if (o.count) {
    auto n = count_syt(skew);
    if (o.json) {
      std::cout << json{{"space", s->spec().str()}, {"skew", print_skew(skew)}, {"count", n}}.dump() << '\n';
    } else {
      std::cout << n << '\n';
    }
    return 0;
  }
  auto all = enumerate_syt_parallel(skew);
  if (o.json) {
    json out = json::array();
    for (const auto& t : all) out.push_back(tableau_to_json(t));
    std::cout << out.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (i) std::cout << '\n';
      std::cout << render_tableau(all[i]);
    }
  }
  return 0;
}

int run_rectify(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw Error("cannot read " + o.file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("tableau file is not valid JSON: ") + e.what());
  }
  std::string space = o.space;
  if (space.empty()) {
    if (!j.contains("space")) throw Error("tableau file names no space; pass --space");
    space = j.at("space").get<std::string>();
  }
  auto s = Space::make(space);
  StandardTableau t = tableau_from_json(j, *s);
  StandardTableau r = rectify(t);
  if (o.json) {
    std::cout << tableau_to_json(r).dump() << '\n';
  } else {
    std::cout << "shape " << print_shape(Shape(s->poset(), r.outer)) << '\n' << render_tableau(r);
  }
  return 0;
}

int run_verify(const Options& o) {
  Report r = run_suite(o.space, o.suite, o.seed, parse_fault(o.inject));
  if (o.json) {
    std::cout << report_to_json(r).dump() << '\n';
  } else {
    std::cout << report_to_text(r);
  }
  return r.ok() ? 0 : kExitViolation;
}

int run_table(const Options& o) {
  auto s = Space::make(o.space);
  CoeffTable t = full_table(s);
  if (o.format == "csv") {
    std::cout << table_to_csv(t);
  } else {
    std::cout << table_to_json(t).dump() << '\n';
  }
  return 0;
}

int run_poset(const Options& o) {
  auto s = Space::make(o.space);
  const BoxPoset& p = s->poset();
  auto name = [&](int b) {
    return "(" + std::to_string(p.grid(b).col) + "," + std::to_string(p.grid(b).row) + ")" + (p.is_short(b) ? "*" : "");
  };
  if (o.json) {
    json boxes = json::array();
    for (int b = 0; b < p.size(); ++b) {
      json up = json::array();
      for (Mask m = p.upper_covers(b); m; m &= m - 1) {
        int c = std::countr_zero(m);
        up.push_back({p.grid(c).col, p.grid(c).row});
      }
      boxes.push_back({{"column", p.grid(b).col},
                       {"row", p.grid(b).row},
                       {"short", p.is_short(b)},
                       {"rotate", {p.grid(p.rotate(b)).col, p.grid(p.rotate(b)).row}},
                       {"covered_by", up}});
    }
    std::cout << json{{"space", p.spec().str()}, {"boxes", boxes}}.dump() << '\n';
    return 0;
  }
  std::cout << p.spec().str() << ": " << p.size() << " boxes, " << std::popcount(p.short_mask()) << " short, "
            << s->num_shapes() << " shapes, "
            << (p.flavor() == Flavor::cominuscule ? "cominuscule" : "minuscule") << "\n\nHasse diagram by rank:\n";
  std::vector<int> rank(p.size(), 0);
  int top = 0;
  for (int b = 0; b < p.size(); ++b) {
    for (Mask m = p.lower_covers(b); m; m &= m - 1) rank[b] = std::max(rank[b], rank[std::countr_zero(m)] + 1);
    top = std::max(top, rank[b]);
  }
  for (int r = top; r >= 0; --r) {
    std::cout << "  " << (r < 10 ? " " : "") << r << ":";
    for (int b = 0; b < p.size(); ++b) {
      if (rank[b] != r) continue;
      std::cout << ' ' << name(b);
      if (p.upper_covers(b)) {
        std::cout << " ->";
        for (Mask m = p.upper_covers(b); m; m &= m - 1) std::cout << ' ' << name(std::countr_zero(m));
        std::cout << ';';
      }
    }
    std::cout << '\n';
  }
  std::cout << "\nGrid (o = box, * = short root box), columns left to right, rows bottom to top:\n";
  for (int row = p.num_rows(); row >= 1; --row) {
    std::string line = "  ";
    for (int col = 1; col <= p.num_columns(); ++col) {
      auto b = p.box_at({col, row});
      line += !b ? "  " : p.is_short(*b) ? " *" : " o";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    std::cout << line << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert intersection numbers of minuscule and cominuscule spaces by jeu de taquin"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool space_required = true) {
    auto* opt = sub->add_option("--space", o.space, "Gr:k,n | QB:n | LG:n | QD:n | OG:n | E6 | E7 | Pmin:n | OGmin:n");
    if (space_required) opt->required();
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--threads", o.threads, "worker threads (default: COMINRULE_THREADS or all cores)");
  };

  auto* coeff = app.add_subcommand("coeff", "one coefficient c_{lam,mu}^nu");
  add_common(coeff);
  coeff->add_option("--lam", o.lam, "column tuple, e.g. 3,1")->required();
  coeff->add_option("--mu", o.mu)->required();
  coeff->add_option("--nu", o.nu)->required();
  coeff->add_flag("--strict", o.strict, "exit 1 on degree or containment zeros");

  auto* expand = app.add_subcommand("expand", "sigma_lam * sigma_mu in the Schubert basis (JSON)");
  add_common(expand);
  expand->add_option("--lam", o.lam)->required();
  expand->add_option("--mu", o.mu)->required();

  auto* shapes = app.add_subcommand("shapes", "list the shapes of a space");
  add_common(shapes);
  shapes->add_option("--size", o.size, "only shapes with this many boxes");

  auto* syt = app.add_subcommand("syt", "standard tableaux of nu/lam");
  add_common(syt);
  syt->add_option("--lam", o.lam, "inner shape (default empty)");
  syt->add_option("--nu", o.nu, "outer shape")->required();
  syt->add_flag("--count", o.count, "print only the number of tableaux");

  auto* rect = app.add_subcommand("rectify", "rectify a tableau read from a JSON file");
  add_common(rect, false);
  rect->add_option("--file", o.file, "tableau JSON: {space, inner, outer, labels: [[column,row,label],...]}")
      ->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--inject", o.inject, "fault to inject: none, corrupt_entry, wrong_tie_rule")
      ->check(CLI::IsMember({"none", "corrupt_entry", "wrong_tie_rule"}));

  auto* table = app.add_subcommand("table", "export every coefficient of a space");
  add_common(table);
  table->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* poset = app.add_subcommand("poset", "ASCII Hasse diagram and grid of the box poset");
  add_common(poset);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  set_threads(o.threads);
  try {
    if (*coeff) return run_coeff(o);
    if (*expand) return run_expand(o);
    if (*shapes) return run_shapes(o);
    if (*syt) return run_syt(o);
    if (*rect) return run_rectify(o);
    if (*verify) return run_verify(o);
    if (*table) return run_table(o);
    if (*poset) return run_poset(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitUsage;
}
