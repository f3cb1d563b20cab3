#include "abelcay/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "abelcay/cayley.hpp"
#include "abelcay/errors.hpp"
#include "abelcay/families.hpp"
#include "abelcay/hyperl.hpp"
#include "abelcay/intmat.hpp"
#include "abelcay/lattice.hpp"
#include "abelcay/search.hpp"

namespace abelcay::cli {

using nlohmann::json;

namespace {

constexpr const char* kBudgetEnv = "ABELCAY_BUDGET";

struct Common {
  std::string format = "text";
  std::string output;
  int threads = 0;
  std::optional<std::uint64_t> budget;
  bool verify = false;
};

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats) {
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(std::move(formats)));
  sub->add_option("--output", c.output, "write to PATH instead of stdout");
  sub->add_option("--threads", c.threads, "OpenMP threads (1 = serial reference)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", c.budget, "BFS vertex-visit budget for searches");
  sub->add_flag("--verify", c.verify, "measure by BFS and compare with predictions");
}

std::uint64_t resolve_budget(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string(kBudgetEnv) + " is not an integer: " + env);
    }
  }
  return SearchOptions{}.budget;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t w = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      cells.push_back(m(i, j).get_str());
      w = std::max(w, cells.back().size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.size(); ++j)
      out << (j ? " " : "") << std::setw(static_cast<int>(w)) << cells[i * m.size() + j];
    out << "]\n";
  }
  return out.str();
}

// Group with trivial factors dropped, for display.
std::string present(const AbelianGroupSpec& g) {
  std::vector<std::int64_t> f;
  for (auto m : g.factors())
    if (m > 1) f.push_back(m);
  return AbelianGroupSpec(f).to_string();
}

std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

json profile_json(const CayleyDigraph& g, const DistanceProfile& p) {
  json j{{"diameter", p.diameter},
         {"counts", p.counts},
         {"order", p.order},
         {"degree", g.degree()},
         {"group", g.group().to_string()}};
  json gens = json::array();
  for (const auto& x : g.generators()) gens.push_back(x);
  j["generators"] = gens;
  auto dens = density(g, p);
  j["density"] = rational_text(dens);
  j["density_decimal"] = format_decimal(dens, 6);
  return j;
}

int cmd_snf(const std::string& literal, const Common& c, std::ostream& out) {
  IntMatrix m = IntMatrix::parse(literal);
  auto snf = smith_normal_form(m);
  if (snf.singular()) throw SingularMatrix();
  QuotientGroup q(m, snf);
  auto st = structure(q);
  if (c.format == "json") {
    json s = json::array(), torsion = json::array();
    for (const auto& x : snf.s) s.push_back(x.get_str());
    for (const auto& x : st.torsion) torsion.push_back(x.get_str());
    json j{{"s", s},
           {"u", matrix_json(snf.u)},
           {"v", matrix_json(snf.v)},
           {"det", det(m).get_str()},
           {"rank", st.rank},
           {"torsion", torsion},
           {"cyclic", st.cyclic}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << "M =\n" << matrix_text(m, "  ");
  out << "det M = " << det(m) << '\n';
  out << "S = diag(";
  for (std::size_t i = 0; i < snf.s.size(); ++i) out << (i ? "," : "") << snf.s[i];
  out << ")\nU =\n" << matrix_text(snf.u, "  ") << "V =\n" << matrix_text(snf.v, "  ");
  out << "group: ";
  if (st.torsion.empty()) out << "trivial";
  for (std::size_t i = 0; i < st.torsion.size(); ++i)
    out << (i ? " + " : "") << "Z_" << st.torsion[i];
  out << "  (order " << st.order << ", rank " << st.rank << ", "
      << (st.cyclic ? "cyclic" : "not cyclic") << ")\n";
  return kOk;
}

int cmd_family(int n, int m, const Common& c, std::ostream& out) {
  auto f = make_dnm(n, m);
  json row{{"n", n},
           {"m", m},
           {"group", present(f.digraph.group())},
           {"predicted_order", f.predicted_order.get_str()},
           {"predicted_diameter", f.predicted_diameter},
           {"predicted_density", rational_text(f.predicted_density)}};
  bool pass = true;
  if (c.verify) {
    auto p = distance_profile(f.digraph);
    auto dens = density(f.digraph, p);
    const bool order_ok = f.predicted_order == Integer(std::to_string(p.order));
    const bool diam_ok = f.predicted_diameter == static_cast<std::int64_t>(p.diameter);
    const bool dens_ok = dens == f.predicted_density;
    pass = order_ok && diam_ok && dens_ok;
    row["measured_order"] = p.order;
    row["measured_diameter"] = p.diameter;
    row["measured_density"] = rational_text(dens);
    row["max_distance_count"] = p.counts.back();
    row["order_ok"] = order_ok;
    row["diameter_ok"] = diam_ok;
    row["density_ok"] = dens_ok;
    row["pass"] = pass;
  }
  if (c.format == "json") {
    out << row.dump() << '\n';
  } else if (c.format == "csv") {
    std::vector<std::string> keys{"n", "m", "group", "predicted_order", "predicted_diameter",
                                  "predicted_density"};
    if (c.verify)
      for (auto k : {"measured_order", "measured_diameter", "measured_density", "order_ok",
                     "diameter_ok", "density_ok", "pass"})
        keys.emplace_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto& v = row[keys[i]];
      out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << '\n';
  } else {
    out << "D_{" << n << "," << m << "} = Cay(" << present(f.digraph.group()) << "; B'_" << n
        << ")\n";
    out << "predicted: order " << f.predicted_order << ", diameter " << f.predicted_diameter
        << ", density " << rational_text(f.predicted_density) << " ("
        << format_decimal(f.predicted_density, 6) << ")\n";
    if (c.verify) {
      out << "measured:  order " << row["measured_order"].get<std::uint64_t>() << ", diameter "
          << row["measured_diameter"].get<std::uint32_t>() << ", density "
          << row["measured_density"].get<std::string>() << '\n';
      out << (pass ? "PASS" : "FAIL") << '\n';
    }
  }
  return pass ? kOk : kUsageError;
}

Element parse_element(const std::string& text) {
  Element x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      x.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad generator '" + text + "'");
    }
  }
  if (x.empty()) throw ParseError("empty generator");
  return x;
}

int cmd_diameter(const std::string& group, const std::vector<std::string>& gens,
                 const Common& c, std::ostream& out, std::ostream& err) {
  std::vector<Element> elems;
  for (const auto& g : gens) elems.push_back(parse_element(g));
  CayleyDigraph g(AbelianGroupSpec::parse(group), std::move(elems));
  if (c.format == "dot") {
    out << to_dot(g);
    return kOk;
  }
  auto p = explore(g);
  if (!p.complete()) {
    err << "not generating: generators reach " << p.reachable << " of " << p.order
        << " elements\n";
    return kNotGenerating;
  }
  if (c.format == "json") {
    out << profile_json(g, p).dump() << '\n';
    return kOk;
  }
  auto dens = density(g, p);
  out << "Cay(" << g.group().to_string() << "; ";
  for (std::size_t i = 0; i < g.degree(); ++i)
    out << (i ? " " : "") << element_to_string(g.generators()[i]);
  out << ")\norder " << p.order << ", degree " << g.degree() << ", diameter k=" << p.diameter
      << '\n';
  out << "distance distribution:";
  for (auto n : p.counts) out << ' ' << n;
  out << "\ndensity " << rational_text(dens) << " = " << format_decimal(dens, 6) << '\n';
  return kOk;
}

json search_json(const SearchResult& r, bool abelian) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json gens = json::array();
    for (const auto& e : x.generators) gens.push_back(e);
    w.push_back({{"group", x.group.to_string()}, {"generators", gens}});
  }
  return {{"d", r.d},
          {"k", r.k},
          {"mode", abelian ? "abelian" : "cyclic"},
          {"best", r.best_order},
          {"exhaustive", r.exhaustive},
          {"ceiling", r.ceiling},
          {"ceiling_proven", r.ceiling_proven},
          {"explored", r.explored},
          {"visits", r.visits},
          {"witnesses", w}};
}

int cmd_search(int d, std::int64_t k, std::int64_t upper, bool abelian, bool degenerate,
               std::size_t max_witnesses, const Common& c, std::ostream& out,
               std::ostream& err) {
  SearchOptions opts;
  opts.budget = resolve_budget(c);
  opts.threads = c.threads;
  opts.allow_degenerate = degenerate;
  opts.max_witnesses = max_witnesses;
  auto r = abelian ? na_search(d, k, upper, opts) : nc_search(d, k, upper, opts);
  if (c.format == "json") {
    out << search_json(r, abelian).dump() << '\n';
  } else if (c.format == "csv") {
    out << "d,k,mode,best,exhaustive,ceiling,explored\n"
        << r.d << ',' << r.k << ',' << (abelian ? "abelian" : "cyclic") << ',' << r.best_order
        << ',' << (r.exhaustive ? "true" : "false") << ',' << r.ceiling << ',' << r.explored
        << '\n';
  } else {
    out << (abelian ? "NA" : "NC") << "_{" << d << "," << k << "} = " << r.best_order
        << (r.exhaustive ? "" : " (not exhaustive)") << '\n';
    out << "scan ceiling " << r.ceiling << (r.ceiling_proven ? " (proven bound)" : "")
        << ", " << r.explored << " canonical candidates, " << r.visits << " BFS visits\n";
    for (const auto& w : r.witnesses) {
      out << "  Cay(" << w.group.to_string() << "; ";
      for (std::size_t i = 0; i < w.generators.size(); ++i)
        out << (i ? " " : "") << element_to_string(w.generators[i]);
      out << ")\n";
    }
  }
  if (!r.exhaustive) {
    err << "search budget exceeded before an exhaustive answer\n";
    return kBudgetExceeded;
  }
  return kOk;
}

int cmd_table(int kmax, bool do_search, const Common& c, std::ostream& out, std::ostream& err) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  struct Row {
    std::int64_t k;
    std::optional<std::int64_t> nc;
    std::string source;
    BoundsReport b;
  };
  std::vector<Row> rows;
  SearchOptions opts;
  opts.budget = resolve_budget(c);
  opts.threads = c.threads;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    Row row{k, std::nullopt, "", bounds_report(3, k)};
    auto printed = printed_table_row(k);
    if (!do_search && printed) {
      row.nc = printed->nc3;
      row.source = "cached";
    } else {
      auto r = nc_search(3, k, 0, opts);
      if (r.exhaustive) {
        row.nc = r.best_order;
        row.source = "searched";
      } else {
        err << "warning: NC_{3," << k << "} search exceeded the budget\n";
        row.source = "budget";
      }
    }
    rows.push_back(std::move(row));
  }

  auto delta = [](const Row& r) -> std::string {
    if (!r.nc) return "";
    Integer den = Integer(r.k + 3) * (r.k + 3) * (r.k + 3);
    Rational q(Integer(std::to_string(*r.nc)), den);
    q.canonicalize();
    return format_decimal(q, 5);
  };
  auto printed_col = [](const Row& r) {
    return r.b.printed_fourth_column ? std::to_string(*r.b.printed_fourth_column)
                                     : std::string("");
  };
  auto nc_text = [](const Row& r) { return r.nc ? std::to_string(*r.nc) : std::string(""); };

  if (c.format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"k", r.k},
                   {"delta", delta(r)},
                   {"ceil_0084_k3", r.b.ceil_0084_k3->get_str()},
                   {"ceil_3_25_k3", r.b.ceil_3_25_k3->get_str()},
                   {"printed_fourth_column", printed_col(r)},
                   {"fiduccia", r.b.fiduccia_floor->get_str()},
                   {"nc3", nc_text(r)},
                   {"nc3_source", r.source}});
    out << j.dump() << '\n';
    return kOk;
  }
  if (c.format == "csv") {
    out << "k,delta,ceil(0.084k^3),ceil(3/25k^3),floor(3/25(k+3)^3) printed,"
           "floor(3/25(k+3)^3) evaluated,NC3k,source\n";
    for (const auto& r : rows)
      out << r.k << ',' << delta(r) << ',' << *r.b.ceil_0084_k3 << ',' << *r.b.ceil_3_25_k3
          << ',' << printed_col(r) << ',' << *r.b.fiduccia_floor << ',' << nc_text(r) << ','
          << r.source << '\n';
    return kOk;
  }
  out << std::setw(4) << "k" << std::setw(10) << "delta" << std::setw(14) << "ceil.084k^3"
      << std::setw(14) << "ceil3/25k^3" << std::setw(18) << "3/25(k+3)^3 [*]" << std::setw(14)
      << "evaluated" << std::setw(8) << "NC3k" << "  source\n";
  for (const auto& r : rows)
    out << std::setw(4) << r.k << std::setw(10) << delta(r) << std::setw(14)
        << *r.b.ceil_0084_k3 << std::setw(14) << *r.b.ceil_3_25_k3 << std::setw(18)
        << printed_col(r) << std::setw(14) << *r.b.fiduccia_floor << std::setw(8) << nc_text(r)
        << "  " << r.source << '\n';
  out << "[*] column as printed in the published table; its entries equal "
         "floor((k+3)^3/9), the next column evaluates floor(3/25 (k+3)^3).\n";
  return kOk;
}

int cmd_hyperl(const std::string& literal, int mn, std::uint64_t cap, const Common& c,
               std::ostream& out) {
  HyperL h = mn > 0 ? mn_hyperl(mn, cap) : minimum_distance_diagram(IntMatrix::parse(literal), cap);
  if (c.format == "json") {
    out << json{{"dimension", h.dimension},
                {"points", h.points},
                {"max_norm", h.max_norm},
                {"max_attainers", h.max_attainers}}
               .dump()
        << '\n';
  } else if (c.format == "text") {
    out << h.points.size() << " points, max norm " << h.max_norm << ", attained by "
        << h.max_attainers << '\n';
    if (h.dimension == 2) out << render_ascii(h);
  } else {
    out << to_csv(h);
  }
  return kOk;
}

int cmd_bounds(int d, std::int64_t k, const Common& c, std::ostream& out) {
  auto r = bounds_report(d, k);
  json j{{"d", d},
         {"k", k},
         {"wc_lower_leading", rational_text(r.wc_lower_leading)},
         {"wc_upper_leading", rational_text(r.wc_upper_leading)},
         {"lattice_point_bound", r.lattice_point_bound.get_str()},
         {"family_coefficient", rational_text(r.family_coefficient)},
         {"family_coefficient_symbolic", r.family_coefficient_symbolic},
         {"family_coefficient_value", r.family_coefficient_value},
         {"df_factor_symbolic", r.df_factor_symbolic},
         {"df_factor_without_c", r.df_factor_without_c},
         {"footnotes", r.footnotes}};
  if (r.nc2) j["nc2"] = *r.nc2;
  if (r.na2) j["na2"] = *r.na2;
  if (r.fiduccia_floor) j["fiduccia_floor"] = r.fiduccia_floor->get_str();
  if (r.ceil_0084_k3) j["ceil_0084_k3"] = r.ceil_0084_k3->get_str();
  if (r.ceil_3_25_k3) j["ceil_3_25_k3"] = r.ceil_3_25_k3->get_str();
  if (r.printed_fourth_column) j["printed_fourth_column"] = *r.printed_fourth_column;
  if (c.format == "json") {
    out << j.dump() << '\n';
    return kOk;
  }
  out << "degree d=" << d << ", diameter k=" << k << '\n';
  out << "  (k/d)^d            = " << rational_text(r.wc_lower_leading) << '\n';
  out << "  k^d/d!             = " << rational_text(r.wc_upper_leading) << '\n';
  out << "  C(k+d,d)           = " << r.lattice_point_bound << '\n';
  if (r.nc2) out << "  NC_{2,k}           = " << *r.nc2 << "\n  NA_{2,k}           = " << *r.na2 << '\n';
  if (r.fiduccia_floor) {
    out << "  floor(3/25(k+3)^3) = " << *r.fiduccia_floor << '\n';
    out << "  ceil(0.084 k^3)    = " << *r.ceil_0084_k3 << '\n';
    out << "  ceil(3/25 k^3)     = " << *r.ceil_3_25_k3 << '\n';
  }
  out << "  family coefficient " << r.family_coefficient_symbolic << " = "
      << r.family_coefficient_value << '\n';
  out << "  Dougherty-Faber factor " << r.df_factor_symbolic << " ~ c * "
      << r.df_factor_without_c << '\n';
  for (const auto& f : r.footnotes) out << "  note: " << f << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian Cayley digraphs from integer matrices"};
  app.name("abelcay");
  app.require_subcommand(1);

  Common common;
  std::string literal, group;
  std::vector<std::string> gens;
  int n = 0, m = 0, d = 0, kmax = 0, mn = 0;
  std::int64_t k = 0, upper = 0;
  bool abelian = false, degenerate = false, table_search = false;
  std::size_t max_witnesses = 16;
  std::uint64_t cap = kDefaultClassCap;

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix literal like 3,-1;-1,3");
  snf->add_option("matrix", literal)->required();
  add_common(snf, common, {"text", "json"});

  auto* family = app.add_subcommand("family", "predicted (and measured) metrics of D_{n,m}");
  family->add_option("n", n)->required();
  family->add_option("m", m)->required();
  add_common(family, common, {"text", "json", "csv"});

  auto* diameter = app.add_subcommand("diameter", "BFS profile of Cay(group; generators)");
  diameter->add_option("group", group, "e.g. Z84 or Z4xZ4")->required();
  diameter->add_option("generators", gens, "e.g. 2 9 35 or \"1,1\" \"2,1\"")->required();
  add_common(diameter, common, {"text", "json", "dot"});

  auto* search = app.add_subcommand("search", "largest cyclic/Abelian digraph of degree d, diameter k");
  search->add_option("d", d)->required();
  search->add_option("k", k)->required();
  search->add_option("--upper", upper, "scan ceiling (default: proven bound)");
  search->add_flag("--abelian", abelian, "search all Abelian groups (NA) instead of cyclic (NC)");
  search->add_flag("--degenerate", degenerate, "also allow 0 and repeated generators");
  search->add_option("--witnesses", max_witnesses, "witnesses to report");
  add_common(search, common, {"text", "json", "csv"});

  auto* table = app.add_subcommand("table", "degree-3 density table for k = 1..kmax");
  table->add_option("kmax", kmax)->required();
  table->add_flag("--search", table_search, "recompute NC_{3,k} instead of using cached values");
  add_common(table, common, {"text", "json", "csv"});

  auto* hyperl = app.add_subcommand("hyperl", "minimum distance diagram of a matrix");
  hyperl->add_option("matrix", literal);
  hyperl->add_option("--mn", mn, "use the characterized diagram of circ(n,-1,...,-1)");
  hyperl->add_option("--cap", cap, "largest number of residue classes");
  add_common(hyperl, common, {"csv", "text", "json"});

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds for degree d, diameter k");
  bounds->add_option("d", d)->required();
  bounds->add_option("k", k)->required();
  add_common(bounds, common, {"text", "json"});

  std::vector<const char*> argv{"abelcay"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  std::ofstream file;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "cannot open " << common.output << '\n';
      return kUsageError;
    }
  }
  std::ostream& dest = common.output.empty() ? out : file;

  try {
    if (snf->parsed()) return cmd_snf(literal, common, dest);
    if (family->parsed()) return cmd_family(n, m, common, dest);
    if (diameter->parsed()) return cmd_diameter(group, gens, common, dest, err);
    if (search->parsed())
      return cmd_search(d, k, upper, abelian, degenerate, max_witnesses, common, dest, err);
    if (table->parsed()) return cmd_table(kmax, table_search, common, dest, err);
    if (hyperl->parsed()) {
      if (mn == 0 && literal.empty()) throw ParseError("hyperl needs a matrix or --mn n");
      return cmd_hyperl(literal, mn, cap, common, dest);
    }
    if (bounds->parsed()) return cmd_bounds(d, k, common, dest);
  } catch (const SingularMatrix& e) {
    err << "error: " << e.what() << '\n';
    return kSingular;
  } catch (const NotGenerating& e) {
    err << "error: " << e.what() << '\n';
    return kNotGenerating;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace abelcay::cli
