#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "rbd/catalog.hpp"
#include "rbd/design_io.hpp"
#include "rbd/efficiency.hpp"
#include "rbd/errors.hpp"
#include "rbd/families.hpp"
#include "rbd/isomorphism.hpp"
#include "rbd/search.hpp"
#include "rbd/sylvester.hpp"

namespace rbd::cli {

namespace {

using Props = std::vector<std::pair<std::string, std::string>>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

class Printer {
public:
  Printer(std::ostream& out, std::string format) : out_(out), format_(std::move(format)) {}

  void props(const Props& p) {
    separate();
    if (format_ == "csv") {
      out_ << "key,value\n";
      for (const auto& [k, v] : p) out_ << csv_field(k) << ',' << csv_field(v) << '\n';
    } else if (format_ == "table") {
      std::size_t w = 0;
      for (const auto& kv : p) w = std::max(w, kv.first.size());
      for (const auto& [k, v] : p) out_ << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    } else {
      for (const auto& [k, v] : p) out_ << k << ": " << v << '\n';
    }
  }

  void table(const Table& t) {
    separate();
    if (format_ == "csv") {
      write_csv_row(t.header);
      for (const auto& row : t.rows) write_csv_row(row);
    } else if (format_ == "table") {
      std::vector<std::size_t> w(t.header.size(), 0);
      for (std::size_t c = 0; c < w.size(); ++c) {
        w[c] = t.header[c].size();
        for (const auto& row : t.rows) w[c] = std::max(w[c], row[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (c) s += "  ";
          s += cells[c] + std::string(w[c] - cells[c].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out_ << s << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) line(row);
    } else {
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          out_ << (c ? " " : "") << t.header[c] << '=' << row[c];
        out_ << '\n';
      }
    }
  }

private:
  void write_csv_row(const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out_ << (c ? "," : "") << csv_field(cells[c]);
    out_ << '\n';
  }
  void separate() {
    if (sections_++) out_ << '\n';
  }

  std::ostream& out_;
  std::string format_;
  int sections_ = 0;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

struct Settings {
  int precision = 4;
  std::string format = "kv";
};

std::string decimal(const Rational& q, const Settings& s) { return format_decimal(q, s.precision); }

std::string decimal(double x, const Settings& s) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(std::max(s.precision, 1));
  o << x;
  return o.str();
}

ResolvableDesign load(const std::string& ref, std::istream& in) {
  if (ref == "-") {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return read_design(text);
  }
  if (auto entry = find_catalog(ref)) return entry->design.with_label(entry->name);
  if (std::filesystem::exists(ref)) return read_design_file(ref);
  throw std::runtime_error("'" + ref + "' is neither a catalog name nor a readable file");
}

std::string design_name(const ResolvableDesign& d, const std::string& ref) {
  return d.label().empty() ? ref : d.label();
}

void emit_design(const ResolvableDesign& d, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << write_design(d);
  else
    write_design_file(path, d);
}

int cmd_generate(const std::string& family, const std::string& variant_text, int r,
                 const std::string& output, std::ostream& out) {
  if (family != "gamma" && family != "delta")
    throw std::invalid_argument("family must be gamma or delta");
  const auto variant = parse_variant(variant_text);
  auto d = family == "gamma" ? gamma(r, variant) : delta(r, variant);
  emit_design(d, output, out);
  return kOk;
}

int cmd_evaluate(const std::string& ref, double sigma2, const Settings& s, std::istream& in,
                 std::ostream& out) {
  const auto d = load(ref, in);
  require_valid(d);
  const auto spectrum = efficiency_spectrum(d);
  Printer p(out, s.format);
  Props props{{"design", design_name(d, ref)},
              {"v", std::to_string(d.v())},
              {"k", std::to_string(d.k())},
              {"r", std::to_string(d.r())},
              {"connected", yes_no(spectrum.connected)}};
  if (spectrum.a_value) {
    const auto& a = *spectrum.a_value;
    props.push_back({"A", decimal(a, s)});
    props.push_back({"A_exact", to_fraction_string(a)});
    props.push_back({"A_float", decimal(a_value_float_oracle(d), s)});
    props.push_back({"average_variance", decimal(average_variance(a, d.r(), sigma2), s)});
  } else {
    props.push_back({"zero_eigenvalues", std::to_string(spectrum.zero_multiplicity)});
  }
  p.props(props);
  Table t{{"factor", "exact", "multiplicity"}, {}};
  for (const auto& f : spectrum.factors)
    t.rows.push_back({f.exact ? decimal(*f.exact, s) : decimal(f.value, s),
                      f.exact ? to_fraction_string(*f.exact) : "irrational",
                      std::to_string(f.multiplicity)});
  p.table(t);
  if (!spectrum.connected) throw DisconnectedError("design is disconnected");
  return kOk;
}

int cmd_search(const SearchConfig& config, const std::string& output, const std::string& trace_path,
               const Settings& s, std::ostream& out) {
  const auto result = anneal(config);
  Printer p(out, s.format);
  if (output.empty() || output == "-") {
    out << write_design(result.design) << '\n';
  } else {
    write_design_file(output, result.design);
  }
  p.props({{"seed", std::to_string(config.seed)},
           {"v", std::to_string(config.v)},
           {"k", std::to_string(config.k)},
           {"r", std::to_string(config.r)},
           {"restarts", std::to_string(config.restarts)},
           {"best_restart", std::to_string(result.best_restart)},
           {"A", decimal(result.a, s)},
           {"A_exact", to_fraction_string(result.a)},
           {"A_float", decimal(result.a_float, s)},
           {"objective", decimal(result.objective, s)},
           {"budget_exhausted", yes_no(result.budget_exhausted)}});
  Table restarts{{"restart", "A", "A_exact", "objective"}, {}};
  for (const auto& o : result.restarts)
    restarts.rows.push_back({std::to_string(o.restart), decimal(o.a, s), to_fraction_string(o.a),
                             decimal(o.objective, s)});
  p.table(restarts);

  std::ostringstream csv;
  csv << "step,temperature,current,best,acceptance\n";
  csv.precision(10);
  for (const auto& t : result.trace())
    csv << t.step << ',' << t.temperature << ',' << t.current << ',' << t.best << ','
        << t.acceptance << '\n';
  if (trace_path.empty()) {
    out << '\n' << csv.str();
  } else {
    std::ofstream f(trace_path);
    if (!f) throw std::runtime_error("cannot write " + trace_path);
    f << csv.str();
  }
  return kOk;
}

int cmd_robustness(const std::string& ref, bool exclude, const Settings& s, std::istream& in,
                   std::ostream& out) {
  const auto d = load(ref, in);
  const auto report = robustness(d, exclude);
  Printer p(out, s.format);
  Props props{{"design", design_name(d, ref)}, {"r", std::to_string(d.r())}};
  if (report.worst) {
    props.push_back({"worst", decimal(*report.worst, s)});
    props.push_back({"worst_exact", to_fraction_string(*report.worst)});
    props.push_back({"average", decimal(*report.average, s)});
    props.push_back({"average_exact", to_fraction_string(*report.average)});
  }
  props.push_back({"disconnected_deletions", std::to_string(report.disconnected_deletions)});
  p.props(props);
  Table t{{"deleted", "A", "A_exact"}, {}};
  for (std::size_t i = 0; i < report.per_replicate.size(); ++i) {
    const auto& a = report.per_replicate[i];
    t.rows.push_back({std::to_string(i + 1), a ? decimal(*a, s) : "disconnected",
                      a ? to_fraction_string(*a) : "-"});
  }
  p.table(t);
  if (!report.worst) throw DisconnectedError("some single-replicate deletion is disconnected");
  return kOk;
}

int cmd_isomorphic(const std::string& ref_a, const std::string& ref_b, bool witness,
                   const Settings& s, std::istream& in, std::ostream& out) {
  const auto a = load(ref_a, in);
  const auto b = load(ref_b, in);
  const auto iso = are_isomorphic(a, b);
  std::string spectra = "n/a";
  if (a.v() == b.v()) {
    try {
      spectra = yes_no(same_spectrum(a, b));
    } catch (const DisconnectedError&) {
      spectra = "disconnected";
    }
  }
  const auto conc = concurrence_equivalent(concurrence_matrix(a), concurrence_matrix(b));
  Printer p(out, s.format);
  p.props({{"first", design_name(a, ref_a)},
           {"second", design_name(b, ref_b)},
           {"isomorphic", yes_no(iso.isomorphic)},
           {"reason", iso.reason},
           {"same_spectrum", spectra},
           {"concurrence_equivalent", yes_no(conc.isomorphic)}});
  if (witness && iso.isomorphic) {
    Table t{{"variety", "maps_to"}, {}};
    for (std::size_t i = 0; i < iso.variety_map.size(); ++i)
      t.rows.push_back({std::to_string(i + 1), std::to_string(iso.variety_map[i] + 1)});
    p.table(t);
  }
  return iso.isomorphic ? kOk : kNegative;
}

int cmd_autorder(const std::string& ref, const Settings& s, std::istream& in, std::ostream& out) {
  const auto d = load(ref, in);
  Printer p(out, s.format);
  p.props({{"design", design_name(d, ref)}, {"automorphism_order", automorphism_order(d).get_str()}});
  return kOk;
}

int cmd_sylvester_check(const std::string& ref, bool witness, const Settings& s, std::istream& in,
                        std::ostream& out) {
  const auto d = load(ref, in);
  const auto check = is_sylvester_design(d);
  Printer p(out, s.format);
  p.props({{"design", design_name(d, ref)},
           {"sylvester_design", yes_no(check.is_sylvester)},
           {"reason", check.reason}});
  if (witness && check.is_sylvester) {
    Table t{{"variety", "row", "column"}, {}};
    for (std::size_t i = 0; i < check.witness.size(); ++i) {
      const auto cell = Cell::of(check.witness[i]);
      t.rows.push_back({std::to_string(i + 1), std::to_string(cell.row), std::to_string(cell.column)});
    }
    p.table(t);
  }
  return check.is_sylvester ? kOk : kNegative;
}

int cmd_dual(const std::string& ref, const std::string& output, const Settings& s,
             std::istream& in, std::ostream& out) {
  const auto d = load(ref, in);
  const auto du = dual(d);
  const auto& bd = du.design;
  Props props{{"design", design_name(d, ref)},
              {"dual_varieties", std::to_string(bd.v())},
              {"dual_blocks", std::to_string(bd.block_count())},
              {"dual_block_size", bd.equal_block_size() ? std::to_string(*bd.equal_block_size()) : "mixed"},
              {"dual_resolvable", yes_no(du.resolvable)}};
  if (bd.block_count() == 36 && bd.equal_block_size())
    props.push_back({"semi_latin_square", yes_no(is_semi_latin(bd).has_value())});
  try {
    const auto roy = roy_check(d);
    props.push_back({"A", decimal(roy.a, s)});
    props.push_back({"A_dual", decimal(roy.a_dual, s)});
    props.push_back({"A_dual_exact", to_fraction_string(roy.a_dual)});
    props.push_back({"roy_residual", to_fraction_string(roy.residual)});
  } catch (const DisconnectedError&) {
    props.push_back({"roy_residual", "disconnected"});
  }
  Printer p(out, s.format);
  p.props(props);
  if (!output.empty()) {
    if (!du.resolvable) throw ShapeError("the dual is not resolvable, so it has no design text");
    std::vector<Replicate> reps;
    for (const auto& group : du.resolution) {
      Replicate rep;
      for (int b : group) rep.push_back(bd.block(static_cast<std::size_t>(b)));
      reps.push_back(std::move(rep));
    }
    const int k = *bd.equal_block_size();
    emit_design(ResolvableDesign(bd.v(), k, std::move(reps), "dual of " + design_name(d, ref)),
                output, out);
  }
  return kOk;
}

int cmd_catalog(const Settings& s, std::ostream& out) {
  Table t{{"name", "v", "k", "r", "A", "provenance"}, {}};
  for (const auto& e : catalog())
    t.rows.push_back({e.name, std::to_string(e.design.v()), std::to_string(e.design.k()),
                      std::to_string(e.design.r()), decimal(a_value(e.design), s), e.provenance});
  Printer(out, s.format).table(t);
  return kOk;
}

int cmd_export(const std::vector<std::string>& names, bool all, const std::string& dir,
               std::ostream& out) {
  std::vector<std::string> chosen = names;
  if (all)
    for (const auto& e : catalog()) chosen.push_back(e.name);
  if (chosen.empty()) throw std::invalid_argument("name at least one catalog design, or --all");
  for (const auto& name : chosen) {
    const auto entry = find_catalog(name);
    if (!entry) throw std::invalid_argument("no catalog design named '" + name + "'");
    const auto d = entry->design.with_label(entry->name);
    if (dir.empty()) {
      if (&name != &chosen.front()) out << '\n';
      out << write_design(d);
    } else {
      std::filesystem::create_directories(dir);
      write_design_file((std::filesystem::path(dir) / (name + ".txt")).string(), d);
    }
  }
  return kOk;
}

}  // namespace

double parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad duration '" + text + "'");
  }
  const auto unit = text.substr(used);
  double scale = 0.0;
  if (unit.empty() || unit == "s") scale = 1.0;
  else if (unit == "ms") scale = 1e-3;
  else if (unit == "m" || unit == "min") scale = 60.0;
  else if (unit == "h") scale = 3600.0;
  else throw std::invalid_argument("bad duration unit in '" + text + "'");
  if (value < 0.0) throw std::invalid_argument("duration must be non-negative");
  return value * scale;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, evaluate and search resolvable block designs", "rbdesign"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--precision", settings.precision, "Decimal places in reports")
      ->check(CLI::Range(0, 40));
  app.add_option("--format", settings.format, "Report format")
      ->check(CLI::IsMember({"kv", "table", "csv"}));

  std::function<int()> action;
  auto sub = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->fallthrough();
    return c;
  };

  std::string family, variant = "plain", output;
  int r = 0;
  auto* gen = sub("generate", "Construct a family member and print it");
  gen->add_option("--family", family, "gamma or delta")->required();
  gen->add_option("--variant", variant, "plain, R, C or RC");
  gen->add_option("--r", r, "Number of replicates")->required();
  gen->add_option("-o,--output", output, "Write the design to a file");
  gen->callback([&] { action = [&] { return cmd_generate(family, variant, r, output, out); }; });

  std::string design, second;
  double sigma2 = 1.0;
  auto* eval = sub("evaluate", "Exact A-value and canonical efficiency factors");
  eval->add_option("design", design, "Catalog name, file, or - for stdin")->required();
  eval->add_option("--sigma2", sigma2, "Error variance for the average pairwise variance")
      ->check(CLI::PositiveNumber);
  eval->callback([&] { action = [&] { return cmd_evaluate(design, sigma2, settings, in, out); }; });

  SearchConfig config;
  std::string budget = "0", trace_path;
  auto* search = sub("search", "Simulated-annealing search for an efficient resolvable design");
  search->add_option("--v", config.v, "Varieties")->capture_default_str();
  search->add_option("--k", config.k, "Block size")->capture_default_str();
  search->add_option("--r", config.r, "Replicates")->capture_default_str();
  search->add_option("--restarts", config.restarts, "Independent restarts")->capture_default_str();
  search->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  search->add_option("--budget", budget, "Wall-clock budget, e.g. 60s (0 = none)");
  search->add_option("--initial-temperature", config.initial_temperature)->capture_default_str();
  search->add_option("--final-temperature", config.final_temperature)->capture_default_str();
  search->add_option("--cooling-rate", config.cooling_rate)->capture_default_str();
  search->add_option("--moves", config.moves_per_temperature, "Proposals per temperature")
      ->capture_default_str();
  search->add_option("--refresh", config.refresh_interval, "Accepted moves between full refreshes")
      ->capture_default_str();
  search->add_option("-o,--output", output, "Write the best design to a file");
  search->add_option("--trace", trace_path, "Write the objective trace CSV to a file");
  search->callback([&] {
    action = [&] {
      config.time_budget_seconds = parse_duration(budget);
      config.validate();
      return cmd_search(config, output, trace_path, settings, out);
    };
  });

  bool exclude = false;
  auto* rob = sub("robustness", "A-values after losing each single replicate");
  rob->add_option("design", design)->required();
  rob->add_flag("--exclude-disconnected", exclude, "Skip deletions that disconnect the design");
  rob->callback([&] { action = [&] { return cmd_robustness(design, exclude, settings, in, out); }; });

  bool witness = false;
  auto* iso = sub("isomorphic", "Decide whether two designs are isomorphic");
  iso->add_option("first", design)->required();
  iso->add_option("second", second)->required();
  iso->add_flag("--witness", witness, "Print the variety correspondence");
  iso->callback([&] {
    action = [&] { return cmd_isomorphic(design, second, witness, settings, in, out); };
  });

  auto* aut = sub("autorder", "Order of the automorphism group");
  aut->add_option("design", design)->required();
  aut->callback([&] { action = [&] { return cmd_autorder(design, settings, in, out); }; });

  auto* syl = sub("sylvester-check", "Is the concurrence matrix 7I + J + Adj of the Sylvester graph?");
  syl->add_option("design", design)->required();
  syl->add_flag("--witness", witness, "Print the variety-to-cell correspondence");
  syl->callback([&] {
    action = [&] { return cmd_sylvester_check(design, witness, settings, in, out); };
  });

  auto* du = sub("dual", "Dual design, semi-Latin check and the design/dual A identity");
  du->add_option("design", design)->required();
  du->add_option("-o,--output", output, "Write the dual design (when resolvable)");
  du->callback([&] { action = [&] { return cmd_dual(design, output, settings, in, out); }; });

  auto* cat = sub("catalog", "List the built-in designs");
  cat->callback([&] { action = [&] { return cmd_catalog(settings, out); }; });

  std::vector<std::string> names;
  bool all = false;
  std::string dir;
  auto* exp = sub("export", "Print or write catalog designs");
  exp->add_option("names", names);
  exp->add_flag("--all", all);
  exp->add_option("--dir", dir, "Write one file per design into this directory");
  exp->callback([&] { action = [&] { return cmd_export(names, all, dir, out); }; });

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kShape;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace rbd::cli
