#include "crn/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "crn/kinetics.hpp"
#include "crn/parser.hpp"
#include "crn/report.hpp"

namespace crn {

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::string parts;
  std::string basis;
  std::string contains;
  std::string rates;
  std::string point;
  double tol = kDefaultSteadyStateTolerance;
  bool show_graph = false;
  bool use_decomposition = false;
};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

double parse_number(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) throw UsageError("invalid number '" + text + "' for " + what);
  return v;
}

std::vector<std::pair<std::string, double>> parse_assignments(const std::string& spec, const std::string& what) {
  std::vector<std::pair<std::string, double>> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(start, end - start);
    start = end + 1;
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in " + what);
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=value in " + what + ", got '" + item + "'");
    out.emplace_back(item.substr(0, eq), parse_number(item.substr(eq + 1), what));
  }
  return out;
}

// Keys are reaction labels, or k<i> for the i-th reaction (1-based).
std::vector<double> resolve_rates(const Network& net, const std::string& spec) {
  std::vector<std::optional<double>> rates(net.reaction_count());
  for (const auto& [key, value] : parse_assignments(spec, "--rates")) {
    std::optional<std::size_t> j = net.find_reaction(key);
    if (!j && key.size() > 1 && key[0] == 'k') {
      std::size_t idx = 0;
      const auto [p, ec] = std::from_chars(key.data() + 1, key.data() + key.size(), idx);
      if (ec == std::errc{} && p == key.data() + key.size() && idx >= 1 && idx <= net.reaction_count()) j = idx - 1;
    }
    if (!j) throw UsageError("unknown reaction '" + key + "' in --rates");
    if (rates[*j]) throw UsageError("rate for " + net.reaction_label(*j) + " given twice");
    if (!(value > 0) || !std::isfinite(value))
      throw UsageError("rate for " + net.reaction_label(*j) + " must be positive");
    rates[*j] = value;
  }
  std::vector<double> out;
  for (std::size_t j = 0; j < rates.size(); ++j) {
    if (!rates[j]) throw UsageError("missing rate for " + net.reaction_label(j));
    out.push_back(*rates[j]);
  }
  return out;
}

std::vector<double> resolve_point(const Network& net, const std::string& spec) {
  std::vector<std::optional<double>> x(net.species_count());
  for (const auto& [key, value] : parse_assignments(spec, "--point")) {
    const auto s = net.find_species(key);
    if (!s) throw UsageError("unknown species '" + key + "' in --point");
    if (x[*s]) throw UsageError("coordinate for " + key + " given twice");
    if (!(value > 0) || !std::isfinite(value)) throw UsageError("coordinate for " + key + " must be positive");
    x[*s] = value;
  }
  std::vector<double> out;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (!x[s]) throw UsageError("missing coordinate for " + net.species()[s].name);
    out.push_back(*x[s]);
  }
  return out;
}

std::optional<BasisSelection> resolve_basis(const Network& net, const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  try {
    return basis_from_rows(reaction_vector_matrix(net), parse_label_list(net, spec));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--basis: ") + e.what());
  }
}

std::string comma_list(const std::vector<std::string>& labels) {
  std::string line;
  for (std::size_t k = 0; k < labels.size(); ++k) line += (k ? "," : "") + labels[k];
  return line;
}

std::vector<std::size_t> every_reaction(const Network& net) {
  std::vector<std::size_t> all(net.reaction_count());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  return all;
}

std::string part_line(std::size_t i, const std::vector<std::string>& labels) {
  return "P" + std::to_string(i + 1) + ": " + comma_list(labels);
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const Network net = parse_network_file(o.file);
  AnalyzeOptions ao;
  ao.basis = resolve_basis(net, o.basis);
  if (!o.parts.empty()) ao.parts = parse_partition(net, o.parts);
  const AnalysisReport r = analyze(net, ao);
  if (o.format == "json")
    out << to_json(r).dump(2) << '\n';
  else
    out << render_text(r);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Network net = parse_network_file(o.file);

  if (!o.contains.empty()) {
    const std::vector<std::size_t> chosen = parse_label_list(net, o.contains);
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < net.reaction_count(); ++j)
      if (!std::binary_search(chosen.begin(), chosen.end(), j)) rest.push_back(j);
    ReactionPartition parts{chosen};
    if (!rest.empty()) parts.push_back(rest);
    const IndependenceSummary s = summarize(verify_decomposition(net, parts));
    if (o.format == "json") {
      out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                            {"part", labels_of(net, chosen)},
                            {"independence", to_json(s)}}
                 .dump(2)
          << '\n';
    } else {
      out << "{" << comma_list(labels_of(net, chosen)) << "} | complement: "
          << (s.independent ? "independent" : "not independent") << '\n'
          << render_independence(s);
    }
    return s.independent ? kExitOk : kExitNegative;
  }

  const auto basis = resolve_basis(net, o.basis);
  const BasisSelection sel = basis ? *basis : select_basis_rows(reaction_vector_matrix(net));
  const auto d = find_independent_decomposition(net, sel);
  const GraphReport g = describe_graph(net, build_coordinate_graph(net, sel));

  if (o.format == "json") {
    nlohmann::json parts = nlohmann::json::array();
    if (d)
      for (const auto& p : d->parts) parts.push_back(labels_of(net, p));
    nlohmann::json j{{"schema_version", kReportSchemaVersion}, {"trivial_only", !d.has_value()}, {"parts", parts}};
    if (o.show_graph) j["coordinate_graph"] = to_json(g);
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  if (o.show_graph) {
    out << "basis: " << (g.basis.empty() ? "" : g.basis.front());
    for (std::size_t i = 1; i < g.basis.size(); ++i) out << ", " << g.basis[i];
    out << '\n';
    for (const auto& rel : g.relations) out << render_relation(rel, g.basis) << '\n';
    out << "components: " << g.components.size() << '\n';
  }
  if (!d) {
    out << "trivial only\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < d->parts.size(); ++i) out << part_line(i, labels_of(net, d->parts[i])) << '\n';
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Network net = parse_network_file(o.file);
  const ReactionPartition parts = parse_partition(net, o.parts);
  const IndependenceSummary s = summarize(verify_decomposition(net, parts));
  if (o.format == "json")
    out << to_json(s).dump(2) << '\n';
  else
    out << render_independence(s);
  return s.independent ? kExitOk : kExitNegative;
}

int cmd_numbers(const Options& o, std::ostream& out) {
  const Network net = parse_network_file(o.file);
  ReactionPartition parts;
  if (!o.parts.empty()) {
    parts = canonical_partition(parse_partition(net, o.parts));
  } else if (o.use_decomposition) {
    if (auto d = find_independent_decomposition(net, resolve_basis(net, o.basis).value_or(
                                                         select_basis_rows(reaction_vector_matrix(net)))))
      parts = d->parts;
  }

  std::vector<std::string> headers{"N"};
  std::vector<NetworkNumbers> columns{network_numbers(net)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    headers.push_back("N" + std::to_string(i + 1));
    columns.push_back(network_numbers(subnetwork(net, parts[i])));
  }

  if (o.format == "json") {
    nlohmann::json cols = nlohmann::json::array();
    for (std::size_t i = 0; i < columns.size(); ++i) {
      nlohmann::json c = to_json(columns[i]);
      c["name"] = headers[i];
      c["reaction_labels"] = i == 0 ? labels_of(net, every_reaction(net)) : labels_of(net, parts[i - 1]);
      cols.push_back(std::move(c));
    }
    out << nlohmann::json{{"schema_version", kReportSchemaVersion}, {"columns", cols}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i)
      out << "N" << i + 1 << ": " << comma_list(labels_of(net, parts[i])) << '\n';
    if (!parts.empty()) out << '\n';
    out << render_numbers_table(headers, columns);
  }
  return kExitOk;
}

int cmd_steady_state(const Options& o, std::ostream& out) {
  const Network net = parse_network_file(o.file);
  if (o.rates.empty()) throw UsageError("--rates is required");
  if (o.point.empty()) throw UsageError("--point is required");
  if (std::isnan(o.tol) || o.tol < 0) throw UsageError("--tol must be nonnegative");
  const Kinetics kin = Kinetics::mass_action(net, resolve_rates(net, o.rates));
  const std::vector<double> x = resolve_point(net, o.point);
  const std::vector<double> f = species_formation_rate(net, kin, x);
  const std::vector<double> k = reaction_rates(net, kin, x);
  const bool steady = is_steady_state(net, kin, x, o.tol);

  ReactionPartition parts;
  if (!o.parts.empty()) parts = canonical_partition(parse_partition(net, o.parts));
  std::vector<bool> part_steady;
  for (const auto& p : parts) part_steady.push_back(is_steady_state(net, kin, x, p, o.tol));

  if (o.format == "json") {
    nlohmann::json fj = nlohmann::json::object(), kj = nlohmann::json::object();
    for (std::size_t s = 0; s < f.size(); ++s) fj[net.species()[s].name] = f[s];
    for (std::size_t j = 0; j < k.size(); ++j) kj[net.reaction_label(j)] = k[j];
    nlohmann::json pj = nlohmann::json::array();
    for (std::size_t i = 0; i < parts.size(); ++i)
      pj.push_back({{"reactions", labels_of(net, parts[i])}, {"steady_state", static_cast<bool>(part_steady[i])}});
    out << nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"species_formation_rate", fj},
                          {"reaction_rates", kj},
                          {"tolerance", std::isinf(o.tol) ? nlohmann::json("inf") : nlohmann::json(o.tol)},
                          {"steady_state", steady},
                          {"parts", pj}}
                  .dump(2)
        << '\n';
  } else {
    out << "f(x):\n";
    for (std::size_t s = 0; s < f.size(); ++s) out << "  " << net.species()[s].name << " = " << format_double(f[s]) << '\n';
    out << "K(x):\n";
    for (std::size_t j = 0; j < k.size(); ++j) out << "  " << net.reaction_label(j) << " = " << format_double(k[j]) << '\n';
    for (std::size_t i = 0; i < parts.size(); ++i)
      out << part_line(i, labels_of(net, parts[i])) << ": " << (part_steady[i] ? "steady" : "not steady") << '\n';
    out << (steady ? "steady" : "not steady") << '\n';
  }
  return steady ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent decompositions and network numbers of chemical reaction networks", "crn"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Reaction network file (.crn)")->required();
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Full report: numbers, coordinate graph, decomposition");
  add_common(analyze_cmd);
  analyze_cmd->add_option("--basis", o.basis, "Basis reactions for the coordinate graph, e.g. R1,R4,R5,R6");
  analyze_cmd->add_option("--parts", o.parts, "Analyze this partition instead, e.g. \"R1,R2|R3,R4\"");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Finest independent decomposition from the coordinate graph");
  add_common(decompose_cmd);
  decompose_cmd->add_option("--basis", o.basis, "Basis reactions for the coordinate graph");
  decompose_cmd->add_option("--contains", o.contains, "Check that these reactions versus the rest are independent");
  decompose_cmd->add_flag("--show-graph", o.show_graph, "Print basis, relations and component count");

  CLI::App* check_cmd = app.add_subcommand("check", "Verify (incidence) independence of a partition");
  add_common(check_cmd);
  check_cmd->add_option("--parts", o.parts, "Partition, e.g. \"R1,R2|R3,R4\"")->required();

  CLI::App* numbers_cmd = app.add_subcommand("numbers", "Network numbers table");
  add_common(numbers_cmd);
  numbers_cmd->add_option("--parts", o.parts, "Add one column per part");
  numbers_cmd->add_flag("--decomposition", o.use_decomposition, "Add columns for the coordinate-graph decomposition");
  numbers_cmd->add_option("--basis", o.basis, "Basis used with --decomposition");

  CLI::App* steady_cmd = app.add_subcommand("steady-state", "Check a point against mass-action kinetics");
  add_common(steady_cmd);
  steady_cmd->add_option("--rates", o.rates, "Rate constants, e.g. R1=1,R2=1 or k1=1,k2=1");
  steady_cmd->add_option("--point", o.point, "Species concentrations, e.g. X1=2,X2=3");
  steady_cmd->add_option("--tol", o.tol, "Relative tolerance (inf accepted)");
  steady_cmd->add_option("--parts", o.parts, "Also check each part of this partition");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (numbers_cmd->parsed()) return cmd_numbers(o, out);
    if (steady_cmd->parsed()) return cmd_steady_state(o, out);
  } catch (const ParseError& e) {
    err << "error: " << o.file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const CrnError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace crn
