#include "crn/report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

namespace crn {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string join_counts(const std::vector<std::size_t>& items, std::string_view sep) {
  std::vector<std::string> s;
  for (std::size_t v : items) s.push_back(std::to_string(v));
  return join(s, sep);
}

std::string rank_equation(std::size_t whole, const std::vector<std::size_t>& parts) {
  const std::size_t sum = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  return std::to_string(whole) + (whole == sum ? " = " : " < ") + join_counts(parts, " + ");
}

}  // namespace

std::vector<std::string> labels_of(const Network& net, const std::vector<std::size_t>& reactions) {
  std::vector<std::string> out;
  for (std::size_t j : reactions) out.push_back(net.reaction_label(j));
  return out;
}

std::vector<std::size_t> parse_label_list(const Network& net, std::string_view spec) {
  std::vector<std::size_t> out;
  for (const std::string& label : split(spec, ',')) {
    if (label.empty()) throw UsageError("empty reaction label in '" + std::string(spec) + "'");
    const auto j = net.find_reaction(label);
    if (!j) throw UsageError("unknown reaction label '" + label + "'");
    if (std::find(out.begin(), out.end(), *j) != out.end())
      throw UsageError("reaction label '" + label + "' listed twice");
    out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReactionPartition parse_partition(const Network& net, std::string_view spec) {
  ReactionPartition parts;
  std::set<std::size_t> seen;
  for (const std::string& part : split(spec, '|')) {
    std::vector<std::size_t> members = parse_label_list(net, part);
    for (std::size_t j : members)
      if (!seen.insert(j).second)
        throw UsageError("reaction label '" + net.reaction_label(j) + "' appears in two parts");
    parts.push_back(std::move(members));
  }
  std::vector<std::string> missing;
  for (std::size_t j = 0; j < net.reaction_count(); ++j)
    if (!seen.contains(j)) missing.push_back(net.reaction_label(j));
  if (!missing.empty()) throw UsageError("partition does not mention " + join(missing, ", "));
  return parts;
}

GraphReport describe_graph(const Network& net, const CoordinateGraph& g) {
  GraphReport out;
  out.basis = g.vertex_labels;
  for (const Relation& rel : g.relations) {
    RelationReport rr{net.reaction_label(rel.reaction), {}};
    for (const Rational& q : rel.coefficients) rr.coefficients.push_back(to_string(q));
    out.relations.push_back(std::move(rr));
  }
  for (const auto& [a, b] : g.edges) out.edges.emplace_back(g.vertex_labels[a], g.vertex_labels[b]);
  for (const auto& comp : connected_components(g)) {
    std::vector<std::string> labels;
    for (std::size_t v : comp) labels.push_back(g.vertex_labels[v]);
    out.components.push_back(std::move(labels));
  }
  return out;
}

IndependenceSummary summarize(const IndependenceReport& rep) {
  return IndependenceSummary{rep.network_rank,           rep.part_ranks,           rep.independent,
                             rep.incidence_network_rank, rep.incidence_part_ranks, rep.incidence_independent};
}

AnalysisReport analyze(const Network& net, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.network = network_numbers(net);
  r.deficiency_zero = deficiency_zero_check(net);
  r.deficiency_one = deficiency_one_check(net);

  const BasisSelection basis = options.basis ? *options.basis : select_basis_rows(reaction_vector_matrix(net));
  const CoordinateGraph g = build_coordinate_graph(net, basis);
  r.coordinate_graph = describe_graph(net, g);
  r.trivial_only = r.coordinate_graph.components.size() <= 1;

  ReactionPartition parts;
  if (options.parts) {
    validate_partition(*options.parts, net.reaction_count());
    parts = canonical_partition(*options.parts);
    r.partition_source = "user";
  } else if (auto d = find_independent_decomposition(net, basis)) {
    parts = d->parts;
    r.partition_source = "coordinate_graph";
  } else {
    r.partition_source = "none";
  }

  for (const auto& part : parts) {
    const Network sub = subnetwork(net, part);
    r.parts.push_back(PartReport{labels_of(net, part), network_numbers(sub), deficiency_zero_check(sub),
                                 deficiency_one_check(sub)});
  }
  if (!parts.empty()) r.independence = summarize(verify_decomposition(net, parts));
  return r;
}

json to_json(const NetworkNumbers& nn) {
  return json{{"species", nn.species},
              {"complexes", nn.complexes},
              {"reactions", nn.reactions},
              {"irreversible_reactions", nn.irreversible_reactions},
              {"linkage_classes", nn.linkage_classes},
              {"strong_linkage_classes", nn.strong_linkage_classes},
              {"terminal_strong_linkage_classes", nn.terminal_strong_linkage_classes},
              {"rank_of_network", nn.rank},
              {"deficiency", nn.deficiency},
              {"weakly_reversible", nn.weakly_reversible}};
}

json to_json(const DeficiencyVerdict& v) {
  json conditions = json::array();
  for (const auto& [name, holds] : v.conditions) conditions.push_back({{"name", name}, {"holds", holds}});
  return json{{"theorem", to_string(v.theorem)},
              {"applicable", v.applicable},
              {"conditions", conditions},
              {"conclusion", to_string(v.conclusion)},
              {"statement", v.statement}};
}

json to_json(const IndependenceSummary& s) {
  return json{{"network_rank", s.network_rank},
              {"part_ranks", s.part_ranks},
              {"independent", s.independent},
              {"incidence_network_rank", s.incidence_network_rank},
              {"incidence_part_ranks", s.incidence_part_ranks},
              {"incidence_independent", s.incidence_independent}};
}

json to_json(const GraphReport& g) {
  json relations = json::array();
  for (const auto& rel : g.relations)
    relations.push_back({{"reaction", rel.reaction}, {"coefficients", rel.coefficients}});
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return json{{"basis", g.basis}, {"relations", relations}, {"edges", edges}, {"components", g.components}};
}

json to_json(const AnalysisReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"reactions", p.reactions},
                     {"numbers", to_json(p.numbers)},
                     {"deficiency_zero", to_json(p.deficiency_zero)},
                     {"deficiency_one", to_json(p.deficiency_one)}});
  return json{{"schema_version", r.schema_version},
              {"network", to_json(r.network)},
              {"deficiency_zero", to_json(r.deficiency_zero)},
              {"deficiency_one", to_json(r.deficiency_one)},
              {"coordinate_graph", to_json(r.coordinate_graph)},
              {"trivial_only", r.trivial_only},
              {"partition_source", r.partition_source},
              {"parts", parts},
              {"independence", r.independence ? to_json(*r.independence) : json(nullptr)}};
}

namespace {

NetworkNumbers numbers_from_json(const json& j) {
  NetworkNumbers nn;
  nn.species = j.at("species").get<std::size_t>();
  nn.complexes = j.at("complexes").get<std::size_t>();
  nn.reactions = j.at("reactions").get<std::size_t>();
  nn.irreversible_reactions = j.at("irreversible_reactions").get<std::size_t>();
  nn.linkage_classes = j.at("linkage_classes").get<std::size_t>();
  nn.strong_linkage_classes = j.at("strong_linkage_classes").get<std::size_t>();
  nn.terminal_strong_linkage_classes = j.at("terminal_strong_linkage_classes").get<std::size_t>();
  nn.rank = j.at("rank_of_network").get<std::size_t>();
  nn.deficiency = j.at("deficiency").get<std::size_t>();
  nn.weakly_reversible = j.at("weakly_reversible").get<bool>();
  return nn;
}

DeficiencyVerdict verdict_from_json(const json& j) {
  DeficiencyVerdict v;
  v.theorem = theorem_from_string(j.at("theorem").get<std::string>());
  v.applicable = j.at("applicable").get<bool>();
  for (const auto& c : j.at("conditions"))
    v.conditions.emplace_back(c.at("name").get<std::string>(), c.at("holds").get<bool>());
  v.conclusion = conclusion_from_string(j.at("conclusion").get<std::string>());
  v.statement = j.at("statement").get<std::string>();
  return v;
}

}  // namespace

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.schema_version = j.at("schema_version").get<std::string>();
  if (r.schema_version != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version " + r.schema_version);
  r.network = numbers_from_json(j.at("network"));
  r.deficiency_zero = verdict_from_json(j.at("deficiency_zero"));
  r.deficiency_one = verdict_from_json(j.at("deficiency_one"));

  const json& g = j.at("coordinate_graph");
  r.coordinate_graph.basis = g.at("basis").get<std::vector<std::string>>();
  for (const auto& rel : g.at("relations"))
    r.coordinate_graph.relations.push_back(
        {rel.at("reaction").get<std::string>(), rel.at("coefficients").get<std::vector<std::string>>()});
  for (const auto& e : g.at("edges"))
    r.coordinate_graph.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  r.coordinate_graph.components = g.at("components").get<std::vector<std::vector<std::string>>>();

  r.trivial_only = j.at("trivial_only").get<bool>();
  r.partition_source = j.at("partition_source").get<std::string>();
  for (const auto& p : j.at("parts"))
    r.parts.push_back(PartReport{p.at("reactions").get<std::vector<std::string>>(), numbers_from_json(p.at("numbers")),
                                 verdict_from_json(p.at("deficiency_zero")), verdict_from_json(p.at("deficiency_one"))});
  if (const json& ind = j.at("independence"); !ind.is_null()) {
    IndependenceSummary s;
    s.network_rank = ind.at("network_rank").get<std::size_t>();
    s.part_ranks = ind.at("part_ranks").get<std::vector<std::size_t>>();
    s.independent = ind.at("independent").get<bool>();
    s.incidence_network_rank = ind.at("incidence_network_rank").get<std::size_t>();
    s.incidence_part_ranks = ind.at("incidence_part_ranks").get<std::vector<std::size_t>>();
    s.incidence_independent = ind.at("incidence_independent").get<bool>();
    r.independence = std::move(s);
  }
  return r;
}

std::string render_numbers_table(const std::vector<std::string>& headers, const std::vector<NetworkNumbers>& columns) {
  const std::vector<std::pair<std::string, std::size_t NetworkNumbers::*>> rows = {
      {"# species", &NetworkNumbers::species},
      {"# complexes", &NetworkNumbers::complexes},
      {"# reactions", &NetworkNumbers::reactions},
      {"# irreversible reactions", &NetworkNumbers::irreversible_reactions},
      {"# linkage classes", &NetworkNumbers::linkage_classes},
      {"rank of network", &NetworkNumbers::rank},
      {"deficiency", &NetworkNumbers::deficiency},
  };
  constexpr int label_width = 26;
  std::vector<int> widths;
  for (const auto& h : headers) widths.push_back(std::max<int>(4, static_cast<int>(h.size())) + 2);

  std::ostringstream os;
  os << std::left << std::setw(label_width) << "" << std::right;
  for (std::size_t c = 0; c < headers.size(); ++c) os << std::setw(widths[c]) << headers[c];
  os << '\n';
  for (const auto& [label, field] : rows) {
    os << std::left << std::setw(label_width) << label << std::right;
    for (std::size_t c = 0; c < columns.size(); ++c) os << std::setw(widths[c]) << columns[c].*field;
    os << '\n';
  }
  return os.str();
}

std::string render_verdict(const DeficiencyVerdict& v) {
  std::ostringstream os;
  os << (v.theorem == Theorem::deficiency_zero ? "Deficiency zero theorem: " : "Deficiency one theorem: ")
     << (v.applicable ? "applicable, " + to_string(v.conclusion) : std::string("not applicable")) << '\n';
  for (const auto& [name, holds] : v.conditions) os << "  " << name << ": " << yes_no(holds) << '\n';
  os << "  " << v.statement << '\n';
  return os.str();
}

std::string render_independence(const IndependenceSummary& s) {
  std::ostringstream os;
  os << "network rank s = " << s.network_rank << '\n'
     << "part ranks s_i = " << join_counts(s.part_ranks, ", ") << '\n'
     << "independent: " << yes_no(s.independent) << " (" << rank_equation(s.network_rank, s.part_ranks) << ")\n"
     << "incidence rank = " << s.incidence_network_rank << '\n'
     << "incidence part ranks = " << join_counts(s.incidence_part_ranks, ", ") << '\n'
     << "incidence independent: " << yes_no(s.incidence_independent) << " ("
     << rank_equation(s.incidence_network_rank, s.incidence_part_ranks) << ")\n";
  return os.str();
}

std::string render_relation(const RelationReport& rel, const std::vector<std::string>& basis) {
  std::string out = rel.reaction + " =";
  bool first = true;
  for (std::size_t v = 0; v < rel.coefficients.size(); ++v) {
    std::string c = rel.coefficients[v];
    if (c == "0") continue;
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first)
      out += negative ? " -" : " ";
    else
      out += negative ? " - " : " + ";
    if (c != "1") out += c + " ";
    out += basis.at(v);
    first = false;
  }
  if (first) out += " 0";
  return out;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "Network numbers\n" << render_numbers_table({"N"}, {r.network});
  os << "strong linkage classes: " << r.network.strong_linkage_classes << '\n'
     << "terminal strong linkage classes: " << r.network.terminal_strong_linkage_classes << '\n'
     << "weakly reversible: " << yes_no(r.network.weakly_reversible) << "\n\n";
  os << render_verdict(r.deficiency_zero) << render_verdict(r.deficiency_one) << '\n';

  const GraphReport& g = r.coordinate_graph;
  os << "Coordinate graph\n  basis: " << join(g.basis, ", ") << '\n';
  os << "  relations:" << (g.relations.empty() ? " none\n" : "\n");
  for (const auto& rel : g.relations) os << "    " << render_relation(rel, g.basis) << '\n';
  os << "  edges:";
  if (g.edges.empty()) os << " none";
  for (const auto& [a, b] : g.edges) os << " (" << a << ", " << b << ")";
  os << "\n  components:";
  for (const auto& comp : g.components) os << " {" << join(comp, ", ") << "}";
  os << "\n\n";

  if (r.trivial_only)
    os << "Only the trivial independent decomposition exists.\n";
  else
    os << "A nontrivial independent decomposition exists.\n";
  if (r.parts.empty()) return os.str();

  os << "\nDecomposition (" << (r.partition_source == "user" ? "given" : "coordinate graph") << ")\n";
  std::vector<std::string> headers{"N"};
  std::vector<NetworkNumbers> columns{r.network};
  for (std::size_t i = 0; i < r.parts.size(); ++i) {
    os << "  P" << i + 1 << ": " << join(r.parts[i].reactions, ",") << '\n';
    headers.push_back("N" + std::to_string(i + 1));
    columns.push_back(r.parts[i].numbers);
  }
  if (r.independence) os << '\n' << render_independence(*r.independence);
  os << '\n' << render_numbers_table(headers, columns);
  for (std::size_t i = 0; i < r.parts.size(); ++i)
    os << "\nN" << i + 1 << '\n' << render_verdict(r.parts[i].deficiency_zero) << render_verdict(r.parts[i].deficiency_one);
  return os.str();
}

}  // namespace crn
