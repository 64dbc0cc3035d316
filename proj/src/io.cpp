#include "idealis/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <type_traits>

namespace idealis {

namespace {

std::string na() { return "n/a (no supported route)"; }

std::string betti_cell(const InvariantReport& report) {
  if (!report.betti) return na();
  std::string cell;
  for (const Natural& b : *report.betti) {
    if (!cell.empty()) cell += ';';
    cell += b.get_str();
  }
  return cell;
}

template <typename T>
std::string cell_or_na(const std::optional<T>& value) {
  if (!value) return na();
  if constexpr (std::is_same_v<T, Natural>)
    return value->get_str();
  else
    return std::to_string(*value);
}

}  // namespace

PartitionedGraph graph_from_json(const std::string& text, bool adjacent_only) {
  Json doc = Json::parse(text);
  if (!doc.is_object() || !doc.contains("blocks"))
    throw std::invalid_argument("graph spec needs a \"blocks\" array");
  std::vector<std::size_t> blocks;
  for (const Json& m : doc.at("blocks"))
    blocks.push_back(m.get<std::size_t>());
  VariableSetPtr vars = make_variables(blocks);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  Json edge_spec = doc.value("edges", Json("complete"));
  if (edge_spec.is_string()) {
    const std::string& kind = edge_spec.get_ref<const std::string&>();
    if (kind == "complete") {
      PartitionedGraph skeleton = complete_n_partite(blocks, adjacent_only);
      edges = skeleton.edges();
    } else if (kind != "none") {
      throw std::invalid_argument("unknown edge spec \"" + kind + "\"");
    }
  } else {
    for (const Json& pair : edge_spec) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("an edge is a two-element array");
      edges.emplace_back(
          parse_variable(*vars, pair[0].get<std::string>()),
          parse_variable(*vars, pair[1].get<std::string>()));
    }
  }

  std::vector<std::size_t> loops;
  Json loop_spec = doc.value("loops", Json("none"));
  if (loop_spec.is_string()) {
    const std::string& kind = loop_spec.get_ref<const std::string&>();
    if (kind == "all") {
      for (std::size_t v = 0; v < vars->variable_count(); ++v)
        loops.push_back(v);
    } else if (kind != "none") {
      throw std::invalid_argument("unknown loop spec \"" + kind + "\"");
    }
  } else {
    for (const Json& name : loop_spec)
      loops.push_back(parse_variable(*vars, name.get<std::string>()));
  }
  return quasi_n_partite(std::move(vars), std::move(edges), std::move(loops));
}

MonomialIdeal ideal_from_text(const VariableSetPtr& vars,
                              const std::string& text) {
  std::size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && text[at] == '[') {
    Json doc = Json::parse(text);
    std::vector<Monomial> gens;
    for (const Json& entry : doc)
      gens.push_back(parse_monomial(vars, entry.get<std::string>()));
    return MonomialIdeal::make(vars, std::move(gens));
  }
  return MonomialIdeal::make(vars, parse_monomial_lines(vars, text));
}

std::string resolve_at_file(const std::string& spec) {
  if (spec.empty() || spec[0] != '@') return spec;
  std::ifstream in(spec.substr(1));
  if (!in) throw std::invalid_argument("cannot read file " + spec.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json closure_to_json(const ClosureResult& result) {
  Json doc;
  Json gens = Json::array();
  for (const Monomial& g : result.closure.generators()) gens.push_back(g.str());
  doc["generators"] = std::move(gens);
  doc["generator_count"] = result.closure.generator_count();
  doc["was_closed"] = result.was_closed;
  Json added = Json::array();
  for (const Monomial& g : result.added_generators) added.push_back(g.str());
  doc["added_generators"] = std::move(added);
  return doc;
}

Json report_to_json(const InvariantReport& report) {
  Json doc;
  doc["variables"] = report.variable_count;
  auto put = [&doc](const char* key, const std::optional<std::size_t>& value) {
    if (value)
      doc[key] = *value;
    else
      doc[key] = nullptr;
  };
  put("height", report.height);
  put("bight", report.big_height);
  put("dim", report.dim);
  put("depth", report.depth);
  put("projdim", report.projdim);
  put("reg", report.reg);
  if (report.betti) {
    Json betti = Json::array();
    for (const Natural& b : *report.betti)
      betti.push_back(b.get_str());
    doc["betti"] = std::move(betti);
  } else {
    doc["betti"] = nullptr;
  }
  if (report.cm_type)
    doc["type"] = report.cm_type->get_str();
  else
    doc["type"] = nullptr;
  Json provenance;
  for (const auto& [field, how] : report.provenance) provenance[field] = how;
  doc["provenance"] = std::move(provenance);
  return doc;
}

std::string report_to_text(const InvariantReport& report) {
  std::ostringstream out;
  out << "variables: " << report.variable_count << '\n';
  out << "height: " << cell_or_na(report.height) << '\n';
  out << "bight: " << cell_or_na(report.big_height) << '\n';
  out << "dim: " << cell_or_na(report.dim) << '\n';
  out << "depth: " << cell_or_na(report.depth) << '\n';
  out << "projdim: " << cell_or_na(report.projdim) << '\n';
  out << "reg: " << cell_or_na(report.reg) << '\n';
  out << "type: " << cell_or_na(report.cm_type) << '\n';
  out << "betti: " << betti_cell(report) << '\n';
  return out.str();
}

std::string invariants_csv_header() {
  return "instance,M,height,bight,dim,depth,projdim,reg,type,betti";
}

std::string invariants_csv_row(const std::string& instance,
                               const InvariantReport& report) {
  std::ostringstream out;
  out << instance << ',' << report.variable_count << ','
      << cell_or_na(report.height) << ',' << cell_or_na(report.big_height)
      << ',' << cell_or_na(report.dim) << ',' << cell_or_na(report.depth)
      << ',' << cell_or_na(report.projdim) << ',' << cell_or_na(report.reg)
      << ',' << cell_or_na(report.cm_type) << ',' << betti_cell(report);
  return out.str();
}

Json verification_to_json(const VerificationReport& report) {
  Json doc;
  Json results = Json::array();
  for (const CheckResult& r : report.results) {
    Json entry;
    entry["instance"] = r.instance;
    entry["check"] = r.check;
    entry["expected"] = r.expected;
    entry["computed"] = r.computed;
    entry["pass"] = r.pass;
    results.push_back(std::move(entry));
  }
  doc["results"] = std::move(results);
  doc["passed"] = report.passed;
  doc["failed"] = report.failed;
  return doc;
}

std::string verification_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const CheckResult& r : report.results) {
    out << (r.pass ? "PASS" : "FAIL") << ' ' << r.check << ' ' << r.instance
        << ": expected " << r.expected << "; computed " << r.computed << '\n';
  }
  out << report.passed << " passed, " << report.failed << " failed\n";
  return out.str();
}

}  // namespace idealis
