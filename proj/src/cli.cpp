#include "spantree/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "spantree/errors.hpp"
#include "spantree/recognition.hpp"
#include "spantree/tree_count.hpp"
#include "spantree/weighted.hpp"

namespace spantree::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string file;
  std::string method = "auto";
  bool verify = false;
  bool json = false;
  unsigned jobs = 1;
  std::string ferrers;
  int complete_n = 0;
  std::string multipartite;
};

struct Input {
  Graph graph{1, {}};
  Json description;
  // set for family inputs given on the command line
  std::optional<std::string> family;
  std::vector<int> parameters;
};

OracleOptions oracle_options(unsigned jobs) {
  OracleOptions opts;
  opts.jobs = jobs;
  if (const char* limit = std::getenv("SPANTREE_ORACLE_LIMIT")) {
    try {
      std::size_t used = 0;
      const long value = std::stol(limit, &used);
      if (used != std::string(limit).size() || value < 0) throw std::invalid_argument(limit);
      opts.max_edges = static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      throw ParseError(std::string("SPANTREE_ORACLE_LIMIT must be a nonnegative integer, got '") + limit + "'");
    }
  }
  return opts;
}

Json set_json(const VertexSet& s) { return Json(s.items()); }

Json order_json(const ConstructionOrder& co) {
  Json roles = Json::array();
  for (Role r : co.roles) roles.push_back(std::string(role_name(r)));
  return Json{{"order", co.order}, {"u", set_json(co.u_set)}, {"roles", roles}};
}

Json witness_json(const std::optional<ForbiddenWitness>& w) {
  if (!w) return nullptr;
  return Json{{"pattern", std::string(pattern_name(w->pattern))}, {"vertices", set_json(w->vertices)}};
}

Json classification_json(const Classification& c) {
  Json special = c.special ? Json(true) : (c.special_search_exceeded && !c.special_witness ? Json(nullptr) : Json(false));
  Json out{{"threshold", c.threshold.has_value()}, {"ferrers", c.ferrers.has_value()}, {"special_2threshold", special}};
  if (c.ferrers)
    out["ferrers_structure"] = Json{{"shape", c.ferrers->shape.parts()},
                                    {"rows", c.ferrers->rows},
                                    {"columns", c.ferrers->columns},
                                    {"traversal", c.ferrers->traversal}};
  return out;
}

Json witnesses_json(const Classification& c) {
  return Json{{"threshold", witness_json(c.threshold_witness)},
              {"special_2threshold", witness_json(c.special_witness)}};
}

std::string join(const std::vector<Vertex>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string witness_text(const std::optional<ForbiddenWitness>& w) {
  if (!w) return "";
  std::ostringstream os;
  os << " (induced " << pattern_name(w->pattern) << " on " << w->vertices << ")";
  return os.str();
}

void print_classification(std::ostream& out, const Classification& c) {
  out << "threshold: " << (c.threshold ? "yes" : "no") << witness_text(c.threshold_witness) << '\n';
  out << "ferrers: " << (c.ferrers ? "yes" : "no") << '\n';
  if (c.ferrers) {
    out << "  shape: " << c.ferrers->shape << '\n';
    out << "  rows: " << join(c.ferrers->rows) << '\n';
    out << "  columns: " << join(c.ferrers->columns) << '\n';
  }
  out << "special-2-threshold: ";
  if (c.special)
    out << "yes\n";
  else if (c.special_search_exceeded && !c.special_witness)
    out << "unknown (search limit exceeded)\n";
  else
    out << "no" << witness_text(c.special_witness) << '\n';
  if (c.special) {
    out << "  U: " << c.special->u << '\n';
    out << "  construction order: " << join(c.special->order.order) << '\n';
    out << "  roles:";
    for (Role r : c.special->order.roles) out << ' ' << role_name(r);
    out << '\n';
  }
}

Input load_file(const std::string& path) {
  Input in{read_edge_list_file(path), Json::object(), std::nullopt, {}};
  in.description = Json{{"file", path}, {"vertices", in.graph.order()}, {"edges", in.graph.edge_count()}};
  return in;
}

Input load_family(const Settings& s) {
  const int chosen = !s.ferrers.empty() + (s.complete_n != 0) + !s.multipartite.empty();
  if (chosen != 1) throw ParseError("give exactly one of <file>, --ferrers, --complete, --multipartite");
  Input in;
  if (!s.ferrers.empty()) {
    in.family = "ferrers";
    in.parameters = parse_int_list(s.ferrers);
    in.graph = ferrers_graph(PartitionShape(in.parameters)).graph;
  } else if (s.complete_n != 0) {
    if (s.complete_n < 1) throw ParseError("--complete needs n >= 1");
    in.family = "complete";
    in.parameters = {s.complete_n};
    in.graph = complete(s.complete_n);
  } else {
    in.family = "multipartite";
    in.parameters = parse_int_list(s.multipartite);
    in.graph = complete_multipartite(in.parameters);
  }
  in.description = Json{{"family", *in.family},
                        {"parameters", in.parameters},
                        {"vertices", in.graph.order()},
                        {"edges", in.graph.edge_count()}};
  return in;
}

Input load(const Settings& s) {
  const bool family = !s.ferrers.empty() || s.complete_n != 0 || !s.multipartite.empty();
  if (!s.file.empty() && family) throw ParseError("give either a file or a family option, not both");
  if (!s.file.empty()) return load_file(s.file);
  return load_family(s);
}

struct Outcome {
  std::string method;
  std::string detail;
};

// Closed form for the classified graph; nullopt when none applies.
template <class Result, class Threshold, class Ferrers, class Special>
std::optional<std::pair<Result, std::string>> formula_for(const Input& in, const Classification* c,
                                                          Threshold threshold, Ferrers ferrers, Special special) {
  if (in.family == "ferrers")
    return std::pair{ferrers(ferrers_structure(PartitionShape(in.parameters))), std::string("ferrers")};
  if (!c) return std::nullopt;
  if (c->threshold) return std::pair{threshold(in.graph, *c->threshold), std::string("threshold")};
  if (c->ferrers) return std::pair{ferrers(*c->ferrers), std::string("ferrers")};
  if (c->special && !c->special->order.dominating().empty() && !c->special->u.empty())
    return std::pair{special(in.graph, c->special->order), std::string("special-2-threshold")};
  return std::nullopt;
}

const std::vector<std::string> kMethods = {"auto", "formula", "matrix-tree", "perturbation", "oracle"};

bool needs_classification(const Input& in, const std::string& method) {
  if (method == "perturbation") return true;
  return !in.family && (method == "auto" || method == "formula");
}

int do_classify(const Settings& s, std::ostream& out) {
  const Input in = load_file(s.file);
  SearchOptions opts;
  opts.jobs = s.jobs;
  const Classification c = classify(in.graph, opts);
  if (s.json) {
    Json j{{"input", in.description},
           {"classification", classification_json(c)},
           {"method", nullptr},
           {"witnesses", witnesses_json(c)},
           {"construction_order", c.special ? order_json(c.special->order) : Json(nullptr)}};
    out << j.dump(2) << '\n';
  } else {
    print_classification(out, c);
  }
  return ok;
}

int do_count(const Settings& s, std::ostream& out, std::ostream& err) {
  const Input in = load(s);
  const Graph& g = in.graph;
  const OracleOptions oracle_opts = oracle_options(s.jobs);
  std::optional<Classification> c;
  if (needs_classification(in, s.method)) {
    SearchOptions opts;
    opts.jobs = s.jobs;
    c = classify(g, opts);
  }

  BigInt value;
  Outcome outcome{s.method, ""};
  if (s.method == "auto" || s.method == "formula") {
    std::optional<std::pair<BigInt, std::string>> f;
    if (in.family == "complete") {
      f = std::pair{count_complete(in.parameters[0]), std::string("complete")};
    } else if (in.family == "multipartite") {
      f = std::pair{count_multipartite(in.parameters), std::string("multipartite")};
    } else {
      f = formula_for<BigInt>(in, c ? &*c : nullptr, count_threshold, count_ferrers, count_special_2threshold);
    }
    if (f) {
      value = f->first;
      outcome = {"formula", f->second};
    } else if (s.method == "formula") {
      throw CapabilityExceeded("no closed-form formula applies to this graph");
    } else {
      value = matrix_tree_count(g);
      outcome = {"matrix-tree", ""};
    }
  } else if (s.method == "matrix-tree") {
    value = matrix_tree_count(g);
  } else if (s.method == "perturbation") {
    if (c && c->special && !c->special->order.dominating().empty()) {
      value = build_perturbation(g, c->special->order).count();
      outcome.detail = "triangular";
    } else {
      const IntVector ones(static_cast<std::size_t>(g.order()), 1);
      value = perturbation_count(g, ones, ones);
      outcome.detail = "all-ones";
    }
  } else {
    value = oracle_count(g, oracle_opts);
  }

  std::optional<BigInt> oracle;
  if (s.verify) oracle = outcome.method == "oracle" ? value : oracle_count(g, oracle_opts);

  if (s.json) {
    Json j{{"input", in.description},
           {"classification", c ? classification_json(*c) : Json(nullptr)},
           {"method", outcome.method}};
    if (!outcome.detail.empty()) j["method_detail"] = outcome.detail;
    j["count"] = value.str();
    j["witnesses"] = c ? witnesses_json(*c) : Json(nullptr);
    j["construction_order"] = c && c->special ? order_json(c->special->order) : Json(nullptr);
    if (oracle) j["verify"] = Json{{"oracle", oracle->str()}, {"agrees", *oracle == value}};
    out << j.dump(2) << '\n';
  } else {
    out << value << '\n';
    out << "method: " << outcome.method;
    if (!outcome.detail.empty()) out << " (" << outcome.detail << ")";
    out << '\n';
    if (oracle) out << "oracle: " << *oracle << (*oracle == value ? " (agrees)" : " (MISMATCH)") << '\n';
  }
  if (oracle && *oracle != value) {
    err << "error: oracle count " << *oracle << " differs from " << value << '\n';
    return exactness_failure;
  }
  return ok;
}

int do_weighted(const Settings& s, std::ostream& out, std::ostream& err) {
  const Input in = load_file(s.file);
  const Graph& g = in.graph;
  const OracleOptions oracle_opts = oracle_options(s.jobs);
  std::optional<Classification> c;
  if (needs_classification(in, s.method)) {
    SearchOptions opts;
    opts.jobs = s.jobs;
    c = classify(g, opts);
  }

  MultiPoly value;
  Outcome outcome{s.method, ""};
  if (s.method == "auto" || s.method == "formula") {
    auto f = formula_for<MultiPoly>(in, c ? &*c : nullptr, weighted_count_threshold, weighted_count_ferrers,
                                    weighted_count_special_2threshold);
    if (f) {
      value = f->first;
      outcome = {"formula", f->second};
    } else if (s.method == "formula") {
      throw CapabilityExceeded("no closed-form formula applies to this graph");
    } else {
      value = weighted_matrix_tree(g);
      outcome = {"matrix-tree", ""};
    }
  } else if (s.method == "matrix-tree") {
    value = weighted_matrix_tree(g);
  } else if (s.method == "perturbation") {
    if (c && c->special && !c->special->order.dominating().empty()) {
      value = weighted_build_perturbation(g, c->special->order).count();
      outcome.detail = "triangular";
    } else {
      const PolyVector ones(static_cast<std::size_t>(g.order()), MultiPoly(g.order(), 1));
      value = weighted_perturbation_count(g, ones, ones);
      outcome.detail = "all-ones";
    }
  } else {
    value = weighted_oracle(g, oracle_opts);
  }

  std::optional<MultiPoly> oracle;
  if (s.verify) oracle = outcome.method == "oracle" ? value : weighted_oracle(g, oracle_opts);

  if (s.json) {
    Json j{{"input", in.description},
           {"classification", c ? classification_json(*c) : Json(nullptr)},
           {"method", outcome.method}};
    if (!outcome.detail.empty()) j["method_detail"] = outcome.detail;
    j["polynomial"] = value.to_string();
    j["count"] = substitute_all_ones(value).str();
    j["witnesses"] = c ? witnesses_json(*c) : Json(nullptr);
    j["construction_order"] = c && c->special ? order_json(c->special->order) : Json(nullptr);
    if (oracle) j["verify"] = Json{{"oracle", oracle->to_string()}, {"agrees", *oracle == value}};
    out << j.dump(2) << '\n';
  } else {
    out << value << '\n';
    out << "method: " << outcome.method;
    if (!outcome.detail.empty()) out << " (" << outcome.detail << ")";
    out << '\n';
    if (oracle) out << "oracle: " << (*oracle == value ? "agrees" : "MISMATCH") << '\n';
  }
  if (oracle && !(*oracle == value)) {
    err << "error: oracle polynomial differs\n";
    return exactness_failure;
  }
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spanning-tree counts for threshold, Ferrers and special 2-threshold graphs", "spantree"};
  app.require_subcommand(1);
  Settings s;

  auto* classify_cmd = app.add_subcommand("classify", "Report family memberships, construction order and witnesses");
  classify_cmd->add_option("file", s.file, "Edge-list file")->required();

  auto* count_cmd = app.add_subcommand("count", "Count spanning trees");
  count_cmd->add_option("file", s.file, "Edge-list file");
  count_cmd->add_option("--ferrers", s.ferrers, "Ferrers graph of a partition, e.g. 3,2,2,1");
  count_cmd->add_option("--complete", s.complete_n, "Complete graph K_n");
  count_cmd->add_option("--multipartite", s.multipartite, "Complete multipartite graph, e.g. 2,3");

  auto* weighted_cmd = app.add_subcommand("weighted", "Weighted enumerator with edge weights x_i x_j");
  weighted_cmd->add_option("file", s.file, "Edge-list file")->required();

  for (auto* cmd : {count_cmd, weighted_cmd}) {
    cmd->add_option("--method", s.method, "auto, formula, matrix-tree, perturbation or oracle")
        ->check(CLI::IsMember(kMethods));
    cmd->add_flag("--verify", s.verify, "Cross-check against brute-force enumeration");
  }
  for (auto* cmd : {classify_cmd, count_cmd, weighted_cmd}) {
    cmd->add_flag("--json", s.json, "Machine-readable output");
    cmd->add_option("--jobs", s.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(s, out);
    if (count_cmd->parsed()) return do_count(s, out, err);
    return do_weighted(s, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const CapabilityExceeded& e) {
    err << "error: " << e.what() << '\n';
    return capability_exceeded;
  } catch (const ExactnessError& e) {
    err << "internal error: " << e.what() << '\n';
    return exactness_failure;
  }
}

} // namespace spantree::cli
