#include "spinal_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinal/bundle.hpp"
#include "spinal/distinguisher.hpp"
#include "spinal/errors.hpp"
#include "spinal/normal_form.hpp"
#include "spinal/plumbing.hpp"
#include "spinal/twist.hpp"

namespace spinal::cli {
namespace {

using nlohmann::ordered_json;

constexpr const char* kTorsionPlacementNote =
    "cokernel torsion of phi_*-Id on H_d(V) is placed in degree d of the total space "
    "(cone orientation); the kernel-first indexing places the same torsion in degree d+1";

ordered_json factors_json(const std::vector<Integer>& factors) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : factors) arr.push_back(f.get_str());
  return arr;
}

std::string factors_piped(const std::vector<Integer>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += '|';
    s += factors[i].get_str();
  }
  return s;
}

ordered_json graded_json(const GradedGroup& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& [deg, group] : g.degrees()) {
    ordered_json d;
    d["degree"] = deg;
    d["rank"] = group.free_rank();
    d["invariant_factors"] = factors_json(group.invariant_factors());
    d["group"] = group.to_string();
    arr.push_back(std::move(d));
  }
  return arr;
}

void write_graded_table(std::ostream& os, const GradedGroup& g) {
  if (g.empty()) {
    os << "all degrees trivial\n";
    return;
  }
  for (const auto& [deg, group] : g.degrees()) os << "H_" << deg << "  " << group.to_string() << '\n';
}

void write_graded_csv(std::ostream& os, const GradedGroup& g) {
  os << "degree,rank,invariant_factors\n";
  for (const auto& [deg, group] : g.degrees())
    os << deg << ',' << group.free_rank() << ',' << factors_piped(group.invariant_factors())
       << '\n';
}

class Command {
 public:
  Command(const CliConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void run() {
    const auto& sub = config_.subcommand;
    if (sub == "validate") return validate_cmd();
    if (sub == "form") return form_cmd();
    if (sub == "homology") return homology_cmd();
    if (sub == "twist") return twist_cmd();
    if (sub == "torus") return torus_cmd();
    if (sub == "fillings") return fillings_cmd();
    if (sub == "snf") return snf_cmd();
    throw InputError("unknown subcommand '" + sub + "'");
  }

  bool failed() const { return failed_; }

 private:
  PlumbingGraph load_graph() const {
    if (config_.graph_path.has_value() == config_.preset.has_value())
      throw InputError("supply exactly one of --graph or --preset");
    if (config_.preset) return preset_graph(*config_.preset);
    return load_graph_file(*config_.graph_path);
  }

  const std::string& require_word() const {
    if (!config_.word) throw InputError("--word is required for '" + config_.subcommand + "'");
    return *config_.word;
  }

  void validate_cmd() {
    const PlumbingGraph graph = load_graph();
    const auto errors = validate(graph);
    failed_ = !errors.empty();
    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["valid"] = errors.empty();
        doc["errors"] = errors;
        doc["summary"] = graph.summary();
        if (config_.emit) doc["graph"] = ordered_json::parse(emit_graph(graph));
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << "valid,error\n";
        if (errors.empty()) out_ << "true,\n";
        for (const auto& e : errors) out_ << "false,\"" << e << "\"\n";
        break;
      case OutputFormat::Table:
        if (config_.emit && errors.empty()) {
          out_ << emit_graph(graph) << '\n';
          break;
        }
        out_ << (errors.empty() ? "ok" : "invalid") << "  " << graph.summary() << '\n';
        for (const auto& e : errors) out_ << "  " << e << '\n';
        break;
    }
  }

  void form_cmd() {
    const PlumbingGraph graph = load_graph();
    const IntMatrix q = intersection_form(graph);
    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["dimension"] = graph.dimension;
        doc["basis"] = graph.vertices;
        doc["form"] = to_literal(q);
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << "vertex";
        for (const auto& v : graph.vertices) out_ << ',' << v;
        out_ << '\n';
        for (std::size_t r = 0; r < q.rows(); ++r) {
          out_ << graph.vertices[r];
          for (std::size_t c = 0; c < q.cols(); ++c) out_ << ',' << q(r, c).get_str();
          out_ << '\n';
        }
        break;
      case OutputFormat::Table:
        out_ << to_literal(q) << '\n';
        break;
    }
  }

  void homology_cmd() {
    const PlumbingGraph graph = load_graph();
    emit_graded(base_homology(graph), graph.summary(), "");
  }

  void twist_cmd() {
    const PlumbingGraph graph = load_graph();
    const TwistWord word = parse_word(require_word(), graph);
    const GradedAction action = word_action(graph, word);
    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["graph"] = graph.summary();
        doc["word"] = word.to_string();
        ordered_json actions = ordered_json::array();
        for (const auto& [deg, m] : action.degrees())
          actions.push_back({{"degree", deg}, {"matrix", to_literal(m)}});
        doc["actions"] = std::move(actions);
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << "degree,matrix\n";
        for (const auto& [deg, m] : action.degrees())
          out_ << deg << ",\"" << to_literal(m) << "\"\n";
        break;
      case OutputFormat::Table:
        for (const auto& [deg, m] : action.degrees()) out_ << to_literal(m) << '\n';
        break;
    }
  }

  void torus_cmd() {
    const PlumbingGraph graph = load_graph();
    const TwistWord word = parse_word(require_word(), graph);
    const GradedGroup h = mapping_torus_homology(base_homology(graph), word_action(graph, word));
    emit_graded(h, graph.summary(), word.to_string());
  }

  void emit_graded(const GradedGroup& h, const std::string& summary, const std::string& word) {
    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["graph"] = summary;
        if (!word.empty()) doc["word"] = word;
        doc["homology"] = graded_json(h);
        doc["euler_characteristic"] = h.euler_characteristic();
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        write_graded_csv(out_, h);
        break;
      case OutputFormat::Table:
        write_graded_table(out_, h);
        break;
    }
  }

  void fillings_cmd() {
    const PlumbingGraph graph = load_graph();
    if (!config_.k_max) throw InputError("--kmax is required for 'fillings'");
    if (*config_.k_max < 1) throw InputError("--kmax must be at least 1");
    const TwistWord word = parse_word(require_word(), graph);
    const FillingReport report = filling_family(graph, word, *config_.k_max);

    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["graph"] = report.graph_summary;
        doc["word"] = report.word;
        doc["k_max"] = report.k_max;
        doc["distinguished_degree"] = report.distinguished_degree;
        doc["torsion_placement"] = kTorsionPlacementNote;
        ordered_json entries = ordered_json::array();
        for (const auto& e : report.entries) {
          ordered_json j;
          j["k"] = e.k;
          j["class"] = e.class_id;
          j["torsion_factors"] = factors_json(e.torsion_factors);
          j["torsion_order"] = e.torsion_order.get_str();
          j["cokernel_torsion_bound"] = e.cokernel_torsion_bound.get_str();
          j["trivial_torsion"] = e.trivial_torsion;
          j["homology"] = graded_json(e.homology);
          entries.push_back(std::move(j));
        }
        doc["entries"] = std::move(entries);
        doc["distinct_classes"] = report.distinct_classes;
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << "k,degree,rank,invariant_factors,class\n";
        for (const auto& e : report.entries)
          for (const auto& [deg, group] : e.homology.degrees())
            out_ << e.k << ',' << deg << ',' << group.free_rank() << ','
                 << factors_piped(group.invariant_factors()) << ',' << e.class_id << '\n';
        break;
      case OutputFormat::Table: {
        const int d = report.distinguished_degree;
        out_ << "graph " << report.graph_summary << "  word \"" << report.word
             << "\"  distinguished degree " << d << '\n';
        out_ << "k\tclass\ttorsion(H_" << d << ")\thomology\n";
        for (const auto& e : report.entries) {
          std::string torsion = "0";
          if (!e.trivial_torsion) {
            torsion.clear();
            for (std::size_t i = 0; i < e.torsion_factors.size(); ++i)
              torsion += (i ? "+Z/" : "Z/") + e.torsion_factors[i].get_str();
          }
          out_ << e.k << '\t' << e.class_id << '\t' << torsion << '\t' << e.homology.to_string()
               << '\n';
        }
        out_ << "distinct homology types: " << report.distinct_classes << " of "
             << report.entries.size() << '\n';
        out_ << "note: " << kTorsionPlacementNote << '\n';
        break;
      }
    }
  }

  void snf_cmd() {
    if (!config_.matrix) throw InputError("--matrix is required for 'snf'");
    const IntMatrix m = parse_matrix_literal(*config_.matrix);
    const SnfResult r = snf(m);
    if (!(r.U * m * r.V == r.S) || !is_unimodular(r.U) || !is_unimodular(r.V))
      throw InvariantViolation("snf: U*M*V != S or non-unimodular transform");
    const auto diagonal = snf_diagonal(r);
    const AbelianGroup coker = cokernel_group(m);

    std::string diag = "diag(";
    for (std::size_t i = 0; i < diagonal.size(); ++i) diag += (i ? "," : "") + diagonal[i].get_str();
    diag += ')';

    switch (config_.format) {
      case OutputFormat::Json: {
        ordered_json doc;
        doc["input"] = to_literal(m);
        doc["diagonal"] = factors_json(diagonal);
        doc["S"] = to_literal(r.S);
        doc["U"] = to_literal(r.U);
        doc["V"] = to_literal(r.V);
        doc["cokernel"] = coker.to_string();
        out_ << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::Csv:
        out_ << "index,diagonal\n";
        for (std::size_t i = 0; i < diagonal.size(); ++i)
          out_ << i << ',' << diagonal[i].get_str() << '\n';
        break;
      case OutputFormat::Table:
        out_ << diag << '\n';
        out_ << "S = " << to_literal(r.S) << '\n';
        out_ << "U = " << to_literal(r.U) << '\n';
        out_ << "V = " << to_literal(r.V) << '\n';
        out_ << "coker = " << coker.to_string() << '\n';
        break;
    }
  }

  const CliConfig& config_;
  std::ostream& out_;
  bool failed_ = false;
};

struct Subcommand {
  const char* name;
  const char* help;
  bool graph = true;
  bool word = false;
  bool kmax = false;
  bool matrix = false;
  bool emit = false;
};

constexpr Subcommand kSubcommands[] = {
    {"validate", "Check a plumbing graph", true, false, false, false, true},
    {"form", "Print the intersection form on middle homology"},
    {"homology", "Print the graded homology of the plumbing"},
    {"twist", "Print the homology action of a twist word", true, true},
    {"torus", "Homology of the mapping torus of a twist word", true, true},
    {"fillings", "Homology of the filling family (word^k, Id) for k = 1..kmax", true, true, true},
    {"snf", "Smith normal form of a matrix literal", false, false, false, true},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer homology of plumbings, twist actions and spinal filling families",
               "spinalfill"};
  app.require_subcommand(1);

  CliConfig config;
  std::string format = "table";
  const std::map<std::string, OutputFormat> formats = {
      {"table", OutputFormat::Table}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

  for (const auto& spec : kSubcommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.graph) {
      sub->add_option("--graph", config.graph_path, "Plumbing graph file (JSON)");
      sub->add_option("--preset", config.preset, "Built-in plumbing graph");
    }
    if (spec.word) sub->add_option("--word", config.word, "Twist word, e.g. \"t1^3 t2^-1\"");
    if (spec.kmax) sub->add_option("--kmax", config.k_max, "Largest power k");
    if (spec.matrix) sub->add_option("--matrix", config.matrix, "Matrix literal [[a,b],[c,d]]");
    if (spec.emit) sub->add_flag("--emit", config.emit, "Echo the graph as JSON");
    sub->add_option("--format", format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", config.out_path, "Write output to a file");
    sub->callback([&config, sub] { config.subcommand = sub->get_name(); });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }
  config.format = formats.at(format);

  std::ostringstream buffer;
  int code = 0;
  try {
    Command command(config, buffer);
    command.run();
    if (command.failed()) code = 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *config.out_path << "'\n";
      return 1;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace spinal::cli
