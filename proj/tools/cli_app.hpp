#pragma once

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "distrig/distrig.hpp"
#include "json.hpp"

namespace distrig::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3, kPrecondition = 4 };

// Reference exponents printed next to fitted ones. Never asserted.
inline const double kKatzTardosPinnedExponent = (48.0 - 14.0 * std::exp(1.0)) / (55.0 - 16.0 * std::exp(1.0));

struct CommonFlags {
  bool json = false;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  bool no_degenerate = false;
  std::string group = "O";
  bool fibers = false;
  bool no_meta = false;
};

inline void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_flag("--json", f.json, "emit JSON instead of text");
  cmd->add_option("--threads", f.threads, "worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--budget", f.budget, "maximum tuples to enumerate");
  cmd->add_option("--seed", f.seed, "seed for randomized steps");
  cmd->add_flag("--no-degenerate", f.no_degenerate, "exclude tuples with repeated points");
  cmd->add_option("--group", f.group, "congruence group")->check(CLI::IsMember({"O", "SO"}));
  cmd->add_flag("--fibers", f.fibers, "dump fiber multiplicities v(t)");
  cmd->add_flag("--no-meta", f.no_meta, "omit runtime and thread metadata");
}

inline Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Json point_json(const Point& p) { return rationals(p.coords()); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline bool is_scalar_array(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured() && !(x.is_array() && is_scalar_array(x))) return false;
  return true;
}

inline std::string inline_text(const Json& j) {
  if (!j.is_array()) return scalar_text(j);
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    s += (first ? "" : ", ") + inline_text(x);
    first = false;
  }
  return s + "]";
}

// Plain "key: value" rendering; arrays of objects become one row per element.
inline void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && !is_scalar_array(v)) {
      out << indent << it.key() << ":\n";
      for (const auto& row : v) {
        out << indent << "  -";
        if (row.is_object()) {
          for (auto r = row.begin(); r != row.end(); ++r) out << " " << r.key() << "=" << inline_text(r.value());
        } else {
          out << " " << inline_text(row);
        }
        out << "\n";
      }
    } else {
      out << indent << it.key() << ": " << inline_text(v) << "\n";
    }
  }
}

inline Json census_json(const CensusReport& rep) {
  Json j;
  j["command"] = "census";
  j["graph"] = rep.graph.str();
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["d"] = rep.d;
  j["include_degenerate"] = rep.include_degenerate;
  j["tuples"] = rep.tuples;
  j["count"] = rep.count;
  if (rep.fibers) {
    Json f = Json::array();
    for (const auto& [vals, c] : *rep.fibers) f.push_back({{"value", rationals(vals)}, {"count", c}});
    j["fibers"] = f;
  }
  return j;
}

inline Json congruence_json(const CongruenceCensus& c) {
  Json j;
  j["command"] = "congruence";
  j["group"] = to_string(c.group);
  j["d"] = c.d;
  j["k"] = c.k;
  j["n"] = c.n;
  j["any_order"] = c.any_order;
  j["nonsingular_count"] = c.nonsingular_count;
  j["class_count"] = c.class_count;
  Json h = Json::array();
  for (const auto& [size, classes] : c.class_size_histogram) h.push_back({{"size", size}, {"classes", classes}});
  j["class_size_histogram"] = h;
  j["sum_sq_class_sizes"] = to_string(c.sum_sq_class_sizes);
  j["cs_inequality_lhs"] = to_string(c.cs_lhs);
  j["cs_inequality_rhs"] = to_string(c.cs_rhs);
  j["cs_inequality_holds"] = c.cs_lhs <= c.cs_rhs;
  return j;
}

inline Json canonical_json(const CanonicalForm& cf) {
  Json j;
  Json c = Json::array();
  for (std::size_t i = 0; i < cf.triangular.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < cf.triangular.cols(); ++k) row.push_back(cf.triangular(i, k));
    c.push_back(row);
  }
  j["triangular"] = c;
  j["frame_coeffs"] = cf.frame_coeffs;
  j["orientation"] = cf.orientation;
  j["group"] = to_string(cf.group);
  return j;
}

inline std::uint64_t max_richness(const PointSet& e) { return rich_pins_greedy(e, 1).pins.front().richness; }

struct SweepFlags {
  std::string experiment;
  std::string graph;
  std::vector<std::size_t> sizes;
  std::string family = "lattice";
  std::size_t k = 2;
  std::size_t dim = 2;
  long long bound = 1000;
};

class App {
public:
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distrig: exact rigidity, congruence and distance censuses"};
    app.require_subcommand(1);
    CommonFlags f;

    std::string graph_file, points_file, tuple_file, other_file;
    std::size_t dim = 0, trials = 3, k = 2, count = 1;
    bool any_order = false;
    SweepFlags sw;

    auto* rig = app.add_subcommand("rigidity", "generic and at-tuple rigidity of a graph");
    rig->add_option("--graph", graph_file, "graph file")->required();
    rig->add_option("--dim,-d", dim, "ambient dimension (default 2, or the tuple's)");
    rig->add_option("--tuple", tuple_file, "tuple file to evaluate the framework at");
    rig->add_option("--trials", trials, "random witnesses per generic rank")->check(CLI::PositiveNumber);
    add_common(rig, f);

    auto* cen = app.add_subcommand("census", "graph-distance census over E^{k+1}");
    cen->add_option("--graph", graph_file, "graph file")->required();
    cen->add_option("--points", points_file, "point-set file")->required();
    add_common(cen, f);

    auto* con = app.add_subcommand("congruence", "congruence census, or canonical form of a tuple");
    con->add_option("--points", points_file, "point-set file");
    con->add_option("--k", k, "tuples have k+1 points");
    con->add_flag("--any-order", any_order, "admit tuples whose reordering is non-singular");
    con->add_option("--tuple", tuple_file, "print the canonical form of this tuple");
    con->add_option("--other", other_file, "compare --tuple against this tuple");
    add_common(con, f);

    auto* pins = app.add_subcommand("pins", "greedy rich-pin extraction");
    pins->add_option("--points", points_file, "point-set file")->required();
    pins->add_option("--count", count, "pins to extract");
    add_common(pins, f);

    auto* en = app.add_subcommand("energy", "distance energy Q");
    en->add_option("--points", points_file, "point-set file")->required();
    add_common(en, f);

    auto* swp = app.add_subcommand("sweep", "census across sizes with a log-log fit");
    swp->add_option("--experiment", sw.experiment, "experiment")
        ->required()
        ->check(CLI::IsMember({"pair-distances", "graph-distances", "congruence", "energy"}));
    swp->add_option("--graph", sw.graph, "graph file (graph-distances)");
    swp->add_option("--sizes", sw.sizes, "lattice side s or random set size n")->delimiter(',')->required();
    swp->add_option("--family", sw.family, "point sets")->check(CLI::IsMember({"lattice", "random"}));
    swp->add_option("--k", sw.k, "tuple length k+1 (congruence)");
    swp->add_option("--dim", sw.dim, "dimension of random sets");
    swp->add_option("--bound", sw.bound, "coordinate bound of random sets");
    add_common(swp, f);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kParse;
    }

    const auto start = std::chrono::steady_clock::now();
    Json report;
    try {
      if (*rig) report = rigidity(f, graph_file, tuple_file, dim, trials);
      else if (*cen) report = census(f, graph_file, points_file);
      else if (*con) report = congruence(f, points_file, k, any_order, tuple_file, other_file);
      else if (*pins) report = pin_report(f, points_file, count);
      else if (*en) report = energy(points_file);
      else report = sweep(f, sw);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return kParse;
    } catch (const BudgetError& e) {
      err << "budget error: " << e.what() << "\n";
      return kBudget;
    } catch (const PreconditionError& e) {
      err << "precondition violated: " << e.what() << "\n";
      return kPrecondition;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kFailure;
    }
    if (!f.no_meta) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      report["meta"] = {{"runtime_seconds", secs}, {"threads", f.threads}};
    }
    if (f.json)
      out << report.dump(2) << "\n";
    else
      render_text(report, out);
    return kOk;
  }

private:
  static Json rigidity(const CommonFlags& f, const std::string& graph_file, const std::string& tuple_file,
                       std::size_t dim, std::size_t trials) {
    const Graph g = read_graph_file(graph_file);
    std::optional<ConfigTuple> tuple;
    if (!tuple_file.empty()) {
      tuple = read_config_tuple(tuple_file);
      if (dim != 0 && dim != tuple->dim())
        throw PreconditionError("--dim " + std::to_string(dim) + " does not match the tuple's dimension");
      dim = tuple->dim();
    }
    if (dim == 0) dim = 2;
    Json j;
    j["command"] = "rigidity";
    j["graph"] = g.str();
    j["d"] = dim;
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    const auto gr = generic_rank_report(g, dim, f.seed, trials);
    j["generic_rank"] = gr.rank;
    j["failure_bound"] = gr.failure_bound;
    std::string summary;
    if (static_cast<std::size_t>(g.num_vertices()) > dim) {
      const auto cls = classify_generic(g, dim, f.seed, trials);
      j["classification"] = to_string(cls.classification);
      j["complete_rank"] = cls.complete_rank;
      summary = std::string(to_string(cls.classification)) + ", rank " + std::to_string(cls.generic_rank);
      if (dim == 2) j["pebble_game"] = to_string(pebble_game_2_3(g));
    } else {
      j["classification"] = "undefined (fewer than d+1 vertices)";
      summary = "generic rank " + std::to_string(gr.rank);
    }
    if (tuple) {
      const auto rep = motion_dims(g, *tuple);
      const bool regular = rep.rank == gr.rank;
      std::string critical;
      if (!regular) critical = "critical";
      else if (tuple->size() <= 6) critical = is_critical_tuple(*tuple, f.seed, trials) ? "critical" : "generic";
      else critical = "unknown";
      Json t;
      t["rank"] = rep.rank;
      t["motion_dim"] = rep.motion_dim;
      t["trivial_dim"] = rep.trivial_dim;
      t["inf_rigid_at_x"] = rep.inf_rigid_at_x;
      t["regular"] = regular;
      t["status"] = critical;
      j["tuple"] = t;
      summary = "generic rank " + std::to_string(gr.rank) + "; tuple rank " + std::to_string(rep.rank) +
                "; tuple is " + critical;
      if (j["classification"].get<std::string>().rfind("undefined", 0) != 0)
        summary = j["classification"].get<std::string>() + "; " + summary;
    }
    j["summary"] = summary;
    return j;
  }

  static CensusOptions census_options(const CommonFlags& f) {
    CensusOptions o;
    o.threads = f.threads;
    o.budget = f.budget;
    o.include_degenerate = !f.no_degenerate;
    o.collect_fibers = f.fibers;
    return o;
  }

  static Json census(const CommonFlags& f, const std::string& graph_file, const std::string& points_file) {
    const Graph g = read_graph_file(graph_file);
    const PointSet e = read_point_set(points_file);
    const auto rep = graph_distance_census(g, e, census_options(f));
    Json j = census_json(rep);
    if (!is_connected(g)) j["warning"] = "graph is disconnected";
    if (g.num_vertices() == 3 && g.num_edges() == 2 && e.size() >= 2) {
      const std::uint64_t r = max_richness(e);
      j["hinge_check"] = {{"max_pin_richness", r},
                          {"lower_bound", r * r},
                          {"holds", rep.count >= r * r}};
    }
    return j;
  }

  static Json congruence(const CommonFlags& f, const std::string& points_file, std::size_t k, bool any_order,
                         const std::string& tuple_file, const std::string& other_file) {
    const Group group = parse_group(f.group);
    if (!tuple_file.empty()) {
      const ConfigTuple t = read_config_tuple(tuple_file);
      Json j;
      j["command"] = "congruence";
      j["canonical_form"] = canonical_json(canonical_form(t, group));
      if (!other_file.empty()) {
        const ConfigTuple o = read_config_tuple(other_file);
        j["other_canonical_form"] = canonical_json(canonical_form(o, group));
        j["congruent"] = congruent_exact(t, o, group);
      }
      return j;
    }
    if (points_file.empty()) throw PreconditionError("congruence needs --points or --tuple");
    CongruenceOptions o;
    o.threads = f.threads;
    o.budget = f.budget;
    o.any_order = any_order;
    return congruence_json(congruence_census(read_point_set(points_file), k, group, o));
  }

  static Json pin_report(const CommonFlags&, const std::string& points_file, std::size_t count) {
    const PointSet e = read_point_set(points_file);
    const auto rep = rich_pins_greedy(e, count);
    Json j;
    j["command"] = "pins";
    j["n"] = e.size();
    Json seq = Json::array();
    for (const auto& p : rep.pins) seq.push_back({{"index", p.index}, {"point", point_json(p.point)}, {"richness", p.richness}});
    j["pins"] = seq;
    std::map<std::size_t, std::size_t> hist;
    for (const auto& p : e.points()) ++hist[pinned_distance_set(e, p).size()];
    Json h = Json::array();
    for (const auto& [r, c] : hist) h.push_back({{"richness", r}, {"points", c}});
    j["richness_histogram"] = h;
    j["reference_pinned_exponent"] = kKatzTardosPinnedExponent;
    return j;
  }

  static Json energy(const std::string& points_file) {
    const PointSet e = read_point_set(points_file);
    return energy_json(e);
  }

  static Json energy_json(const PointSet& e) {
    const auto rep = distance_energy(e);
    Json j;
    j["command"] = "energy";
    j["n"] = e.size();
    j["pair_count"] = rep.pair_count;
    j["distinct_nonzero"] = rep.distinct_nonzero;
    j["quadruples"] = rep.quadruples;
    const Integer lhs = Integer(static_cast<unsigned long>(rep.pair_count)) * static_cast<unsigned long>(rep.pair_count);
    const Integer rhs = Integer(static_cast<unsigned long>(rep.distinct_nonzero)) * static_cast<unsigned long>(rep.quadruples);
    j["cs_inequality_lhs"] = to_string(lhs);
    j["cs_inequality_rhs"] = to_string(rhs);
    j["cs_inequality_holds"] = lhs <= rhs;
    const double n = static_cast<double>(e.size());
    if (e.size() > 1) j["normalized_energy"] = static_cast<double>(rep.quadruples) / (n * n * n * std::log(n));
    return j;
  }

  static PointSet sweep_points(const SweepFlags& sw, std::size_t size, std::uint64_t seed) {
    if (sw.family == "lattice") return lattice_point_set(static_cast<unsigned>(size));
    return random_point_set(size, sw.dim, sw.bound, seed);
  }

  static Json sweep(const CommonFlags& f, const SweepFlags& sw) {
    if (sw.sizes.size() < 3) throw PreconditionError("sweep needs at least 3 sizes");
    std::optional<Graph> g;
    if (sw.experiment == "graph-distances") {
      if (sw.graph.empty()) throw PreconditionError("graph-distances sweep needs --graph");
      g = read_graph_file(sw.graph);
    }
    Json j;
    j["command"] = "sweep";
    j["experiment"] = sw.experiment;
    j["family"] = sw.family;
    double reference = 1;
    if (sw.experiment == "graph-distances") reference = g->num_vertices() - 1;
    if (sw.experiment == "congruence") reference = static_cast<double>(sw.k);
    if (sw.experiment == "energy") reference = 3;
    if (sw.experiment == "congruence") {
      j["group"] = f.group;
      j["k"] = sw.k;
    }
    if (g) j["graph"] = g->str();
    Json rows = Json::array();
    std::vector<double> xs, ys;
    for (std::size_t size : sw.sizes) {
      const auto t0 = std::chrono::steady_clock::now();
      const PointSet e = sweep_points(sw, size, f.seed);
      Json row;
      row["size"] = size;
      row["n"] = e.size();
      std::uint64_t count = 0;
      if (sw.experiment == "pair-distances") {
        count = DistanceTable(e).distinct() - 1;
      } else if (sw.experiment == "graph-distances") {
        count = graph_distance_census(*g, e, census_options(f)).count;
      } else if (sw.experiment == "congruence") {
        CongruenceOptions o;
        o.threads = f.threads;
        o.budget = f.budget;
        count = congruence_census(e, sw.k, parse_group(f.group), o).class_count;
      } else {
        const auto en = distance_energy(e);
        count = en.quadruples;
        const double n = static_cast<double>(e.size());
        row["normalized_energy"] = static_cast<double>(count) / (n * n * n * std::log(n));
      }
      row["count"] = count;
      if (!f.no_meta) row["runtime_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      xs.push_back(static_cast<double>(e.size()));
      ys.push_back(static_cast<double>(count));
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["fitted_exponent"] = fit_loglog(xs, ys).slope;
    j["reference_exponent"] = reference;
    if (sw.experiment == "energy") j["reference_note"] = "n^3 log n";
    return j;
  }
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return App{}.run(args, out, err);
}

}  // namespace distrig::cli
