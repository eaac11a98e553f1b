#include "socent/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <sys/resource.h>

#include "CLI11.hpp"
#include "socent/baselines.hpp"
#include "socent/evaluation.hpp"
#include "socent/generators.hpp"
#include "socent/graph.hpp"
#include "socent/social_centrality.hpp"
#include "socent/truss.hpp"

namespace socent {

namespace {

constexpr const char* kMeasures[] = {"sc", "sc-com", "dc", "ec", "bc",
                                     "cc", "lc",     "nc"};

struct CommonInput {
  std::string path;
  std::string mode = "edge-list";
  bool unweighted = false;
};

WeightedGraph load_graph(const CommonInput& in) {
  WeightedGraph g;
  if (in.mode == "edge-list") {
    g = read_edge_list_file(in.path);
  } else if (in.mode == "coauthor") {
    auto records = read_coauthor_memberships_file(in.path);
    g = project_coauthorship(records);
  } else if (in.mode == "email") {
    auto records = read_email_memberships_file(in.path);
    g = project_email(records);
  } else {
    throw std::runtime_error("unknown input mode '" + in.mode + "'");
  }
  return in.unweighted ? g.with_unit_weights() : g;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

// All numeric output goes through one formatter: 12 significant digits.
void put_score(std::ostream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out << buf;
}

void add_input_options(CLI::App* cmd, CommonInput& in) {
  cmd->add_option("input,--input", in.path, "input graph file")->required();
  cmd->add_option("--mode", in.mode, "input format")
      ->check(CLI::IsMember({"edge-list", "coauthor", "email"}))
      ->capture_default_str();
  cmd->add_flag("--unweighted", in.unweighted,
                "replace all edge weights by 1");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

double peak_rss_mb() {
  struct rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<double>(ru.ru_maxrss) / 1024.0;  // linux: KiB
}

GeneratorSpec::Model parse_model(const std::string& name) {
  if (name == "er") return GeneratorSpec::Model::ER;
  if (name == "ws") return GeneratorSpec::Model::WS;
  return GeneratorSpec::Model::FF;
}

void write_generated(const WeightedGraph& g, const GeneratorSpec& spec,
                     const std::string& model, std::ostream& out) {
  out << "# generator: model=" << model << " n=" << spec.n;
  if (spec.model == GeneratorSpec::Model::ER)
    out << " m=" << spec.er_edges;
  else if (spec.model == GeneratorSpec::Model::WS)
    out << " nei=" << spec.ws_neighbors << " p=" << spec.ws_rewire_p;
  else
    out << " ambs=" << spec.ff_ambassadors << " fw=" << spec.ff_forward_prob
        << " bw=" << spec.ff_backward_factor;
  out << " seed=" << spec.seed << " rng=" << generator_rng_name() << "\n";
  write_edge_list(g, out);
}

struct ScoreFile {
  std::string measure;
  std::vector<std::string> labels;
  CentralityVector scores;
};

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base =
      slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

// Reads a score CSV produced by `centrality` (2-column `label,<name>` or
// the 5-column social-centrality layout, where psi is the score).
ScoreFile read_score_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("'" + path + "' is empty");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) header.push_back(field);
  }
  if (header.size() < 2 || header[0] != "label")
    throw std::runtime_error("'" + path + "' lacks a 'label,...' header");
  const std::size_t score_col = header.size() - 1;  // psi or the measure

  ScoreFile sf;
  sf.measure = header.back() == "psi" ? file_stem(path) : header.back();
  sf.scores.name = sf.measure;
  if (sf.measure == "nc") sf.scores.orientation = Orientation::LowerIsBetter;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != header.size())
      throw IngestError(line_no, "row width does not match header");
    char* end = nullptr;
    double v = std::strtod(fields[score_col].c_str(), &end);
    if (end != fields[score_col].c_str() + fields[score_col].size())
      throw IngestError(line_no, "bad score value");
    sf.labels.push_back(fields[0]);
    sf.scores.scores.push_back(v);
  }
  return sf;
}

// Rank-table TSV: one column per measure, rows ordered by the first
// measure's ranking (full ranking, nothing truncated). Labels absent from
// a later score file print as '-'.
void write_rank_matrix(const std::vector<ScoreFile>& files,
                       const std::vector<RankedList>& ranked,
                       std::ostream& out) {
  out << "label";
  for (const auto& sf : files) out << '\t' << sf.measure;
  out << '\n';
  std::vector<std::unordered_map<std::string, std::uint32_t>> by_label(
      files.size());
  for (std::size_t f = 1; f < files.size(); ++f)
    for (std::size_t i = 0; i < files[f].labels.size(); ++i)
      by_label[f].emplace(files[f].labels[i], ranked[f].rank[i]);
  for (NodeId v : ranked[0].order) {
    out << files[0].labels[v] << '\t' << ranked[0].rank[v];
    for (std::size_t f = 1; f < files.size(); ++f) {
      auto it = by_label[f].find(files[0].labels[v]);
      if (it == by_label[f].end())
        out << "\t-";
      else
        out << '\t' << it->second;
    }
    out << '\n';
  }
}

int cmd_ingest(const CommonInput& in, const std::string& out_path) {
  WeightedGraph g = load_graph(in);
  if (out_path.empty()) {
    write_edge_list(g, std::cout);
  } else {
    auto out = open_out(out_path);
    write_edge_list(g, out);
  }
  std::cerr << "ingested nodes=" << g.node_count()
            << " edges=" << g.edge_count() << "\n";
  return 0;
}

int cmd_truss(const CommonInput& in, const std::string& edges_out,
              const std::string& nodes_out, unsigned threads) {
  WeightedGraph g = load_graph(in);
  TrussDecomposition d = k_truss_decompose(g, threads);
  if (!edges_out.empty()) {
    auto out = open_out(edges_out);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      out << g.label(g.edges()[e].u) << '\t' << g.label(g.edges()[e].v)
          << '\t' << d.edge_truss[e] << '\n';
  }
  if (!nodes_out.empty()) {
    auto out = open_out(nodes_out);
    for (NodeId i = 0; i < g.node_count(); ++i)
      out << g.label(i) << '\t' << d.node_truss[i] << '\n';
  }
  std::cerr << "max truss level T=" << d.max_level << "\n";
  return 0;
}

struct CentralityOptions {
  CommonInput in;
  std::string measure;
  std::string out_path;
  std::string potentials_path;
  std::string communities_path;
  std::string aggregator = "multiplicative";
  double coef_omega = 1.0, coef_beta = 1.0, coef_gamma = 1.0;
  std::string distance = "reciprocal";
  double ec_tol = 1e-10;
  unsigned ec_max_iters = 10000;
  unsigned threads = 1;
};

int cmd_centrality(const CentralityOptions& opt) {
  WeightedGraph g = load_graph(opt.in);
  const DistanceConvention conv = opt.distance == "direct"
                                      ? DistanceConvention::Direct
                                      : DistanceConvention::Reciprocal;
  std::ostringstream body;
  if (opt.measure == "sc" || opt.measure == "sc-com") {
    SCConfig cfg;
    if (opt.aggregator == "weighted-sum") {
      cfg.aggregator = SCConfig::Aggregator::WeightedSum;
      cfg.coef_omega = opt.coef_omega;
      cfg.coef_beta = opt.coef_beta;
      cfg.coef_gamma = opt.coef_gamma;
    }
    if (!opt.potentials_path.empty()) {
      std::ifstream pin(opt.potentials_path);
      if (!pin)
        throw std::runtime_error("cannot open '" + opt.potentials_path + "'");
      std::size_t skipped = read_potentials(pin, g, cfg);
      if (skipped)
        std::cerr << "warning: " << skipped
                  << " potential row(s) named unknown nodes\n";
    }
    TrussDecomposition d = k_truss_decompose(g, opt.threads);
    SCScores s;
    if (opt.measure == "sc-com") {
      if (opt.communities_path.empty())
        throw std::runtime_error("sc-com requires --communities");
      std::ifstream cin_(opt.communities_path);
      if (!cin_)
        throw std::runtime_error("cannot open '" + opt.communities_path +
                                 "'");
      CommunityAssignment com = read_communities(cin_, g);
      s = sc_com_score(g, d, com, cfg, opt.threads);
    } else {
      s = sc_score(g, d, cfg, opt.threads);
    }
    body << "label,omega,beta,gamma,psi\n";
    for (NodeId i = 0; i < g.node_count(); ++i) {
      body << g.label(i) << ',';
      put_score(body, s.omega[i]);
      body << ',';
      put_score(body, s.beta[i]);
      body << ',';
      put_score(body, s.gamma[i]);
      body << ',';
      put_score(body, s.psi[i]);
      body << '\n';
    }
  } else {
    CentralityVector cv;
    if (opt.measure == "dc")
      cv = degree_centrality(g, /*weighted=*/true);
    else if (opt.measure == "ec")
      cv = eigenvector_centrality(g, opt.ec_tol, opt.ec_max_iters,
                                  opt.threads);
    else if (opt.measure == "bc")
      cv = betweenness_centrality(g, conv, opt.threads);
    else if (opt.measure == "cc")
      cv = closeness_centrality(g, conv, opt.threads);
    else if (opt.measure == "lc")
      cv = laplacian_centrality(g, opt.threads);
    else
      cv = network_constraint(g, opt.threads);
    body << "label," << cv.name << '\n';
    for (NodeId i = 0; i < g.node_count(); ++i) {
      body << g.label(i) << ',';
      put_score(body, cv.scores[i]);
      body << '\n';
    }
  }
  if (opt.out_path.empty()) {
    std::cout << body.str();
  } else {
    auto out = open_out(opt.out_path);
    out << body.str();
  }
  return 0;
}

int cmd_rank(const std::vector<std::string>& score_paths,
             bool lower_is_better, const std::string& out_path) {
  std::vector<ScoreFile> files;
  std::vector<RankedList> ranked;
  for (const auto& path : score_paths) {
    ScoreFile sf = read_score_file(path);
    if (lower_is_better) sf.scores.orientation = Orientation::LowerIsBetter;
    ranked.push_back(rank_scores(sf.scores, sf.labels));
    files.push_back(std::move(sf));
  }
  if (out_path.empty()) {
    write_rank_matrix(files, ranked, std::cout);
  } else {
    auto out = open_out(out_path);
    write_rank_matrix(files, ranked, out);
  }
  return 0;
}

int cmd_eval(const std::string& gt_path,
             const std::vector<std::string>& score_paths,
             std::vector<std::size_t> ks, const std::string& out_path) {
  GroundTruth gt = read_ground_truth_file(gt_path);
  if (ks.empty()) ks.push_back(100);
  std::vector<ReportRow> rows;
  for (const auto& path : score_paths) {
    ScoreFile sf = read_score_file(path);
    RankedList r = rank_scores(sf.scores, sf.labels);
    JoinedTruth jt = join_ground_truth(gt, sf.labels);
    if (jt.missing)
      std::cerr << "warning: " << jt.missing << " ground-truth row(s) not in '"
                << path << "'\n";
    const double rho = spearman_rho(jt, r);
    for (std::size_t k : ks) {
      EvalWarnings rmse_warn, set_warn;
      ReportRow row;
      row.measure = sf.measure;
      row.k = k;
      row.rmse = rmse_topk(jt, r, k, &rmse_warn);
      row.jaccard = jaccard_topk(jt, r, k, &set_warn);
      std::tie(row.precision, row.recall) =
          precision_recall(jt, r, k, nullptr);
      row.spearman = rho;
      if (rmse_warn.dropped_missing)
        std::cerr << "warning: top-" << k << ": " << rmse_warn.dropped_missing
                  << " ground-truth actor(s) not in the score set were "
                     "excluded (k reduced)\n";
      if (set_warn.gt_boundary_ties || set_warn.pred_boundary_ties)
        std::cerr << "warning: top-" << k
                  << " boundary crosses a tie group (gt="
                  << set_warn.gt_boundary_ties
                  << ", predicted=" << set_warn.pred_boundary_ties << ")\n";
      rows.push_back(std::move(row));
    }
  }
  if (out_path.empty()) {
    write_report(rows, std::cout);
  } else {
    auto out = open_out(out_path);
    write_report(rows, out);
  }
  return 0;
}

int cmd_generate(const GeneratorSpec& spec, const std::string& model,
                 const std::string& out_path) {
  WeightedGraph g = generate(spec);
  if (out_path.empty()) {
    write_generated(g, spec, model, std::cout);
  } else {
    auto out = open_out(out_path);
    write_generated(g, spec, model, out);
  }
  std::cerr << "generated nodes=" << g.node_count()
            << " edges=" << g.edge_count() << "\n";
  return 0;
}

int cmd_bench(const GeneratorSpec& spec, const std::string& model,
              unsigned threads) {
  using clock = std::chrono::steady_clock;
  const auto t_total = clock::now();

  auto t0 = clock::now();
  WeightedGraph g = generate(spec);
  const double t_ingest = seconds_since(t0);

  t0 = clock::now();
  auto support = edge_support(g, threads);
  const double t_support = seconds_since(t0);

  t0 = clock::now();
  TrussDecomposition d = k_truss_from_support(g, std::move(support));
  const double t_peel = seconds_since(t0);

  t0 = clock::now();
  SCScores s = sc_score(g, d, SCConfig{}, threads);
  const double t_score = seconds_since(t0);

  std::printf("model,%s\nn,%u\nm,%u\n", model.c_str(), g.node_count(),
              g.edge_count());
  std::printf("ingest,%.3f\nsupport,%.3f\npeel,%.3f\nscore,%.3f\n", t_ingest,
              t_support, t_peel, t_score);
  std::printf("total,%.3f\npeak_rss_mb,%.1f\n", seconds_since(t_total),
              peak_rss_mb());
  // keep the scores alive until after timing so the compiler cannot drop
  // the computation
  volatile double sink = s.psi.empty() ? 0.0 : s.psi[0];
  (void)sink;
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"weighted-graph analytics: k-truss hierarchy, social "
               "centrality, baselines, ranking evaluation, generators",
               "socent"};
  app.require_subcommand(1);

  // ingest
  CommonInput ingest_in;
  std::string ingest_out;
  auto* ingest = app.add_subcommand(
      "ingest", "normalize an input file to the canonical edge list");
  add_input_options(ingest, ingest_in);
  ingest->add_option("--out", ingest_out, "output path (default stdout)");

  // truss
  CommonInput truss_in;
  std::string truss_edges_out, truss_nodes_out;
  unsigned truss_threads = 1;
  auto* truss = app.add_subcommand(
      "truss", "k-truss decomposition (edge and node trussness TSV)");
  add_input_options(truss, truss_in);
  truss->add_option("--edges-out", truss_edges_out,
                    "per-edge trussness TSV (labelA labelB t)");
  truss->add_option("--nodes-out", truss_nodes_out,
                    "per-node trussness TSV (label tau)");
  truss->add_option("--threads", truss_threads, "worker threads (0 = auto)");

  // centrality
  CentralityOptions copt;
  auto* centrality =
      app.add_subcommand("centrality", "compute one centrality measure");
  centrality->add_option("--measure", copt.measure, "measure to compute")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kMeasures),
                                                     std::end(kMeasures))));
  add_input_options(centrality, copt.in);
  centrality->add_option("--out", copt.out_path,
                         "output CSV path (default stdout)");
  centrality->add_option("--potentials", copt.potentials_path,
                         "per-node innate potentials CSV label,alpha,delta");
  centrality->add_option("--communities", copt.communities_path,
                         "community assignment CSV label,communityId");
  centrality->add_option("--aggregator", copt.aggregator, "sc aggregate form")
      ->check(CLI::IsMember({"multiplicative", "weighted-sum"}))
      ->capture_default_str();
  centrality->add_option("--coef-omega", copt.coef_omega,
                         "weighted-sum coefficient for omega");
  centrality->add_option("--coef-beta", copt.coef_beta,
                         "weighted-sum coefficient for beta");
  centrality->add_option("--coef-gamma", copt.coef_gamma,
                         "weighted-sum coefficient for gamma");
  centrality->add_option("--distance", copt.distance,
                         "edge-weight to path-length convention (bc/cc)")
      ->check(CLI::IsMember({"reciprocal", "direct"}))
      ->capture_default_str();
  centrality->add_option("--ec-tol", copt.ec_tol,
                         "eigenvector convergence tolerance");
  centrality->add_option("--ec-max-iters", copt.ec_max_iters,
                         "eigenvector iteration cap");
  centrality->add_option("--threads", copt.threads,
                         "worker threads (0 = auto)");

  // rank
  std::vector<std::string> rank_scores_paths;
  std::string rank_out;
  bool rank_lower = false;
  auto* rank = app.add_subcommand(
      "rank",
      "competition-rank table from score CSVs (full ranking, one column "
      "per measure)");
  rank->add_option("scores,--scores", rank_scores_paths,
                   "score CSV (repeatable)")
      ->required();
  rank->add_flag("--lower-is-better", rank_lower,
                 "rank ascending scores first");
  rank->add_option("--out", rank_out, "output TSV path (default stdout)");

  // eval
  std::string eval_gt, eval_out;
  std::vector<std::string> eval_scores;
  std::vector<std::size_t> eval_ks;
  auto* eval = app.add_subcommand(
      "eval", "evaluation report against ground truth");
  eval->add_option("--gt", eval_gt, "ground-truth CSV label,value")
      ->required();
  eval->add_option("--scores", eval_scores, "score CSV (repeatable)")
      ->required();
  eval->add_option("--k", eval_ks, "top-k cutoffs (repeatable, default 100)");
  eval->add_option("--out", eval_out, "report CSV path (default stdout)");

  // generate / bench share the generator parameters
  GeneratorSpec gen_spec;
  std::string gen_model = "er", gen_out;
  bool gen_m_given = false;
  GeneratorSpec bench_spec;
  std::string bench_model = "ws";
  bool bench_m_given = false;
  unsigned bench_threads = 1;

  auto add_generator_options = [](CLI::App* cmd, GeneratorSpec& spec,
                                  std::string& model, bool& m_given) {
    cmd->add_option("--model", model, "er, ws, or ff")
        ->check(CLI::IsMember({"er", "ws", "ff"}))
        ->capture_default_str();
    cmd->add_option("--n", spec.n, "node count")->required();
    cmd->add_option("--m", spec.er_edges, "ER edge count (default 2n)")
        ->each([&m_given](const std::string&) { m_given = true; });
    cmd->add_option("--nei", spec.ws_neighbors,
                    "WS neighbors per side")->capture_default_str();
    cmd->add_option("--p", spec.ws_rewire_p, "WS rewiring probability")
        ->capture_default_str();
    cmd->add_option("--ambs", spec.ff_ambassadors, "FF ambassador count")
        ->capture_default_str();
    cmd->add_option("--fw", spec.ff_forward_prob, "FF forward probability")
        ->capture_default_str();
    cmd->add_option("--bw", spec.ff_backward_factor, "FF backward factor")
        ->capture_default_str();
    cmd->add_option("--seed", spec.seed, "RNG seed")->capture_default_str();
  };

  auto* generate_cmd =
      app.add_subcommand("generate", "write a synthetic graph");
  add_generator_options(generate_cmd, gen_spec, gen_model, gen_m_given);
  generate_cmd->add_option("--out", gen_out,
                           "output edge-list path (default stdout)");

  auto* bench = app.add_subcommand(
      "bench", "time the full pipeline on a synthetic graph");
  add_generator_options(bench, bench_spec, bench_model, bench_m_given);
  bench->add_option("--threads", bench_threads, "worker threads (0 = auto)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ingest) return cmd_ingest(ingest_in, ingest_out);
    if (*truss)
      return cmd_truss(truss_in, truss_edges_out, truss_nodes_out,
                       truss_threads);
    if (*centrality) return cmd_centrality(copt);
    if (*rank) return cmd_rank(rank_scores_paths, rank_lower, rank_out);
    if (*eval) return cmd_eval(eval_gt, eval_scores, eval_ks, eval_out);
    if (*generate_cmd) {
      gen_spec.model = parse_model(gen_model);
      if (gen_spec.model == GeneratorSpec::Model::ER && !gen_m_given)
        gen_spec.er_edges = 2 * gen_spec.n;
      return cmd_generate(gen_spec, gen_model, gen_out);
    }
    if (*bench) {
      bench_spec.model = parse_model(bench_model);
      if (bench_spec.model == GeneratorSpec::Model::ER && !bench_m_given)
        bench_spec.er_edges = 2 * bench_spec.n;
      return cmd_bench(bench_spec, bench_model, bench_threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace socent
