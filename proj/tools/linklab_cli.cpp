#include "CLI11.hpp"
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "linklab/errors.hpp"

using namespace linklab::cli;

int main(int argc, char** argv) {
  CLI::App app{"linklab: random planar link diagrams, exact census formulas and tangle experiments"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  GlobalOptions g;
  app.add_option("--seed", g.seed, "base seed (u64)");
  app.add_option("--streams", g.streams, "independent random streams / worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--format", g.format, "json | csv | pd")->check(CLI::IsMember({"json", "csv", "pd"}));

  SampleOptions so;
  auto* sample = app.add_subcommand("sample", "sample rooted diagrams");
  sample->add_option("--class", so.cls, "q4v | sq | alternating | uniform")
      ->check(CLI::IsMember({"q4v", "sq", "alternating", "uniform"}));
  sample->add_option("--n", so.n, "crossings")->required();
  sample->add_option("--count", so.count, "number of diagrams");
  sample->add_option("--sq-cap", so.sq_cap, "largest n accepted by the rejection sampler");
  sample->add_option("--max-tries", so.max_tries, "rejection budget per accepted sample");

  CensusOptions co;
  auto* census = app.add_subcommand("census", "exact counts and probabilities as CSV");
  census->add_option("--formula", co.formula,
                     "sq | sq_m | q | q_boundary | p_root_face | m_gons | p_n2 | tangle_prob | rooting | volume_bounds");
  census->add_option("--n", co.n, "n or range a..b");
  census->add_option("--m", co.m, "face degree (range allowed)");
  census->add_option("--p", co.p, "boundary half-perimeter (range allowed)");
  census->add_option("--N", co.big_n, "total size N, or c for rooting (range allowed)");
  census->add_option("--table-4m-p", co.table, "table mode, e.g. \"n=1000 m=2..7\"");

  StatsOptions st;
  auto* stats = app.add_subcommand("stats", "Monte Carlo summaries of diagram observables");
  stats->add_option("--observable", st.observable, "bigons | facetype | twist | components | volume_bounds | volume");
  stats->add_option("--class", st.cls, "q4v | sq | alternating | uniform");
  stats->add_option("--n", st.n, "n list, e.g. 6,8,10 or 4..8");
  stats->add_option("--count", st.count, "samples per n");
  stats->add_option("--emit-hist", st.hist_bins, "bins for the standardized histogram (0 = none)");
  stats->add_option("--volumes", st.volumes, "CSV of diagram_id,volume for the volume observable");
  stats->add_option("--sq-cap", st.sq_cap, "largest n accepted by the rejection sampler");

  EmbedOptions eo;
  auto* embed = app.add_subcommand("embed", "tangle embedding frequency against the exact probability");
  embed->add_option("--tangle", eo.tangle, "tangle JSON path or builtin:<square|area13|hopf_clasp|...>");
  embed->add_option("--N", eo.big_n, "embed at the root of uniform size-N maps");
  embed->add_option("--c", eo.c, "rooting-count mode on uniform c-crossing diagrams");
  embed->add_option("--samples", eo.samples, "number of samples");
  embed->add_flag("--with-crossings", eo.with_crossings, "match the tangle's crossing bits too");

  JoinOptions jo;
  auto* join = app.add_subcommand("join-volumes", "join external volumes and check the twist bounds");
  join->add_option("--diagrams", jo.diagrams, "sample JSON or id/PD lines")->required();
  join->add_option("--volumes", jo.volumes, "CSV diagram_id,volume")->required();
  join->add_flag("!--no-sort", jo.sort_facetype, "keep input order instead of face-type order");

  ExportOptions xo;
  auto* exp = app.add_subcommand("export", "convert diagrams between JSON and PD");
  exp->add_option("--in", xo.input, "sample JSON, diagram JSON or id/PD lines")->required();

  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) {
      std::cerr << "error: cannot write '" << g.out << "'\n";
      return 1;
    }
  }
  std::ostream& out = g.out.empty() ? std::cout : file;
  try {
    if (*sample) return cmd_sample(g, so, out, std::cerr);
    if (*census) {
      if (co.formula.empty() && co.table.empty()) throw linklab::DomainError("census needs --formula or --table-4m-p");
      return cmd_census(g, co, out, std::cerr);
    }
    if (*stats) return cmd_stats(g, st, out, std::cerr);
    if (*embed) return cmd_embed(g, eo, out, std::cerr);
    if (*join) return cmd_join_volumes(g, jo, out, std::cerr);
    if (*exp) return cmd_export(g, xo, out, std::cerr);
  } catch (const linklab::SizeLimitError& e) {
    std::cerr << "feasibility error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
