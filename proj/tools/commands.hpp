#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace linklab::cli {

struct GlobalOptions {
  std::uint64_t seed = 1;
  unsigned streams = 1;
  std::string out;     // empty: stdout
  std::string format;  // json | csv | pd; empty = command default
};

// "2..5", "7", "10,12,20..22"
std::vector<long> parse_range(const std::string& text);

struct SampleOptions {
  std::string cls = "q4v";  // q4v | sq | alternating | uniform
  int n = 10;
  std::size_t count = 1;
  int sq_cap = 16;
  std::uint64_t max_tries = 1ULL << 32;
};
int cmd_sample(const GlobalOptions& g, const SampleOptions& o, std::ostream& out, std::ostream& err);

struct CensusOptions {
  std::string formula;  // sq | sq_m | q | q_boundary | p_root_face | m_gons | p_n2 | tangle_prob | rooting | volume_bounds
  std::string n = "1";
  std::string m = "2";
  std::string p = "1";
  std::string big_n;  // N for tangle_prob, c for rooting
  std::string table;  // e.g. "n=1000 m=2..7"
};
int cmd_census(const GlobalOptions& g, const CensusOptions& o, std::ostream& out, std::ostream& err);

struct StatsOptions {
  std::string observable = "bigons";  // bigons | facetype | twist | components | volume_bounds | volume
  std::string cls = "sq";
  std::string n = "6";
  std::size_t count = 1000;
  std::size_t hist_bins = 0;
  std::string volumes;  // CSV (diagram_id, volume) for the volume observable
  int sq_cap = 16;
};
int cmd_stats(const GlobalOptions& g, const StatsOptions& o, std::ostream& out, std::ostream& err);

struct EmbedOptions {
  std::string tangle = "builtin:square";  // file path or builtin:<id>
  long big_n = 0;                          // shadow mode: Q(N)
  long c = 0;                              // rooting-count mode
  std::size_t samples = 1000;
  bool with_crossings = false;
};
int cmd_embed(const GlobalOptions& g, const EmbedOptions& o, std::ostream& out, std::ostream& err);

struct JoinOptions {
  std::string diagrams;  // sample JSON output, or "id<TAB>PD" lines
  std::string volumes;
  bool sort_facetype = true;
};
int cmd_join_volumes(const GlobalOptions& g, const JoinOptions& o, std::ostream& out, std::ostream& err);

struct ExportOptions {
  std::string input;  // sample JSON, diagram JSON, or PD text
};
int cmd_export(const GlobalOptions& g, const ExportOptions& o, std::ostream& out, std::ostream& err);

}  // namespace linklab::cli
