#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include "json.hpp"
#include <optional>
#include <sstream>
#include <thread>

#include "linklab/census.hpp"
#include "linklab/diagram.hpp"
#include "linklab/harness.hpp"
#include "linklab/random_stream.hpp"
#include "linklab/sampler.hpp"
#include "linklab/tangle.hpp"

namespace linklab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCsvHeader = "# linklab-csv v1";

std::string fmt(double x, int digits = 10) {
  if (std::isnan(x)) return "NA";
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string rational(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Sample i is drawn by stream i mod k, in increasing i within each stream,
// so results depend only on (seed, streams, i) and never on scheduling.
template <class R, class F>
std::vector<R> run_streams(std::size_t count, std::uint64_t seed, unsigned streams, F&& draw) {
  if (streams == 0) streams = 1;
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(streams);
  auto work = [&](unsigned s) {
    try {
      RandomStream rng(seed, s);
      for (std::size_t i = s; i < count; i += streams) slots[i].emplace(draw(rng, i, s));
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (streams == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned s = 0; s < streams; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Record {
  std::string id;
  unsigned stream_id = 0;
  std::size_t index = 0;
  LinkDiagram diagram;
};

const std::vector<std::string> kClasses = {"q4v", "sq", "alternating", "uniform"};

bool needs_sq(const std::string& cls) { return cls == "sq" || cls == "alternating"; }

LinkDiagram draw_one(const std::string& cls, int n, RandomStream& rng, int cap, std::uint64_t max_tries) {
  if (cls == "q4v") {
    RootedMap m = sample_four_valent(n, rng);
    const std::size_t v = m.vertex_count();
    return LinkDiagram(std::move(m), std::vector<std::uint8_t>(v, 0));
  }
  if (cls == "uniform") return assign_crossings(sample_four_valent(n, rng), CrossingMode::uniform, rng);
  RootedMap m = sample_sq(n, rng, max_tries, cap);
  if (cls == "alternating") return alternating_diagram(m);
  const std::size_t v = m.vertex_count();
  return LinkDiagram(std::move(m), std::vector<std::uint8_t>(v, 0));
}

std::vector<Record> generate(const std::string& cls, int n, std::size_t count, const GlobalOptions& g, int cap,
                             std::uint64_t max_tries) {
  if (std::find(kClasses.begin(), kClasses.end(), cls) == kClasses.end())
    throw DomainError("unknown class '" + cls + "' (expected q4v, sq, alternating or uniform)");
  if (n < 1) throw DomainError("n must be positive");
  if (needs_sq(cls) && n > cap)
    throw SizeLimitError(static_cast<std::size_t>(n), static_cast<std::size_t>(cap));
  return run_streams<Record>(count, g.seed, g.streams, [&](RandomStream& rng, std::size_t i, unsigned s) {
    Record r{cls + "-n" + std::to_string(n) + "-s" + std::to_string(g.seed) + "-" + std::to_string(i), s, i,
             draw_one(cls, n, rng, cap, max_tries)};
    return r;
  });
}

std::string face_type_string(const FaceTypeVector& f) {
  std::string s;
  std::size_t last = 2;
  for (std::size_t k = 2; k < f.counts.size(); ++k)
    if (f[k]) last = k;
  for (std::size_t k = 2; k <= last; ++k) {
    if (k > 2) s += '|';
    s += std::to_string(f[k]);
  }
  return s;
}

struct Observables {
  std::string face_type;
  std::string cls = "general";
  std::optional<long> twist;
  std::optional<VolumeBounds> bounds;
  std::size_t components = 0;
};

Observables observe(const LinkDiagram& d) {
  Observables o;
  o.face_type = face_type_string(face_type(d));
  o.components = component_count(d);
  const DiagramClass c = classify(d);
  o.cls = to_string(c);
  if (c == DiagramClass::general) {
    if (edge_connectivity_at_least_3(d.shadow())) o.twist = twist_number(d);
    return o;
  }
  o.twist = twist_number(d);
  o.bounds = volume_bounds(d);
  return o;
}

std::string optional_num(const std::optional<long>& v) { return v ? std::to_string(*v) : "NA"; }

std::map<std::string, double> read_volumes(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw MissingDataError("cannot open volumes file '" + path + "'");
  std::map<std::string, double> vols;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw FormatError(path + ":" + std::to_string(lineno) + ": expected 'diagram_id,volume'");
    const std::string id = line.substr(0, comma), v = line.substr(comma + 1);
    if (id == "diagram_id") continue;
    try {
      vols[id] = std::stod(v);
    } catch (const std::exception&) {
      err << "warning: " << path << ":" << lineno << ": unreadable volume '" << v << "'\n";
    }
  }
  return vols;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingDataError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Sample JSON output, a bare diagram JSON, or "id PD[...]" lines.
std::vector<std::pair<std::string, LinkDiagram>> read_diagrams(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<std::pair<std::string, LinkDiagram>> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw FormatError(std::string("bad JSON in ") + path + ": " + e.what());
    }
    if (j.is_object() && j.contains("diagrams")) {
      for (const auto& r : j.at("diagrams")) out.emplace_back(r.at("id").get<std::string>(), diagram_from_json(r.at("diagram")));
    } else if (j.is_object()) {
      out.emplace_back("diagram-0", diagram_from_json(j));
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) out.emplace_back("diagram-" + std::to_string(i), diagram_from_json(j[i]));
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t k = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto pd = line.find("PD[");
    if (pd == std::string::npos) throw FormatError("expected a PD code on line: " + line);
    std::string id = line.substr(0, pd);
    while (!id.empty() && (id.back() == ' ' || id.back() == '\t' || id.back() == ',')) id.pop_back();
    if (id.empty()) id = "diagram-" + std::to_string(k);
    out.emplace_back(id, parse_pd(line.substr(pd)));
    ++k;
  }
  return out;
}

BoundedQuadrangulation load_tangle(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string id = source.substr(prefix.size());
    if (id == "square") return minimal_square_tangle();
    if (id == "area13") return area13_perimeter8_example();
    for (auto& t : forbidden_tangle_library())
      if (t.id == id) return t.tangle;
    throw DomainError("unknown builtin tangle '" + id + "'");
  }
  try {
    return tangle_from_json(json::parse(slurp(source)));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad tangle JSON: ") + e.what());
  }
}

}  // namespace

std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stol(part));
      } else {
        const long a = std::stol(part.substr(0, dots)), b = std::stol(part.substr(dots + 2));
        if (b < a) throw DomainError("empty range '" + part + "'");
        for (long x = a; x <= b; ++x) out.push_back(x);
      }
    } catch (const std::invalid_argument&) {
      throw DomainError("bad range '" + part + "'");
    }
  }
  if (out.empty()) throw DomainError("empty range '" + text + "'");
  return out;
}

int cmd_sample(const GlobalOptions& g, const SampleOptions& o, std::ostream& out, std::ostream&) {
  const auto records = generate(o.cls, o.n, o.count, g, o.sq_cap, o.max_tries);
  const std::string format = g.format.empty() ? "json" : g.format;
  json manifest;
  manifest["format"] = "linklab-sample v1";
  manifest["class"] = o.cls;
  manifest["n"] = o.n;
  manifest["count"] = o.count;
  manifest["seed"] = g.seed;
  manifest["streams"] = g.streams;
  manifest["sq_cap"] = o.sq_cap;
  json ids = json::array();
  for (const auto& r : records) ids.push_back({{"id", r.id}, {"stream_id", r.stream_id}, {"index", r.index}});
  manifest["records"] = ids;
  if (!g.out.empty()) {
    std::ofstream mf(g.out + ".manifest.json");
    mf << manifest.dump(2) << '\n';
  }
  if (format == "json") {
    json doc;
    doc["manifest"] = manifest;
    json ds = json::array();
    for (const auto& r : records) ds.push_back({{"id", r.id}, {"diagram", to_json(r.diagram)}});
    doc["diagrams"] = ds;
    out << doc.dump() << '\n';
  } else if (format == "pd") {
    out << "# linklab-pd v1 class=" << o.cls << " n=" << o.n << " count=" << o.count << " seed=" << g.seed
        << " streams=" << g.streams << '\n';
    for (const auto& r : records) out << r.id << '\t' << export_pd(r.diagram) << '\n';
  } else if (format == "csv") {
    out << kCsvHeader << '\n' << "run_id,seed,stream_id,index,class,n,face_type,twist,components,lower,upper\n";
    for (const auto& r : records) {
      const Observables ob = observe(r.diagram);
      out << r.id << ',' << g.seed << ',' << r.stream_id << ',' << r.index << ',' << o.cls << ',' << o.n << ','
          << ob.face_type << ',' << optional_num(ob.twist) << ',' << ob.components << ','
          << (ob.bounds ? fmt(ob.bounds->lower) : "NA") << ',' << (ob.bounds ? fmt(ob.bounds->upper) : "NA") << '\n';
    }
  } else {
    throw DomainError("unknown format '" + format + "'");
  }
  return 0;
}

int cmd_census(const GlobalOptions&, const CensusOptions& o, std::ostream& out, std::ostream&) {
  out << kCsvHeader << '\n';
  if (!o.table.empty()) {
    // "n=1000 m=2..7"
    long n = 1000;
    std::vector<long> ms = parse_range("2..7");
    std::istringstream ss(o.table);
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw DomainError("table arguments look like n=1000 m=2..7");
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "n") n = std::stol(val);
      else if (key == "m") ms = parse_range(val);
      else throw DomainError("unknown table key '" + key + "'");
    }
    out << "n,m,exact,value\n";
    for (long m : ms) {
      const mpq_class v = expected_m_gons(n, m) / n;  // (4/m) P(n,m)
      out << n << ',' << m << ',' << rational(v) << ',' << fixed(v.get_d(), 7) << '\n';
    }
    return 0;
  }
  const std::string& f = o.formula;
  const auto ns = parse_range(o.n);
  if (f == "sq" || f == "q") {
    out << "formula,n,exact\n";
    for (long n : ns) out << f << ',' << n << ',' << (f == "sq" ? count_sq(n) : count_q(n)).str() << '\n';
  } else if (f == "sq_m") {
    out << "formula,n,m,exact\n";
    for (long n : ns)
      for (long m : parse_range(o.m)) out << f << ',' << n << ',' << m << ',' << count_sq_m(n, m).str() << '\n';
  } else if (f == "q_boundary") {
    out << "formula,n,p,exact\n";
    for (long n : ns)
      for (long p : parse_range(o.p)) out << f << ',' << n << ',' << p << ',' << count_q_boundary(n, p).str() << '\n';
  } else if (f == "p_root_face" || f == "m_gons") {
    out << "formula,n,m,exact,value\n";
    for (long n : ns)
      for (long m : parse_range(o.m)) {
        const mpq_class v = f == "p_root_face" ? prob_root_face(n, m).value : expected_m_gons(n, m);
        out << f << ',' << n << ',' << m << ',' << rational(v) << ',' << fmt(v.get_d(), 12) << '\n';
      }
  } else if (f == "p_n2") {
    out << "formula,n,exact,value,asymptotic,residual\n";
    for (long n : ns) {
      const auto e = p_n2_expansion(n);
      out << f << ',' << n << ',' << rational(e.exact.value) << ',' << fmt(e.exact.float_view(), 12) << ','
          << fmt(e.asymptotic, 12) << ',' << fmt(e.residual, 6) << '\n';
    }
  } else if (f == "tangle_prob") {
    if (o.big_n.empty()) throw DomainError("tangle_prob needs --N");
    out << "formula,n,p,N,exact,value,limit\n";
    for (long n : ns)
      for (long p : parse_range(o.p))
        for (long N : parse_range(o.big_n)) {
          const auto v = tangle_prob(n, p, N);
          out << f << ',' << n << ',' << p << ',' << N << ',' << rational(v.value) << ',' << fmt(v.float_view(), 12)
              << ',' << fmt(tangle_prob_limit(n, p), 12) << '\n';
        }
  } else if (f == "rooting") {
    if (o.big_n.empty()) throw DomainError("rooting needs --N (the crossing count c)");
    out << "formula,n,p,c,exact_normalized,value,limit\n";
    for (long n : ns)
      for (long p : parse_range(o.p))
        for (long c : parse_range(o.big_n)) {
          mpq_class v = 4 * tangle_prob(n, p, c).value;
          v /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(n));
          out << f << ',' << n << ',' << p << ',' << c << ',' << rational(v) << ',' << fmt(v.get_d(), 12) << ','
              << fmt(expected_rooting_count_limit(n, p), 12) << '\n';
        }
  } else if (f == "volume_bounds") {
    out << "formula,n,expected_twist,lower,upper\n";
    for (long n : ns) {
      const auto b = expected_volume_bounds(n);
      out << f << ',' << n << ',' << fmt(expected_twist(n), 12) << ',' << fmt(b.lower, 12) << ',' << fmt(b.upper, 12)
          << '\n';
    }
  } else {
    throw DomainError("unknown formula '" + f +
                      "' (sq, sq_m, q, q_boundary, p_root_face, m_gons, p_n2, tangle_prob, rooting, volume_bounds)");
  }
  return 0;
}

int cmd_stats(const GlobalOptions& g, const StatsOptions& o, std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> kObs = {"bigons", "facetype", "twist", "components", "volume_bounds", "volume"};
  if (std::find(kObs.begin(), kObs.end(), o.observable) == kObs.end())
    throw DomainError("unknown observable '" + o.observable + "'");
  std::map<std::string, double> vols;
  if (o.observable == "volume") {
    if (o.volumes.empty()) throw MissingDataError("the volume observable needs joined data (--volumes)");
    vols = read_volumes(o.volumes, err);
  }
  out << kCsvHeader << '\n' << "n,observable,count,mean,variance,skewness,m4_over_m2sq,m5_over_m2_5half,min,max\n";
  std::ostringstream hist;
  for (long n : parse_range(o.n)) {
    const auto records = generate(o.cls, static_cast<int>(n), o.count, g, o.sq_cap, 1ULL << 40);
    std::map<std::string, std::vector<double>> series;  // ordered label -> values
    std::vector<std::string> order;
    auto push = [&](const std::string& label, double v) {
      auto [it, fresh] = series.try_emplace(label);
      if (fresh) order.push_back(label);
      it->second.push_back(v);
    };
    std::size_t joined = 0;
    for (const auto& r : records) {
      const LinkDiagram& d = r.diagram;
      if (o.observable == "bigons") {
        push("F2", static_cast<double>(face_type(d)[2]));
      } else if (o.observable == "facetype") {
        const auto f = face_type(d);
        for (std::size_t k = 2; k <= std::max<std::size_t>(3 * d.crossing_count(), 2); ++k)
          push("F" + std::to_string(k), static_cast<double>(f[k]));
      } else if (o.observable == "components") {
        push("components", static_cast<double>(component_count(d)));
      } else if (o.observable == "twist") {
        push("twist", static_cast<double>(twist_number(d)));
      } else if (o.observable == "volume_bounds") {
        const auto b = volume_bounds(d);
        push("lower", b.lower);
        push("upper", b.upper);
      } else {
        const auto it = vols.find(r.id);
        if (it == vols.end()) continue;
        ++joined;
        push("volume", it->second);
      }
    }
    if (o.observable == "volume" && joined == 0)
      throw MissingDataError("no sampled diagram id matches the volumes file");
    for (const auto& label : order) {
      const auto& xs = series[label];
      StatsSummary s;
      for (double x : xs) s.add(x);
      out << n << ',' << label << ',' << s.count() << ',' << fmt(s.mean(), 12) << ',' << fmt(s.variance(), 12) << ','
          << fmt(s.skewness(), 12) << ',' << fmt(s.standardized4(), 12) << ',' << fmt(s.standardized5(), 12) << ','
          << fmt(s.min()) << ',' << fmt(s.max()) << '\n';
      if (o.hist_bins > 0)
        for (const auto& b : normalized_histogram(xs, o.hist_bins))
          hist << n << ',' << label << ',' << fmt(b.lo, 8) << ',' << fmt(b.hi, 8) << ',' << fmt(b.density, 8) << '\n';
    }
  }
  if (o.hist_bins > 0) out << "# histogram (standardized to mean 0, variance 1)\nn,observable,lo,hi,density\n" << hist.str();
  return 0;
}

int cmd_embed(const GlobalOptions& g, const EmbedOptions& o, std::ostream& out, std::ostream& err) {
  const BoundedQuadrangulation t = load_tangle(o.tangle);
  if (const auto report = validate(t); !report) {
    err << "lint: tangle violates '" << report.violation << "'\n";
    return 2;
  }
  if ((o.big_n > 0) == (o.c > 0)) throw DomainError("give exactly one of --N (root embedding) or --c (rooting count)");
  const long n = static_cast<long>(t.area), p = static_cast<long>(t.half_perimeter());
  const bool bits = o.with_crossings && t.crossing_bits.has_value();
  const long size = o.big_n > 0 ? o.big_n : o.c;
  if (size <= n) throw DomainError("need N > n (tangle area)");
  mpq_class exact_q = tangle_prob(n, p, size).value;
  if (bits) exact_q /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(n));
  const double exact = exact_q.get_d();
  std::vector<Embedder> embedders(std::max(1u, g.streams), Embedder(t));  // scratch space is per stream
  out << kCsvHeader << '\n';
  if (o.big_n > 0) {
    const auto hits = run_streams<int>(o.samples, g.seed, g.streams, [&](RandomStream& rng, std::size_t, unsigned s) {
      Embedder* e = &embedders[s];
      if (!o.with_crossings) {
        const RootedMap q = sample_quadrangulation(static_cast<int>(size), rng);
        return e->embeds(q, q.root()) ? 1 : 0;
      }
      const LinkDiagram l = assign_crossings(sample_four_valent(static_cast<int>(size), rng), CrossingMode::uniform, rng);
      return e->embeds_with_crossings(l, dual(l.shadow()), l.shadow().root()) ? 1 : 0;
    });
    std::size_t h = 0;
    for (int x : hits) h += static_cast<std::size_t>(x);
    const double freq = static_cast<double>(h) / static_cast<double>(o.samples);
    const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(o.samples));
    out << "mode,n,p,N,samples,hits,frequency,exact,sigma,z\n";
    out << (o.with_crossings ? "root_with_crossings" : "root_shadow") << ',' << n << ',' << p << ',' << size << ','
        << o.samples << ',' << h << ',' << fmt(freq, 10) << ',' << fmt(exact, 10) << ',' << fmt(sigma, 6) << ','
        << fmt(sigma > 0 ? (freq - exact) / sigma : 0.0, 6) << '\n';
    return 0;
  }
  const auto counts = run_streams<double>(o.samples, g.seed, g.streams, [&](RandomStream& rng, std::size_t, unsigned s) {
    Embedder* e = &embedders[s];
    const LinkDiagram l = assign_crossings(sample_four_valent(static_cast<int>(size), rng), CrossingMode::uniform, rng);
    const RootedMap q = dual(l.shadow());
    std::size_t k = 0;
    for (std::size_t r = 0; r < q.dart_count(); ++r)
      k += (bits ? e->embeds_with_crossings(l, q, static_cast<Dart>(r)) : e->embeds(q, static_cast<Dart>(r))) ? 1 : 0;
    return static_cast<double>(k) / static_cast<double>(size);
  });
  StatsSummary s;
  for (double x : counts) s.add(x);
  const double expected = 4 * exact;
  const double limit = bits ? expected_rooting_count_limit(n, p) : 4 * tangle_prob_limit(n, p);
  const double se = s.standard_error();
  out << "mode,n,p,c,samples,mean_normalized,sd,expected,limit,z\n";
  out << "rooting_count," << n << ',' << p << ',' << size << ',' << o.samples << ',' << fmt(s.mean(), 10) << ','
      << fmt(std::sqrt(s.variance()), 6) << ',' << fmt(expected, 10) << ',' << fmt(limit, 10) << ','
      << fmt(se > 0 ? (s.mean() - expected) / se : 0.0, 6) << '\n';
  return 0;
}

int cmd_join_volumes(const GlobalOptions&, const JoinOptions& o, std::ostream& out, std::ostream& err) {
  const auto diagrams = read_diagrams(o.diagrams);
  const auto vols = read_volumes(o.volumes, err);
  if (vols.empty()) err << "warning: volumes file has no rows; nothing joined\n";
  struct Row {
    std::string id;
    FaceTypeVector f;
    Observables ob;
    double volume;
    std::size_t crossings;
  };
  std::vector<Row> rows;
  std::vector<std::string> unmatched;
  for (const auto& [id, d] : diagrams) {
    const auto it = vols.find(id);
    if (it == vols.end()) {
      unmatched.push_back(id);
      continue;
    }
    rows.push_back({id, face_type(d), observe(d), it->second, d.crossing_count()});
  }
  if (o.sort_facetype) {
    // lexicographic on (F_2, F_3, ...), missing entries read as 0; ties by id
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      const std::size_t len = std::max(a.f.counts.size(), b.f.counts.size());
      for (std::size_t k = 2; k < len; ++k)
        if (a.f[k] != b.f[k]) return a.f[k] < b.f[k];
      return a.id < b.id;
    });
  }
  out << kCsvHeader << '\n' << "diagram_id,face_type,crossings,class,volume,twist,lower,upper,within_bounds\n";
  std::size_t checked = 0, violations = 0;
  for (const auto& r : rows) {
    std::string within = "NA";
    if (r.ob.bounds && r.ob.cls != "general") {
      ++checked;
      const double tol = 1e-9;
      const bool ok = r.ob.bounds->lower - tol <= r.volume && r.volume <= r.ob.bounds->upper + tol;
      if (!ok) ++violations;
      within = ok ? "1" : "0";
    }
    out << r.id << ',' << r.ob.face_type << ',' << r.crossings << ',' << r.ob.cls << ',' << fmt(r.volume, 12) << ','
        << optional_num(r.ob.twist) << ',' << (r.ob.bounds ? fmt(r.ob.bounds->lower, 12) : "NA") << ','
        << (r.ob.bounds ? fmt(r.ob.bounds->upper, 12) : "NA") << ',' << within << '\n';
  }
  err << "join: " << rows.size() << " joined, " << unmatched.size() << " unmatched";
  for (std::size_t i = 0; i < unmatched.size() && i < 10; ++i) err << (i ? " " : ": ") << unmatched[i];
  err << "; bounds checked " << checked << ", violations " << violations << '\n';
  return violations == 0 ? 0 : 3;
}

int cmd_export(const GlobalOptions& g, const ExportOptions& o, std::ostream& out, std::ostream&) {
  const auto diagrams = read_diagrams(o.input);
  const std::string format = g.format.empty() ? "pd" : g.format;
  if (format == "pd") {
    for (const auto& [id, d] : diagrams) out << id << '\t' << export_pd(d) << '\n';
  } else if (format == "json") {
    json ds = json::array();
    for (const auto& [id, d] : diagrams) ds.push_back({{"id", id}, {"diagram", to_json(d)}});
    out << json{{"diagrams", ds}}.dump() << '\n';
  } else if (format == "csv") {
    out << kCsvHeader << '\n' << "diagram_id,crossings,components,face_type,class,twist\n";
    for (const auto& [id, d] : diagrams) {
      const Observables ob = observe(d);
      out << id << ',' << d.crossing_count() << ',' << ob.components << ',' << ob.face_type << ',' << ob.cls << ','
          << optional_num(ob.twist) << '\n';
    }
  } else {
    throw DomainError("unknown format '" + format + "'");
  }
  return 0;
}

}  // namespace linklab::cli
