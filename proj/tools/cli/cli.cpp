#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "echlat/dedekind.hpp"
#include "echlat/embed.hpp"
#include "echlat/error.hpp"
#include "echlat/lattice.hpp"
#include "emit.hpp"
#include "suites.hpp"

namespace echlat::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.size() != expected) {
    throw ParseError(flag + " expects " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  }
  return out;
}

std::int64_t as_int(const Rational& r, const std::string& flag) {
  if (!r.is_integer()) throw ParseError(flag + " expects integers");
  auto v = to_int64(r.num());
  if (!v) throw ParseError(flag + " value out of range");
  return *v;
}

std::string pairs_text(const std::vector<IntPair>& v) {
  std::string s;
  for (const auto& [p, q] : v) s += (s.empty() ? "(" : " (") + std::to_string(p) + "," + std::to_string(q) + ")";
  return s.empty() ? "{}" : s;
}

json pairs_json(const std::vector<IntPair>& v) {
  auto arr = json::array();
  for (const auto& [p, q] : v) arr.push_back({p, q});
  return arr;
}

template <class T>
json strings(const std::vector<T>& v) {
  auto arr = json::array();
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, BigInt>) {
      arr.push_back(x.get_str());
    } else {
      arr.push_back(x.to_string());
    }
  }
  return arr;
}

struct Options {
  bool json_out = false;
  unsigned digits = 12;
  std::string a, b;
  std::int64_t k = 0, l = 0;
  // capacities
  std::int64_t index = -1;
  std::uint64_t count = 10;
  // count
  std::string ellipsoid, triangle, lattice_args, t;
  // embeds
  std::string source, target;
  std::uint64_t max_period = std::uint64_t{1} << 28;
  // cfun / staircase
  std::uint64_t K = 100000;
  bool no_certificate = false;
  std::size_t samples = 200;
  std::string format = "csv";
  bool exact = false;
  std::string out_path;
  std::int64_t points = -1;
  unsigned threads = 1;
  // ehrhart
  std::string u, v, equivalent, pair_sum, fd;
  unsigned precision = kDefaultPrecisionBits;
  // scans
  std::int64_t bound = 40;
  std::int64_t sequence = -1;
  // weights / seqsum
  std::int64_t check = -1;
  std::string first, second;
  // verify
  std::string suite = "all";
  std::uint64_t trials = 200;
  std::uint64_t seed = 7;
};

StairParams stair_params(const Options& o) { return StairParams(o.k, o.l); }

int cmd_capacities(const Options& o, std::ostream& out) {
  const Ellipsoid e(Rational::parse(o.a), Rational::parse(o.b));
  if (o.index >= 0) {
    const Rational c = ech_capacity(e, big(o.index));
    if (o.json_out) {
      out << json{{"k", o.index}, {"capacity", c.to_string()}}.dump() << '\n';
    } else {
      out << c.to_string() << '\n';
    }
    return 0;
  }
  CapacitySeq seq(e);
  const auto pre = seq.prefix(o.count);
  if (o.json_out) {
    out << json{{"capacities", strings(pre)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < pre.size(); ++i) out << i << ' ' << pre[i].to_string() << '\n';
  }
  return 0;
}

int cmd_count(const Options& o, std::ostream& out) {
  BigInt result;
  const int modes = !o.ellipsoid.empty() + !o.triangle.empty() + !o.lattice_args.empty();
  if (modes != 1) throw ParseError("count needs exactly one of --ellipsoid, --triangle, --lattice");
  if (!o.lattice_args.empty()) {
    const auto v = parse_list(o.lattice_args, 3, "--lattice");
    result = lattice_count(big(as_int(v[0], "--lattice")), big(as_int(v[1], "--lattice")), big(as_int(v[2], "--lattice")));
  } else {
    if (o.t.empty()) throw ParseError("count needs --t");
    const Rational t = Rational::parse(o.t);
    if (!o.ellipsoid.empty()) {
      const auto v = parse_list(o.ellipsoid, 2, "--ellipsoid");
      result = capacity_count(Ellipsoid(v[0], v[1]), t);
    } else {
      const auto v = parse_list(o.triangle, 2, "--triangle");
      result = triangle_count(Triangle(v[0], v[1]), big(as_int(t, "--t")));
    }
  }
  if (o.json_out) {
    out << json{{"count", result.get_str()}}.dump() << '\n';
  } else {
    out << result.get_str() << '\n';
  }
  return 0;
}

int cmd_embeds(const Options& o, std::ostream& out) {
  const auto s = parse_list(o.source, 2, "--source");
  const auto t = parse_list(o.target, 2, "--target");
  const EmbedDecision d = embeds(Ellipsoid(s[0], s[1]), Ellipsoid(t[0], t[1]), {o.max_period});
  if (o.json_out) {
    out << to_json(d).dump() << '\n';
  } else if (d.embeds) {
    out << "yes\n";
  } else {
    const auto& w = *d.witness;
    out << "no: k=" << w.k.get_str() << " c_k(source)=" << w.source_value.to_string()
        << " c_k(target)=" << w.target_value.to_string() << " level t=" << w.t.get_str() << " at scale "
        << w.scale.to_string() << '\n';
  }
  return 0;
}

int cmd_cfun(const Options& o, std::ostream& out) {
  const Rational a = Rational::parse(o.a);
  Rational b;
  if (!o.b.empty()) {
    b = Rational::parse(o.b);
  } else if (o.k > 0 && o.l > 0) {
    b = stair_params(o).ratio();
  } else {
    throw ParseError("cfun needs --b or --k/--l");
  }
  CFunOptions opts;
  opts.certificate = !o.no_certificate;
  const CFunResult r = c_fun(a, b, o.K, opts);
  const RatioResult ratio = capacity_ratio(a, b, o.K);
  if (o.json_out) {
    json j = to_json(r, o.digits);
    j["ratio"] = {{"value", ratio.ratio.to_string()}, {"k", ratio.k}};
    out << j.dump() << '\n';
  } else {
    out << "lower " << r.lower.to_string() << " ~ " << r.lower.to_decimal(o.digits) << '\n';
    out << "upper " << r.upper.to_string() << " ~ " << r.upper.to_decimal(o.digits) << '\n';
    out << "max ratio " << ratio.ratio.to_string() << " at k=" << ratio.k << '\n';
    out << (r.exact ? "exact\n" : "interval\n");
  }
  return 0;
}

std::vector<StaircaseRow> parallel_table(const StairParams& P, const std::vector<Rational>& samples,
                                         std::uint64_t K, unsigned threads) {
  threads = std::max(1u, threads);
  if (threads == 1) return staircase_table(P, samples, K);
  std::vector<std::vector<StaircaseRow>> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        std::vector<Rational> mine;
        for (std::size_t i = t; i < samples.size(); i += threads) mine.push_back(samples[i]);
        parts[t] = staircase_table(P, mine, K);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<StaircaseRow> rows(samples.size());
  for (unsigned t = 0; t < threads; ++t) {
    for (std::size_t j = 0; j < parts[t].size(); ++j) rows[t + j * threads] = std::move(parts[t][j]);
  }
  return rows;
}

int cmd_staircase(const Options& o, std::ostream& out, std::ostream& err) {
  const StairParams P = stair_params(o);
  P.require_triplet();
  if (o.points >= 0) {
    const auto steps = stair_points(P, static_cast<std::size_t>(o.points));
    const auto r = r_seq(P, static_cast<std::size_t>(o.points) + 2);
    const QuadraticNumber ph = phi(P);
    if (o.json_out) {
      json pts = json::array();
      for (const auto& s : steps) {
        pts.push_back({{"n", s.n},
                       {"a", s.a.to_string()},
                       {"b", s.b.to_string()},
                       {"plateau", s.value.to_string()},
                       {"f", fn_index(P, static_cast<std::size_t>(s.n)).get_str()}});
      }
      out << json{{"phi", to_json(ph, o.digits)},
                  {"volume_threshold", volume_threshold(P).to_string()},
                  {"r", strings(r)},
                  {"points", pts}}
                 .dump()
          << '\n';
    } else {
      out << "phi " << ph.to_string() << " ~ " << ph.to_decimal(o.digits) << '\n';
      out << "volume_threshold " << volume_threshold(P).to_string() << '\n';
      out << "n,a_n,b_n,plateau,f_n\n";
      for (const auto& s : steps) {
        out << s.n << ',' << s.a.to_string() << ',' << s.b.to_string() << ',' << s.value.to_string() << ','
            << fn_index(P, static_cast<std::size_t>(s.n)).get_str() << '\n';
      }
    }
    return 0;
  }
  if (!o.a.empty()) {
    const Rational c = c_closed_form(Rational::parse(o.a), P);
    out << (o.json_out ? json{{"a", o.a}, {"c", c.to_string()}}.dump() : c.to_string()) << '\n';
    return 0;
  }

  const auto samples = staircase_samples(P, o.samples);
  const auto rows = parallel_table(P, samples, o.K, o.threads);
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw DomainError("cannot open " + o.out_path);
  }
  std::ostream& os = o.out_path.empty() ? out : file;
  if (o.format == "csv") {
    write_staircase_csv(os, rows, {o.digits, o.exact});
  } else if (o.format == "svg") {
    write_staircase_svg(os, P, rows);
  } else if (o.format == "json") {
    os << staircase_json(rows, o.digits).dump() << '\n';
  } else {
    throw ParseError("--format must be csv, svg or json");
  }
  int outside = 0;
  for (const auto& r : rows) {
    if (!r.inside) {
      ++outside;
      err << "closed form " << r.closed_form.to_string() << " outside oracle interval at a=" << r.a.to_string() << '\n';
    }
  }
  return outside ? 2 : 0;
}

int cmd_ehrhart(const Options& o, std::ostream& out) {
  if (!o.pair_sum.empty()) {
    const auto v = parse_list(o.pair_sum, 3, "--pair-sum");
    const BigInt e = big(as_int(v[0], "--pair-sum"));
    const BigInt f = big(as_int(v[1], "--pair-sum"));
    const BigInt n = big(as_int(v[2], "--pair-sum"));
    const Rational s = fd_pair_sum_exact(e, f, n);
    if (o.json_out) {
      out << json{{"pair_sum", s.to_string()}, {"polynomial_part", triangle_count_polynomial(e, f, n).to_string()}}.dump()
          << '\n';
    } else {
      out << s.to_string() << '\n';
    }
    return 0;
  }
  if (!o.fd.empty()) {
    const auto v = parse_list(o.fd, 4, "--fd");
    const FDParams p{as_int(v[0], "--fd"), as_int(v[1], "--fd"), as_int(v[2], "--fd"), as_int(v[3], "--fd")};
    const ApproxReal s = fd_sum_numeric(p, o.precision);
    const int shown = static_cast<int>(o.digits);
    if (o.json_out) {
      out << json{{"value", s.value.to_string(shown)}, {"error_bound", s.error_bound.to_string(6)}}.dump() << '\n';
    } else {
      out << s.value.to_string(shown) << " +- " << s.error_bound.to_string(6) << '\n';
    }
    return 0;
  }
  if (o.u.empty() || o.v.empty()) throw ParseError("ehrhart needs --u and --v, --pair-sum or --fd");
  const Triangle tri(Rational::parse(o.u), Rational::parse(o.v));
  const QuasiPolynomial q = ehrhart_quasipoly(tri);
  std::optional<bool> equiv;
  if (!o.equivalent.empty()) {
    const auto w = parse_list(o.equivalent, 2, "--equivalent");
    equiv = ehrhart_equivalent(tri, Triangle(w[0], w[1]));
  }
  if (o.json_out) {
    json classes = json::array();
    for (const auto& c : q.classes()) classes.push_back({c[0].to_string(), c[1].to_string(), c[2].to_string()});
    json j{{"denominator", q.declared_period()}, {"minimal_period", q.minimal_period()}, {"classes", classes}};
    if (equiv) j["equivalent"] = *equiv;
    out << j.dump() << '\n';
  } else {
    out << "denominator " << q.declared_period() << '\n';
    out << "minimal_period " << q.minimal_period() << '\n';
    for (std::uint64_t r = 0; r < q.declared_period(); ++r) {
      const auto& c = q.coeffs(r);
      out << "class " << r << ": " << c[2].to_string() << " t^2 + " << c[1].to_string() << " t + " << c[0].to_string()
          << '\n';
    }
    if (equiv) out << "equivalent " << (*equiv ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_period_scan(const Options& o, std::ostream& out) {
  const PeriodScanResult r = period_collapse_scan(stair_params(o), o.bound, o.threads);
  if (o.json_out) {
    out << json{{"k", o.k},           {"l", o.l},
                {"bound", o.bound},   {"exploratory", r.exploratory},
                {"matches", pairs_json(r.matches)}, {"predicted", pairs_json(r.predicted)},
                {"extras", pairs_json(r.extras)},   {"missing", pairs_json(r.missing)},
                {"consistent", r.consistent()}}
               .dump()
        << '\n';
  } else {
    out << "matches " << pairs_text(r.matches) << '\n';
    if (!r.exploratory) {
      out << "predicted " << pairs_text(r.predicted) << '\n';
      out << "extras " << pairs_text(r.extras) << '\n';
      out << "missing " << pairs_text(r.missing) << '\n';
    } else {
      out << "exploratory: no prediction\n";
    }
  }
  return r.consistent() ? 0 : 2;
}

int cmd_diophantine(const Options& o, std::ostream& out) {
  const StairParams P = stair_params(o);
  const auto sols = diophantine_solutions(P, o.bound);
  json j{{"solutions", pairs_json(sols)}};
  if (o.sequence >= 0) {
    j["r"] = strings(r_seq(P, static_cast<std::size_t>(o.sequence)));
    j["s"] = strings(descent_sequence(P, static_cast<std::size_t>(o.sequence)));
  }
  if (o.json_out) {
    out << j.dump() << '\n';
  } else {
    out << "solutions " << pairs_text(sols) << '\n';
    if (o.sequence >= 0) {
      out << "r";
      for (const auto& x : j["r"]) out << ' ' << x.get<std::string>();
      out << "\ns";
      for (const auto& x : j["s"]) out << ' ' << x.get<std::string>();
      out << '\n';
    }
  }
  return 0;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const Rational a = Rational::parse(o.a);
  const WeightSequence ws = weight_sequence(a);
  std::optional<bool> ok;
  if (o.check >= 0) ok = check_decomposition(a, static_cast<std::uint64_t>(o.check));
  if (o.json_out) {
    json j{{"a", a.to_string()}, {"weights", strings(ws.weights)}};
    if (ok) j["decomposition"] = *ok;
    out << j.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < ws.weights.size(); ++i) out << (i ? " " : "") << ws.weights[i].to_string();
    out << '\n';
    if (ok) out << "decomposition " << (*ok ? "holds" : "fails") << '\n';
  }
  return ok && !*ok ? 2 : 0;
}

int cmd_seqsum(const Options& o, std::ostream& out) {
  const auto x = parse_list(o.first, 2, "--first");
  const auto y = parse_list(o.second, 2, "--second");
  CapacitySeq sx(Ellipsoid(x[0], x[1]));
  CapacitySeq sy(Ellipsoid(y[0], y[1]));
  const auto s = seq_sum(sx.prefix(o.K), sy.prefix(o.K), static_cast<std::size_t>(o.K));
  if (o.json_out) {
    out << json{{"sum", strings(s)}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) out << i << ' ' << s[i].to_string() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SuiteReport r = run_suite(o.suite, o.trials, o.seed);
  if (o.json_out) {
    out << json{{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}}.dump() << '\n';
  } else {
    out << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  return r.failed ? 2 : 0;
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"capacities", "ECH capacities c_k(E(a,b))", {"ech_capacity", "CapacitySeq"},
       {"capacities", "--a", "1", "--b", "2", "--count", "5"}},
      {"count", "lattice and capacity counts", {"lattice_count", "triangle_count", "capacity_count"},
       {"count", "--lattice", "2,3,6"}},
      {"embeds", "decide Int E(a,b) -> E(c,d)", {"embeds"}, {"embeds", "--source", "1,4", "--target", "2,2", "--json"}},
      {"cfun", "certified interval for c(a,b)", {"c_fun", "capacity_ratio", "quad_compare"}, {"cfun", "--a", "4", "--b", "1", "--K", "1000"}},
      {"staircase", "staircase tables, points and plots",
       {"staircase_table", "c_closed_form", "stair_points", "phi", "r_seq", "volume_threshold", "fn_index"},
       {"staircase", "--k", "1", "--l", "1", "--points", "3"}},
      {"ehrhart", "Ehrhart quasipolynomials and Fourier-Dedekind sums",
       {"ehrhart_quasipoly", "quasi_eval", "minimal_period", "ehrhart_equivalent", "fd_pair_sum_exact", "fd_sum_numeric"},
       {"ehrhart", "--u", "1/3", "--v", "1/2", "--equivalent", "2/9,3/4"}},
      {"period-scan", "scan for period collapse", {"period_collapse_scan"},
       {"period-scan", "--k", "1", "--l", "1", "--bound", "8"}},
      {"diophantine", "solutions of k p^2 - (k+l+1) p q + l q^2 + 1 = 0", {"diophantine_solutions", "descent_sequence"},
       {"diophantine", "--k", "3", "--l", "2", "--bound", "12", "--sequence", "6"}},
      {"weights", "weight sequences and ball decompositions", {"weight_sequence", "check_decomposition"},
       {"weights", "--a", "7/3", "--check", "60"}},
      {"seqsum", "sequence sum of two capacity sequences", {"seq_sum"},
       {"seqsum", "--first", "1,1", "--second", "1,1", "--K", "6"}},
      {"verify", "seeded property suites",
       {"check_rademacher", "check_rademacher_zero", "check_convolution", "check_step_indices", "check_count_bound"},
       {"verify", "--suite", "reciprocity", "--trials", "10", "--seed", "7"}},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ECH capacities, ellipsoid embeddings and Ehrhart counts", "echlat"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "machine-readable output"); };

  auto* caps = app.add_subcommand("capacities", "ECH capacities c_k(E(a,b))");
  caps->add_option("--a", o.a)->required();
  caps->add_option("--b", o.b)->required();
  caps->add_option("--k", o.index, "single index");
  caps->add_option("--count", o.count, "print c_0..c_count");
  json_flag(caps);

  auto* cnt = app.add_subcommand("count", "lattice and capacity counts");
  cnt->add_option("--ellipsoid", o.ellipsoid, "a,b: #{am+bn <= t}");
  cnt->add_option("--triangle", o.triangle, "u,v: lattice points of t*T_{u,v}");
  cnt->add_option("--lattice", o.lattice_args, "e,f,n: #{ex+fy <= n}");
  cnt->add_option("--t", o.t);
  json_flag(cnt);

  auto* emb = app.add_subcommand("embeds", "decide Int E(a,b) -> E(c,d)");
  emb->add_option("--source", o.source)->required();
  emb->add_option("--target", o.target)->required();
  emb->add_option("--max-period", o.max_period);
  json_flag(emb);

  auto* cf = app.add_subcommand("cfun", "certified interval for c(a,b)");
  cf->add_option("--a", o.a)->required();
  cf->add_option("--b", o.b);
  cf->add_option("--k", o.k);
  cf->add_option("--l", o.l);
  cf->add_option("--K", o.K, "capacity indices checked directly");
  cf->add_option("--digits", o.digits);
  cf->add_flag("--no-certificate", o.no_certificate);
  json_flag(cf);

  auto* st = app.add_subcommand("staircase", "staircase tables, points and plots");
  st->add_option("--k", o.k)->required();
  st->add_option("--l", o.l)->required();
  st->add_option("--samples", o.samples);
  st->add_option("--K", o.K);
  st->add_option("--format", o.format)->check(CLI::IsMember({"csv", "svg", "json"}));
  st->add_option("--digits", o.digits);
  st->add_flag("--exact", o.exact, "add exact p/q columns");
  st->add_option("--out", o.out_path);
  st->add_option("--points", o.points, "print a_n, b_n, plateaus and f_n for n <= N");
  st->add_option("--a", o.a, "closed form at a single a");
  st->add_option("--threads", o.threads);
  json_flag(st);

  auto* eh = app.add_subcommand("ehrhart", "Ehrhart quasipolynomials and Fourier-Dedekind sums");
  eh->add_option("--u", o.u);
  eh->add_option("--v", o.v);
  eh->add_option("--equivalent", o.equivalent, "u2,v2");
  eh->add_option("--pair-sum", o.pair_sum, "e,f,n: exact s_{-n}(e,1;f) + s_{-n}(f,1;e)");
  eh->add_option("--fd", o.fd, "n,a1,a2,b: numeric s_n(a1,a2;b)");
  eh->add_option("--precision", o.precision);
  eh->add_option("--digits", o.digits);
  json_flag(eh);

  auto* ps = app.add_subcommand("period-scan", "scan for period collapse");
  ps->add_option("--k", o.k)->required();
  ps->add_option("--l", o.l)->required();
  ps->add_option("--bound", o.bound);
  ps->add_option("--threads", o.threads);
  json_flag(ps);

  auto* di = app.add_subcommand("diophantine", "solutions of k p^2 - (k+l+1) p q + l q^2 + 1 = 0");
  di->add_option("--k", o.k)->required();
  di->add_option("--l", o.l)->required();
  di->add_option("--bound", o.bound);
  di->add_option("--sequence", o.sequence, "also print r_n and s_n for n <= N");
  json_flag(di);

  auto* we = app.add_subcommand("weights", "weight sequences and ball decompositions");
  we->add_option("--a", o.a)->required();
  we->add_option("--check", o.check, "compare sequence sums through index K");
  json_flag(we);

  auto* ss = app.add_subcommand("seqsum", "sequence sum of two capacity sequences");
  ss->add_option("--first", o.first)->required();
  ss->add_option("--second", o.second)->required();
  ss->add_option("--K", o.K);
  json_flag(ss);

  auto* ve = app.add_subcommand("verify", "seeded property suites");
  ve->add_option("--suite", o.suite)->check(CLI::IsMember(suite_names()));
  ve->add_option("--trials", o.trials);
  ve->add_option("--seed", o.seed);
  json_flag(ve);

  std::vector<std::string> storage = args;
  std::reverse(storage.begin(), storage.end());
  try {
    app.parse(storage);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (caps->parsed()) return cmd_capacities(o, out);
    if (cnt->parsed()) return cmd_count(o, out);
    if (emb->parsed()) return cmd_embeds(o, out);
    if (cf->parsed()) return cmd_cfun(o, out);
    if (st->parsed()) return cmd_staircase(o, out, err);
    if (eh->parsed()) return cmd_ehrhart(o, out);
    if (ps->parsed()) return cmd_period_scan(o, out);
    if (di->parsed()) return cmd_diophantine(o, out);
    if (we->parsed()) return cmd_weights(o, out);
    if (ss->parsed()) return cmd_seqsum(o, out);
    if (ve->parsed()) return cmd_verify(o, out);
  } catch (const InternalVerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const PrecisionFailure& e) {
    err << "precision failure: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace echlat::cli
