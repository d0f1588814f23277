#include "vmrt/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vmrt/acceptance.hpp"
#include "vmrt/eco.hpp"
#include "vmrt/error.hpp"
#include "vmrt/poly_io.hpp"
#include "vmrt/sampler.hpp"
#include "vmrt/variation.hpp"
#include "vmrt/vmrt.hpp"

namespace vmrt::cli {

namespace {

using json = nlohmann::ordered_json;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("VMRT_LOG");
    return env ? std::atoi(env) : 0;
  }();
  return level;
}

class Context {
 public:
  explicit Context(const RunConfig& config) : config_(config) {}

  void log(int level, const std::string& message) {
    if (log_level() >= level) err_ += "[vmrt] " + message + "\n";
  }
  std::string take_log() { return std::move(err_); }

  json seed_value() const { return config_.seed ? json(*config_.seed) : json(nullptr); }

  std::uint64_t require_seed(const char* command) const {
    if (!config_.seed) throw Error(ErrorKind::Parse, std::string(command) + " is randomized and needs --seed");
    return *config_.seed;
  }

  const RunConfig& config() const { return config_; }

 private:
  const RunConfig& config_;
  std::string err_;
};

json rationals(const std::vector<Rat>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

std::string rational_list(const std::vector<Rat>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s;
}

std::string read_polynomial_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read polynomial file '" + path + "'");
  std::string text;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    text += line;
    text += ' ';
  }
  return text;
}

std::vector<Rat> require_list(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw Error(ErrorKind::Parse, std::string("missing ") + flag);
  return parse_rational_list(*value);
}

// Reads f in t0..tn. n comes from the point when one is given, otherwise
// from the largest variable index in the file.
Hypersurface load_hypersurface(Context& ctx, std::optional<size_t> n, bool enforce_range) {
  const std::string& path = ctx.config().f_path;
  if (path.empty()) throw Error(ErrorKind::Parse, "missing --f");
  const std::string text = read_polynomial_text(path);
  const int max_index = max_symbol_index(text, 't');
  if (!n) {
    if (max_index < 1) throw Error(ErrorKind::DimensionMismatch, "cannot infer n: no variable t1..tn in '" + path + "'");
    n = static_cast<size_t>(max_index);
  } else if (max_index > static_cast<int>(*n)) {
    throw Error(ErrorKind::DimensionMismatch, "f uses t" + std::to_string(max_index) + " but the point has " +
                                                  std::to_string(*n) + " coordinates");
  }
  SparsePoly f = parse_polynomial(text, ambient_vars(*n));
  ctx.log(1, "read f from " + path + ": " + std::to_string(f.size()) + " terms, n = " + std::to_string(*n));
  return Hypersurface::make(std::move(f), enforce_range);
}

json equations_json(const VmrtSystem& sys) {
  json eqs = json::array();
  for (int k = sys.m + 1; k <= 2 * sys.m; ++k) eqs.push_back(json{{"degree", k}, {"poly", format(sys.B_k(k))}});
  return eqs;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- commands ----------------------------------------------------------------

std::string cmd_eco_cert(Context& ctx) {
  const std::vector<Rat> a = require_list(ctx.config().coeffs, "--coeffs");
  const EcoCertificate cert = certify(a);
  return dump(json{{"m", cert.m},
                   {"coefficients", rationals(a)},
                   {"pass", cert.pass},
                   {"sigma", rationals(cert.sigma)},
                   {"residuals", rationals(cert.residuals)},
                   {"seed", ctx.seed_value()}});
}

std::string cmd_eqs(Context& ctx) {
  const AffinePoint y{require_list(ctx.config().point, "--point")};
  const Hypersurface h = load_hypersurface(ctx, y.size(), true);
  const VmrtSystem sys = vmrt_equations(h, y);
  if (ctx.config().json) {
    return dump(json{{"m", h.m()},
                     {"n", h.n()},
                     {"point", rationals(y.coords)},
                     {"equations", equations_json(sys)},
                     {"seed", ctx.seed_value()}});
  }
  std::ostringstream out;
  out << "n = " << h.n() << ", m = " << h.m() << ", point = (" << rational_list(y.coords) << ")\n";
  for (int k = h.m() + 1; k <= 2 * h.m(); ++k) out << "B_" << k << " = " << format(sys.B_k(k)) << "\n";
  return out.str();
}

std::string cmd_eco_line(Context& ctx) {
  const AffinePoint y{require_list(ctx.config().point, "--point")};
  const Direction z{require_list(ctx.config().dir, "--dir")};
  const Hypersurface h = load_hypersurface(ctx, y.size(), true);
  const bool eco = is_eco_line(h, y, z);
  const bool vanish = vmrt_equations(h, y).vanishes_at(z);
  if (ctx.config().json) {
    return dump(json{{"m", h.m()},
                     {"n", h.n()},
                     {"point", rationals(y.coords)},
                     {"dir", rationals(z.coords)},
                     {"eco_line", eco},
                     {"equations_vanish", vanish},
                     {"seed", ctx.seed_value()}});
  }
  return std::string("eco line: ") + (eco ? "yes" : "no") + "\nequations vanish: " + (vanish ? "yes" : "no") + "\n";
}

std::string cmd_converse(Context& ctx) {
  const auto& paths = ctx.config().b_paths;
  if (paths.empty()) throw Error(ErrorKind::Parse, "missing --b");
  std::vector<std::string> texts;
  int n = 0;
  for (const auto& p : paths) {
    texts.push_back(read_polynomial_text(p));
    n = std::max(n, max_symbol_index(texts.back(), 'z'));
  }
  if (n < 1) throw Error(ErrorKind::DimensionMismatch, "cannot infer n: no variable z1..zn in the b files");
  CiData c;
  for (const auto& text : texts) c.b.push_back(parse_polynomial(text, direction_vars(static_cast<size_t>(n))));
  const Hypersurface h = build_converse(c);
  if (ctx.config().json) {
    return dump(json{{"m", h.m()}, {"n", h.n()}, {"f", format(h.f())}, {"seed", ctx.seed_value()}});
  }
  return format(h.f()) + "\n";
}

std::string cmd_count(Context& ctx) {
  const std::uint64_t seed = ctx.require_seed("count");
  std::optional<AffinePoint> y;
  if (ctx.config().point) y = AffinePoint{parse_rational_list(*ctx.config().point)};
  const Hypersurface h = load_hypersurface(ctx, y ? std::optional<size_t>(y->size()) : std::nullopt, true);
  if (!y) {
    // general point: small rationals, resampled while f(1, y) = 0
    Sampler rng(Sampler::derive_seed(seed, 1));
    do {
      y = rng.point(static_cast<size_t>(h.n()), 100);
    } while (is_zero(h.value_at(*y)));
    ctx.log(1, "sampled point (" + rational_list(y->coords) + ")");
  }
  const PointCount pc = count_vmrt_points(h, *y, seed);
  ctx.log(1, "coordinate change accepted after " + std::to_string(pc.attempts) + " draw(s)");
  if (ctx.config().json) {
    return dump(json{{"m", h.m()},
                     {"n", h.n()},
                     {"point", rationals(y->coords)},
                     {"degree", pc.degree},
                     {"squarefree", pc.squarefree},
                     {"attempts", pc.attempts},
                     {"resultant", format(pc.resultant)},
                     {"seed", seed}});
  }
  std::ostringstream out;
  out << "point = (" << rational_list(y->coords) << ")\n"
      << "degree = " << pc.degree << "\n"
      << "squarefree = " << (pc.squarefree ? "yes" : "no") << "\n";
  return out.str();
}

std::string cmd_variation(Context& ctx) {
  const RunConfig& cfg = ctx.config();
  std::optional<Hypersurface> h;
  if (cfg.family) {
    int m = cfg.m;
    if (*cfg.family == "m2") {
      if (m == 0) m = 2;
      if (m != 2) throw Error(ErrorKind::ParameterRange, "--family m2 needs m = 2");
    } else if (*cfg.family == "mge3") {
      if (m < 3) throw Error(ErrorKind::ParameterRange, "--family mge3 needs --m >= 3");
    } else {
      throw Error(ErrorKind::Parse, "unknown family '" + *cfg.family + "' (expected m2 or mge3)");
    }
    h = explicit_family(cfg.n, m, parse_rational(cfg.b), parse_rational(cfg.c));
  } else {
    std::optional<AffinePoint> y;
    if (cfg.point) y = AffinePoint{parse_rational_list(*cfg.point)};
    h = load_hypersurface(ctx, y ? std::optional<size_t>(y->size()) : std::nullopt, true);
    if (y) {
      h = recenter(*h, *y);
      ctx.log(1, "moved (" + rational_list(y->coords) + ") to the origin");
    }
  }
  const VariationReport r = variation_report(*h);
  if (cfg.json) {
    return dump(json{{"n", r.n},
                     {"m", r.m},
                     {"rank_dmu", r.rank_dmu},
                     {"dim_orbit", r.dim_orbit},
                     {"dim_intersection", r.dim_intersection},
                     {"maximal", r.maximal},
                     {"basis_sizes",
                      json{{"forms", r.basis_size}, {"dmu_columns", r.n}, {"orbit_generators", r.n * r.n}}},
                     {"seed", ctx.seed_value()}});
  }
  std::ostringstream out;
  out << "n = " << r.n << ", m = " << r.m << "\n"
      << "rank dmu = " << r.rank_dmu << "\n"
      << "dim orbit = " << r.dim_orbit << "\n"
      << "dim intersection = " << r.dim_intersection << "\n"
      << "maximal = " << (r.maximal ? "yes" : "no") << "\n";
  return out.str();
}

std::string cmd_selftest(Context& ctx, bool& all_pass) {
  const std::uint64_t seed = ctx.require_seed("selftest");
  json criteria = json::array();
  all_pass = true;
  for (const auto& c : run_acceptance(seed)) {
    ctx.log(1, "criterion " + std::to_string(c.id) + (c.pass ? " pass" : " FAIL"));
    all_pass = all_pass && c.pass;
    criteria.push_back(json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return dump(json{{"seed", seed}, {"criteria", criteria}, {"pass", all_pass}});
}

}  // namespace

RunResult run(const RunConfig& config) {
  Context ctx(config);
  RunResult result;
  const bool json_errors = config.json || config.command == Command::EcoCert || config.command == Command::Selftest;
  try {
    switch (config.command) {
      case Command::EcoCert: result.out = cmd_eco_cert(ctx); break;
      case Command::Eqs: result.out = cmd_eqs(ctx); break;
      case Command::EcoLine: result.out = cmd_eco_line(ctx); break;
      case Command::Converse: result.out = cmd_converse(ctx); break;
      case Command::Count: result.out = cmd_count(ctx); break;
      case Command::Variation: result.out = cmd_variation(ctx); break;
      case Command::Selftest: {
        bool pass = false;
        result.out = cmd_selftest(ctx, pass);
        result.exit_code = pass ? 0 : 3;
        break;
      }
    }
  } catch (const Error& e) {
    result.exit_code = e.kind() == ErrorKind::Parse ? 1 : 2;
    result.out.clear();
    const json record{{"error", to_string(e.kind())}, {"message", e.what()}, {"seed", ctx.seed_value()}};
    if (json_errors) {
      result.out = dump(record);
    } else {
      ctx.log(0, std::string("error: ") + to_string(e.kind()) + ": " + e.what());
    }
  }
  result.err = ctx.take_log();
  return result;
}

}  // namespace vmrt::cli
