#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gammalat/coeffs.hpp"
#include "gammalat/density.hpp"
#include "gammalat/error.hpp"
#include "gammalat/gammanum.hpp"
#include "gammalat/linalg.hpp"
#include "gammalat/sympoly.hpp"

namespace gammalat::cli {

using nlohmann::json;

json to_json(const OutputEnvelope& env) {
  json rows = json::array();
  for (const auto& row : env.rows) {
    json r = json::object();
    for (const auto& [k, v] : row) r[k] = v;
    rows.push_back(std::move(r));
  }
  return json{{"command", env.command},
              {"params", env.params},
              {"rows", std::move(rows)},
              {"warnings", env.warnings},
              {"exitStatus", env.exit_status}};
}

OutputEnvelope from_json(const json& j) {
  OutputEnvelope env;
  env.command = j.at("command").get<std::string>();
  env.params = j.at("params").get<std::map<std::string, std::string>>();
  for (const auto& r : j.at("rows")) {
    Row row;
    for (const auto& [k, v] : r.items()) row.emplace_back(k, v.get<std::string>());
    env.rows.push_back(std::move(row));
  }
  env.warnings = j.at("warnings").get<std::vector<std::string>>();
  env.exit_status = j.at("exitStatus").get<int>();
  return env;
}

std::string to_csv(const OutputEnvelope& env) {
  std::vector<std::string> header;
  for (const auto& row : env.rows) {
    for (const auto& [k, v] : row) {
      if (std::find(header.begin(), header.end(), k) == header.end()) header.push_back(k);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : env.rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) os << ',';
      const auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return kv.first == header[i]; });
      if (it != row.end()) os << it->second;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr int kReportDigits = 25;

// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IntRange parse_range(const std::string& text, const std::string& flag) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const long first = std::stol(a, &used_a);
    const long last = std::stol(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {first, last};
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": expected an integer or a range a..b, got '" + text + "'");
  }
}

IntRange require_nonempty(const IntRange& r, const std::string& flag) {
  if (r.empty()) throw UsageError(flag + ": empty range");
  return r;
}

std::string format_real(const Real& x) { return x.to_string(kReportDigits); }

std::string join(const std::vector<long>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

// Validated kappa for the given family; nullopt for Plain.
std::optional<Kappa> family_kappa(FamilyKind family, const std::string& kappa_text) {
  if (family == FamilyKind::Plain) {
    if (!kappa_text.empty()) throw UsageError("--kappa is not accepted by the plain family");
    return std::nullopt;
  }
  if (kappa_text.empty()) throw UsageError("--kappa is required for shifted families");
  return Kappa::make(parse_rational(kappa_text));
}

void warn_conditional(OutputEnvelope& env, const std::vector<Kappa>& kappas) {
  std::vector<std::string> unknown;
  for (const auto& k : kappas) {
    if (!k.known_transcendental) unknown.push_back(to_string(k.value));
  }
  if (unknown.empty()) return;
  std::string list;
  for (std::size_t i = 0; i < unknown.size(); ++i) list += (i ? " " : "") + unknown[i];
  env.warnings.push_back("kappa " + list +
                         " outside the known-transcendental set; results are conditional on Gamma(kappa) "
                         "being transcendental");
}

std::string bool_string(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- coeffs

struct CoeffsArgs {
  std::string family;
  std::string n;
  std::string m;
  std::string kappa;
};

OutputEnvelope cmd_coeffs(const CoeffsArgs& a) {
  OutputEnvelope env;
  env.command = "coeffs";
  env.params = {{"family", a.family}, {"n", a.n}, {"m", a.m}};
  if (!a.kappa.empty()) env.params["kappa"] = a.kappa;

  const FamilyKind family = parse_family(a.family);
  const auto kappa = family_kappa(family, a.kappa);
  const IntRange ns = require_nonempty(parse_range(a.n, "--n"), "--n");
  const IntRange ms = require_nonempty(parse_range(a.m, "--m"), "--m");
  if (ns.first < 0) throw UsageError("--n must be nonnegative");
  const long lowest_m = family == FamilyKind::Plain ? 1 : 0;
  if (ms.first < lowest_m) throw UsageError("--m must be at least " + std::to_string(lowest_m));
  if (kappa) warn_conditional(env, {*kappa});

  LatticeSpec spec{family, {}, kappa};
  for (long n = ns.first; n <= ns.last; ++n) {
    for (long m = ms.first; m <= ms.last; ++m) {
      for (long ell = 0; ell <= n; ++ell) {
        Row row{{"family", std::string(to_string(family))}};
        if (kappa) row.emplace_back("kappa", to_string(kappa->value));
        row.emplace_back("n", std::to_string(n));
        row.emplace_back("ell", std::to_string(ell));
        row.emplace_back("m", std::to_string(m));
        row.emplace_back("point", to_string(spec.point(m)));
        row.emplace_back("value", to_string(coefficient(family, static_cast<unsigned>(n), static_cast<unsigned>(ell),
                                                        static_cast<unsigned>(m), kappa)));
        env.rows.push_back(std::move(row));
      }
    }
  }
  return env;
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
  std::string family;
  long n = 0;
  std::vector<long> indices;
  std::string kappa;
  std::vector<std::string> show;
};

Row matrix_row(const std::string& section, std::size_t r, std::size_t c, const Rational& v) {
  return {{"section", section}, {"row", std::to_string(r + 1)}, {"col", std::to_string(c + 1)}, {"value", to_string(v)}};
}

Row scalar_row(const std::string& section, const std::string& value) { return {{"section", section}, {"value", value}}; }

void emit_matrix(OutputEnvelope& env, const std::string& section, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) env.rows.push_back(matrix_row(section, r, c, m(r, c)));
  }
}

void emit_cauchy_binet(OutputEnvelope& env, const LatticeSpec& spec) {
  // Structured matrix behind the coefficient matrix: E over x_s = 1/s with
  // m' = m - 1 (plain), E over 1/(s-1+kappa) (plus), H over 1/(s-kappa) (minus).
  std::vector<long> m_primes = spec.indices;
  if (spec.family == FamilyKind::Plain) {
    for (auto& m : m_primes) --m;
  }
  const PolyKind kind = spec.family == FamilyKind::MinusShift ? PolyKind::Homogeneous : PolyKind::Elementary;
  const ArgumentFamily family = spec.arguments();
  const RationalMatrix structured = build_structured(m_primes, family, kind);
  const Rational structured_det = det_exact(structured);

  env.rows.push_back(scalar_row(kind == PolyKind::Elementary ? "structured-E" : "structured-H", join(m_primes, " ")));
  env.rows.push_back(scalar_row("structured-det", to_string(structured_det)));

  bool ok = structured_det > 0;
  if (m_primes.size() >= 2) {
    const auto [a, b] = ab_factorization(m_primes, family, kind);
    const RationalMatrix d = minor_reduced_difference(structured);
    const auto cert = cauchy_binet(a, b);
    for (const auto& term : cert.surviving) {
      std::vector<long> subset(term.subset.begin(), term.subset.end());
      env.rows.push_back({{"section", "cb-term"},
                          {"subset", join(subset, " ")},
                          {"det_a", to_string(term.det_a)},
                          {"det_b", to_string(term.det_b)},
                          {"value", to_string(Rational(term.det_a * term.det_b))}});
    }
    env.rows.push_back(scalar_row("cb-pruned", std::to_string(cert.pruned_count)));
    env.rows.push_back(scalar_row("cb-total", to_string(cert.total_det)));
    ok = ok && a * b == d && cert.total_det == det_exact(d) && cert.total_det == structured_det &&
         cert.all_terms_positive();
  } else {
    env.rows.push_back(scalar_row("cb-total", to_string(structured_det)));
  }
  env.rows.push_back(scalar_row("cb-check", ok ? "pass" : "fail"));
  if (!ok) env.exit_status = kVerificationFailure;
}

OutputEnvelope cmd_matrix(const MatrixArgs& a) {
  OutputEnvelope env;
  env.command = "matrix";
  env.params = {{"family", a.family}, {"n", std::to_string(a.n)}, {"indices", join(a.indices, " ")}};
  if (!a.kappa.empty()) env.params["kappa"] = a.kappa;
  std::string shows;
  for (const auto& s : a.show) shows += (shows.empty() ? "" : " ") + s;
  if (!shows.empty()) env.params["show"] = shows;

  const FamilyKind family = parse_family(a.family);
  const auto kappa = family_kappa(family, a.kappa);
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  if (kappa) warn_conditional(env, {*kappa});

  const LatticeSpec spec{family, a.indices, kappa};
  const CoeffSystem sys = build_system(spec, static_cast<unsigned>(a.n));
  emit_matrix(env, "matrix", sys.matrix);
  for (std::size_t r = 0; r < sys.constant_column.size(); ++r) {
    env.rows.push_back(matrix_row("constant", r, 0, sys.constant_column[r]));
  }

  for (const auto& what : a.show) {
    if (what == "det") {
      env.rows.push_back(scalar_row("det", to_string(det_exact(sys.matrix))));
    } else if (what == "inverse") {
      if (!sys.is_square()) throw Error(ErrorKind::NotSquare, "inverse needs a square system");
      try {
        const RationalMatrix inv = inverse_exact(sys.matrix);
        emit_matrix(env, "inverse", inv);
        const bool round_trip = sys.matrix * inv == RationalMatrix::identity(inv.rows());
        env.rows.push_back(scalar_row("inverse-check", round_trip ? "pass" : "fail"));
        if (!round_trip) env.exit_status = kVerificationFailure;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Singular) throw;
        env.rows.push_back(scalar_row("inverse-check", "singular"));
        env.exit_status = kVerificationFailure;
      }
    } else if (what == "cauchy-binet") {
      emit_cauchy_binet(env, spec);
    } else {
      throw UsageError("--show accepts det, inverse, cauchy-binet; got '" + what + "'");
    }
  }
  return env;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string family;
  long n_max = 0;
  long m_max = 0;
  std::string kappa_set = "1/6,1/4,1/3,1/2,2/3,3/4,5/6";
  int digits = 60;
  std::string mode = "identity";
  std::string tolerance;
  std::vector<long> indices;
};

std::vector<Kappa> parse_kappa_set(const std::string& text) {
  std::vector<Kappa> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Kappa::make(parse_rational(item)));
  }
  if (out.empty()) throw UsageError("--kappa-set is empty");
  return out;
}

// Default index sets for a square system of `size` rows: consecutive,
// evenly (plain) or oddly (shifted) stepped, and squares.
std::vector<std::vector<long>> default_index_sets(bool plain, long size) {
  std::vector<std::vector<long>> sets(3);
  for (long r = 0; r < size; ++r) {
    sets[0].push_back(plain ? r + 1 : r);
    sets[1].push_back(plain ? 2 * (r + 1) : 2 * r + 1);
    sets[2].push_back(plain ? (r + 1) * (r + 1) : r * r);
  }
  return sets;
}

void append(Row& row, Row&& more) {
  for (auto& kv : more) row.push_back(std::move(kv));
}

OutputEnvelope cmd_verify(const VerifyArgs& a) {
  OutputEnvelope env;
  env.command = "verify";
  env.params = {{"family", a.family},         {"n-max", std::to_string(a.n_max)}, {"digits", std::to_string(a.digits)},
                {"mode", a.mode}};
  if (a.mode == "identity") env.params["m-max"] = std::to_string(a.m_max);

  const FamilyKind family = parse_family(a.family);
  if (a.digits < PrecisionContext::kMinDigits) {
    throw UsageError("--digits must be at least " + std::to_string(PrecisionContext::kMinDigits));
  }
  if (a.n_max < 0 || a.m_max < 0) throw UsageError("--n-max and --m-max must be nonnegative");
  const PrecisionContext ctx{a.digits, 20};
  std::optional<Real> tolerance;
  if (!a.tolerance.empty()) {
    Real t(ctx.bits());
    if (mpfr_set_str(t.get(), a.tolerance.c_str(), 10, MPFR_RNDN) != 0 || t.sign() <= 0) {
      throw UsageError("--tolerance must be a positive number");
    }
    tolerance = t;
    env.params["tolerance"] = a.tolerance;
  }

  std::vector<std::optional<Kappa>> kappas{std::nullopt};
  if (family != FamilyKind::Plain) {
    const auto parsed = parse_kappa_set(a.kappa_set);
    kappas.assign(parsed.begin(), parsed.end());
    env.params["kappa-set"] = a.kappa_set;
    warn_conditional(env, parsed);
  }

  bool all_pass = true;
  if (a.mode == "identity") {
    const long first_m = family == FamilyKind::Plain ? 1 : 0;
    for (const auto& kappa : kappas) {
      for (long n = 0; n <= a.n_max; ++n) {
        for (long m = first_m; m <= a.m_max; ++m) {
          const auto rep = verify_identity(family, static_cast<unsigned>(n), m, kappa, ctx, tolerance);
          all_pass = all_pass && rep.pass;
          Row row{{"family", std::string(to_string(family))}};
          if (kappa) row.emplace_back("kappa", to_string(kappa->value));
          append(row, Row{{"n", std::to_string(n)},
                                 {"m", std::to_string(m)},
                                 {"lhs", format_real(rep.lhs)},
                                 {"rhs", format_real(rep.rhs)},
                                 {"abs_residual", rep.abs_residual.to_string(5)},
                                 {"rel_residual", rep.rel_residual.to_string(5)},
                                 {"tolerance", rep.tolerance.to_string(5)},
                                 {"pass", bool_string(rep.pass)}});
          env.rows.push_back(std::move(row));
        }
      }
    }
  } else if (a.mode == "recover") {
    const bool plain = family == FamilyKind::Plain;
    for (const auto& kappa : kappas) {
      for (long n = plain ? 2 : 1; n <= a.n_max; ++n) {
        const long size = plain ? n : n + 1;
        auto sets = a.indices.empty() ? default_index_sets(plain, size) : std::vector<std::vector<long>>{a.indices};
        for (const auto& indices : sets) {
          const LatticeSpec spec{family, indices, kappa};
          if (static_cast<long>(indices.size()) != size) continue;
          const auto recovered = recover_basis(spec, static_cast<unsigned>(n), ctx);
          const auto reference = gamma_derivatives(plain ? Rational(1) : kappa->value, static_cast<unsigned>(n), ctx);
          const Real tol = tolerance.value_or(ctx.default_tolerance());
          for (std::size_t i = 0; i < recovered.size(); ++i) {
            const unsigned order = static_cast<unsigned>(plain ? i + 1 : i);
            const Real res = residual(recovered[i], reference.values[order]);
            const bool pass = res < tol;
            all_pass = all_pass && pass;
            Row row{{"family", std::string(to_string(family))}};
            if (kappa) row.emplace_back("kappa", to_string(kappa->value));
            append(row, Row{{"n", std::to_string(n)},
                                   {"indices", join(indices, " ")},
                                   {"order", std::to_string(order)},
                                   {"recovered", format_real(recovered[i])},
                                   {"reference", format_real(reference.values[order])},
                                   {"residual", res.to_string(5)},
                                   {"tolerance", tol.to_string(5)},
                                   {"pass", bool_string(pass)}});
            env.rows.push_back(std::move(row));
          }
        }
      }
    }
  } else {
    throw UsageError("--mode accepts identity or recover; got '" + a.mode + "'");
  }
  if (!all_pass) env.exit_status = kVerificationFailure;
  return env;
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  std::string variant;
  std::string N;
  std::string M;
  std::string n;
  bool with_oracle = false;
};

OutputEnvelope cmd_density(const DensityArgs& a) {
  OutputEnvelope env;
  env.command = "density";
  env.params = {{"variant", a.variant}, {"with-oracle", bool_string(a.with_oracle)}};
  const DensityVariant variant = parse_density_variant(a.variant);

  auto range_flag = [&](const std::string& text, const std::string& flag) {
    if (text.empty()) throw UsageError(flag + " is required for variant " + a.variant);
    env.params[flag.substr(2)] = text;
    return require_nonempty(parse_range(text, flag), flag);
  };
  IntRange first;
  IntRange second{0, 0};
  switch (variant) {
    case DensityVariant::PriorBetaN: first = range_flag(a.N, "--N"); break;
    case DensityVariant::FixedNPlain:
    case DensityVariant::FixedNShifted:
      first = range_flag(a.n, "--n");
      second = range_flag(a.M, "--M");
      break;
    case DensityVariant::BivariatePlain:
    case DensityVariant::BivariateShifted:
      first = range_flag(a.N, "--N");
      second = range_flag(a.M, "--M");
      break;
  }

  bool all_agree = true;
  for (const auto& cell : density_grid(variant, first, second)) {
    const auto& b = cell.bound;
    Row row{{"variant", std::string(to_string(b.variant))}};
    if (b.params.N) row.emplace_back("N", std::to_string(*b.params.N));
    if (b.params.n) row.emplace_back("n", std::to_string(*b.params.n));
    if (b.params.M) row.emplace_back("M", std::to_string(*b.params.M));
    row.emplace_back("value", b.value_string());
    row.emplace_back("exact", bool_string(b.is_exact()));
    row.emplace_back("decimal", b.decimal);
    row.emplace_back("branch", b.branch);
    if (a.with_oracle) {
      row.emplace_back("oracle", cell.oracle ? to_string(*cell.oracle) : "n/a");
      row.emplace_back("agree", cell.oracle ? bool_string(cell.agrees()) : "n/a");
      all_agree = all_agree && cell.agrees();
    }
    env.rows.push_back(std::move(row));
  }
  if (!all_agree) env.exit_status = kVerificationFailure;
  return env;
}

// ---------------------------------------------------------------- sympoly

struct SympolyArgs {
  std::string family;
  std::string kappa;
  std::string kind = "elementary";
  long max_len = 0;
  long max_deg = 0;
  bool oracle = false;
};

OutputEnvelope cmd_sympoly(const SympolyArgs& a) {
  OutputEnvelope env;
  env.command = "sympoly";
  env.params = {{"family", a.family},
                {"kind", a.kind},
                {"max-len", std::to_string(a.max_len)},
                {"max-deg", std::to_string(a.max_deg)},
                {"oracle", bool_string(a.oracle)}};
  if (!a.kappa.empty()) env.params["kappa"] = a.kappa;

  const FamilyKind family = parse_family(a.family);
  const auto kappa = family_kappa(family, a.kappa);
  if (kappa) warn_conditional(env, {*kappa});
  PolyKind kind;
  if (a.kind == "elementary") kind = PolyKind::Elementary;
  else if (a.kind == "homogeneous") kind = PolyKind::Homogeneous;
  else throw UsageError("--kind accepts elementary or homogeneous; got '" + a.kind + "'");
  if (a.max_len < 0 || a.max_deg < 0) throw UsageError("--max-len and --max-deg must be nonnegative");

  const ArgumentFamily args{family, kappa ? std::optional<Rational>(kappa->value) : std::nullopt};
  const auto len = static_cast<std::size_t>(a.max_len);
  const auto deg = static_cast<std::size_t>(a.max_deg);
  const auto table = symmetric_prefix(kind, args, len, deg);
  const auto xs = args.arguments(len);

  bool all_agree = true;
  for (std::size_t j = 0; j <= len; ++j) {
    for (std::size_t v = 0; v <= deg; ++v) {
      Row row{{"j", std::to_string(j)}, {"v", std::to_string(v)}, {"value", to_string(table.at(j, v))}};
      if (a.oracle) {
        const std::span<const Rational> prefix(xs.data(), j);
        const Rational brute = kind == PolyKind::Elementary ? elementary_bruteforce(prefix, v)
                                                            : homogeneous_bruteforce(prefix, v);
        const bool agree = brute == table.at(j, v);
        all_agree = all_agree && agree;
        row.emplace_back("oracle", to_string(brute));
        row.emplace_back("agree", bool_string(agree));
      }
      env.rows.push_back(std::move(row));
    }
  }
  if (!all_agree) env.exit_status = kVerificationFailure;
  return env;
}

void write(const OutputEnvelope& env, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    out << to_json(env).dump(2) << '\n';
    return;
  }
  for (const auto& w : env.warnings) err << "warning: " << w << '\n';
  out << to_csv(env);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficient systems, certificates, verification sweeps and density bounds "
               "for Gamma-function derivatives at lattice points"};
  app.require_subcommand(1);
  std::string format = "csv";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  CoeffsArgs coeffs;
  auto* c = app.add_subcommand("coeffs", "Rational coefficients T_{n,l} at lattice points");
  c->add_option("--family", coeffs.family, "plain | plus | minus")->required();
  c->add_option("--n", coeffs.n, "Derivative order: k or a..b")->required();
  c->add_option("--m", coeffs.m, "Lattice index: k or a..b")->required();
  c->add_option("--kappa", coeffs.kappa, "Shift p/q in (0,1)");
  add_format(c);

  MatrixArgs matrix;
  auto* mx = app.add_subcommand("matrix", "Coefficient matrix with determinant, inverse or certificate");
  mx->add_option("--family", matrix.family, "plain | plus | minus")->required();
  mx->add_option("--n", matrix.n, "Derivative order")->required();
  mx->add_option("--indices", matrix.indices, "Strictly increasing m values, e.g. 1,2,5")
      ->required()
      ->delimiter(',');
  mx->add_option("--kappa", matrix.kappa, "Shift p/q in (0,1)");
  mx->add_option("--show", matrix.show, "det | inverse | cauchy-binet")->delimiter(',');
  add_format(mx);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "High-precision checks of the derivative identities");
  v->add_option("--family", verify.family, "plain | plus | minus")->required();
  v->add_option("--n-max", verify.n_max, "Largest derivative order");
  v->add_option("--m-max", verify.m_max, "Largest lattice index (identity mode)");
  v->add_option("--kappa-set", verify.kappa_set, "Comma-separated shifts")->capture_default_str();
  v->add_option("--digits", verify.digits, "Decimal digits")->capture_default_str();
  v->add_option("--mode", verify.mode, "identity | recover")->capture_default_str();
  v->add_option("--tolerance", verify.tolerance, "Residual tolerance (default 10^-max(digits-20, digits/2))");
  v->add_option("--indices", verify.indices, "Index set for recover mode")->delimiter(',');
  add_format(v);

  DensityArgs density;
  auto* d = app.add_subcommand("density", "Transcendental-density lower bounds");
  d->add_option("--variant", density.variant, "prior | fixed-n | fixed-n-shifted | bivariate | bivariate-shifted")
      ->required();
  d->add_option("--N", density.N, "k or a..b");
  d->add_option("--M", density.M, "k or a..b");
  d->add_option("--n", density.n, "k or a..b");
  d->add_flag("--with-oracle", density.with_oracle, "Add the brute-force min-sum column");
  add_format(d);

  SympolyArgs sympoly;
  auto* s = app.add_subcommand("sympoly", "Prefix tables of e_v / h_v with optional brute-force check");
  s->add_option("--family", sympoly.family, "plain | plus | minus")->required();
  s->add_option("--kappa", sympoly.kappa, "Shift p/q in (0,1)");
  s->add_option("--kind", sympoly.kind, "elementary | homogeneous")->capture_default_str();
  s->add_option("--max-len", sympoly.max_len, "Longest prefix")->required();
  s->add_option("--max-deg", sympoly.max_deg, "Highest degree")->required();
  s->add_flag("--oracle", sympoly.oracle, "Cross-check against subset/multiset enumeration");
  add_format(s);

  std::vector<const char*> argv{"gammalat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    OutputEnvelope env;
    if (c->parsed()) env = cmd_coeffs(coeffs);
    else if (mx->parsed()) env = cmd_matrix(matrix);
    else if (v->parsed()) env = cmd_verify(verify);
    else if (d->parsed()) env = cmd_density(density);
    else env = cmd_sympoly(sympoly);
    write(env, format, out, err);
    return env.exit_status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Singular ? kVerificationFailure : kUsageError;
  }
}

}  // namespace gammalat::cli
