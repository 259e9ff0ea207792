#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "gammalat/coeffs.hpp"
#include "gammalat/density.hpp"
#include "gammalat/error.hpp"
#include "gammalat/gammanum.hpp"
#include "gammalat/linalg.hpp"
#include "gammalat/sympoly.hpp"

namespace py = pybind11;
using namespace gammalat;

// Rationals cross the boundary as "num/den" strings and reals as decimal
// strings; the Python package turns rationals into Fraction.

namespace {

using StringMatrix = std::vector<std::vector<std::string>>;

StringMatrix to_strings(const RationalMatrix& m) {
  StringMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(to_string(m(r, c)));
  }
  return out;
}

RationalMatrix from_strings(const StringMatrix& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(rows[r][c]);
  }
  return m;
}

std::optional<Kappa> make_kappa(const std::optional<std::string>& kappa) {
  if (!kappa) return std::nullopt;
  return Kappa::make(parse_rational(*kappa));
}

ArgumentFamily make_family(const std::string& family, const std::optional<std::string>& kappa) {
  return {parse_family(family), kappa ? std::optional<Rational>(parse_rational(*kappa)) : std::nullopt};
}

PolyKind make_kind(const std::string& kind) {
  if (kind == "elementary") return PolyKind::Elementary;
  if (kind == "homogeneous") return PolyKind::Homogeneous;
  throw Error(ErrorKind::InvalidArgument, "kind must be elementary or homogeneous");
}

std::string real_string(const Real& x, int digits) { return x.to_string(digits); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact coefficient systems and high-precision Gamma derivatives at lattice points";

  static py::exception<Error> error_type(m, "GammalatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      error_type(e.what());
    }
  });

  m.def("known_transcendental_shifts", [] {
    std::vector<std::string> out;
    for (const auto& k : known_transcendental_shifts()) out.push_back(to_string(k));
    return out;
  });

  m.def(
      "coefficient",
      [](const std::string& family, unsigned n, unsigned ell, unsigned m, const std::optional<std::string>& kappa) {
        return to_string(coefficient(parse_family(family), n, ell, m, make_kappa(kappa)));
      },
      py::arg("family"), py::arg("n"), py::arg("ell"), py::arg("m"), py::arg("kappa") = py::none());

  m.def(
      "build_system",
      [](const std::string& family, const std::vector<long>& indices, unsigned n,
         const std::optional<std::string>& kappa) {
        const auto sys = build_system({parse_family(family), indices, make_kappa(kappa)}, n);
        std::vector<std::string> constants;
        for (const auto& c : sys.constant_column) constants.push_back(to_string(c));
        return py::dict(py::arg("matrix") = to_strings(sys.matrix), py::arg("constants") = constants,
                        py::arg("unknowns") = sys.unknowns_label);
      },
      py::arg("family"), py::arg("indices"), py::arg("n"), py::arg("kappa") = py::none());

  m.def("det", [](const StringMatrix& rows) { return to_string(det_exact(from_strings(rows))); });
  m.def("inverse", [](const StringMatrix& rows) { return to_strings(inverse_exact(from_strings(rows))); });

  m.def(
      "structured_matrix",
      [](const std::vector<long>& m_primes, const std::string& family, const std::string& kind,
         const std::optional<std::string>& kappa) {
        return to_strings(build_structured(m_primes, make_family(family, kappa), make_kind(kind)));
      },
      py::arg("m_primes"), py::arg("family"), py::arg("kind") = "elementary", py::arg("kappa") = py::none());

  m.def(
      "cauchy_binet",
      [](const std::vector<long>& m_primes, const std::string& family, const std::string& kind,
         const std::optional<std::string>& kappa) {
        const auto [a, b] = ab_factorization(m_primes, make_family(family, kappa), make_kind(kind));
        const auto cert = cauchy_binet(a, b);
        py::list terms;
        for (const auto& t : cert.surviving) {
          terms.append(py::make_tuple(t.subset, to_string(t.det_a), to_string(t.det_b)));
        }
        return py::dict(py::arg("total") = to_string(cert.total_det), py::arg("terms") = terms,
                        py::arg("pruned") = cert.pruned_count, py::arg("all_positive") = cert.all_terms_positive());
      },
      py::arg("m_primes"), py::arg("family"), py::arg("kind") = "elementary", py::arg("kappa") = py::none());

  m.def(
      "symmetric_table",
      [](const std::string& family, const std::string& kind, std::size_t max_len, std::size_t max_deg,
         const std::optional<std::string>& kappa) {
        const auto t = symmetric_prefix(make_kind(kind), make_family(family, kappa), max_len, max_deg);
        StringMatrix out(max_len + 1);
        for (std::size_t j = 0; j <= max_len; ++j) {
          for (std::size_t v = 0; v <= max_deg; ++v) out[j].push_back(to_string(t.at(j, v)));
        }
        return out;
      },
      py::arg("family"), py::arg("kind"), py::arg("max_len"), py::arg("max_deg"), py::arg("kappa") = py::none());

  m.def(
      "gamma_derivatives",
      [](const std::string& q, unsigned n, int digits) {
        const PrecisionContext ctx{digits, 20};
        std::vector<std::string> out;
        for (const auto& v : gamma_derivatives(parse_rational(q), n, ctx).values) out.push_back(real_string(v, digits));
        return out;
      },
      py::arg("q"), py::arg("n"), py::arg("digits") = 60);

  m.def(
      "polygamma",
      [](unsigned k, const std::string& q, int digits) {
        return real_string(polygamma(k, parse_rational(q), PrecisionContext{digits, 20}), digits);
      },
      py::arg("k"), py::arg("q"), py::arg("digits") = 60);

  m.def(
      "verify_identity",
      [](const std::string& family, unsigned n, long m, const std::optional<std::string>& kappa, int digits) {
        const auto r = verify_identity(parse_family(family), n, m, make_kappa(kappa), PrecisionContext{digits, 20});
        return py::dict(py::arg("lhs") = real_string(r.lhs, digits), py::arg("rhs") = real_string(r.rhs, digits),
                        py::arg("rel_residual") = r.rel_residual.to_double(),
                        py::arg("abs_residual") = r.abs_residual.to_double(),
                        py::arg("tolerance") = r.tolerance.to_double(), py::arg("pass") = r.pass);
      },
      py::arg("family"), py::arg("n"), py::arg("m"), py::arg("kappa") = py::none(), py::arg("digits") = 60);

  m.def(
      "recover_basis",
      [](const std::string& family, const std::vector<long>& indices, unsigned n,
         const std::optional<std::string>& kappa, int digits) {
        std::vector<std::string> out;
        for (const auto& v : recover_basis({parse_family(family), indices, make_kappa(kappa)}, n,
                                           PrecisionContext{digits, 20})) {
          out.push_back(real_string(v, digits));
        }
        return out;
      },
      py::arg("family"), py::arg("indices"), py::arg("n"), py::arg("kappa") = py::none(), py::arg("digits") = 60);

  m.def(
      "density_bound",
      [](const std::string& variant, long first, std::optional<long> second) {
        const DensityVariant v = parse_density_variant(variant);
        if (v != DensityVariant::PriorBetaN && !second) {
          throw Error(ErrorKind::InvalidArgument, "variant needs two parameters");
        }
        DensityBound b;
        switch (v) {
          case DensityVariant::PriorBetaN: b = beta_prior(first); break;
          case DensityVariant::FixedNPlain: b = beta_fixed_n(first, *second); break;
          case DensityVariant::FixedNShifted: b = beta_fixed_n_shifted(first, *second); break;
          case DensityVariant::BivariatePlain: b = beta_bivariate(first, *second); break;
          case DensityVariant::BivariateShifted: b = beta_bivariate_shifted(first, *second); break;
        }
        return py::dict(py::arg("value") = b.value_string(), py::arg("exact") = b.is_exact(),
                        py::arg("decimal") = b.decimal, py::arg("branch") = b.branch);
      },
      py::arg("variant"), py::arg("first"), py::arg("second") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"));
}
