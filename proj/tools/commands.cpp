#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <ostream>
#include <tuple>

#include "quasibell/characteristic.hpp"
#include "quasibell/errors.hpp"
#include "quasibell/fock.hpp"
#include "quasibell/gates.hpp"
#include "quasibell/synthesis.hpp"
#include "quasibell/twostate.hpp"

namespace quasibell::cli {
namespace {

using fock::FockSpace;

Cell integer(int v) { return static_cast<std::int64_t>(v); }

void reject_sweep_of_unknown(const CommonOptions& common, std::initializer_list<const char*> allowed) {
  if (!common.sweep) return;
  for (const char* name : allowed) {
    if (common.sweep->name == name) return;
  }
  std::string msg = "cannot sweep '" + common.sweep->name + "' here; allowed:";
  for (const char* name : allowed) msg += std::string(" ") + name;
  throw DomainError(msg);
}

FockSpace space_for(double alpha, const CommonOptions& common) {
  return common.nmax ? FockSpace(*common.nmax) : FockSpace::for_amplitude(alpha);
}

double tail_tol(const CommonOptions& common, double fallback) { return common.tol.value_or(fallback); }

void require_index(int index) {
  if (index < 1 || index > 4) throw DomainError("--index must be 1, 2, 3 or 4");
}

// Path through the abstract two-dimensional representation.
Table entropy_abstract(const EntropyOptions& opt, const CommonOptions& common) {
  Table t{{"kappa", "beta", "index", "entropy", "lambda1", "lambda2", "concurrence"}, {}};
  const auto kappas = parameter_values("kappa", opt.kappa, common.sweep);
  const QuasiBellIndex index(opt.index);
  auto rows = evaluate_points(kappas, common.jobs, [&](double kappa) {
    const OverlapPair pair(kappa);
    const TwoQubitState state = opt.beta ? general_state(pair, GeneralWeights(*opt.beta), index)
                                         : quasi_bell_state(pair, index);
    const double beta = opt.beta.value_or(1.0 / std::sqrt(2.0));
    const auto lambda = reduced_density(state).eigenvalues();
    return std::vector<Cell>{kappa,
                             beta,
                             integer(opt.index),
                             entropy_of_entanglement(state),
                             lambda[0],
                             lambda[1],
                             concurrence(state)};
  });
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

Table entropy_fock(const EntropyOptions& opt, const CommonOptions& common) {
  if (opt.beta) throw DomainError("--beta is only available on the abstract path");
  Table t{{"alpha", "kappa", "index", "nmax", "entropy", "lambda1", "lambda2", "concurrence"}, {}};
  const auto alphas = parameter_values("alpha", opt.alpha, common.sweep);
  const QuasiBellIndex index(opt.index);
  auto rows = evaluate_points(alphas, common.jobs, [&](double alpha) {
    const FockSpace space = space_for(alpha, common);
    const auto state = fock::quasi_bell_coherent(index, alpha, space, tail_tol(common, fock::kDefaultTailTolerance));
    const DensityMatrix rho = fock::partial_trace(state, fock::Subsystem::A);
    const auto& lambda = rho.eigenvalues();
    return std::vector<Cell>{alpha,
                             fock::overlap_kappa(alpha),
                             integer(opt.index),
                             integer(space.dim()),
                             rho.entropy(),
                             lambda[0],
                             lambda[1],
                             2.0 * std::sqrt(lambda[0] * lambda[1])};
  });
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

}  // namespace

Table run_entropy(const EntropyOptions& opt, const CommonOptions& common) {
  require_index(opt.index);
  const bool fock_path = opt.fock || opt.alpha || (common.sweep && common.sweep->name == "alpha");
  if (fock_path) {
    if (opt.kappa) throw DomainError("the Fock path takes --alpha, not --kappa");
    reject_sweep_of_unknown(common, {"alpha"});
    return entropy_fock(opt, common);
  }
  reject_sweep_of_unknown(common, {"kappa"});
  return entropy_abstract(opt, common);
}

Table run_photon(const PhotonOptions& opt, const CommonOptions& common) {
  require_index(opt.index);
  reject_sweep_of_unknown(common, {"alpha"});
  Table t{{"alpha", "kappa", "index", "nmax", "closed_form", "numeric", "abs_diff"}, {}};
  const auto alphas = parameter_values("alpha", opt.alpha, common.sweep);
  const QuasiBellIndex index(opt.index);
  auto rows = evaluate_points(alphas, common.jobs, [&](double alpha) {
    const FockSpace space = space_for(alpha, common);
    const double closed = fock::mean_photon_number_closed(index, alpha);
    const double numeric =
        fock::mean_photon_number(index, alpha, space, tail_tol(common, fock::kDefaultTailTolerance));
    return std::vector<Cell>{alpha,          fock::overlap_kappa(alpha), integer(opt.index),
                             integer(space.dim()), closed,            numeric,
                             std::abs(numeric - closed)};
  });
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

Table run_charfunc(const CharfuncOptions& opt, const CommonOptions& common) {
  require_index(opt.index);
  reject_sweep_of_unknown(common, {"alpha"});
  if (!(opt.grid_min < opt.grid_max) || opt.grid_steps < 2) {
    throw DomainError("grid needs --grid-min < --grid-max and --grid-steps >= 2");
  }
  const std::vector<double> axis =
      SweepSpec{"grid", opt.grid_min, opt.grid_max, opt.grid_steps}.points();
  std::vector<std::pair<Complex, Complex>> points;
  if (opt.plane == Plane::full) {
    for (double xr : axis)
      for (double xi : axis)
        for (double er : axis)
          for (double ei : axis) points.emplace_back(Complex(xr, xi), Complex(er, ei));
  } else {
    const Complex unit = (opt.plane == Plane::real) ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    for (double x : axis)
      for (double y : axis) points.emplace_back(x * unit, y * unit);
  }

  Table t{{"alpha", "index", "xi_re", "xi_im", "eta_re", "eta_im", "c_re", "c_im", "abs_diff"}, {}};
  const QuasiBellIndex index(opt.index);
  const double tol = tail_tol(common, fock::kCharacteristicTailTolerance);
  for (double alpha : parameter_values("alpha", opt.alpha, common.sweep)) {
    // Validates alpha (degenerate family 4 at alpha = 0) before any Fock work.
    fock::characteristic_function_closed(index, alpha, 0.0, 0.0);
    const FockSpace space = space_for(alpha, common);
    const auto state = fock::quasi_bell_coherent(index, alpha, space);
    auto rows = evaluate_points(points, common.jobs, [&](const std::pair<Complex, Complex>& p) {
      const Complex numeric = fock::characteristic_function_numeric(state, p.first, p.second, tol);
      const Complex closed = fock::characteristic_function_closed(index, alpha, p.first, p.second);
      return std::vector<Cell>{alpha,
                               integer(opt.index),
                               p.first.real(),
                               p.first.imag(),
                               p.second.real(),
                               p.second.imag(),
                               numeric.real(),
                               numeric.imag(),
                               std::abs(numeric - closed)};
    });
    for (auto& r : rows) t.add_row(std::move(r));
  }
  return t;
}

Table run_synth(const SynthOptions& opt, const CommonOptions& common, std::ostream& warnings) {
  reject_sweep_of_unknown(common, {"alpha", "m_cut"});
  const auto alphas = parameter_values("alpha", opt.alpha, common.sweep);
  const auto cuts = integer_values(parameter_values("m_cut", opt.m_cut, common.sweep), "m_cut");
  std::vector<std::pair<double, int>> points;
  for (double a : alphas)
    for (int m : cuts) points.emplace_back(a, m);

  Table t{{"alpha", "m_cut", "nmax", "delta_m", "gate_error", "literal_gate_error", "converged"}, {}};
  const double tol = tail_tol(common, fock::kDefaultTailTolerance);
  const auto results = evaluate_points(points, common.jobs, [&](const std::pair<double, int>& p) {
    const FockSpace space = common.nmax ? FockSpace(*common.nmax) : fock::synthesis_space(p.first);
    const auto r = fock::synthesize_hadamard(p.first, p.second, space, tol);
    return std::tuple<double, int, int, double, double, double, bool>{
        p.first, p.second, space.dim(), r.coefficients.delta_m, r.gate_error, r.literal_gate_error,
        r.converged};
  });
  for (const auto& [alpha, m, dim, delta, err, lit, converged] : results) {
    if (!converged) {
      warnings << "warning: synthesized gate not converged at alpha = " << format_number(alpha)
               << ", m_cut = " << m << " (gate_error " << format_number(err) << " > "
               << format_number(fock::kConvergenceThreshold) << ")\n";
    }
    t.add_row({alpha, integer(m), integer(dim), delta, err, lit, integer(converged ? 1 : 0)});
  }
  return t;
}

Table run_generate(const GenerateOptions& opt, const CommonOptions& common) {
  reject_sweep_of_unknown(common, {"kappa"});
  Table t{{"kappa", "ee_re", "ee_im", "eo_re", "eo_im", "oe_re", "oe_im", "oo_re", "oo_im",
           "fidelity_to_psi3", "fidelity_squared", "entropy"},
          {}};
  const auto kappas = parameter_values("kappa", opt.kappa, common.sweep);
  auto rows = evaluate_points(kappas, common.jobs, [&](double kappa) {
    const GenerationResult r = generate_quasi_bell(OverlapPair(kappa));
    std::vector<Cell> row{kappa};
    for (int k = 0; k < 4; ++k) {
      row.emplace_back(r.state.amplitudes()(k).real());
      row.emplace_back(r.state.amplitudes()(k).imag());
    }
    row.emplace_back(r.fidelity_to_psi3);
    row.emplace_back(r.fidelity_to_psi3 * r.fidelity_to_psi3);
    row.emplace_back(entropy_of_entanglement(r.state));
    return row;
  });
  for (auto& r : rows) t.add_row(std::move(r));
  return t;
}

Table run_gram(const GramOptions& opt, const CommonOptions& common) {
  const bool fock_path = opt.alpha || (common.sweep && common.sweep->name == "alpha");
  if (fock_path) {
    if (opt.kappa) throw DomainError("give either --kappa or --alpha");
    reject_sweep_of_unknown(common, {"alpha"});
    Table t{{"alpha", "kappa", "nmax", "i", "j", "value", "expected", "abs_diff"}, {}};
    const auto alphas = parameter_values("alpha", opt.alpha, common.sweep);
    const double tol = tail_tol(common, fock::kDefaultTailTolerance);
    const auto blocks = evaluate_points(alphas, common.jobs, [&](double alpha) {
      const FockSpace space = space_for(alpha, common);
      const double kappa = fock::overlap_kappa(alpha);
      const Eigen::Matrix4d expected = gram_matrix(OverlapPair(kappa));
      std::vector<fock::TwoModeState> states;
      for (int i = 1; i <= 4; ++i) states.push_back(fock::quasi_bell_coherent(QuasiBellIndex(i), alpha, space, tol));
      std::vector<std::vector<Cell>> rows;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const Complex v = states[i].overlap(states[j]);
          rows.push_back({alpha, kappa, integer(space.dim()), integer(i + 1), integer(j + 1), v.real(),
                          expected(i, j), std::abs(v - expected(i, j))});
        }
      }
      return rows;
    });
    for (const auto& block : blocks)
      for (const auto& r : block) t.add_row(r);
    return t;
  }
  reject_sweep_of_unknown(common, {"kappa"});
  Table t{{"kappa", "i", "j", "value", "expected", "abs_diff"}, {}};
  const auto kappas = parameter_values("kappa", opt.kappa, common.sweep);
  for (double kappa : kappas) {
    const OverlapPair pair(kappa);
    const Eigen::Matrix4d expected = gram_matrix(pair);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const Complex v = quasi_bell_state(pair, QuasiBellIndex(i + 1))
                              .overlap(quasi_bell_state(pair, QuasiBellIndex(j + 1)));
        t.add_row({kappa, integer(i + 1), integer(j + 1), v.real(), expected(i, j),
                   std::abs(v - expected(i, j))});
      }
    }
  }
  return t;
}

}  // namespace quasibell::cli
