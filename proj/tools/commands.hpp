#pragma once

#include <optional>
#include <string>

#include "sweep.hpp"
#include "table.hpp"

namespace quasibell::cli {

struct CommonOptions {
  std::optional<int> nmax;
  std::optional<double> tol;
  std::optional<SweepSpec> sweep;
  int jobs = 1;
};

struct EntropyOptions {
  std::optional<double> kappa;
  std::optional<double> alpha;
  std::optional<double> beta;
  int index = 0;
  bool fock = false;
};

struct PhotonOptions {
  std::optional<double> alpha;
  int index = 0;
};

enum class Plane { real, imag, full };

struct CharfuncOptions {
  std::optional<double> alpha;
  int index = 0;
  double grid_min = -0.5;
  double grid_max = 0.5;
  int grid_steps = 5;
  Plane plane = Plane::full;
};

struct SynthOptions {
  std::optional<double> alpha;
  std::optional<double> m_cut;
};

struct GenerateOptions {
  std::optional<double> kappa;
};

struct GramOptions {
  std::optional<double> kappa;
  std::optional<double> alpha;
};

Table run_entropy(const EntropyOptions& opt, const CommonOptions& common);
Table run_photon(const PhotonOptions& opt, const CommonOptions& common);
Table run_charfunc(const CharfuncOptions& opt, const CommonOptions& common);
/// Rows whose gate did not reach the convergence threshold are reported on
/// `warnings` (one line each).
Table run_synth(const SynthOptions& opt, const CommonOptions& common, std::ostream& warnings);
Table run_generate(const GenerateOptions& opt, const CommonOptions& common);
Table run_gram(const GramOptions& opt, const CommonOptions& common);

}  // namespace quasibell::cli
