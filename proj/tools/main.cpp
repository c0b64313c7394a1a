#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "quasibell/errors.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

using namespace quasibell::cli;

void add_common(CLI::App* sub, CommonOptions& common, Format& format, std::string& out_path,
                std::string& sweep_text) {
  sub->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv},
                                                                       {"json", Format::json}}));
  sub->add_option("--out", out_path, "Write to PATH instead of standard output");
  sub->add_option("--nmax", common.nmax, "Fock-space dimension (default: chosen from alpha)");
  sub->add_option("--tol", common.tol, "Largest coherent tail mass allowed above the cutoff");
  sub->add_option("--sweep", sweep_text, "NAME:MIN:MAX:STEPS");
  sub->add_option("--jobs", common.jobs, "Worker threads for sweep points")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-Bell states over nonorthogonal pairs: entanglement, Fock-space checks, "
               "Hadamard synthesis"};
  app.require_subcommand(1);

  CommonOptions common;
  Format format = Format::csv;
  std::string out_path;
  std::string sweep_text;

  EntropyOptions entropy;
  auto* s_entropy = app.add_subcommand("entropy", "Entropy of entanglement, reduced eigenvalues, concurrence");
  s_entropy->add_option("--kappa", entropy.kappa, "Overlap of the basic pair");
  s_entropy->add_option("--alpha", entropy.alpha, "Coherent amplitude (Fock path)");
  s_entropy->add_option("--beta", entropy.beta, "Weight of the first product term");
  s_entropy->add_option("--index", entropy.index, "Quasi-Bell family 1..4")->required();
  s_entropy->add_flag("--fock", entropy.fock, "Evaluate with coherent states in Fock space");

  PhotonOptions photon;
  auto* s_photon = app.add_subcommand("photon", "Mean photon number of the reduced state");
  s_photon->add_option("--alpha", photon.alpha, "Coherent amplitude");
  s_photon->add_option("--index", photon.index, "Quasi-Bell family 1..4")->required();

  CharfuncOptions charfunc;
  auto* s_charfunc = app.add_subcommand("charfunc", "Two-mode characteristic function on a grid");
  s_charfunc->add_option("--alpha", charfunc.alpha, "Coherent amplitude");
  s_charfunc->add_option("--index", charfunc.index, "Quasi-Bell family 1..4")->required();
  s_charfunc->add_option("--grid-min", charfunc.grid_min, "Smallest grid coordinate")->capture_default_str();
  s_charfunc->add_option("--grid-max", charfunc.grid_max, "Largest grid coordinate")->capture_default_str();
  s_charfunc->add_option("--grid-steps", charfunc.grid_steps, "Points per axis")->capture_default_str();
  s_charfunc
      ->add_option("--plane", charfunc.plane, "real: xi, eta real; imag: purely imaginary; full: 4-D grid")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Plane>{{"real", Plane::real}, {"imag", Plane::imag}, {"full", Plane::full}}));

  SynthOptions synth;
  auto* s_synth = app.add_subcommand("synth", "Hadamard gate from truncated nonlinear generators");
  s_synth->add_option("--alpha", synth.alpha, "Coherent amplitude");
  s_synth->add_option("--m-cut", synth.m_cut, "Photon-number cutoff M");

  GenerateOptions generate;
  auto* s_generate = app.add_subcommand("generate", "Hadamard + CNOT generation pipeline");
  s_generate->add_option("--kappa", generate.kappa, "Overlap of the basic pair");

  GramOptions gram;
  auto* s_gram = app.add_subcommand("gram", "Inner products of the four quasi-Bell states");
  s_gram->add_option("--kappa", gram.kappa, "Overlap of the basic pair");
  s_gram->add_option("--alpha", gram.alpha, "Coherent amplitude (Fock path)");

  for (auto* sub : {s_entropy, s_photon, s_charfunc, s_synth, s_generate, s_gram}) {
    add_common(sub, common, format, out_path, sweep_text);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (!sweep_text.empty()) {
      SweepSpec spec = parse_sweep(sweep_text);
      if (spec.name == "m-cut") spec.name = "m_cut";
      common.sweep = spec;
    }
    if (common.nmax && *common.nmax < 2) throw quasibell::DomainError("--nmax must be >= 2");
    if (common.tol && !(*common.tol > 0.0 && *common.tol < 1.0)) {
      throw quasibell::DomainError("--tol must lie in (0, 1)");
    }

    Table table;
    if (s_entropy->parsed()) table = run_entropy(entropy, common);
    else if (s_photon->parsed()) table = run_photon(photon, common);
    else if (s_charfunc->parsed()) table = run_charfunc(charfunc, common);
    else if (s_synth->parsed()) table = run_synth(synth, common, std::cerr);
    else if (s_generate->parsed()) table = run_generate(generate, common);
    else table = run_gram(gram, common);

    if (out_path.empty()) {
      write_table(table, format, std::cout);
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) throw quasibell::DomainError("cannot open '" + out_path + "' for writing");
      write_table(table, format, file);
      if (!file.flush()) throw std::runtime_error("failed writing '" + out_path + "'");
    }
  } catch (const quasibell::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
