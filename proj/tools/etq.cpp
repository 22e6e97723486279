#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "etq/coefficients.hpp"
#include "etq/error.hpp"
#include "etq/presentations.hpp"
#include "etq/quadric_engine.hpp"
#include "etq/report.hpp"
#include "etq/rost_tables.hpp"
#include "etq/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Output {
  std::string format = "text";
  std::string path;
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", out.path, "Write output to this file instead of stdout");
}

void emit(const Output& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary);
  if (!file) throw etq::Error(etq::Errc::invalid_argument, "cannot write '" + out.path + "'");
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw etq::Error(etq::Errc::invalid_argument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

std::string presentation_report(const etq::RingPresentation& p, const std::string& name, int max_degree,
                                etq::Format format) {
  const auto graded = etq::graded_ranks(p, max_degree);
  const auto coeff = p.coefficients == etq::CoefficientRing::mod2 ? etq::Coefficients::mod_two()
                                                                   : etq::Coefficients::two_adic_integers();
  auto table = etq::make_table(name, coeff, graded);
  if (format != etq::Format::text) return etq::render(table, format);
  std::string out = etq::format_presentation(p);
  out += "max degree: " + std::to_string(max_degree) + "\n";
  for (const auto& [deg, list] : graded.degrees())
    out += "  degree " + std::to_string(deg) + ": " + etq::describe(list) + "\n";
  out += "free rank " + std::to_string(graded.total_free_rank()) + ", torsion summands " +
         std::to_string(graded.total_torsion_count()) + "\n";
  return out;
}

std::string comparison_report(const etq::PresentationComparison& c, etq::Format format) {
  if (format == etq::Format::json) {
    nlohmann::ordered_json diffs = nlohmann::ordered_json::array();
    for (const auto& d : c.diffs) diffs.push_back({{"degree", d.degree}, {"assembly", d.expected}, {"presentation", d.actual}});
    nlohmann::ordered_json out;
    out["d"] = c.d;
    out["family"] = c.family;
    out["equal"] = c.equal;
    out["diffs"] = std::move(diffs);
    return out.dump(2) + "\n";
  }
  if (format == etq::Format::csv) {
    std::string out = "degree,assembly,presentation\n";
    for (const auto& d : c.diffs) out += std::to_string(d.degree) + ",\"" + d.expected + "\",\"" + d.actual + "\"\n";
    return out;
  }
  std::string out = "Q^" + std::to_string(c.d) + " via " + c.family + ": " + (c.equal ? "equal" : "different") + "\n";
  for (const auto& d : c.diffs)
    out += "  degree " + std::to_string(d.degree) + ": assembly " + d.expected + ", presentation " + d.actual + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Etale and motivic cohomology of anisotropic real quadrics, computed exactly"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Output out;

  int decompose_d = 0;
  auto* decompose = app.add_subcommand("decompose", "Motivic decomposition of Q^d into Tate-twisted Rost motives");
  decompose->add_option("d", decompose_d, "Quadric dimension, 1 <= d <= 2046")->required();
  add_output_options(decompose, out);

  std::optional<int> cohomology_d;
  std::optional<int> rost_n;
  std::string coeff_text = "2adic";
  auto* cohomology = app.add_subcommand("cohomology", "Additive etale cohomology table of Q^d or of a Rost motive");
  auto* d_opt = cohomology->add_option("d", cohomology_d, "Quadric dimension");
  auto* rost_opt = cohomology->add_option("--rost", rost_n, "Rost motive index n, 1 <= n <= 10");
  d_opt->excludes(rost_opt);
  cohomology->add_option("--coeff", coeff_text, "Coefficients: mod2, mod2s:<s> or 2adic")->capture_default_str();
  add_output_options(cohomology, out);

  int nonalg_d = 0;
  auto* nonalgebraic = app.add_subcommand("nonalgebraic", "Per-degree quotient of etale cohomology by the cycle image");
  nonalgebraic->add_option("d", nonalg_d, "Quadric dimension")->required();
  add_output_options(nonalgebraic, out);

  etq::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run the built-in consistency checks; exit 1 on any failure");
  verify->add_option("--scope", vopts.scope,
                     "all, one of mod2 integral z4 tower rost quadrics rings flag, or an alias s2..s9")
      ->capture_default_str();
  verify->add_option("--smax", vopts.s_max, "Deepest coefficient level 2^s used by tower checks")->capture_default_str();
  verify->add_option("--dmax", vopts.d_max, "Largest quadric dimension in sweeps")->capture_default_str();
  verify->add_option("--window", vopts.window, "Stabilization window for inverse limits")->capture_default_str();
  verify->add_flag("--parallel", vopts.parallel, "Run checks and sweeps concurrently; output is unchanged");
  add_output_options(verify, out);

  std::string family;
  std::optional<int> param;
  std::string file;
  int max_degree = 24;
  std::optional<int> compare_d;
  auto* presentation =
      app.add_subcommand("presentation", "Graded ranks of a ring presentation, or its comparison with Q^d");
  presentation->add_option("family", family, "Built-in family: Q3 Q5 Q6 Q7 norm G2_flag_etale G2_flag_chow_mod2 G2_GT_mod2");
  presentation->add_option("--param", param, "Family parameter, e.g. n for norm");
  presentation->add_option("--file", file, "Read the presentation from a text file");
  presentation->add_option("--max-degree", max_degree, "Highest degree to compute")->capture_default_str();
  presentation->add_option("--compare", compare_d, "Compare the built-in presentation of Q^d with the motivic assembly");
  add_output_options(presentation, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const etq::Format format = etq::parse_format(out.format);

    if (*decompose) {
      etq::require_quadric_dimension(decompose_d);
      emit(out, etq::render(etq::decompose_motive(decompose_d), format));
      return kExitOk;
    }

    if (*cohomology) {
      const auto coeff = etq::Coefficients::parse(coeff_text);
      if (rost_n) {
        etq::require_rost_index(*rost_n);
        const auto table = etq::make_table("M" + std::to_string(*rost_n), coeff, etq::rost_cohomology(*rost_n, coeff));
        emit(out, etq::render(table, format));
        return kExitOk;
      }
      if (!cohomology_d) throw etq::Error(etq::Errc::invalid_argument, "give a dimension d or --rost n");
      etq::require_quadric_dimension(*cohomology_d);
      const auto table =
          etq::make_table("Q^" + std::to_string(*cohomology_d), coeff, etq::assemble_cohomology(*cohomology_d, coeff));
      emit(out, etq::render(table, format));
      return kExitOk;
    }

    if (*nonalgebraic) {
      etq::require_quadric_dimension(nonalg_d);
      emit(out, etq::render(etq::nonalgebraic_report(nonalg_d), format));
      return kExitOk;
    }

    if (*verify) {
      const auto report = etq::run_verify(vopts);
      emit(out, etq::render(report, format));
      return report.all_pass() ? kExitOk : kExitMismatch;
    }

    if (*presentation) {
      if (compare_d) {
        etq::require_quadric_dimension(*compare_d);
        const auto c = etq::compare_with_assembly(*compare_d);
        emit(out, comparison_report(c, format));
        return c.equal ? kExitOk : kExitMismatch;
      }
      if (max_degree < 0) throw etq::Error(etq::Errc::invalid_argument, "max degree must be >= 0");
      if (!file.empty()) {
        if (!family.empty()) throw etq::Error(etq::Errc::invalid_argument, "give either a family or --file");
        emit(out, presentation_report(etq::parse_presentation(read_file(file)), file, max_degree, format));
        return kExitOk;
      }
      if (family.empty()) throw etq::Error(etq::Errc::invalid_argument, "give a family, --file or --compare");
      const auto p = etq::builtin_presentation(family, param);
      const std::string name = param ? family + "(" + std::to_string(*param) + ")" : family;
      emit(out, presentation_report(p, name, max_degree, format));
      return kExitOk;
    }
  } catch (const etq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
