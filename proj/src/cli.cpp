#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffmat/cli.hpp"
#include "ffmat/errors.hpp"
#include "ffmat/matrix_io.hpp"
#include "ffmat/qr.hpp"
#include "ffmat/simulation.hpp"
#include "ffmat/smith.hpp"
#include "ffmat/statistics.hpp"

namespace ffmat::cli {
namespace {

using nlohmann::json;

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

// Half-up rounding of an exact rational to `digits` decimals.
std::string fixed(const Rational& value, int digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs(value) * scale + Rational(1, 2);
  BigInt units;
  mpz_fdiv_q(units.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  std::string text = units.get_str();
  if (text.size() <= static_cast<std::size_t>(digits)) text.insert(0, digits + 1 - text.size(), '0');
  text.insert(text.size() - digits, ".");
  return (value < 0 && units != 0 ? "-" : "") + text;
}

json elements_json(std::span<const RingElement> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json permutation_json(const Permutation& p) {
  json out = json::array();
  for (std::size_t v : p.images()) out.push_back(v + 1);
  return out;
}

json factorization_json(const std::optional<PrimeFactorization>& f) {
  if (!f) return nullptr;
  json out = json::object();
  for (const auto& [p, m] : *f) out[p.get_str()] = m;
  return out;
}

std::vector<RingElement> diagonal_of(const ExactMatrix& d) {
  std::vector<RingElement> out;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k) out.push_back(d(k, k));
  return out;
}

json report_json(const FFLUDecomposition& dec, const FactorReport& report) {
  json j;
  j["ring"] = std::string(ring_name(dec.ring()));
  j["rows"] = dec.L.rows();
  j["cols"] = dec.U.cols();
  j["rank"] = dec.rank;
  j["row_permutation"] = permutation_json(dec.row_perm);
  j["col_permutation"] = permutation_json(dec.col_perm);
  j["pivots"] = elements_json(dec.pivots);
  j["L"] = serialize_matrix(dec.L);
  j["D"] = serialize_matrix(dec.D);
  j["U"] = serialize_matrix(dec.U);

  json r;
  r["row_gcds"] = elements_json(report.row_gcds);
  r["column_gcds"] = elements_json(report.column_gcds);
  r["predicted_row_divisors"] = json::array();
  for (const auto& p : report.predicted_row_divisors) {
    r["predicted_row_divisors"].push_back({{"row", p.index + 1}, {"divisor", to_string(p.divisor)}});
  }
  r["predicted_column_divisors"] = json::array();
  for (const auto& p : report.predicted_column_divisors) {
    r["predicted_column_divisors"].push_back(
        {{"column", p.index + 1}, {"divisor", to_string(p.divisor)}});
  }
  if (report.ring == Ring::Z) {
    r["row_gcd_factorizations"] = json::array();
    for (const auto& f : report.row_gcd_factors) r["row_gcd_factorizations"].push_back(factorization_json(f));
  }
  j["report"] = std::move(r);
  return j;
}

std::string render_grid(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    return "  (" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")\n";
  }
  std::vector<std::size_t> widths(m.cols(), 0);
  std::vector<std::string> cells;
  cells.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(to_string(m(i, j)));
      widths[j] = std::max(widths[j], cells.back().size());
    }
  }
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += " ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[i * m.cols() + j];
      out += " " + std::string(widths[j] - cell.size(), ' ') + cell;
    }
    out += "\n";
  }
  return out;
}

std::string join(std::span<const RingElement> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

std::string factorization_text(const PrimeFactorization& f) {
  if (f.empty()) return "1";
  std::string out;
  for (const auto& [p, m] : f) {
    if (!out.empty()) out += "*";
    out += p.get_str();
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::string report_text(const FFLUDecomposition& dec, const FactorReport& report) {
  std::string out = "ring " + std::string(ring_name(dec.ring())) + ", " +
                    std::to_string(dec.L.rows()) + "x" + std::to_string(dec.U.cols()) +
                    ", rank " + std::to_string(dec.rank) + "\n";
  if (dec.has_permutations()) {
    std::string rows, cols;
    for (std::size_t v : dec.row_perm.images()) rows += " " + std::to_string(v + 1);
    for (std::size_t v : dec.col_perm.images()) cols += " " + std::to_string(v + 1);
    out += "row permutation:" + rows + "\ncolumn permutation:" + cols + "\n";
  }
  out += "L =\n" + render_grid(dec.L);
  out += "D = diag(" + join(diagonal_of(dec.D), ", ") + ")\n";
  out += "U =\n" + render_grid(dec.U);

  std::map<std::size_t, const RingElement*> row_pred, col_pred;
  for (const auto& p : report.predicted_row_divisors) row_pred[p.index] = &p.divisor;
  for (const auto& p : report.predicted_column_divisors) col_pred[p.index] = &p.divisor;
  for (std::size_t k = 0; k < report.row_gcds.size(); ++k) {
    out += "row " + std::to_string(k + 1) + " gcd " + to_string(report.row_gcds[k]);
    if (auto it = row_pred.find(k); it != row_pred.end()) out += " predicted " + to_string(*it->second);
    if (k < report.row_gcd_factors.size() && report.row_gcd_factors[k]) {
      out += " factors " + factorization_text(*report.row_gcd_factors[k]);
    }
    out += "\n";
  }
  for (std::size_t k = 0; k < report.column_gcds.size(); ++k) {
    out += "column " + std::to_string(k + 1) + " gcd " + to_string(report.column_gcds[k]);
    if (auto it = col_pred.find(k); it != col_pred.end()) out += " predicted " + to_string(*it->second);
    out += "\n";
  }
  return out;
}

std::vector<RingElement> dense_predictions(const std::vector<FactorPrediction>& predictions,
                                           std::size_t rank, Ring ring) {
  std::vector<RingElement> out(rank, RingElement::one(ring));
  for (const auto& p : predictions) out[p.index] = p.divisor;
  return out;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure(what);
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Options {
  std::string input;
  std::string pivot = "first";
  std::string cancel = "none";
  std::string format = "json";
  bool reduced = false;
  unsigned n = 0;
  std::uint64_t cutoff = stats::SeriesConfig{}.prime_cutoff;
  std::string experiment;
  std::optional<std::size_t> samples;
  std::vector<std::size_t> sizes;
  std::optional<std::uint64_t> seed;
  std::uint64_t bound = 1000000000;
  unsigned threads = 0;
  std::string csv_path;
};

int cmd_decompose(const Options& o, std::ostream& out) {
  const ExactMatrix a = read_matrix_file(o.input);
  const PivotStrategy strategy =
      o.pivot == "smallest" ? PivotStrategy::SmallestMeasure : PivotStrategy::FirstNonzero;
  FFLUDecomposition dec = decompose(a, strategy);
  verify(scaled_reconstruction_check(dec, a), "reconstruction identity failed after decomposition");
  const FactorReport report = analyze_factors(dec);

  if (o.cancel == "gcd") {
    dec = cancel_row_factors(std::move(dec), report.row_gcds);
    dec = cancel_column_factors(std::move(dec), report.column_gcds);
  } else if (o.cancel == "predicted") {
    const auto rows = dense_predictions(report.predicted_row_divisors, dec.rank, dec.ring());
    const auto cols = dense_predictions(report.predicted_column_divisors, dec.rank, dec.ring());
    dec = cancel_row_factors(std::move(dec), rows);
    dec = cancel_column_factors(std::move(dec), cols);
  } else if (o.cancel == "divisors") {
    dec = divisor_cancellation(std::move(dec), smith_normal_form(a));
  }
  verify(scaled_reconstruction_check(dec, a), "reconstruction identity failed after cancellation");

  if (o.format == "text") {
    out << report_text(dec, report);
  } else {
    json j = report_json(dec, report);
    j["pivot"] = o.pivot;
    j["cancel"] = o.cancel;
    j["verified"] = true;
    print(out, j);
  }
  return kSuccess;
}

int cmd_qr(const Options& o, std::ostream& out) {
  const ExactMatrix a = read_matrix_file(o.input);
  const FFQRDecomposition qr = o.reduced ? reduced_qr(a) : ff_qr(a);
  verify(check_qr_invariants(qr, a), "QR invariants failed");
  if (o.format == "text") {
    out << "Theta =\n" << render_grid(qr.Theta) << "D = diag(" << join(diagonal_of(qr.D), ", ")
        << ")\nR =\n" << render_grid(qr.R);
  } else {
    json j;
    j["ring"] = std::string(ring_name(a.ring()));
    j["reduced"] = o.reduced;
    j["Theta"] = serialize_matrix(qr.Theta);
    j["D"] = serialize_matrix(qr.D);
    j["R"] = serialize_matrix(qr.R);
    j["verified"] = true;
    print(out, j);
  }
  return kSuccess;
}

int cmd_smith(const Options& o, std::ostream& out) {
  const ExactMatrix a = read_matrix_file(o.input);
  const SmithForm sf = smith_normal_form(a);
  if (o.format == "text") {
    out << "diagonal: " << join(sf.diagonal, ", ") << "\n"
        << "determinantal divisors: " << join(sf.determinantal, ", ") << "\n";
  } else {
    print(out, json{{"ring", std::string(ring_name(a.ring()))},
                    {"diagonal", elements_json(sf.diagonal)},
                    {"determinantal_divisors", elements_json(sf.determinantal)}});
  }
  return kSuccess;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const ExactMatrix a = read_matrix_file(o.input);
  const FFLUDecomposition dec = decompose(a, PivotStrategy::FirstNonzero);
  verify(scaled_reconstruction_check(dec, a), "reconstruction identity failed after decomposition");
  const FactorReport report = analyze_factors(dec);
  if (o.format == "text") {
    out << report_text(dec, report);
  } else {
    json j = report_json(dec, report);
    print(out, json{{"ring", j["ring"]}, {"rank", j["rank"]}, {"report", j["report"]}});
  }
  return kSuccess;
}

int cmd_expect(const Options& o, std::ostream& out) {
  if (o.n < 2) throw DomainError("--n must be at least 2");
  stats::SeriesConfig cfg;
  cfg.prime_cutoff = o.cutoff;
  const double value = stats::expected_factor_count(o.n, cfg);
  if (o.format == "json") {
    print(out, json{{"n", o.n}, {"prime_cutoff", o.cutoff}, {"expected_factor_count", value}});
  } else {
    out << "F(" << o.n << ") = " << fixed(value, 12) << "\n";
  }
  return kSuccess;
}

int cmd_table1(std::ostream& out) {
  struct Row {
    std::uint64_t p;
    unsigned j;
  };
  const Row rows[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}};
  out << "p^j";
  for (unsigned k = 1; k <= 6; ++k) out << "  k=" << k << "   ";
  out << "  k=inf\n";
  for (const Row& row : rows) {
    std::string label = std::to_string(static_cast<std::uint64_t>(std::pow(row.p, row.j)));
    out << label << std::string(3 - std::min<std::size_t>(3, label.size()), ' ');
    for (unsigned k = 1; k <= 6; ++k) out << "  " << fixed(stats::prob_minors_divisible_exact(row.p, row.j, k), 5);
    out << "  " << fixed(stats::prob_minors_divisible_limit(row.p, row.j), 5) << "\n";
  }
  return kSuccess;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw Error("cannot write '" + path + "'");
  file << contents;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  sim::SimulationConfig cfg;
  cfg.bound = o.bound;
  cfg.threads = o.threads;
  if (o.experiment == "figure1") {
    cfg.sizes = o.sizes.empty() ? std::vector<std::size_t>{5, 10, 15, 20} : o.sizes;
    cfg.samples = o.samples.value_or(200);
    cfg.seed = o.seed.value_or(7);
    const std::string csv = sim::simulate_row_factors(cfg).to_csv();
    if (!o.csv_path.empty()) write_file(o.csv_path, csv);
    out << csv;
  } else if (o.experiment == "coverage") {
    cfg.sizes = o.sizes.empty() ? std::vector<std::size_t>{5, 15, 25} : o.sizes;
    cfg.samples = o.samples.value_or(100);
    cfg.seed = o.seed.value_or(11);
    const sim::CoverageResult result = sim::simulate_prediction_coverage(cfg);
    if (!o.csv_path.empty()) write_file(o.csv_path, result.to_csv());
    out << result.to_csv() << "coverage " << fixed(result.ratio(), 6) << "\n";
  } else {
    const std::size_t samples = o.samples.value_or(100000);
    const double freq = sim::simulate_gcd_ratio(samples, o.bound, o.seed.value_or(42));
    const std::string csv = "samples,bound,frequency,analytic\n" + std::to_string(samples) + "," +
                            std::to_string(o.bound) + "," + fixed(freq, 6) + "," +
                            fixed(stats::gcd_ratio_constant(), 6) + "\n";
    if (!o.csv_path.empty()) write_file(o.csv_path, csv);
    out << csv;
  }
  return kSuccess;
}

}  // namespace

std::string emit_report(const FFLUDecomposition& dec, const FactorReport& report, Format format) {
  if (format == Format::Text) return report_text(dec, report);
  return report_json(dec, report).dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fraction-free LU/QR decompositions and common-factor analysis", "ffmat"};
  app.require_subcommand(1, 1);
  Options o;

  auto* decompose_cmd = app.add_subcommand("decompose", "LD^-1U decomposition with factor report");
  decompose_cmd->add_option("file", o.input, "Matrix file")->required();
  decompose_cmd->add_option("--pivot", o.pivot, "Pivot choice")->check(CLI::IsMember({"first", "smallest"}));
  decompose_cmd->add_option("--cancel", o.cancel, "Common factor cancellation")
      ->check(CLI::IsMember({"none", "gcd", "predicted", "divisors"}));

  auto* qr_cmd = app.add_subcommand("qr", "Fraction-free QR decomposition");
  qr_cmd->add_option("file", o.input, "Matrix file")->required();
  qr_cmd->add_flag("--reduced", o.reduced, "Divide det A out of Theta's last column (square A)");

  auto* smith_cmd = app.add_subcommand("smith", "Smith normal form and determinantal divisors");
  smith_cmd->add_option("file", o.input, "Matrix file")->required();

  auto* predict_cmd = app.add_subcommand("predict", "Row/column gcds and predicted divisors");
  predict_cmd->add_option("file", o.input, "Matrix file")->required();

  auto* expect_cmd = app.add_subcommand("expect", "Expected prime-factor count of the row gcds");
  expect_cmd->add_option("--n", o.n, "Matrix dimension")->required();
  expect_cmd->add_option("--cutoff", o.cutoff, "Largest prime in the sums");

  auto* table_cmd = app.add_subcommand("table1", "Divisibility probabilities P_{p,j,k}");

  auto* simulate_cmd = app.add_subcommand("simulate", "Seeded Monte-Carlo experiments");
  simulate_cmd->add_option("experiment", o.experiment)
      ->required()
      ->check(CLI::IsMember({"figure1", "thm10", "coverage"}));
  simulate_cmd->add_option("--samples", o.samples, "Trials (per size)");
  simulate_cmd->add_option("--sizes", o.sizes, "Matrix sizes, comma separated")->delimiter(',');
  simulate_cmd->add_option("--seed", o.seed, "Random seed");
  simulate_cmd->add_option("--bound", o.bound, "Entries drawn from [0, bound]")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 62));
  simulate_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  simulate_cmd->add_option("--csv", o.csv_path, "Also write the CSV to this path");

  for (auto* sub : {decompose_cmd, qr_cmd, smith_cmd, predict_cmd}) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }
  expect_cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const bool explicit_format =
      std::find(args.begin(), args.end(), "--format") != args.end() ||
      std::any_of(args.begin(), args.end(), [](const std::string& a) { return a.rfind("--format=", 0) == 0; });
  if (!explicit_format && expect_cmd->parsed()) o.format = "text";

  try {
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (qr_cmd->parsed()) return cmd_qr(o, out);
    if (smith_cmd->parsed()) return cmd_smith(o, out);
    if (predict_cmd->parsed()) return cmd_predict(o, out);
    if (expect_cmd->parsed()) return cmd_expect(o, out);
    if (table_cmd->parsed()) return cmd_table1(out);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const RingMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ffmat::cli
