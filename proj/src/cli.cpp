#include "threshspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "threshspec/errors.hpp"
#include "threshspec/reconstruct.hpp"
#include "threshspec/sequence.hpp"
#include "threshspec/spectral.hpp"

namespace threshspec::cli {

namespace {

using Json = nlohmann::ordered_json;

Json coefficients_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

Json sequence_json(const BlockSequence& seq) {
  Json j;
  j["sequence"] = render_binary(seq);
  j["blocks"] = std::vector<std::uint64_t>(seq.blocks().begin(), seq.blocks().end());
  return j;
}

std::string rational_text(const Rational& r) { return r.get_str(10); }

IntPolynomial read_polynomial(std::string text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError("empty polynomial input");
  text = text.substr(first);
  if (text.front() == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw ParseError("polynomial JSON must be an array");
    std::vector<Integer> coeffs;
    for (const auto& v : j) {
      if (v.is_string())
        coeffs.push_back(parse_polynomial(v.get<std::string>()).coefficient(0));
      else if (v.is_number_integer())
        coeffs.emplace_back(v.dump(), 10);
      else
        throw ParseError("polynomial JSON entries must be decimal strings or integers");
    }
    return IntPolynomial(std::move(coeffs));
  }
  auto last = text.find_last_not_of(" \t\r\n");
  return parse_polynomial(text.substr(0, last + 1));
}

struct Options {
  std::string format = "text";
  int precision = 12;
  unsigned workers = 1;
  std::string sequence;
  std::string polynomial;
  std::string file;
  std::string graph6;
  std::size_t order = 0;
  bool no_timing = false;
};

int dispatch(const std::string& command, const Options& opt, std::istream& in, std::ostream& out) {
  const bool json = opt.format == "json";

  if (command == "charpoly") {
    const auto seq = parse_sequence(opt.sequence);
    const auto p = char_poly(seq);
    if (json) {
      Json j = sequence_json(seq);
      j["coefficients"] = coefficients_json(p);
      out << j.dump() << '\n';
    } else {
      out << to_text(p) << '\n';
    }
  } else if (command == "spectrum") {
    const auto seq = parse_sequence(opt.sequence);
    const auto report = spectrum(seq, opt.precision);
    if (json) {
      Json j = sequence_json(seq);
      j["m0"] = report.multiplicities.zero;
      j["m_minus_1"] = report.multiplicities.minus_one;
      j["divisor_polynomial"] = coefficients_json(report.divisor_polynomial);
      j["divisor_roots"] = Json::array();
      for (const auto& r : report.divisor_roots) {
        j["divisor_roots"].push_back({{"lo", rational_text(r.lo)},
                                      {"hi", rational_text(r.hi)},
                                      {"multiplicity", r.multiplicity},
                                      {"estimate", r.midpoint_estimate}});
      }
      j["eigenvalues"] = Json::array();
      for (const auto& e : report.eigenvalues)
        j["eigenvalues"].push_back({{"value", e.decimal}, {"multiplicity", e.multiplicity}, {"exact", e.exact}});
      out << j.dump() << '\n';
    } else {
      out << "m0 " << report.multiplicities.zero << '\n';
      out << "m-1 " << report.multiplicities.minus_one << '\n';
      for (const auto& e : report.eigenvalues) out << e.decimal << ' ' << e.multiplicity << '\n';
    }
  } else if (command == "det") {
    const auto seq = parse_sequence(opt.sequence);
    const auto d = determinant(seq);
    if (json) {
      Json j = sequence_json(seq);
      j["determinant"] = d.get_str();
      out << j.dump() << '\n';
    } else {
      out << d.get_str() << '\n';
    }
  } else if (command == "mult") {
    const auto seq = parse_sequence(opt.sequence);
    const auto m = multiplicities(seq);
    if (json) {
      Json j = sequence_json(seq);
      j["m0"] = m.zero;
      j["m_minus_1"] = m.minus_one;
      out << j.dump() << '\n';
    } else {
      out << m.zero << ' ' << m.minus_one << '\n';
    }
  } else if (command == "gamma") {
    const auto seq = parse_sequence(opt.sequence);
    const auto g = gamma_table(seq);
    if (json) {
      Json j = sequence_json(seq);
      j["gamma"] = Json::array();
      for (const auto& v : g.values()) j["gamma"].push_back(v.get_str());
      out << j.dump() << '\n';
    } else {
      std::string line;
      for (std::size_t l = 0; l <= g.n(); ++l) line += (l ? "," : "") + g[l].get_str();
      out << line << '\n';
    }
  } else if (command == "reconstruct") {
    std::string text = opt.polynomial;
    if (!opt.file.empty()) {
      std::ifstream f(opt.file);
      if (!f) throw ParseError("cannot read " + opt.file);
      std::stringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    const auto seq = reconstruct_sequence(read_polynomial(text));
    if (json)
      out << sequence_json(seq).dump() << '\n';
    else
      out << render_binary(seq) << '\n';
  } else if (command == "verify") {
    const auto report = verify_distinct(opt.order, opt.workers);
    out << census_to_json(report, !opt.no_timing) << '\n';
  } else if (command == "graph6") {
    out << graph6_encode(adjacency_matrix(parse_sequence(opt.sequence))) << '\n';
  } else if (command == "recognize") {
    std::vector<std::string> inputs;
    if (!opt.graph6.empty()) {
      inputs.push_back(opt.graph6);
    } else {
      for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) inputs.push_back(line);
      }
      if (inputs.empty()) throw ParseError("no graph6 input on stdin");
    }
    for (const auto& g6 : inputs) {
      const auto seq = recognize_threshold(graph6_decode(g6));
      if (json)
        out << sequence_json(seq).dump() << '\n';
      else
        out << render_binary(seq) << '\n';
    }
  }
  return kSuccess;
}

}  // namespace

unsigned default_workers() {
  if (const char* env = std::getenv("THRESHSPEC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra of threshold graphs from creation sequences"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  Options opt;
  opt.workers = default_workers();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--precision", opt.precision, "Decimal digits for eigenvalue estimates")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opt.workers, "Worker threads for verify")->check(CLI::PositiveNumber);

  auto seq_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("sequence", opt.sequence, "Creation sequence: 0011011 or \"0^2 1^2 0^1 1^2\"")->required();
    return sub;
  };
  seq_command("charpoly", "Characteristic polynomial det(A - xI), ascending coefficients");
  seq_command("spectrum", "Eigenvalues with multiplicities");
  seq_command("det", "Determinant of the adjacency matrix");
  seq_command("mult", "Multiplicities of the eigenvalues 0 and -1");
  seq_command("gamma", "gamma_n(0..n) coefficients");
  seq_command("graph6", "graph6 encoding of the threshold graph");

  auto* rec = app.add_subcommand("reconstruct", "Creation sequence from a characteristic polynomial");
  auto* poly_opt = rec->add_option("polynomial", opt.polynomial, "Ascending comma-separated coefficients");
  auto* file_opt = rec->add_option("-f,--file", opt.file, "Read the polynomial from a file");
  poly_opt->excludes(file_opt);
  rec->require_option(1);

  auto* ver = app.add_subcommand("verify", "Exhaustive cospectrality census for one order");
  ver->add_option("--order", opt.order, "Vertex count N")->required()->check(CLI::Range(2, 40));
  ver->add_flag("--no-timing", opt.no_timing, "Report elapsed_ms as 0 for reproducible output");

  auto* recog = app.add_subcommand("recognize", "Creation sequence of a graph6 threshold graph");
  recog->add_option("graph6", opt.graph6, "graph6 string (default: one per line on stdin)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return dispatch(command, opt, in, out);
  } catch (const NotThreshold& e) {
    err << "not a threshold graph: " << e.what() << '\n';
    return kDomainRejection;
  } catch (const NotThresholdSpectrum& e) {
    err << "not a threshold characteristic polynomial: " << e.what() << '\n';
    return kDomainRejection;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace threshspec::cli
