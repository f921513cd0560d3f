// zcover: construct, verify and tabulate Z_2^3-covers of P^1 x C.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zcover/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zcover::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write '" + out_path + "'");
  out << text;
}

std::vector<int> parse_halving(const std::string& spec) {
  std::vector<int> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--halving expects comma-separated codes 0..3");
    }
    if (used != item.size() || v < 0 || v > 3) throw UsageError("--halving expects comma-separated codes 0..3");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z_2^3-covers of P^1 x C: building data, invariants, canonical map"};
  app.require_subcommand(1);

  int n = 0;
  std::string halving, out_path, format = "json";
  auto* construct = app.add_subcommand("construct", "write the building data of the degree-8 family");
  construct->add_option("--n", n, "number of F_ii fibers (n >= 2)")->required();
  construct->add_option("--halving", halving, "per-index halving choice, codes 0..3, e.g. 1,0,2");
  construct->add_option("--out", out_path, "output file (default: stdout)");

  std::string file;
  bool oracle = false;
  zcover::OracleOptions oracle_opt;
  auto* verify = app.add_subcommand("verify", "check relations, smoothness and compute invariants");
  verify->add_option("file", file, "building-data file")->required();
  verify->add_flag("--oracle", oracle, "re-check every identity on an explicit curve over F_p");
  verify->add_option("--oracle-prime", oracle_opt.prime, "prime for the oracle curve (<= 10000)");
  verify->add_option("--oracle-a", oracle_opt.a, "coefficient a of y^2 = x^3 + a x + b");
  verify->add_option("--oracle-b", oracle_opt.b, "coefficient b of y^2 = x^3 + a x + b");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "output file (default: stdout)");

  auto* table = app.add_subcommand("table", "render the six generating relations");
  table->add_option("file", file, "building-data file from construct")->required();
  table->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  table->add_option("--out", out_path, "output file (default: stdout)");

  int n_min = 0, n_max = 0;
  auto* sweep = app.add_subcommand("sweep", "invariants of the family for a range of n");
  sweep->add_option("--n-min", n_min, "smallest n (>= 2)")->required();
  sweep->add_option("--n-max", n_max, "largest n (<= 64)")->required();
  sweep->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sweep->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct) {
      const auto bd = zcover::construct_family(n, parse_halving(halving));
      emit(zcover::dump_building_data(bd), out_path);
      return kExitPass;
    }
    if (*verify) {
      const auto bd = zcover::parse_building_data(read_file(file));
      const auto outcome = zcover::verify_report(bd, oracle ? std::optional(oracle_opt) : std::nullopt);
      emit(format == "json" ? outcome.report.dump(2) + "\n" : zcover::verify_text(outcome.report), out_path);
      return outcome.passed ? kExitPass : kExitFail;
    }
    if (*table) {
      const auto bd = zcover::parse_building_data(read_file(file));
      const auto t = zcover::table_report(bd);
      emit(format == "json" ? t.dump(2) + "\n" : zcover::table_text(t), out_path);
      return t["all_equal"].get<bool>() ? kExitPass : kExitFail;
    }
    if (*sweep) {
      const auto s = zcover::sweep_report(n_min, n_max);
      emit(format == "json" ? s.dump(2) + "\n" : zcover::sweep_text(s), out_path);
      return kExitPass;
    }
  } catch (const zcover::ParseError& e) {
    std::cerr << "zcover: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const zcover::PreconditionError& e) {
    std::cerr << "zcover: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "zcover: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "zcover: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
