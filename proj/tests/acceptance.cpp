// Acceptance driver: runs `ellimod verify` in-process and prints one line per
// criterion. Criterion 12 is the verify command itself (exit 0, < 5 minutes).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "ellimod/json_io.hpp"

int main(int argc, char** argv) {
  std::string seed = argc > 1 ? argv[1] : "20240611";
  const char* args[] = {"ellimod", "verify", "--seed", seed.c_str()};
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = ellimod::cli::run(4, args, out, err);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  const auto report = ellimod::Json::parse(out.str(), nullptr, false);
  if (report.is_discarded() || !report.contains("result")) {
    std::cout << "FAIL  verify produced no report\n" << err.str();
    return 1;
  }
  for (const auto& c : report["result"]["criteria"]) {
    const bool passed = c["passed"].get<bool>();
    all = all && passed;
    std::printf("%s  criterion %2d  %-66s %8.3f s  %s\n", passed ? "PASS" : "FAIL",
                c["id"].get<int>(), c["title"].get<std::string>().c_str(),
                c["seconds"].get<double>(), c["detail"].get<std::string>().c_str());
  }
  const bool cli_ok = code == 0 && seconds < 300;
  all = all && cli_ok;
  std::printf("%s  criterion 12  %-66s %8.3f s  exit code %d\n", cli_ok ? "PASS" : "FAIL",
              "CLI verify runs suites 1-11 and exits 0 in under 5 minutes", seconds, code);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
