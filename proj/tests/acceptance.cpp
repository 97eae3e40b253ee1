// One line per acceptance criterion; exit status is nonzero if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "subfactor/cli.hpp"
#include "subfactor/io.hpp"
#include "subfactor/selftest.hpp"

using namespace subfactor;

namespace {

constexpr double kPauliSeconds = 1.0;
constexpr double kKernelSeconds = 30.0;
constexpr double kRoundTripSeconds = 60.0;
constexpr double kSelftestSeconds = 120.0;
constexpr std::size_t kMinKernelCases = 50;
constexpr std::size_t kMinRoundTrips = 20;
constexpr std::uint64_t kSeed = 20240601;

const std::string kFixtures = SUBFACTOR_FIXTURE_DIR;
const std::string kCli = SUBFACTOR_CLI_PATH;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void line(int id, const std::string& name, bool passed, const std::string& detail)
{
  if (!passed)
    ++failures;
  std::cout << (passed ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail
            << std::endl;
}

struct ProcessResult
{
  int status = -1;
  std::string output;
};

ProcessResult run_process(const std::string& command)
{
  ProcessResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe)
    return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.output.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<selftest::NamedGroup> fixture_groups()
{
  std::vector<selftest::NamedGroup> out;
  for (const char* name : {"z2", "z3", "z4", "z6", "v4", "s3", "d4", "q8"})
    out.push_back({name, io::load_group(kFixtures + "/" + name + ".json")});
  return out;
}

void pauli_report()
{
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"report", "--group", kFixtures + "/v4.json", "--subgroup", "all",
                             "--rep", kFixtures + "/pauli.json"},
                            out, err);
  const double secs = seconds_since(start);
  bool ok = code == 0;
  std::ostringstream detail;
  if (ok) {
    const auto j = io::Json::parse(out.str());
    ok = j["index"] == 4 && j["irreducible"] == true && j["depth"] == 2 &&
         j["condition_holds"] == true && secs < kPauliSeconds;
    detail << "index " << j["index"] << ", irreducible " << j["irreducible"] << ", depth "
           << j["depth"] << ", condition " << j["condition_holds"];
  } else {
    detail << "exit " << code << " " << err.str();
  }
  detail << ", " << secs << " s (limit " << kPauliSeconds << ")";
  line(1, "Pauli example via report", ok, detail.str());
}

} // namespace

int main()
{
  try {
    pauli_report();

    const auto groups = fixture_groups();
    const auto corpus = selftest::kernel_corpus(groups, kSeed);

    auto kernel = selftest::check_kernel_identity(corpus);
    line(2, "kernel identity", kernel.passed && corpus.size() >= kMinKernelCases &&
                                   kernel.seconds < kKernelSeconds,
         kernel.detail + ", " + std::to_string(kernel.seconds) + " s");

    auto gen = selftest::check_generation_criterion(corpus);
    line(3, "generation criterion", gen.passed && corpus.size() >= kMinKernelCases, gen.detail);

    auto frob = selftest::check_frobenius(corpus);
    line(4, "Frobenius oracle", frob.passed, frob.detail);

    auto orth = selftest::check_orthogonality(groups);
    line(5, "character orthogonality", orth.passed, orth.detail);

    auto towers = selftest::check_tower_values();
    line(6, "tower values", towers.passed, towers.detail);

    const auto trips = selftest::round_trip_corpus(kSeed);
    auto rt = selftest::check_round_trips(trips, kSeed);
    line(7, "imprimitivity round trip",
         rt.passed && trips.size() >= kMinRoundTrips && rt.seconds < kRoundTripSeconds,
         rt.detail + ", " + std::to_string(rt.seconds) + " s");

    const std::string enumerate_cmd =
        "'" + kCli + "' enumerate --group '" + kFixtures + "/s3.json' --seed 7";
    const auto first = run_process(enumerate_cmd);
    const auto second = run_process(enumerate_cmd);
    line(8, "enumerate determinism",
         first.status == 0 && second.status == 0 && !first.output.empty() &&
             first.output == second.output,
         std::to_string(first.output.size()) + " bytes, " +
             (first.output == second.output ? "identical" : "different"));

    const auto start = Clock::now();
    const auto self = run_process("'" + kCli + "' selftest");
    const double secs = seconds_since(start);
    line(9, "selftest", self.status == 0 && secs < kSelftestSeconds,
         "exit " + std::to_string(self.status) + ", " + std::to_string(secs) + " s (limit " +
             std::to_string(static_cast<int>(kSelftestSeconds)) + ")");
    if (self.status != 0)
      std::cout << self.output;
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
