#include "subfactor/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "subfactor/catalog.hpp"
#include "subfactor/classification.hpp"
#include "subfactor/errors.hpp"
#include "subfactor/imprimitivity.hpp"
#include "subfactor/induction.hpp"
#include "subfactor/io.hpp"
#include "subfactor/tower.hpp"

namespace subfactor::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// pi(g) multiplied by a random phase per non-identity element.
ProjectiveRep rephased(const ProjectiveRep& pi, Rng& rng)
{
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  std::vector<Matrix> mats = pi.matrices();
  const Element e = pi.domain().group().identity();
  for (std::size_t p = 0; p < mats.size(); ++p)
    if (pi.domain().at(static_cast<int>(p)) != e)
      mats[p] *= std::polar(1.0, angle(rng));
  return ProjectiveRep::create(pi.domain(), std::move(mats));
}

std::string case_name(const std::string& group, const Subgroup& h, const std::string& what)
{
  return group + " H=" + h.describe() + " " + what;
}

/// Character tables are cached per parent group.
class TableCache
{
public:
  const CharacterTable& operator()(const GroupPtr& g)
  {
    auto it = tables_.find(g.get());
    if (it == tables_.end())
      it = tables_.emplace(g.get(), character_table(g)).first;
    return it->second;
  }

private:
  std::map<const FiniteGroup*, CharacterTable> tables_;
};

/// Runs body(case) for every case, collecting the names of failures.
template <typename Body>
CheckResult over_corpus(std::string name, const std::vector<Case>& corpus, Body body)
{
  const auto start = Clock::now();
  CheckResult out{std::move(name)};
  std::vector<std::string> failures;
  for (const auto& c : corpus) {
    std::string why;
    try {
      why = body(c);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (!why.empty())
      failures.push_back(c.name + ": " + why);
  }
  out.cases = corpus.size();
  out.passed = failures.empty() && !corpus.empty();
  std::ostringstream detail;
  detail << (corpus.size() - failures.size()) << "/" << corpus.size() << " cases agree";
  if (!failures.empty())
    detail << "; first failure " << failures.front();
  out.detail = detail.str();
  out.seconds = seconds_since(start);
  return out;
}

} // namespace

std::vector<NamedGroup> standard_groups()
{
  return {{"Z2", catalog::cyclic(2)},      {"Z3", catalog::cyclic(3)},
          {"Z4", catalog::cyclic(4)},      {"Z6", catalog::cyclic(6)},
          {"V4", catalog::klein_four()},   {"S3", catalog::symmetric(3)},
          {"D4", catalog::dihedral(4)},    {"Q8", catalog::quaternion()}};
}

std::vector<Case> kernel_corpus(const std::vector<NamedGroup>& groups, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<Case> out;
  for (const auto& [name, g] : groups) {
    for (const auto& h : all_subgroups(g)) {
      const auto chars = linear_characters(h);
      for (std::size_t i = 0; i < chars.size(); ++i)
        out.push_back({case_name(name, h, "linear:" + std::to_string(i)), rephased(chars[i], rng)});
      if (catalog::is_klein_four(h))
        out.push_back({case_name(name, h, "pauli"),
                       rephased(catalog::pauli(h), rng).transformed(random_unitary(2, rng))});
    }
  }
  return out;
}

std::vector<Case> reducible_corpus(const std::vector<NamedGroup>& groups, std::uint64_t seed)
{
  Rng rng(seed);
  std::vector<Case> out;
  for (const auto& [name, g] : groups)
    for (const auto& h : all_subgroups(g)) {
      const auto chars = linear_characters(h);
      if (chars.size() >= 2)
        out.push_back({case_name(name, h, "linear:0+1"),
                       direct_sum(chars[0], chars[1]).transformed(random_unitary(2, rng))});
    }

  // rotation and reflection on generators (1324), (12) of a Sylow D4
  auto s4 = catalog::symmetric(4);
  io::Json j;
  j["schema"] = 1;
  j["dim"] = 2;
  j["matrices"] = {{"(1324)", {{0.0, -1.0}, {1.0, 0.0}}}, {"(12)", {{1.0, 0.0}, {0.0, -1.0}}}};
  const auto psi = io::rep_from_json(j, s4);
  out.push_back({case_name("S4", psi.domain(), "degree 2"),
                 psi.transformed(random_unitary(2, rng))});
  return out;
}

std::vector<RoundTripCase> round_trip_corpus(std::uint64_t seed, std::size_t count)
{
  Rng rng(seed);
  const std::vector<NamedGroup> groups = {
      {"S3", catalog::symmetric(3)},
      {"D4", catalog::dihedral(4)},
      {"Q8", catalog::quaternion()},
      {"Z6", catalog::cyclic(6)},
      {"D6", catalog::dihedral(6)},
      {"V4xZ2", catalog::direct_product(*catalog::klein_four(), *catalog::cyclic(2))},
      {"S4", catalog::symmetric(4)}};
  constexpr int kMaxSigmaDim = 48;

  std::vector<RoundTripCase> pauli, linear;
  for (const auto& [name, g] : groups) {
    for (const auto& h : subgroups_up_to_conjugacy(g)) {
      if (catalog::is_klein_four(h) && 4 * h.index() <= kMaxSigmaDim) {
        auto p = catalog::pauli(h);
        pauli.push_back({case_name(name, h, "rho=pauli-bar psi=pauli"),
                         p.conjugate().transformed(random_unitary(2, rng)),
                         p.transformed(random_unitary(2, rng))});
        const auto chars = linear_characters(h);
        pauli.push_back({case_name(name, h, "rho=pauli*chi psi=pauli-bar"),
                         tensor(p, chars.back()), p.conjugate()});
      }
      const auto chars = linear_characters(h);
      std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
      if (h.index() <= kMaxSigmaDim)
        linear.push_back({case_name(name, h, "d=1 r=1"), chars[pick(rng)], chars[pick(rng)]});
      if (chars.size() >= 2 && 2 * h.index() <= kMaxSigmaDim) {
        const std::size_t a = pick(rng);
        const std::size_t b = (a + 1 + pick(rng) % (chars.size() - 1)) % chars.size();
        linear.push_back({case_name(name, h, "d=1 r=2"), chars[pick(rng)],
                          direct_sum(chars[a], chars[b]).transformed(random_unitary(2, rng))});
      }
    }
  }
  std::shuffle(pauli.begin(), pauli.end(), rng);
  std::shuffle(linear.begin(), linear.end(), rng);
  std::vector<RoundTripCase> out;
  for (std::size_t i = 0; i < pauli.size() && out.size() < count / 2; ++i)
    out.push_back(pauli[i]);
  for (std::size_t i = 0; i < linear.size() && out.size() < count; ++i)
    out.push_back(linear[i]);
  return out;
}

CheckResult check_pauli_example()
{
  const auto start = Clock::now();
  CheckResult out{"pauli example"};
  auto psi = catalog::pauli(Subgroup::whole(catalog::klein_four()));
  auto rec = report(psi, ReportOptions{}, "pauli");
  out.cases = 1;
  out.seconds = seconds_since(start);
  out.passed = rec.index == 4 && rec.irreducible && rec.graph.depth == 2 && rec.condition_holds &&
               out.seconds < 1.0;
  std::ostringstream detail;
  detail << "index " << rec.index << ", irreducible " << rec.irreducible << ", depth "
         << rec.graph.depth << ", condition " << rec.condition_holds;
  out.detail = detail.str();
  return out;
}

CheckResult check_kernel_identity(const std::vector<Case>& corpus)
{
  return over_corpus("kernel identity", corpus, [](const Case& c) -> std::string {
    const Subgroup k = kernel(build_sigma(c.psi).total);
    const Subgroup p = projective_kernel(c.psi, core(c.psi.domain()));
    if (k == p)
      return {};
    return "ker sigma " + k.describe() + " vs " + p.describe();
  });
}

CheckResult check_kernel_core(const std::vector<Case>& corpus)
{
  std::size_t strict = 0;
  auto out = over_corpus("kernel as G-core", corpus, [&](const Case& c) -> std::string {
    const Subgroup k = kernel(build_sigma(c.psi).total);
    const Subgroup p = projective_kernel(c.psi, c.psi.domain());
    if (!(k == projective_kernel(c.psi, core(c.psi.domain()))))
      ++strict;
    if (k == core(p))
      return {};
    return "ker sigma " + k.describe() + " vs core " + core(p).describe();
  });
  out.detail += "; proj ker psi|N(H) strictly larger in " + std::to_string(strict);
  return out;
}

CheckResult check_generation_criterion(const std::vector<Case>& corpus)
{
  TableCache tables;
  return over_corpus("generation criterion", corpus, [&](const Case& c) -> std::string {
    const auto sigma = build_sigma(c.psi).total;
    const bool gen = generates(sigma, tables(c.psi.domain().parent()));
    const bool faithful = kernel(sigma).is_trivial();
    if (gen == faithful)
      return {};
    return std::string("generates ") + (gen ? "yes" : "no") + ", faithful " +
           (faithful ? "yes" : "no");
  });
}

CheckResult check_frobenius(const std::vector<Case>& corpus)
{
  constexpr double kFrobeniusTol = 1e-8;
  TableCache tables;
  double worst = 0;
  auto out = over_corpus("frobenius formula", corpus, [&](const Case& c) -> std::string {
    const auto& table = tables(c.psi.domain().parent());
    const auto ind = build_sigma(c.psi);
    const auto traced = character(ind.total, table.classes);
    const auto formula = frobenius_character(ind.base, ind.cosets, table.classes);
    double dev = 0;
    for (std::size_t i = 0; i < traced.values.size(); ++i)
      dev = std::max(dev, std::abs(traced.values[i] - formula.values[i]));
    worst = std::max(worst, dev);
    if (dev < kFrobeniusTol)
      return {};
    return "deviation " + std::to_string(dev);
  });
  std::ostringstream detail;
  detail << out.detail << "; max deviation " << worst;
  out.detail = detail.str();
  return out;
}

CheckResult check_orthogonality(const std::vector<NamedGroup>& groups)
{
  constexpr double kOrthogonalityTol = 1e-8;
  const auto start = Clock::now();
  CheckResult out{"character orthogonality"};
  double worst = 0;
  std::vector<std::string> failures;
  for (const auto& [name, g] : groups) {
    const auto t = character_table(g);
    double err = 0;
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j)
        err = std::max(err, std::abs(inner_product(t.rows[i], t.rows[j]) - Complex(i == j)));
    long long squares = 0;
    for (int d : t.degrees)
      squares += static_cast<long long>(d) * d;
    worst = std::max(worst, err);
    if (err >= kOrthogonalityTol || squares != g->order())
      failures.push_back(name);
  }
  out.cases = groups.size();
  out.passed = failures.empty() && !groups.empty();
  std::ostringstream detail;
  detail << groups.size() << " groups, max error " << worst;
  if (!failures.empty())
    detail << "; failed " << failures.front();
  out.detail = detail.str();
  out.seconds = seconds_since(start);
  return out;
}

CheckResult check_tower_values()
{
  const auto start = Clock::now();
  CheckResult out{"tower values"};
  const auto z2 = tower(regular_rep(Subgroup::whole(catalog::cyclic(2))), 3);
  const auto pauli =
      tower(build_sigma(catalog::pauli(Subgroup::whole(catalog::klein_four()))).total, 2);
  const bool z2_ok = z2.lower_dims == std::vector<long long>{1, 2, 8, 32} && z2.index == 4;
  const bool pauli_ok = pauli.upper_dims == std::vector<long long>{1, 4, 64} &&
                        pauli.lower_dims == std::vector<long long>{1, 4, 64} && pauli.index == 16;
  out.cases = 2;
  out.passed = z2_ok && pauli_ok;
  std::ostringstream detail;
  auto seq = [&](const std::vector<long long>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      detail << (i ? "," : "") << v[i];
  };
  detail << "Z2 regular lower ";
  seq(z2.lower_dims);
  detail << " index " << z2.index << "; Pauli upper ";
  seq(pauli.upper_dims);
  detail << " index " << pauli.index;
  out.detail = detail.str();
  out.seconds = seconds_since(start);
  return out;
}

CheckResult check_round_trips(const std::vector<RoundTripCase>& corpus, std::uint64_t seed)
{
  constexpr double kResidualTol = 1e-6;
  const auto start = Clock::now();
  CheckResult out{"imprimitivity round trip"};
  Rng rng(seed);
  double worst = 0;
  std::vector<std::string> failures;
  for (const auto& c : corpus) {
    try {
      const Subgroup& h = c.rho.domain();
      const auto base = tensor(c.rho, c.psi);
      const auto ordinary = ProjectiveRep::create(h, base.matrices());
      const auto sigma = induce(ordinary, CosetSystem(h)).total;
      const Matrix w = random_unitary(sigma.dim(), rng);
      const auto b =
          MatrixStarAlgebra::imprimitivity_block(c.rho.dim(), c.psi.dim(), h.index()).transformed(w);
      const auto sys = decompose(sigma.transformed(w), b, seed);
      worst = std::max(worst, sys.residual);
      if (!are_conjugate(sys.stabilizer, h))
        failures.push_back(c.name + ": stabilizer " + sys.stabilizer.describe());
      else if (sys.d != c.rho.dim() || sys.r != c.psi.dim())
        failures.push_back(c.name + ": wrong (d, r)");
      else if (!(sys.residual < kResidualTol))
        failures.push_back(c.name + ": residual " + std::to_string(sys.residual));
    } catch (const std::exception& e) {
      failures.push_back(c.name + ": " + e.what());
    }
  }
  out.cases = corpus.size();
  out.passed = failures.empty() && !corpus.empty();
  std::ostringstream detail;
  detail << (corpus.size() - failures.size()) << "/" << corpus.size()
         << " recovered, max residual " << worst;
  if (!failures.empty())
    detail << "; first failure " << failures.front();
  out.detail = detail.str();
  out.seconds = seconds_since(start);
  return out;
}

CheckResult check_determinism(std::uint64_t seed)
{
  const auto start = Clock::now();
  CheckResult out{"determinism"};
  auto render = [&] {
    EnumerateOptions opts;
    opts.report.seed = seed;
    io::Json arr = io::Json::array();
    for (const auto& rec : enumerate(catalog::symmetric(3), opts))
      arr.push_back(io::record_to_json(rec));
    return io::dump(arr);
  };
  const std::string a = render(), b = render();
  out.cases = 2;
  out.passed = a == b;
  out.detail = std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different");
  out.seconds = seconds_since(start);
  return out;
}

std::vector<CheckResult> run_all(std::uint64_t seed)
{
  const auto groups = standard_groups();
  const auto corpus = kernel_corpus(groups, seed);
  return {check_pauli_example(),
          check_kernel_identity(corpus),
          check_kernel_core(reducible_corpus(groups, seed)),
          check_generation_criterion(corpus),
          check_frobenius(corpus),
          check_orthogonality(groups),
          check_tower_values(),
          check_round_trips(round_trip_corpus(seed), seed),
          check_determinism(seed)};
}

} // namespace subfactor::selftest
