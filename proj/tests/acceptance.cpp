// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// integer equalities; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace srlc;

namespace {

constexpr double kReisnerSecondsEach = 1.0;
constexpr double kKernelSweepSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome reisner() {
  Outcome o;
  double slowest = 0;
  auto timed_cm = [&](const SimplicialComplex& c, auto field) {
    auto t0 = Clock::now();
    bool cm = is_cohen_macaulay(c, field);
    slowest = std::max(slowest, seconds_since(t0));
    return cm;
  };
  auto rp2 = fixtures::named("rp2-6");
  if (!timed_cm(rp2, Rationals{})) o.fail("rp2-6 not CM over Q");
  if (timed_cm(rp2, PrimeField(2))) o.fail("rp2-6 CM over F_2");
  for (const char* name : {"boundary-simplex-2", "boundary-simplex-3", "boundary-simplex-4"}) {
    auto c = fixtures::named(name);
    if (!timed_cm(c, Rationals{}) || !timed_cm(c, PrimeField(2))) o.fail(std::string(name) + " not CM");
  }
  if (slowest >= kReisnerSecondsEach) o.fail("slowest check took " + std::to_string(slowest) + " s");
  if (o.pass) o.detail = "slowest check " + std::to_string(slowest) + " s (limit 1 s)";
  return o;
}

Outcome link_isomorphism() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : fixtures::corpus()) {
    CohomologyCache<Rationals> q(e.complex);
    CohomologyCache<PrimeField> f2(e.complex, PrimeField(2));
    for (const auto& face : e.complex.all_faces()) {
      auto lk = e.complex.link(face);
      for (int i = -1; i <= e.complex.dim() + 1; ++i) {
        const int j = i - face.size();
        if (q.dim(face, i) != reduced_cohomology_dim(lk, j, Rationals{}) ||
            f2.dim(face, i) != reduced_cohomology_dim(lk, j, PrimeField(2)))
          o.fail(e.name + " face " + face.to_string() + " degree " + std::to_string(i));
        checks += 2;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " dimension equalities";
  return o;
}

template <Field F>
void hochster_sweep(const CorpusEntry& e, const F& field, Outcome& o, std::size_t& checks) {
  CohomologyCache<F> cache(e.complex, field);
  const int d = krull_dim(e.complex);
  const int n = e.complex.vertex_count();
  for (int i = 0; i <= 3; ++i) {
    // Every U ∈ N^n with |U| = i + 1, by odometer.
    std::vector<ExponentVector> us;
    ExponentVector u(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        u[pos] = left;
        us.push_back(u);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        u[pos] = x;
        rec(pos + 1, left - x);
      }
    };
    rec(0, i + 1);
    for (int l = 0; l <= d; ++l) {
      std::uint64_t raw = 0;
      for (const auto& v : us)
        if (e.complex.contains(support(v))) raw += cache.dim(support(v), l - 1);
      if (raw != lc_graded_dim(cache, l, -(i + 1)))
        o.fail(e.name + " l=" + std::to_string(l) + " i=" + std::to_string(i) + " over " + field.name());
      ++checks;
    }
  }
}

Outcome hochster_vs_enumeration() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& e : fixtures::corpus()) {
    hochster_sweep(e, Rationals{}, o, checks);
    hochster_sweep(e, PrimeField(2), o, checks);
  }
  if (o.pass) o.detail = std::to_string(checks) + " graded pieces";
  return o;
}

template <Field F>
void kernel_sweep(const F& field, MatrixStrategy strategy, Outcome& o, std::size_t& checks) {
  for (const auto& e : fixtures::corpus()) {
    const int n = e.complex.vertex_count();
    const int d = krull_dim(e.complex);
    auto a = generic_matrix(n, std::min(d, n), field, strategy, 0);
    LocalCohomologyModule<F> module(e.complex, field);
    for (int m = 0; m <= std::min(d, n); ++m)
      for (int l = 1; l <= d; ++l)
        for (int i = m; i <= m + 3; ++i) {
          auto k = module.kernel_dims(l, m, i, a);
          const std::string where = e.name + " l=" + std::to_string(l) + " m=" + std::to_string(m) +
                                    " i=" + std::to_string(i) + " over " + field.name();
          if (k.brute_dim != k.closed_form_dim) o.fail("dimension mismatch at " + where);
          if (i >= m + 1 && !k.surjective_onto_previous.value_or(false)) o.fail("not onto at " + where);
          ++checks;
        }
  }
}

Outcome kernel_equality_and_surjectivity() {
  Outcome o;
  std::size_t checks = 0;
  auto t0 = Clock::now();
  kernel_sweep(PrimeField(32003), MatrixStrategy::Seeded, o, checks);
  kernel_sweep(Rationals{}, MatrixStrategy::Vandermonde, o, checks);
  const double took = seconds_since(t0);
  if (took >= kKernelSweepSeconds) o.fail("sweep took " + std::to_string(took) + " s");
  if (o.pass) o.detail = std::to_string(checks) + " kernels in " + std::to_string(took) + " s (limit 60 s)";
  return o;
}

template <Field F>
void bridge_sweep(const F& field, MatrixStrategy strategy, Outcome& o, std::size_t& checks) {
  for (const auto& e : fixtures::corpus()) {
    const int n = e.complex.vertex_count();
    const int d = krull_dim(e.complex);
    auto a = generic_matrix(n, std::min(d, n), field, strategy, 0);
    LocalCohomologyModule<F> module(e.complex, field);
    for (int m = 0; m <= std::min(d, n); ++m)
      for (int l = 1; l <= d - m; ++l)
        for (int i = 1; i <= 4; ++i) {
          if (quotient_lc_dim(module.cohomology(), m, l, i) != module.kernel_dims(l + m, m, i + m - 1, a).brute_dim)
            o.fail(e.name + " m=" + std::to_string(m) + " l=" + std::to_string(l) + " i=" + std::to_string(i) +
                   " over " + field.name());
          ++checks;
        }
  }
}

Outcome quotient_bridge() {
  Outcome o;
  std::size_t checks = 0;
  bridge_sweep(PrimeField(32003), MatrixStrategy::Seeded, o, checks);
  bridge_sweep(Rationals{}, MatrixStrategy::Vandermonde, o, checks);
  if (o.pass) o.detail = std::to_string(checks) + " (m, l, i) triples";
  return o;
}

Outcome isolated_bowtie() {
  Outcome o;
  auto bow = fixtures::named("bowtie");
  CohomologyCache<Rationals> cache(bow);
  // θ from the first column of the certified Vandermonde matrix, and one with mixed signs.
  auto a = generic_matrix(5, 1, Rationals{}, MatrixStrategy::Vandermonde);
  std::vector<std::vector<mpq_class>> coefficient_sets = {{}, {mpq_class(2), mpq_class(-3), mpq_class(5), mpq_class(-7), mpq_class(11)}};
  for (int t = 1; t <= 5; ++t) coefficient_sets[0].push_back(a.coefficient(t, 1));
  for (const auto& coeffs : coefficient_sets) {
    auto dims = isolated_quotient_lc(cache, coeffs, 1);
    if (dims.negative != 0 || dims.degree0 != 1 || dims.degree1 != 0)
      o.fail("got (" + std::to_string(dims.negative) + " | " + std::to_string(dims.degree0) + " | " +
             std::to_string(dims.degree1) + ")");
  }
  for (int i = 1; i <= 8; ++i)
    if (quotient_lc_dim(cache, 1, 1, i) != 0) o.fail("negative degree -" + std::to_string(i) + " nonzero");
  if (o.pass) o.detail = "H^1 dims (0 | 1 | 0) in degrees (<0 | 0 | 1)";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  std::size_t verdicts = 0;
  for (const auto& e : fixtures::corpus()) {
    if (!e.complex.is_pure()) continue;
    for (const auto& spec : {FieldSpec::rationals(), FieldSpec::prime(2)})
      for (int m = 0; m <= krull_dim(e.complex); ++m) {
        auto v = check_main_theorem(e.complex, m, spec, {true, 0, 3});
        if (!v.agree || !v.flc_by_bruteforce)
          o.fail(e.name + " m=" + std::to_string(m) + " over " + spec.to_string());
        ++verdicts;
      }
  }
  // The command-line driver over the same sweep must exit 0.
  for (const auto& e : fixtures::corpus()) {
    if (!e.complex.is_pure()) continue;
    for (const char* field : {"q", "fp:2"}) {
      std::string input = "corpus:" + e.name;
      const char* argv[] = {"srlc", "verify", input.c_str(), "--field", field};
      std::ostringstream out, err;
      if (cli::run_cli(5, argv, out, err) != 0) o.fail("verify exit code for " + e.name + " over " + field);
    }
  }
  if (o.pass) o.detail = std::to_string(verdicts) + " verdicts agree, verify exits 0";
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"verify", "corpus:suspended-bowtie", "--seed", "42"},
      {"kernels", "corpus:torus-7", "--seed", "42", "--field", "fp:32003"},
      {"verify", "corpus:rp2-6", "--seed", "42", "--field", "fp:2"},
      {"quotient-lc", "corpus:bowtie", "--m", "1"},
  };
  for (auto cmd : commands) {
    cmd.insert(cmd.begin(), "srlc");
    cmd.push_back("--json");
    cmd.push_back("-");
    std::vector<const char*> argv;
    for (const auto& s : cmd) argv.push_back(s.c_str());
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      if (rep == 0)
        first = out.str();
      else if (out.str() != first)
        o.fail(cmd[1] + " " + cmd[2] + " differs on repeat");
    }
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands x 3 runs, byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Reisner criterion on rp2-6 and simplex boundaries", reisner},
      {"pair cohomology equals shifted link cohomology", link_isomorphism},
      {"graded dimensions vs enumeration of exponent vectors", hochster_vs_enumeration},
      {"kernel dimensions and surjectivity", kernel_equality_and_surjectivity},
      {"quotient local cohomology vs kernels", quotient_bridge},
      {"bowtie modulo one form", isolated_bowtie},
      {"singularity dimension < m iff finite local cohomology", main_theorem},
      {"byte-identical JSON for fixed seeds", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ["
              << o.detail << "]" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
