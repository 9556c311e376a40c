#include "verify.hpp"

#include <asmprism/ideal.hpp>
#include <asmprism/perm.hpp>
#include <asmprism/pipedream.hpp>
#include <asmprism/prism.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <set>
#include <thread>
#include <vector>

namespace asmprism::cli {

namespace {

using Failure = std::optional<std::string>;

// Runs check(k) for k in [0, count) on up to `jobs` threads. Returns the
// failure with the smallest index so the report does not depend on timing.
Failure parallel_check(std::size_t count, int jobs, const std::function<Failure(std::size_t)>& check) {
  std::vector<Failure> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) results[k] = check(k);
  };
  const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 256));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& r : results) {
    if (r) return r;
  }
  return std::nullopt;
}

std::string one_line(const Asm& a) {
  std::string s = a.to_string();
  std::replace(s.begin(), s.end(), '\n', '/');
  if (!s.empty() && s.back() == '/') s.pop_back();
  return s;
}

VerifyResult finish(Failure failure, std::size_t total, const std::string& unit) {
  VerifyResult r;
  r.total = total;
  if (failure) {
    r.passed = false;
    r.message = "FAIL: " + *failure;
  } else {
    r.checked = total;
    r.message = "OK: " + std::to_string(total) + "/" + std::to_string(total) + " " + unit;
  }
  return r;
}

Polynomial schubert_sum(const Asm& a, int n) {
  Polynomial sum;
  for (const auto& w : min_perm_set(a)) sum += schubert_polynomial(w, n);
  return sum;
}

void partitions_in_box(int rows, int cols, std::vector<int>& prefix, std::vector<Partition>& out) {
  out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == rows) return;
  const int cap = prefix.empty() ? cols : prefix.back();
  for (int p = 1; p <= cap; ++p) {
    prefix.push_back(p);
    partitions_in_box(rows, cols, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

VerifyResult verify_theorem1(int n, int jobs) {
  const auto all = enumerate_asms(n);
  auto failure = parallel_check(all.size(), jobs, [&](std::size_t k) -> Failure {
    const Asm& a = all[k];
    const Polynomial expected = schubert_sum(a, n);
    for (const auto& [name, spec] : {std::pair{"bigr", bigrassmannian_model(a)}, std::pair{"parabolic", parabolic_model(a)}}) {
      const Polynomial got = asm_polynomial(spec);
      if (got != expected) {
        return "A=" + one_line(a) + " model " + name + ": prism sum " + got.to_string() + " but Schubert sum " +
               expected.to_string();
      }
    }
    return std::nullopt;
  });
  return finish(failure, all.size(), "ASMs, both models");
}

VerifyResult verify_bijection_all(int n, int jobs) {
  const auto all = enumerate_asms(n);
  auto failure = parallel_check(all.size(), jobs, [&](std::size_t k) -> Failure {
    const Asm& a = all[k];
    for (const auto& [name, spec] : {std::pair{"bigr", bigrassmannian_model(a)}, std::pair{"parabolic", parabolic_model(a)}}) {
      const auto report = verify_bijection(spec, n);
      if (!report.passed) return "A=" + one_line(a) + " model " + name + ": " + report.summary();
    }
    return std::nullopt;
  });
  return finish(failure, all.size(), "ASMs, both models");
}

VerifyResult verify_groebner(int n, int jobs) {
  const auto all = enumerate_asms(n);
  auto failure = parallel_check(all.size(), jobs, [&](std::size_t k) -> Failure {
    const Asm& a = all[k];
    const auto sr = stanley_reisner_facets(initial_ideal(a), n);
    std::set<GridSet> from_ideal(sr.facets.begin(), sr.facets.end());
    std::set<GridSet> from_subwords;
    for (const auto& p : delta_facets(a)) from_subwords.insert(p.complement());
    if (from_ideal != from_subwords) {
      return "A=" + one_line(a) + ": " + std::to_string(from_ideal.size()) + " Stanley-Reisner facets vs " +
             std::to_string(from_subwords.size()) + " subword complex facets";
    }
    if (multidegree(a) != schubert_sum(a, n)) return "A=" + one_line(a) + ": multidegree differs from Schubert sum";
    return std::nullopt;
  });
  return finish(failure, all.size(), "ASMs");
}

VerifyResult verify_lattice(int n, int jobs) {
  const auto all = enumerate_asms(n);
  auto failure = parallel_check(all.size(), jobs, [&](std::size_t k) -> Failure {
    const Asm& a = all[k];
    for (const auto& b : all) {
      const Asm join = asm_join(a, b);
      const Asm meet = asm_meet(a, b);
      if (!asm_leq(a, join) || !asm_leq(b, join)) return "join of " + one_line(a) + " and " + one_line(b) + " is not an upper bound";
      if (!asm_leq(meet, a) || !asm_leq(meet, b)) return "meet of " + one_line(a) + " and " + one_line(b) + " is not a lower bound";
      for (const auto& c : all) {
        if (asm_leq(a, c) && asm_leq(b, c) && !asm_leq(join, c)) return "join of " + one_line(a) + " and " + one_line(b) + " is not least";
        if (asm_leq(c, a) && asm_leq(c, b) && !asm_leq(c, meet)) return "meet of " + one_line(a) + " and " + one_line(b) + " is not greatest";
      }
    }
    std::vector<Asm> base;
    for (const auto& u : bigr_of(a)) base.push_back(u.matrix(n));
    if (asm_join_all(base, n) != a) return "A=" + one_line(a) + " is not the join of its biGrassmannians";
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (i != j && asm_leq(base[i], base[j])) return "biGr(A) is not an antichain for A=" + one_line(a);
      }
    }
    if (essential_set(a) != essential_set_by_rank(a)) return "essential set characterizations differ for A=" + one_line(a);
    return std::nullopt;
  });
  return finish(failure, all.size(), "ASMs");
}

VerifyResult verify_schur(int n, int jobs) {
  struct Case {
    Partition lambda;
    int d;
  };
  std::vector<Case> cases;
  for (int d = 1; d <= n; ++d) {
    std::vector<Partition> shapes;
    std::vector<int> prefix;
    partitions_in_box(d, n, prefix, shapes);
    for (auto& s : shapes) cases.push_back({std::move(s), d});
  }
  auto failure = parallel_check(cases.size(), jobs, [&](std::size_t k) -> Failure {
    const auto& [lambda, d] = cases[k];
    const Polynomial got = asm_polynomial(PrismShapeSpec{{lambda}, {d}});
    const Polynomial expected = schubert_oracle(grassmannian_encode(lambda, d, d + std::max(lambda.part(1), 1)));
    if (got != expected) {
      return "shape " + lambda.to_string() + " d=" + std::to_string(d) + ": prism sum " + got.to_string() +
             " but divided differences give " + expected.to_string();
    }
    return std::nullopt;
  });
  return finish(failure, cases.size(), "shapes");
}

}  // namespace asmprism::cli
