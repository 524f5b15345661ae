// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Each check collects failure descriptions; the first few
// are printed after a FAIL line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "nilorb/centralizer.hpp"
#include "nilorb/homotopy.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/report.hpp"
#include "nilorb/triple.hpp"
#include "oracles.hpp"

using namespace nilorb;

namespace {

AlgebraSpec A(Family f, int n) { return AlgebraSpec::make(f, n); }
AlgebraSpec Apq(Family f, int p, int q) { return AlgebraSpec::make_pq(f, p, q); }

struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what)
  {
    if (!ok) items.push_back(what);
  }
  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what)
  {
    if (got == want) return;
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    items.push_back(s.str());
  }
};

std::string where(const AlgebraSpec& a, const OrbitDatum& d) { return a.name() + " " + d.to_string(); }

// every algebra of every family with rank parameter up to `max_n`
// (p+q <= max_n for the indefinite families), including the low-rank
// orthogonal cases accepted for cross-checks
std::vector<AlgebraSpec> algebras_up_to(int max_n)
{
  std::vector<AlgebraSpec> out;
  for (Family f : {Family::sl_r, Family::sl_c, Family::sl_h, Family::sp_c, Family::so_star})
    for (int n = 1; n <= max_n; ++n) out.push_back(A(f, n));
  for (int n = 3; n <= max_n; ++n) out.push_back(A(Family::so_c, n));
  for (int n = 3; n <= max_n; ++n)
    for (int p = 0; p <= n; ++p) out.push_back(Apq(Family::so_pq, p, n - p));
  for (int n = 2; n <= max_n; ++n)
    for (int p = 1; p < n; ++p) out.push_back(Apq(Family::sp_pq, p, n - p));
  return out;
}

bool is_signed_pq(Family f) { return f == Family::so_pq || f == Family::sp_pq; }

// 1 -------------------------------------------------------------------------
void parametrization_counts(Failures& f)
{
  auto sum_over = [](int n, const std::function<int(const std::vector<int>&)>& weight) {
    int total = 0;
    for (const auto& s : oracle::partitions(n)) total += weight(s);
    return total;
  };
  int sl_r2 = sum_over(2, oracle::fiber_sl_r);
  int sl_c4 = static_cast<int>(oracle::partitions(4).size());
  int sp_c2 = sum_over(4, [](const auto& s) { return oracle::in_pminus1(s) ? 1 : 0; });
  int so_c5 = sum_over(5, [](const auto& s) { return oracle::in_p1(s) ? oracle::fiber_so_c(s) : 0; });
  f.expect_eq(sl_r2, 3, "oracle count sl_r(2)");
  f.expect_eq(sl_c4, 5, "oracle count sl_c(4)");
  f.expect_eq(sp_c2, 4, "oracle count sp_c(2)");
  f.expect_eq(so_c5, 4, "oracle count so_c(5)");
  f.expect_eq(static_cast<int>(oracle::partition_number(4)), 5, "pentagonal p(4)");

  f.expect_eq(total_orbit_count(A(Family::sl_r, 2)), sl_r2, "sl_r(2)");
  f.expect_eq(total_orbit_count(A(Family::sl_c, 4)), sl_c4, "sl_c(4)");
  f.expect_eq(total_orbit_count(A(Family::sl_h, 4)), sl_c4, "sl_h(4)");
  f.expect_eq(total_orbit_count(A(Family::sp_c, 2)), sp_c2, "sp_c(2)");
  f.expect_eq(total_orbit_count(A(Family::so_c, 5)), so_c5, "so_c(5)");

  f.expect_eq(total_orbit_count(Apq(Family::so_pq, 2, 1)), total_orbit_count(A(Family::sl_r, 2)),
              "so_pq(2,1) vs sl_r(2)");
  f.expect_eq(total_orbit_count(A(Family::sp_c, 2)), total_orbit_count(A(Family::so_c, 5)), "sp_c(2) vs so_c(5)");
  f.expect_eq(total_orbit_count(A(Family::sp_c, 1)), total_orbit_count(A(Family::sl_c, 2)), "sp_c(1) vs sl_c(2)");
  f.expect_eq(total_orbit_count(A(Family::sp_c, 1)), 2, "sp_c(1)");
}

// 2 -------------------------------------------------------------------------
void fiber_counts(Failures& f)
{
  for (int n = 1; n <= 8; ++n)
    for (const auto& s : oracle::partitions(n)) {
      OrbitDatum d = OrbitDatum::plain(Partition::from_sizes(s));
      f.expect_eq(fiber_count(A(Family::sl_r, n), d), oracle::fiber_sl_r(s), "sl_r " + d.to_string());
      f.expect_eq(fiber_count(A(Family::sl_c, n), d), 1, "sl_c " + d.to_string());
      f.expect_eq(fiber_count(A(Family::sl_h, n), d), 1, "sl_h " + d.to_string());
      if (n >= 3 && oracle::in_p1(s))
        f.expect_eq(fiber_count(A(Family::so_c, n), d), oracle::fiber_so_c(s), "so_c " + d.to_string());
    }
  for (int n = 3; n <= 8; ++n)
    for (int p = 0; p <= n; ++p) {
      auto a = Apq(Family::so_pq, p, n - p);
      auto records = enumerate_orbits(a);
      if (p == 0 || p == n) {
        // definite form: only the zero orbit
        f.expect(records.size() == 1 && records[0].is_zero_orbit && records[0].fiber_count == 1,
                 a.name() + " is not a single zero orbit");
        continue;
      }
      std::size_t seen = 0;
      for (const auto& s : oracle::partitions(n)) {
        if (!oracle::in_p1(s)) continue;
        for (const auto& o : oracle::signings(s, [](int d) { return d % 2 == 0; })) {
          if (oracle::signature(o) != std::pair{p, n - p}) continue;
          ++seen;
          auto it = std::find_if(records.begin(), records.end(), [&](const OrbitRecord& r) {
            if (r.datum.partition.sizes() != s) return false;
            for (auto [d, pd] : o.p)
              if (r.datum.p_of(d) != pd) return false;
            return true;
          });
          if (it == records.end()) {
            f.expect(false, a.name() + ": oracle diagram missing from catalog");
            continue;
          }
          f.expect_eq(it->fiber_count, oracle::fiber_so_pq(o), where(a, it->datum));
        }
      }
      f.expect_eq(seen, records.size(), a.name() + " record count");
    }
}

// 3 -------------------------------------------------------------------------
void triple_identities(Failures& f)
{
  for (const auto& a : algebras_up_to(6))
    for (const auto& r : enumerate_orbits(a)) {
      if (r.is_zero_orbit) continue;
      Triple t = build_triple(a, r.datum);
      std::string w = where(a, r.datum);
      f.expect(commutator(t.H, t.X) == scale(t.X, Scalar(2)), w + ": [H,X]=2X");
      f.expect(commutator(t.H, t.Y) == scale(t.Y, Scalar(-2)), w + ": [H,Y]=-2Y");
      f.expect(commutator(t.X, t.Y) == t.H, w + ": [X,Y]=H");
      f.expect(jordan_type(t.X) == r.datum.partition, w + ": Jordan type");
    }
}

// 4 -------------------------------------------------------------------------
void form_correctness(Failures& f)
{
  for (const auto& a : algebras_up_to(6)) {
    if (!a.has_form()) continue;
    FormKind form = a.form();
    for (const auto& r : enumerate_orbits(a)) {
      std::string w = where(a, r.datum);
      Matrix s = gram_matrix(a, r.datum);
      Matrix adj = form.sigma_conj ? conj_transpose(s) : transpose(s);
      f.expect(adj == scale(s, Scalar(form.epsilon)), w + ": Gram symmetry");
      if (!r.is_zero_orbit) {
        Triple t = build_triple(a, r.datum);
        for (const Matrix* m : {&t.X, &t.H, &t.Y}) {
          Matrix lhs = promote(form_adjoint(*m, form), join(m->field(), s.field()));
          Matrix sp = promote(s, lhs.field());
          Matrix mp = promote(*m, lhs.field());
          f.expect((lhs * sp + sp * mp).is_zero(), w + ": form invariance");
        }
      }
      if (is_signed_pq(a.family))
        f.expect(congruence_signature(s) == Signature{a.p, a.q}, w + ": signature");
    }
  }
}

// 5 -------------------------------------------------------------------------
void centralizer_dimensions(Failures& f)
{
  for (const auto& a : algebras_up_to(6))
    for (const auto& r : enumerate_orbits(a)) {
      if (r.is_zero_orbit) continue;
      Triple t = build_triple(a, r.datum);
      f.expect_eq(centralizer_dim_triple(t, a), expected_reductive_dim(a, r.datum), where(a, r.datum));
    }
}

// 6 -------------------------------------------------------------------------
void embedding_properties(Failures& f)
{
  std::mt19937_64 rng(6);
  // homomorphism: 100 pairs per datum, every family with a block embedding
  std::vector<AlgebraSpec> hom;
  for (Family fam : {Family::sl_r, Family::sl_c, Family::sl_h})
    for (int n = 1; n <= 5; ++n) hom.push_back(A(fam, n));
  for (const auto& a : algebras_up_to(6))
    if (a.family == Family::sp_c || a.family == Family::so_c || is_signed_pq(a.family)) hom.push_back(a);
  for (const auto& a : hom)
    for (const auto& r : enumerate_orbits(a))
      for (int k = 0; k < 100; ++k) {
        KElement x = random_factor_matrices(a, r.datum, rng), y = random_factor_matrices(a, r.datum, rng);
        if (embed_K(a, r.datum, x * y) != embed_K(a, r.datum, x) * embed_K(a, r.datum, y)) {
          f.expect(false, where(a, r.datum) + ": D(gh) != D(g)D(h)");
          break;
        }
      }

  // determinant of the SL(V) embedding equals the character
  for (Family fam : {Family::sl_r, Family::sl_c})
    for (int n = 1; n <= 5; ++n) {
      auto a = A(fam, n);
      for (const auto& r : enumerate_orbits(a))
        for (int k = 0; k < 10; ++k) {
          KElement x = random_factor_matrices(a, r.datum, rng);
          f.expect(det(embed_K(a, r.datum, x)) == chi(a, r.datum, x)[0], where(a, r.datum) + ": det D != chi");
        }
    }

  // Cayley points of K land in the centralizer of the triple and preserve the form
  std::vector<AlgebraSpec> member;
  for (Family fam : {Family::sl_r, Family::sl_c, Family::sl_h})
    for (int n = 1; n <= 5; ++n) member.push_back(A(fam, n));
  for (int n = 1; n <= 4; ++n) member.push_back(A(Family::sp_c, n));
  for (int n = 3; n <= 4; ++n) member.push_back(A(Family::so_c, n));
  for (const auto& a : member)
    for (const auto& r : enumerate_orbits(a)) {
      if (r.is_zero_orbit) continue;
      Triple t = build_triple(a, r.datum);
      Matrix change = has_adapted_basis(a.family) ? adapted_change_of_basis(a, r.datum) : Matrix();
      for (int k = 0; k < 3; ++k) {
        MembershipResult m = verify_K_membership(a, r.datum, random_element(a, r.datum, rng), t, change);
        f.expect(m.ok, where(a, r.datum) + ": " + m.failure);
      }
    }
}

// 7 -------------------------------------------------------------------------
// p and q from the signed diagram by the closed-form sums over even parts,
// parts 1 mod 4 and parts 3 mod 4
std::pair<int, int> pq_closed_form(const OrbitDatum& d)
{
  int p = 0, q = 0;
  for (auto [part, t] : oracle::multiplicities(d.partition.sizes())) {
    if (part % 2 == 0) {
      p += part / 2 * t;
      q += part / 2 * t;
      continue;
    }
    int pd = d.p_of(part), qd = t - pd;
    if (part % 4 == 1) {
      p += (part + 1) / 2 * pd + (part - 1) / 2 * qd;
      q += (part - 1) / 2 * pd + (part + 1) / 2 * qd;
    } else {
      p += (part - 1) / 2 * pd + (part + 1) / 2 * qd;
      q += (part + 1) / 2 * pd + (part - 1) / 2 * qd;
    }
  }
  return {p, q};
}

void block_accounting(Failures& f)
{
  std::mt19937_64 rng(7);
  for (const auto& a : algebras_up_to(7)) {
    if (!is_signed_pq(a.family)) continue;
    for (const auto& r : enumerate_orbits(a)) {
      std::string w = where(a, r.datum);
      auto [p, q] = pq_closed_form(r.datum);
      f.expect_eq(p, a.p, w + ": closed-form p");
      f.expect_eq(q, a.q, w + ": closed-form q");
      auto [dp, dq] = embed_K_pq(a, r.datum, random_element(a, r.datum, rng));
      f.expect_eq(static_cast<int>(dp.rows()), p, w + ": D_p size");
      f.expect_eq(static_cast<int>(dq.rows()), q, w + ": D_q size");
    }
  }
}

// 8 -------------------------------------------------------------------------
void minimal_orbit(Failures& f)
{
  auto a = A(Family::sl_c, 2);
  OrbitDatum d = parse_datum(a, "2");
  HomotopyType h = compact_pair(a, d);
  f.expect_eq(orbit_dim(a, d), 4, "orbit dim");
  f.expect_eq(h.dim_quotient, 3, "quotient dim");
  f.expect_eq(h.dim_K, 0, "dim K (finite K)");
  f.expect_eq(h.dim_M, 3, "dim SU(2)");
}

// 9 -------------------------------------------------------------------------
void cli_contract(Failures& f)
{
  cli::Run ok = cli::run("verify --algebra sl_r --n 3 --seed 7");
  f.expect_eq(ok.status, 0, "verify exit on pass");
  cli::Run bad = cli::run("verify --algebra sl_r --n 2 --inject-fault corrupt-Y");
  f.expect_eq(bad.status, 1, "verify exit on injected fault");
  f.expect(bad.err.find("[X,Y]=H FAILED") != std::string::npos, "fault report names [X,Y]=H");
  f.expect_eq(cli::run("verify --algebra sl_r").status, 2, "usage error exit");
  f.expect_eq(cli::run("describe --algebra sp_c --n 2 --datum 3,1").status, 2, "non-member datum exit");
  for (const auto& [name, args] : cli::golden_cases()) {
    cli::Run first = cli::run(args), second = cli::run(args);
    f.expect(first.out == second.out, std::string(name) + ": two runs differ");
    f.expect(first.out == cli::slurp(std::filesystem::path(NILORB_GOLDEN_DIR) / name),
             std::string(name) + ": differs from golden file");
  }
}

}  // namespace

int main()
{
  struct Criterion {
    int id;
    const char* title;
    void (*check)(Failures&);
  };
  const Criterion criteria[] = {
      {1, "parametrization counts", parametrization_counts},
      {2, "fiber-count rules, n <= 8", fiber_counts},
      {3, "triple identities, n <= 6", triple_identities},
      {4, "Gram symmetry, invariance, signature, n <= 6", form_correctness},
      {5, "centralizer dimensions, n <= 6", centralizer_dimensions},
      {6, "embedding homomorphism, det = chi, K membership", embedding_properties},
      {7, "D_p / D_q block accounting", block_accounting},
      {8, "minimal orbit of sl_2(C)", minimal_orbit},
      {9, "CLI exit codes and golden files", cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures f;
    auto start = std::chrono::steady_clock::now();
    try {
      c.check(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = f.items.empty();
    failed += !pass;
    std::printf("%s criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (std::size_t i = 0; i < f.items.size() && i < 10; ++i) std::printf("    %s\n", f.items[i].c_str());
    if (f.items.size() > 10) std::printf("    ... %zu more\n", f.items.size() - 10);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
