#include "nilorb/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "nilorb/centralizer.hpp"
#include "nilorb/homotopy.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/triple.hpp"

namespace nilorb {

std::string_view check_status_name(CheckStatus s)
{
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "";
}

Fault fault_from_name(const std::string& s)
{
  if (s == "none") return Fault::None;
  if (s == "corrupt-Y") return Fault::CorruptY;
  if (s == "corrupt-H") return Fault::CorruptH;
  if (s == "corrupt-gram") return Fault::CorruptGram;
  throw std::invalid_argument("unknown fault: " + s);
}

int VerifyReport::count(CheckStatus s) const
{
  int c = 0;
  for (const auto& r : checks) c += r.status == s;
  return c;
}

namespace {

void inject(Triple& t, Fault f)
{
  auto bump_first_nonzero = [](Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) {
          m.raw(r, c) += Scalar(1);
          return;
        }
  };
  switch (f) {
    case Fault::CorruptY: bump_first_nonzero(t.Y); break;
    case Fault::CorruptH: bump_first_nonzero(t.H); break;
    case Fault::CorruptGram:
      if (t.gram) bump_first_nonzero(*t.gram);
      break;
    case Fault::None: break;
  }
}

struct Recorder {
  std::string orbit;
  std::vector<CheckResult> out;

  bool check(const std::string& name, bool ok, std::string detail = "")
  {
    out.push_back({orbit, name, ok ? CheckStatus::Pass : CheckStatus::Fail, ok ? "" : std::move(detail)});
    return ok;
  }
  void skip(const std::string& name, std::string why)
  {
    out.push_back({orbit, name, CheckStatus::Skip, std::move(why)});
  }
};

Scalar trace_like(const AlgebraSpec& a, const Matrix& m)
{
  return a.family == Family::sl_h ? reduced_trace(m) : trace(m);
}

}  // namespace

std::vector<CheckResult> verify_orbit(const AlgebraSpec& a, const OrbitRecord& rec,
                                      const VerifyOptions& opts, std::uint64_t seed)
{
  const OrbitDatum& d = rec.datum;
  Recorder R{d.to_string(), {}};
  std::mt19937_64 rng(seed);

  try {
    HomotopyType h = compact_pair(a, d);
    R.check("dim K = expected compact dim", h.dim_K == expected_compact_dim(a, d),
            std::to_string(h.dim_K) + " vs " + std::to_string(expected_compact_dim(a, d)));

    if (rec.is_zero_orbit) {
      R.check("centralizer of 0 is g", algebra_dim_by_kernel(a) == a.dim_g());
      R.check("quotient is a point", h.dim_quotient == 0, std::to_string(h.dim_quotient));
      R.check("reductive dim of 0 is dim g", expected_reductive_dim(a, d) == a.dim_g());
      return R.out;
    }

    Triple t = build_triple(a, d);
    inject(t, opts.fault);
    R.check("[H,X]=2X", commutator(t.H, t.X) == scale(t.X, Scalar(2)));
    R.check("[H,Y]=-2Y", commutator(t.H, t.Y) == scale(t.Y, Scalar(-2)));
    R.check("[X,Y]=H", commutator(t.X, t.Y) == t.H);
    R.check("X^d_max=0, X^(d_max-1)!=0",
            power(t.X, d.partition.largest()).is_zero() && !power(t.X, d.partition.largest() - 1).is_zero());
    Partition jt = jordan_type(t.X);
    R.check("Jordan type of X", jt == d.partition, jt.to_string());

    if (a.is_sl()) {
      bool zero = true;
      for (const Matrix* m : {&t.X, &t.H, &t.Y}) zero = zero && trace_like(a, *m).is_zero();
      R.check(a.family == Family::sl_h ? "Trd=0" : "trace=0", zero);
    } else {
      const Matrix& s = *t.gram;
      FormKind fk = *t.form;
      R.check("form symmetry", form_adjoint(s, fk) == scale(s, Scalar(fk.epsilon)));
      bool inv = true;
      for (const Matrix* m : {&t.X, &t.H, &t.Y}) {
        Matrix mf = promote(*m, join(m->field(), s.field())), sf = promote(s, mf.field());
        inv = inv && (form_adjoint(mf, fk) * sf + sf * mf).is_zero();
      }
      R.check("form invariance", inv);
      if (a.uses_signature()) {
        try {
          Signature sg = congruence_signature(s);
          R.check("signature(S)=(p,q)", sg.p == a.p && sg.q == a.q,
                  "(" + std::to_string(sg.p) + "," + std::to_string(sg.q) + ")");
        } catch (const std::exception& e) {
          R.check("signature(S)=(p,q)", false, e.what());
        }
      }
    }

    Matrix T;
    if (has_adapted_basis(a.family)) {
      T = adapted_change_of_basis(a, d);
      Matrix s = promote(*t.gram, join(T.field(), t.gram->field()));
      Matrix Tf = promote(T, s.field());
      R.check("adapted Gram is standard", form_adjoint(Tf, *t.form) * s * Tf == promote(standard_form(a), s.field()));
    }

    CentralizerReport c;
    c.dim_g = a.dim_g();
    c.dim_z_triple = centralizer_dim_triple(t, a);
    c.dim_z_X = centralizer_dim_nilpotent(t, a);
    c.dim_orbit = c.dim_g - c.dim_z_X;
    c.expected_reductive = expected_reductive_dim(a, d);
    R.check("dim z(X,H,Y) = expected reductive dim", c.dim_z_triple == c.expected_reductive,
            std::to_string(c.dim_z_triple) + " vs " + std::to_string(c.expected_reductive));
    R.check("dim z(X,H,Y) <= dim z(X)", c.dim_z_triple <= c.dim_z_X);
    if (a.family == Family::sl_c || a.family == Family::so_c || a.family == Family::sp_c)
      R.check("complex orbit has even dim", c.dim_orbit % 2 == 0, std::to_string(c.dim_orbit));

    if (!h.embedding_available) {
      R.skip("K embedding", "no explicit embedding for " + std::string(family_name(a.family)));
      return R.out;
    }
    KElement id = identity_element(a, d);
    Matrix did = embed_K(a, d, id);
    R.check("D(I)=I", did == Matrix::identity(did.rows(), did.field()));
    if (a.uses_signature()) {
      auto [dp, dq] = embed_K_pq(a, d, id);
      R.check("D_p, D_q sizes = (p,q)", dp.rows() == static_cast<std::size_t>(a.p) &&
                                            dq.rows() == static_cast<std::size_t>(a.q),
              std::to_string(dp.rows()) + "," + std::to_string(dq.rows()));
    }
    bool hom = true, detchi = true;
    for (int k = 0; k < opts.samples; ++k) {
      KElement g = random_factor_matrices(a, d, rng), g2 = random_factor_matrices(a, d, rng);
      hom = hom && embed_K(a, d, g * g2) == embed_K(a, d, g) * embed_K(a, d, g2);
      if (a.family == Family::sl_r || a.family == Family::sl_c)
        detchi = detchi && det(embed_K(a, d, g)) == chi(a, d, g)[0];
    }
    R.check("D(gh)=D(g)D(h)", hom);
    if (a.family == Family::sl_r || a.family == Family::sl_c) R.check("det D(g) = chi(g)", detchi);

    MembershipResult m = verify_K_membership(a, d, id, t, T);
    for (int k = 0; m && k < opts.samples; ++k) m = verify_K_membership(a, d, random_element(a, d, rng), t, T);
    R.check("K membership", m.ok, m.failure);
  } catch (const std::exception& e) {
    R.check("no exception", false, e.what());
  }
  return R.out;
}

unsigned threads_from_env()
{
  const char* v = std::getenv("NILORB_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end || n < 1) return 1;
  return static_cast<unsigned>(std::min<long>(n, 64));
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& job)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) job(i);
    });
  for (auto& th : pool) th.join();
}

VerifyReport run_verify(const AlgebraSpec& a, const VerifyOptions& opts)
{
  VerifyReport rep{a, opts, {}};
  if (a.n > opts.max_verify_n) {
    rep.checks.push_back({a.name(), "all", CheckStatus::Skip,
                          "rank " + std::to_string(a.n) + " above max_verify_n " + std::to_string(opts.max_verify_n)});
    return rep;
  }
  std::vector<OrbitRecord> orbits = enumerate_orbits(a);
  std::vector<std::vector<CheckResult>> per(orbits.size());
  parallel_for(orbits.size(), opts.threads, [&](std::size_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      static_cast<std::uint32_t>(i)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    per[i] = verify_orbit(a, orbits[i], opts, (static_cast<std::uint64_t>(words[0]) << 32) | words[1]);
  });
  for (auto& v : per) rep.checks.insert(rep.checks.end(), v.begin(), v.end());
  return rep;
}

}  // namespace nilorb
