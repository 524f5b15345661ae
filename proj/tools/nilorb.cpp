// nilorb: enumerate, describe and verify nilpotent orbits.
//
//   nilorb list     --algebra sl_r --n 3 [--format json|table]
//   nilorb describe --algebra so_pq --p 2 --q 1 --datum "3;3:2"
//   nilorb verify   --algebra sp_c --n 2 --seed 7
//
// Exit status: 0 success / all checks pass, 1 a check failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "nilorb/report.hpp"

using namespace nilorb;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Request {
  std::string algebra;
  std::optional<int> n, p, q;
  std::string format = "table";
  std::uint64_t seed = 0;
  int max_verify_n = 6;
  int samples = 3;
  std::string datum;
  std::string fault = "none";
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

AlgebraSpec algebra_of(const Request& r)
{
  Family f = family_from_name(r.algebra);
  AlgebraSpec probe;
  probe.family = f;
  if (probe.uses_signature()) {
    if (r.n) throw UsageError(r.algebra + " takes --p and --q, not --n");
    if (!r.p || !r.q) throw UsageError(r.algebra + " needs both --p and --q");
    return AlgebraSpec::make_pq(f, *r.p, *r.q);
  }
  if (r.p || r.q) throw UsageError(r.algebra + " takes --n, not --p/--q");
  if (!r.n) throw UsageError(r.algebra + " needs --n");
  return AlgebraSpec::make(f, *r.n);
}

void emit(const json& j, const std::string& table, const Request& r)
{
  if (r.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
}

void add_algebra_options(CLI::App* sub, Request& r)
{
  sub->add_option("--algebra", r.algebra, "sl_r | sl_c | sl_h | so_c | so_pq | sp_c | sp_pq | so_star")
      ->required()
      ->check(CLI::IsMember({"sl_r", "sl_c", "sl_h", "so_c", "so_pq", "sp_c", "sp_pq", "so_star"}));
  sub->add_option("--n", r.n, "rank parameter");
  sub->add_option("--p", r.p, "signature p (so_pq, sp_pq)");
  sub->add_option("--q", r.q, "signature q (so_pq, sp_pq)");
  sub->add_option("--format", r.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"nilpotent orbits of classical real and complex Lie algebras"};
  app.require_subcommand(1);
  Request req;

  CLI::App* list = app.add_subcommand("list", "orbit catalog with fibers, dimensions and homotopy types");
  CLI::App* describe = app.add_subcommand("describe", "triple, Gram matrix, centralizer and homotopy type of one orbit");
  CLI::App* verify = app.add_subcommand("verify", "run the identity checks over every orbit");
  for (CLI::App* s : {list, describe, verify}) add_algebra_options(s, req);
  describe->add_option("--datum", req.datum, "partition \"3,2,2,1\" or \"3,2^2,1\", signs after ';' as d:p_d")
      ->required();
  verify->add_option("--seed", req.seed, "seed for random group elements");
  verify->add_option("--max-verify-n", req.max_verify_n, "skip algebras with larger rank parameter")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", req.samples, "random samples per orbit")->check(CLI::NonNegativeNumber);
  verify->add_option("--inject-fault", req.fault, "corrupt each triple before checking")
      ->check(CLI::IsMember({"none", "corrupt-Y", "corrupt-H", "corrupt-gram"}))
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    AlgebraSpec a = algebra_of(req);
    unsigned threads = threads_from_env();

    if (*list) {
      ListDocument d = make_list(a, threads);
      emit(d, render_table(d), req);
      return 0;
    }
    if (*describe) {
      DescribeDocument d = make_describe(a, parse_datum(a, req.datum));
      emit(d, render_table(d), req);
      return 0;
    }
    VerifyOptions opts;
    opts.seed = req.seed;
    opts.max_verify_n = req.max_verify_n;
    opts.samples = req.samples;
    opts.threads = threads;
    opts.fault = fault_from_name(req.fault);
    VerifyReport r = run_verify(a, opts);
    emit(r, render_table(r), req);
    for (const auto& line : failure_lines(r)) std::cerr << line << "\n";
    return r.ok() ? 0 : kExitFail;
  } catch (const NotInParametrizingSet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidAlgebra& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
