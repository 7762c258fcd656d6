// ginv: exact generalized inverses over Q(i).
//
//   ginv compute --kind <kind> --a A.json [--b B --c C] [--t T --s S] [--out PATH]
//   ginv verify  --kind <kind> --a A.json --candidate X.json [...]
//   ginv decompose --a A.json [--out PATH]
//
// Exit codes: 0 ok, 1 domain failure or failed verification, 2 input error,
// 3 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ginv/command.hpp"
#include "ginv/error.hpp"

namespace {

void add_operands(CLI::App* sub, ginv::CommandRequest& req) {
  sub->add_option("--a", req.a, "matrix document for a")->required();
  sub->add_option("--b", req.b, "b of the (b,c) pair");
  sub->add_option("--c", req.c, "c of the (b,c) pair");
  sub->add_option("--t", req.t, "generator whose image is T");
  sub->add_option("--s", req.s, "generator whose kernel is S");
  sub->add_option("--out", req.out, "write the report here instead of stdout");
}

int write_report(const ginv::CommandRequest& req, const std::string& text) {
  if (!req.out) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*req.out, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "ginv: cannot write " << req.out->string() << "\n";
    return ginv::kExitInputError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized inverses of matrices over the Gaussian rationals"};
  app.require_subcommand(1);
  ginv::CommandRequest req;

  auto* compute = app.add_subcommand("compute", "compute an inverse and verify it");
  compute->add_option("--kind", req.kind, "mp|weak-mp|group|drazin|hgroup|weak-hgroup|bc|two")->required();
  add_operands(compute, req);

  auto* verify = app.add_subcommand("verify", "check a candidate against the defining equations");
  verify->add_option("--kind", req.kind, "inverse kind")->required();
  verify->add_option("--candidate", req.candidate, "candidate inverse")->required();
  add_operands(verify, req);

  auto* decompose = app.add_subcommand("decompose", "core/nilpotent decomposition");
  decompose->add_option("--a", req.a, "matrix document for a")->required();
  decompose->add_option("--out", req.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ginv::kExitUsageError;
  }

  if (compute->parsed()) req.command = ginv::Command::Compute;
  if (verify->parsed()) req.command = ginv::Command::Verify;
  if (decompose->parsed()) req.command = ginv::Command::Decompose;

  try {
    const ginv::ReportDocument doc = ginv::execute_command(req);
    if (const int rc = write_report(req, ginv::emit_document(doc)); rc != 0) return rc;
    return ginv::exit_code_for(doc);
  } catch (const ginv::UsageError& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return ginv::kExitUsageError;
  } catch (const ginv::ParseError& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return ginv::kExitInputError;
  } catch (const ginv::DimensionError& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return ginv::kExitInputError;
  } catch (const ginv::InputError& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return ginv::kExitInputError;
  } catch (const ginv::Error& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return ginv::kExitDomainFailure;
  }
}
