#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdint>  // for uint64_t
#include <fstream>  // for ofstream
#include <ostream>  // for ostream
#include <sstream>  // for ostringstream

#include "catmat/category.hpp"
#include "catmat/construct.hpp"
#include "catmat/decide.hpp"
#include "catmat/error.hpp"
#include "catmat/matrix.hpp"
#include "catmat/oracle.hpp"
#include "catmat/witness_io.hpp"

namespace catmat::cli {

  namespace {
    std::string class_list(std::vector<std::size_t> const& cls) {
      std::string s = "{";
      for (std::size_t a = 0; a < cls.size(); ++a) {
        s += (a == 0 ? "" : ",") + std::to_string(cls[a] + 1);
      }
      return s + "}";
    }

    std::vector<std::string> witness_comments(PosMatrix const& m, Verdict const& v) {
      auto const& r = v.route();
      std::string how;
      switch (r.base) {
        case RouteKind::trivial:
          how = "single object with its identity";
          break;
        case RouteKind::leinster:
          how = "constant composition of non-identity morphisms, identities added freely";
          break;
        case RouteKind::one_unit:
          how = "morphisms factoring through the unit object "
                + std::to_string(*r.unit + 1)
                + ", extra morphisms absorbed, identities added";
          break;
        case RouteKind::reduce_then:
          break;
      }
      if (r.kind == RouteKind::reduce_then) {
        how = "reduced matrix realized by: " + how
              + "; hom-sets copied along the index classes";
      }
      return {"matrix: " + to_string(m), "route: " + to_string(r),
              "construction: " + how};
    }

    int cmd_check(std::string const& path, std::ostream& out) {
      auto v = decide(read_matrix_file(path));
      out << to_string(v) << '\n';
      return v.realizable() ? ok : negative;
    }

    int cmd_witness(std::string const& path,
                    std::string const& target,
                    std::ostream&      out,
                    std::ostream&      err) {
      auto m = read_matrix_file(path);
      auto v = decide(m);
      if (!v.realizable()) {
        out << to_string(v) << '\n';
        return negative;
      }
      auto c    = construct_witness(m);
      auto text = to_witness_string(c, witness_comments(m, v));
      // The emitted text must re-verify on its own.
      if (!verify(parse_witness(text), m).ok()) {
        err << "internal error: constructed witness fails verification\n";
        return negative;
      }
      if (target == "-") {
        out << text;
        return ok;
      }
      std::ofstream file(target);
      if (!file || !(file << text)) {
        err << "cannot write '" << target << "'\n";
        return usage;
      }
      out << to_string(v) << '\n';
      return ok;
    }

    int cmd_verify(std::string const& witness_path,
                   std::string const& matrix_path,
                   std::ostream&      out) {
      auto                     c = read_witness_file(witness_path);
      std::optional<PosMatrix> expected;
      if (!matrix_path.empty()) {
        expected = read_matrix_file(matrix_path);
      }
      auto report = verify(c, expected);
      if (report.ok()) {
        out << "OK\n";
        return ok;
      }
      for (auto const& v : report.violations) {
        out << "VIOLATION " << to_string(v) << '\n';
      }
      out << "FAILED " << report.violations.size() << " violation(s)\n";
      return negative;
    }

    int cmd_reduce(std::string const& path, std::ostream& out) {
      auto        red = reduce(read_matrix_file(path));
      std::string classes;
      std::string reps;
      for (std::size_t a = 0; a < red.classes.size(); ++a) {
        classes += (a == 0 ? "" : " ") + class_list(red.classes[a]);
        reps += (a == 0 ? "" : " ") + std::to_string(red.representatives[a] + 1);
      }
      out << "# classes: " << classes << '\n';
      out << "# representatives: " << reps << '\n';
      write_matrix(out, red.reduced);
      return ok;
    }

    int cmd_oracle(std::string const& path,
                   SearchConfig const& cfg,
                   bool               cross,
                   std::ostream&      out) {
      auto m = read_matrix_file(path);
      if (cross) {
        auto r = cross_validate(m, cfg);
        out << outcome_name(r.outcome) << " nodes=" << nodes_used(r.outcome) << '\n';
        out << to_string(r) << '\n';
        switch (r.agreement) {
          case Agreement::agree:
            return ok;
          case Agreement::disagree:
            return negative;
          case Agreement::undecided:
            return inconclusive;
        }
      }
      auto o = search(m, cfg);
      out << outcome_name(o) << " nodes=" << nodes_used(o) << '\n';
      switch (o.index()) {
        case 0:
          return ok;
        case 1:
          return negative;
        default:
          return inconclusive;
      }
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decide, construct and verify finite categories with a given hom-set matrix",
                 "catmat"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string witness_path;
    std::string out_path;
    std::string expected_path;

    auto* check = app.add_subcommand("check", "Decide whether a matrix is realizable");
    check->add_option("matrix", matrix_path, "Matrix file")->required();

    auto* witness = app.add_subcommand("witness", "Write a witness category for a matrix");
    witness->add_option("matrix", matrix_path, "Matrix file")->required();
    witness->add_option("out", out_path, "Witness file to write ('-' for stdout)")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Verify a witness file");
    verify_cmd->add_option("witness", witness_path, "Witness file")->required();
    verify_cmd->add_option("matrix", expected_path, "Expected matrix file");
    verify_cmd->add_option("--expected", expected_path, "Expected matrix file");

    auto* reduce_cmd = app.add_subcommand("reduce", "Merge equivalent indices of a matrix");
    reduce_cmd->add_option("matrix", matrix_path, "Matrix file")->required();

    SearchConfig cfg;
    bool         cross  = false;
    auto*        oracle = app.add_subcommand("oracle", "Exhaustive search for a composition table");
    oracle->add_option("matrix", matrix_path, "Matrix file")->required();
    oracle->add_option("--budget", cfg.node_budget, "Maximum number of search nodes")
        ->default_val(cfg.node_budget)
        ->check(CLI::PositiveNumber);
    oracle->add_option("--parallel", cfg.parallel_width, "Number of search workers")
        ->default_val(cfg.parallel_width)
        ->check(CLI::PositiveNumber);
    oracle->add_flag("--cross", cross, "Compare the search result with the decision procedure");

    std::vector<char const*> argv{"catmat"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << '\n' << app.help();
      return usage;
    }

    try {
      if (check->parsed()) {
        return cmd_check(matrix_path, out);
      }
      if (witness->parsed()) {
        return cmd_witness(matrix_path, out_path, out, err);
      }
      if (verify_cmd->parsed()) {
        return cmd_verify(witness_path, expected_path, out);
      }
      if (reduce_cmd->parsed()) {
        return cmd_reduce(matrix_path, out);
      }
      if (oracle->parsed()) {
        return cmd_oracle(matrix_path, cfg, cross, out);
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
    err << app.help();
    return usage;
  }

}  // namespace catmat::cli
