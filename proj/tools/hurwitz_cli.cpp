#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hurwitz/checks.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/grr.hpp"
#include "hurwitz/local_models.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/strata.hpp"
#include "hurwitz/vars.hpp"

namespace {

using namespace hurwitz;

struct NRange {
  long lo = 0, hi = 0;
};

NRange parse_n_range(const std::string& text) {
  auto pos = text.find("..");
  NRange r;
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stol(text);
    } else {
      r.lo = std::stol(text.substr(0, pos));
      r.hi = std::stol(text.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw hurwitz::ParseError("invalid n range: " + text);
  }
  if (r.hi < r.lo) throw hurwitz::ParseError("empty n range: " + text);
  return r;
}

std::string render_poly(const Polynomial& p, const std::string& format) {
  if (format == "json") return p.to_json().dump();
  if (format == "latex") return latex_bclass(p);
  return p.to_text();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact calculus of singularity strata on spaces of maps, "
               "with a symmetric-group factorization oracle"};
  app.require_subcommand(1);

  std::string label_text, format = "text", expr, check_name, n_text = "3";
  long genus = 0;
  int max_n = 6;
  bool override_bound = false, genus0 = false, all = false,
       against_oracle = false;

  auto add_common = [&](CLI::App* cmd, bool with_label) {
    if (with_label) cmd->add_option("--label", label_text, "stratum label");
    cmd->add_option("--format", format, "text|json|latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    return cmd;
  };

  CLI::App* residual = add_common(
      app.add_subcommand("residual", "residual polynomial of a label"), true);
  residual->get_option("--label")->required();

  CLI::App* ring = add_common(
      app.add_subcommand("ring", "quotient-ring operations"), false);
  std::string reduce_expr, push_expr;
  ring->add_option("--reduce", reduce_expr, "class to put in normal form");
  ring->add_option("--push", push_expr, "class to push to the base");
  ring->add_option("--check", check_name, "thm3.3 or eq3.6");

  CLI::App* grr = add_common(
      app.add_subcommand("grr", "direct-image expansion levels"), false);
  int grr_order = 6;
  grr->add_option("--order", grr_order, "highest level")->check(
      CLI::Range(0, 8));

  CLI::App* strata = add_common(
      app.add_subcommand("strata", "assembled stratum class"), true);
  strata->get_option("--label")->required();
  strata->add_flag("--genus0", genus0, "genus-zero specialization");
  std::string strata_n;
  strata->add_option("--n", strata_n, "substitute a numeric degree");

  CLI::App* degrees = add_common(
      app.add_subcommand("degrees", "degree table at a given degree"), true);
  degrees->add_flag("--all", all, "print the basic-degree table");
  degrees->add_option("--n", n_text, "degree n (single value)");

  CLI::App* hurwitz_cmd = add_common(
      app.add_subcommand("hurwitz", "Hurwitz numbers from the calculus"),
      true);
  hurwitz_cmd->get_option("--label")->required();
  hurwitz_cmd->add_option("--n", n_text, "degree or range a..b")->required();

  CLI::App* oracle_cmd = add_common(
      app.add_subcommand("oracle", "factorization-count Hurwitz numbers"),
      true);
  oracle_cmd->get_option("--label")->required();
  oracle_cmd->add_option("--n", n_text, "degree or range a..b")->required();
  oracle_cmd->add_option("--genus", genus, "genus (default 0)");
  oracle_cmd->add_flag("--override-resource-bound", override_bound,
                       "lift the n <= 8 limit");

  CLI::App* verify = add_common(
      app.add_subcommand("verify", "named verification bundles"), false);
  verify->add_option("--check", check_name, "bundle name");
  verify->add_flag("--all", all, "run every bundle");
  verify->add_flag("--against-oracle", against_oracle,
                   "run the oracle cross-check bundle");
  verify->add_option("--max-n", max_n, "largest degree for oracle checks");
  verify->add_flag("--override-resource-bound", override_bound,
                   "lift the n <= 8 limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (residual->parsed()) {
    ResidualCalculus rc;
    std::cout << render_poly(rc.residual(parse_label(label_text)), format)
              << "\n";
    return 0;
  }

  if (ring->parsed()) {
    if (!check_name.empty()) {
      Report r = run_check(check_name == "thm3.3" ? "thm3.3" : "eq3.6");
      std::cout << (format == "json" ? r.to_json().dump(1) + "\n"
                                     : r.to_text());
      return r.pass() ? 0 : 1;
    }
    if (!reduce_expr.empty()) {
      std::cout << render_poly(reduce(parse_polynomial(reduce_expr)), format)
                << "\n";
      return 0;
    }
    if (!push_expr.empty()) {
      std::cout << render_poly(p_push(reduce(parse_polynomial(push_expr))),
                               format)
                << "\n";
      return 0;
    }
    throw hurwitz::ParseError("ring: one of --reduce/--push/--check required");
  }

  if (grr->parsed()) {
    std::vector<GrrLevel> levels = grr_rhs(grr_order);
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (size_t d = 0; d < levels.size(); ++d)
        arr.push_back({{"level", d},
                       {"coefficient", rat_to_string(levels[d].coefficient)},
                       {"class", levels[d].cls.to_json()}});
      std::cout << arr.dump(1) << "\n";
    } else {
      for (size_t d = 0; d < levels.size(); ++d)
        std::cout << "level " << d << ": "
                  << rat_to_string(levels[d].coefficient) << " * ("
                  << render_poly(levels[d].cls, format) << ")\n";
    }
    return 0;
  }

  if (strata->parsed()) {
    ResidualCalculus rc;
    StratumExpression se = assemble(parse_label(label_text), rc);
    Polynomial out = genus0 ? se.genus0 : se.general_g;
    if (!strata_n.empty()) {
      NRange r = parse_n_range(strata_n);
      out = out.substitute({{vars::n, Polynomial(Rational(r.lo))}});
    }
    std::cout << render_poly(out, format) << "\n";
    return 0;
  }

  if (degrees->parsed()) {
    NRange r = parse_n_range(n_text);
    long n = r.lo;
    auto slug = [](const std::string& name) {
      if (name == "1") return std::string("deg1");
      if (name == "δ_{0,0}") return std::string("deg_delta_0_0");
      if (name == "δ_{0,0}^2") return std::string("deg_delta_0_0_sq");
      if (name == "ξ_2") return std::string("deg_xi_2");
      if (name == "δ_{1,0}") return std::string("deg_delta_1_0");
      return "deg_" + name;
    };
    if (!label_text.empty()) {
      ResidualCalculus rc;
      Rational d = degree(sigma_g0(parse_label(label_text), rc), n);
      std::cout << rat_to_string(d) << "\n";
      return 0;
    }
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, form] : basic_degree_forms())
      obj[slug(name)] = rat_to_string(form.value(n));
    if (format == "json") {
      std::cout << obj.dump() << "\n";
    } else {
      for (const auto& [name, form] : basic_degree_forms())
        std::cout << "deg(" << name << ") = " << rat_to_string(form.value(n))
                  << "\n";
    }
    return 0;
  }

  if (hurwitz_cmd->parsed()) {
    ResidualCalculus rc;
    MultiPartition label = parse_label(label_text);
    NRange r = parse_n_range(n_text);
    Polynomial g0 = sigma_g0(label, rc);
    nlohmann::json arr = nlohmann::json::array();
    for (long n = r.lo; n <= r.hi; ++n) {
      Rational deg = degree(g0, n);
      Rational h = Rational(aut_set_order(label)) *
                   factorial(m_count(label, static_cast<int>(n), 0)) /
                   factorial(n) * deg;
      if (format == "json") {
        arr.push_back({{"label", label.to_string()},
                       {"n", n},
                       {"class", g0.to_json()},
                       {"degree", rat_to_string(deg)},
                       {"hurwitz", rat_to_string(h)}});
      } else if (r.lo == r.hi) {
        std::cout << rat_to_string(h) << "\n";
      } else {
        std::cout << "n=" << n << ": " << rat_to_string(h) << "\n";
      }
    }
    if (format == "json") std::cout << arr.dump(1) << "\n";
    return 0;
  }

  if (oracle_cmd->parsed()) {
    MultiPartition label = parse_label(label_text);
    NRange r = parse_n_range(n_text);
    for (long n = r.lo; n <= r.hi; ++n) {
      Rational h = hurwitz_oracle(label, static_cast<int>(n),
                                  static_cast<int>(genus), override_bound);
      if (r.lo == r.hi)
        std::cout << rat_to_string(h) << "\n";
      else
        std::cout << "n=" << n << ": " << rat_to_string(h) << "\n";
    }
    return 0;
  }

  if (verify->parsed()) {
    std::vector<Report> reports;
    if (against_oracle) {
      reports.push_back(run_check("oracle-crosscheck", max_n, override_bound));
    } else if (!check_name.empty()) {
      reports.push_back(run_check(check_name, max_n, override_bound));
    } else {
      reports = run_all(max_n, override_bound);
    }
    bool ok = true;
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back(r.to_json());
        ok = ok && r.pass();
      }
      std::cout << arr.dump(1) << "\n";
    } else {
      for (const auto& r : reports) {
        std::cout << r.to_text();
        ok = ok && r.pass();
      }
      std::cout << (ok ? "PASS" : "FAIL") << " (" << reports.size()
                << " bundles)\n";
    }
    return ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hurwitz::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hurwitz::UnknownLabel& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hurwitz::CalcError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
