#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "metab/bch.hpp"
#include "metab/canonical.hpp"
#include "metab/envelope.hpp"
#include "metab/errors.hpp"
#include "metab/parse.hpp"
#include "metab/serialize.hpp"

using nlohmann::json;

namespace {

struct Options {
  int rank = 2;
  int nil_class = 3;
  std::string output = "text";
  bool json_mode() const { return output == "json"; }
};

void print_result(const Options &opt, const std::string &text) {
  if (opt.json_mode())
    std::cout << json{{"result", text}}.dump() << '\n';
  else
    std::cout << text << '\n';
}

void print_matrix(const metab::JacobianMatrix &M) {
  std::cout << metab::matrix_to_json(M).dump() << '\n';
}

void print_endo(const Options &opt, const metab::IAEndomorphism &phi) {
  if (opt.json_mode()) {
    std::cout << metab::endo_to_json(phi).dump() << '\n';
  } else {
    for (int j = 0; j < phi.config().rank; ++j)
      std::cout << 'y' << (j + 1) << " -> " << phi.image(j).str() << '\n';
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Automorphism calculus for free metabelian nilpotent Lie "
               "algebras L_{m,c}"};
  Options opt;
  app.add_option("--rank", opt.rank, "rank m (>= 2)")
      ->required()
      ->check(CLI::Range(2, 16));
  app.add_option("--class", opt.nil_class, "nilpotency class c (>= 2)")
      ->required()
      ->check(CLI::Range(2, 32));
  app.add_option("--output", opt.output, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.require_subcommand(1);

  std::string expr_a, expr_b, phi_src, psi_src;

  auto *cmd_normalize = app.add_subcommand("normalize", "normal form of an expression");
  cmd_normalize->add_option("expr", expr_a)->required();
  auto *cmd_bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  cmd_bracket->add_option("lhs", expr_a)->required();
  cmd_bracket->add_option("rhs", expr_b)->required();
  auto *cmd_embed = app.add_subcommand("embed", "wreath-product image");
  cmd_embed->add_option("expr", expr_a)->required();
  auto *cmd_partials = app.add_subcommand("partials", "partial derivatives");
  cmd_partials->add_option("expr", expr_a)->required();
  auto *cmd_jacobian = app.add_subcommand("jacobian", "Jacobian matrix of an IA-endomorphism");
  cmd_jacobian->add_option("--phi", phi_src)->required();
  auto *cmd_exp_ad = app.add_subcommand("exp-ad", "inner automorphism exp(ad u)");
  cmd_exp_ad->add_option("expr", expr_a)->required();
  auto *cmd_inner_j = app.add_subcommand("inner-jacobian", "closed-form Jacobian of exp(ad u)");
  cmd_inner_j->add_option("expr", expr_a)->required();
  auto *cmd_bch = app.add_subcommand("bch", "w with exp(ad w) = exp(ad u) exp(ad v)");
  cmd_bch->add_option("lhs", expr_a)->required();
  cmd_bch->add_option("rhs", expr_b)->required();
  auto *cmd_table = app.add_subcommand("gerritzen-table", "coefficients of the BCH series c(t,u)");
  auto *cmd_compose = app.add_subcommand("compose", "composition (phi psi)(x) = phi(psi(x))");
  cmd_compose->add_option("--phi", phi_src)->required();
  cmd_compose->add_option("--psi", psi_src)->required();
  auto *cmd_inverse = app.add_subcommand("inverse", "inverse automorphism");
  cmd_inverse->add_option("--phi", phi_src)->required();
  auto *cmd_reduce = app.add_subcommand("reduce", "canonical outer-coset representative");
  cmd_reduce->add_option("--psi", psi_src)->required();
  auto *cmd_is_inner = app.add_subcommand("is-inner", "decide membership in Inn");
  cmd_is_inner->add_option("--psi", psi_src)->required();
  auto *cmd_same_coset = app.add_subcommand("same-coset", "decide same Inn-coset");
  cmd_same_coset->add_option("--psi", psi_src)->required();
  cmd_same_coset->add_option("--phi", phi_src)->required();

  // let the global flags appear after the subcommand as well
  for (CLI::App *sub : app.get_subcommands(nullptr))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() != 0)
      std::cerr << e.what() << '\n';
    else
      return app.exit(e); // --help
    return 1;
  }

  try {
    metab::AlgebraConfig cfg(opt.rank, opt.nil_class);

    if (cmd_normalize->parsed()) {
      print_result(opt, metab::parse_lie(expr_a, cfg).str());
    } else if (cmd_bracket->parsed()) {
      print_result(opt, metab::bracket(metab::parse_lie(expr_a, cfg),
                                       metab::parse_lie(expr_b, cfg))
                            .str());
    } else if (cmd_embed->parsed()) {
      metab::WreathElement w = metab::embed(metab::parse_lie(expr_a, cfg));
      json b = json::array(), a = json::array();
      for (int i = 0; i < cfg.rank; ++i) {
        b.push_back(metab::to_string(w.b_coords[static_cast<std::size_t>(i)]));
        a.push_back(w.a_coords[static_cast<std::size_t>(i)].str());
      }
      if (opt.json_mode()) {
        std::cout << json{{"b", b}, {"a", a}}.dump() << '\n';
      } else {
        for (int i = 0; i < cfg.rank; ++i)
          std::cout << 'b' << (i + 1) << " = "
                    << b[static_cast<std::size_t>(i)].get<std::string>()
                    << '\n';
        for (int i = 0; i < cfg.rank; ++i)
          std::cout << 'a' << (i + 1) << " = "
                    << a[static_cast<std::size_t>(i)].get<std::string>()
                    << '\n';
      }
    } else if (cmd_partials->parsed()) {
      auto ps = metab::partials(metab::parse_lie(expr_a, cfg));
      if (opt.json_mode()) {
        json arr = json::array();
        for (const auto &p : ps)
          arr.push_back(p.str());
        std::cout << arr.dump() << '\n';
      } else {
        for (int i = 0; i < cfg.rank; ++i)
          std::cout << "d/dy" << (i + 1) << ": "
                    << ps[static_cast<std::size_t>(i)].str() << '\n';
      }
    } else if (cmd_jacobian->parsed()) {
      print_matrix(metab::jacobian(metab::endo_from_json(phi_src, cfg)));
    } else if (cmd_exp_ad->parsed()) {
      print_endo(opt, metab::exp_ad(metab::parse_lie(expr_a, cfg)).expansion);
    } else if (cmd_inner_j->parsed()) {
      print_matrix(metab::inner_jacobian(metab::parse_lie(expr_a, cfg)));
    } else if (cmd_bch->parsed()) {
      print_result(opt, metab::bch_compose(metab::parse_lie(expr_a, cfg),
                                           metab::parse_lie(expr_b, cfg))
                            .str());
    } else if (cmd_table->parsed()) {
      metab::BchSeries s = metab::gerritzen_c(cfg.quad_cap());
      if (opt.json_mode()) {
        json obj = json::object();
        for (const auto &[m, c] : s.series.terms())
          obj[m.str()] = metab::to_string(c);
        std::cout << obj.dump() << '\n';
      } else {
        for (const auto &[m, c] : s.series.terms())
          std::cout << m.str() << ": " << metab::to_string(c) << '\n';
      }
    } else if (cmd_compose->parsed()) {
      print_endo(opt, metab::compose(metab::endo_from_json(phi_src, cfg),
                                     metab::endo_from_json(psi_src, cfg)));
    } else if (cmd_inverse->parsed()) {
      print_endo(opt, metab::inverse(metab::endo_from_json(phi_src, cfg)));
    } else if (cmd_reduce->parsed()) {
      metab::ReductionTrace trace =
          metab::reduce(metab::endo_from_json(psi_src, cfg));
      json doc = metab::trace_to_json(trace);
      std::cout << (opt.json_mode() ? doc.dump() : doc.dump(2)) << '\n';
    } else if (cmd_is_inner->parsed()) {
      auto v = metab::is_inner(metab::endo_from_json(psi_src, cfg));
      json doc{{"inner", v.has_value()}};
      if (v)
        doc["generator"] = v->str();
      std::cout << doc.dump() << '\n';
    } else if (cmd_same_coset->parsed()) {
      bool same = metab::same_coset(metab::endo_from_json(psi_src, cfg),
                                    metab::endo_from_json(phi_src, cfg));
      std::cout << json{{"same_coset", same}}.dump() << '\n';
    }
  } catch (const metab::ParseError &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const metab::DomainError &e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const metab::InternalError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
