// k3iso: command-line front-end for the rank-2 polarized K3 decision library.

#include <algorithm>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "k3iso/enumerate.hpp"
#include "k3iso/json_io.hpp"
#include "k3iso/lattice.hpp"
#include "k3iso/mukai.hpp"
#include "k3iso/numeric.hpp"
#include "k3iso/oracle.hpp"
#include "k3iso/pell.hpp"
#include "k3iso/picard2.hpp"

namespace {

using namespace k3iso;

std::string slurp_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

Vec vec_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  Vec v;
  for (const auto& e : j) v.push_back(int_from_json(e));
  return v;
}

Mat mat_from_text(const std::string& raw) {
  std::string text = (raw == "-") ? slurp_stdin() : raw;
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("gram: expected a JSON matrix");
  Mat m;
  for (const auto& row : j) m.push_back(vec_from_json(row));
  return m;
}

Vec vec_from_text(const std::string& text) {
  return vec_from_json(nlohmann::json::parse(text));
}

std::vector<std::pair<Int, Int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<Int, Int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto comma = item.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("pairs: expected x,y;x,y;...");
    out.emplace_back(Int(item.substr(0, comma)), Int(item.substr(comma + 1)));
  }
  if (out.empty()) throw std::invalid_argument("pairs: empty list");
  return out;
}

void emit(const nlohmann::json& j) { std::cout << dump_json(j); }

struct ModelFlags {
  std::string a, d, mu, gram, h;

  void attach(CLI::App* cmd, bool with_gram) {
    cmd->add_option("--a", a, "degree invariant a (H^2 = 2a^2)");
    cmd->add_option("--d", d, "positive discriminant d");
    cmd->add_option("--mu", mu, "unit class mu mod 2a^2");
    if (with_gram) {
      cmd->add_option("--gram", gram,
                      "Gram matrix as JSON ('-' reads standard input)");
      cmd->add_option("--h", h, "polarization coordinates as JSON");
    }
  }

  PolarizedRank2 resolve() const {
    if (!gram.empty() || !h.empty()) {
      if (gram.empty() || h.empty())
        throw std::invalid_argument("--gram and --h must be given together");
      GramLattice L = GramLattice::from(mat_from_text(gram));
      return invariants_from(L, vec_from_text(h)).invariants;
    }
    if (a.empty() || d.empty() || mu.empty())
      throw std::invalid_argument("provide --a, --d, --mu (or --gram with --h)");
    return PolarizedRank2::make(Int(a), Int(d), Int(mu));
  }
};

std::vector<DivisorLabel> merge_labels(std::vector<std::vector<DivisorLabel>> parts) {
  std::map<std::pair<Int, Int>, DivisorLabel> merged;
  for (auto& part : parts) {
    for (auto& label : part) {
      auto key = std::make_pair(label.d, label.mu);
      auto it = merged.find(key);
      if (it == merged.end()) {
        merged.emplace(key, std::move(label));
      } else {
        auto& wits = it->second.witnesses;
        wits.insert(wits.end(), label.witnesses.begin(), label.witnesses.end());
      }
    }
  }
  std::vector<DivisorLabel> out;
  for (auto& [key, label] : merged) {
    std::sort(label.witnesses.begin(), label.witnesses.end(),
              [](const WitnessPQ& lhs, const WitnessPQ& rhs) {
                return std::make_tuple(-lhs.alpha, lhs.q, lhs.p) <
                       std::make_tuple(-rhs.alpha, rhs.q, rhs.p);
              });
    out.push_back(std::move(label));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide X ~= Y for Mukai moduli of rank-2 polarized K3 surfaces"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit");
  auto sub = [&app](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help and exit");
    return cmd;
  };

  auto* cmd_decide = sub("decide", "decide whether Y(v) ~= X");
  ModelFlags decide_flags;
  decide_flags.attach(cmd_decide, true);
  std::string decide_q_bound = "0";
  bool json_flag = false;
  cmd_decide->add_option("--q-bound", decide_q_bound,
                         "also list witnesses with |q| up to this bound");
  cmd_decide->add_flag("--json", json_flag, "emit JSON (default)");

  auto* cmd_enum = sub("enumerate", "list divisorial conditions (d, +-mu)");
  std::string enum_a, enum_max_d, enum_mu;
  int enum_alpha = 0;
  std::string enum_format = "json";
  bool enum_parallel = false;
  int enum_threads = 0;
  cmd_enum->add_option("--a", enum_a, "degree invariant a")->required();
  cmd_enum->add_option("--max-d", enum_max_d, "largest discriminant to consider")->required();
  cmd_enum->add_option("--mu", enum_mu, "restrict to one unit class");
  cmd_enum->add_option("--alpha", enum_alpha, "restrict to one sign (+1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  cmd_enum->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  cmd_enum->add_flag("--parallel", enum_parallel, "enumerate d values in parallel");
  cmd_enum->add_option("--threads", enum_threads, "worker count for --parallel");

  auto* cmd_inv = sub("invariants", "recover (a, d, mu) from a Gram matrix");
  std::string inv_gram, inv_h;
  cmd_inv->add_option("--gram", inv_gram, "Gram matrix as JSON ('-' reads standard input)")
      ->required();
  cmd_inv->add_option("--h", inv_h, "polarization coordinates as JSON")->required();

  auto* cmd_pell = sub("solve-pell", "solve x^2 - d y^2 = n");
  std::string pell_d, pell_n, pell_mod, pell_pairs, pell_y_bound;
  cmd_pell->add_option("--d", pell_d, "Pell coefficient d > 0")->required();
  cmd_pell->add_option("--n", pell_n, "target value n")->required();
  cmd_pell->add_option("--mod", pell_mod, "congruence modulus for --pairs");
  cmd_pell->add_option("--pairs", pell_pairs, "allowed residues as x,y;x,y;...");
  cmd_pell->add_option("--y-bound", pell_y_bound, "list all solutions with |y| <= bound");

  auto* cmd_family = sub("family", "closed-form discriminant family");
  std::string fam_a, fam_mu, fam_tmin, fam_tmax;
  int fam_alpha = 1;
  cmd_family->add_option("--a", fam_a, "degree invariant a")->required();
  cmd_family->add_option("--mu", fam_mu, "unit class mu")->required();
  cmd_family->add_option("--alpha", fam_alpha, "sign (+1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  cmd_family->add_option("--t-min", fam_tmin, "smallest parameter t")->required();
  cmd_family->add_option("--t-max", fam_tmax, "largest parameter t")->required();

  auto* cmd_mukai = sub("mukai", "Mukai-side presentation for v = (a, H, a)");
  ModelFlags mukai_flags;
  mukai_flags.attach(cmd_mukai, true);

  auto* cmd_lift = sub("mu-lift", "lift nu mod 2a to mu mod 2a^2");
  std::string lift_a, lift_d, lift_nu;
  cmd_lift->add_option("--a", lift_a, "degree invariant a")->required();
  cmd_lift->add_option("--d", lift_d, "discriminant d")->required();
  cmd_lift->add_option("--nu", lift_nu, "square root of d mod 4a")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_decide->parsed()) {
      PolarizedRank2 P = decide_flags.resolve();
      Decision dec = decide(P, Int(decide_q_bound));
      emit(decision_to_json(dec, P.a));
      return dec.verdict ? 0 : 1;
    }

    if (cmd_enum->parsed()) {
      Int a(enum_a);
      Int max_d(enum_max_d);
      int threads = 1;
      if (enum_threads > 0) {
        threads = enum_threads;
      } else if (enum_parallel) {
        threads = std::max(2u, std::thread::hardware_concurrency());
      }

      std::vector<DivisorLabel> labels;
      if (!enum_mu.empty()) {
        Int mu = mu_class_min(Int(enum_mu), a);
        std::vector<std::vector<DivisorLabel>> parts;
        for (int alpha : {1, -1}) {
          if (enum_alpha != 0 && alpha != enum_alpha) continue;
          parts.push_back(enum_D(a, mu, alpha, max_d));
        }
        labels = merge_labels(std::move(parts));
      } else {
        labels = enum_div(a, max_d, threads);
        if (enum_alpha != 0) {
          std::vector<DivisorLabel> filtered;
          for (auto& label : labels) {
            std::vector<WitnessPQ> keep;
            for (auto& w : label.witnesses)
              if (w.alpha == enum_alpha) keep.push_back(w);
            if (!keep.empty()) {
              label.witnesses = std::move(keep);
              filtered.push_back(std::move(label));
            }
          }
          labels = std::move(filtered);
        }
      }

      if (enum_format == "tsv") {
        std::cout << enumeration_to_tsv(a, labels);
      } else {
        emit(enumeration_to_json(labels));
      }
      return 0;
    }

    if (cmd_inv->parsed()) {
      GramLattice L = GramLattice::from(mat_from_text(inv_gram));
      ModelFrame frame = invariants_from(L, vec_from_text(inv_h));
      emit(invariants_to_json(frame));
      return 0;
    }

    if (cmd_pell->parsed()) {
      Int d(pell_d);
      Int n(pell_n);
      if (!pell_mod.empty() || !pell_pairs.empty()) {
        if (pell_mod.empty() || pell_pairs.empty())
          throw std::invalid_argument("--mod and --pairs must be given together");
        Int mod(pell_mod);
        if (mod <= 0 || mod > Int(std::numeric_limits<long long>::max() / 4))
          throw std::invalid_argument("--mod out of range");
        PellConstraint cons = PellConstraint::residue_pairs(
            mod.convert_to<long long>(), parse_pairs(pell_pairs));
        emit(pell_solutions_to_json(find_constrained({d, n, cons})));
      } else if (!pell_y_bound.empty()) {
        emit(pell_solutions_to_json(solutions_up_to(d, n, Int(pell_y_bound))));
      } else {
        Int root;
        if (is_perfect_square(d, &root)) {
          emit(pell_solutions_to_json(solve_square_d(root, n)));
        } else {
          emit(pell_solutions_to_json(solve_norm_classes(d, n)));
        }
      }
      return 0;
    }

    if (cmd_family->parsed()) {
      emit(family_to_json(
          family(Int(fam_a), Int(fam_mu), fam_alpha, Int(fam_tmin), Int(fam_tmax))));
      return 0;
    }

    if (cmd_mukai->parsed()) {
      PolarizedRank2 P = mukai_flags.resolve();
      emit(mukai_report_to_json(P));
      return 0;
    }

    if (cmd_lift->parsed()) {
      Int a(lift_a);
      Int d(lift_d);
      Int nu(lift_nu);
      emit(mu_lift_to_json(a, d, nu, mu_lift(a, d, nu)));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cerr << "error: no subcommand\n";
  return 2;
}
