// Copyright 2026 The gamble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: one subcommand per figure plus per-model query
// commands.  Every run is fully determined by (subcommand, parameters, seed,
// reps); CSV output carries a `# seed=... reps=...` reproducibility header.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gamble/figures.hpp"
#include "gamble/gamble.hpp"
#include "gamble/svg.hpp"

namespace {

using gamble::figures::detail::num;

struct Common {
  std::uint64_t seed = 12345;
  std::uint64_t reps = 100000;
  double tol = 1e-9;
  std::string out;     // empty = stdout
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& c, std::uint64_t default_reps) {
  c.reps = default_reps;
  cmd->add_option("--seed", c.seed, "Random seed")
      ->envname("GAMBLE_SEED")
      ->capture_default_str();
  cmd->add_option("--reps", c.reps, "Monte Carlo replications")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--tol", c.tol, "Quadrature absolute/relative tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--out", c.out,
                  "Output file (default stdout; relative paths resolve "
                  "against $GAMBLE_OUT_DIR when set)");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
}

std::string resolve_out(const std::string& out) {
  if (out.empty() || out.front() == '/') return out;
  if (const char* dir = std::getenv("GAMBLE_OUT_DIR"))
    return std::string(dir) + "/" + out;
  return out;
}

void emit(const Common& c, const std::string& csv, const std::string& title) {
  const std::string body =
      c.format == "svg" ? gamble::svg::line_plot_from_csv(csv, title) : csv;
  const std::string path = resolve_out(c.out);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << body;
}

void meta(std::ostringstream& os, const Common& c, const std::string& params) {
  gamble::figures::detail::meta_line(os, c.seed, c.reps, params);
}

gamble::QuadratureSpec spec_from(const Common& c) {
  gamble::QuadratureSpec s;
  s.abs_tol = c.tol;
  s.rel_tol = c.tol;
  return s;
}

// ---------------------------------------------------------------------------
// Per-model query commands.

void run_bet(const Common& c, double p, double sa, double sb, double kappa,
             double corr) {
  using namespace gamble;
  const RngStream stream(c.seed, 1);
  const MeanSE r = gentlemans_bet::simulate_expected_gain(
      Probability(p), ErrorModel::normal(sa), ErrorModel::normal(sb), kappa,
      c.reps, stream, corr);
  const double exact = gentlemans_bet::expected_gain_analytic(sa, sb, kappa);
  std::ostringstream os;
  meta(os, c,
       "p=" + num(p) + " sigma_A=" + num(sa) + " sigma_B=" + num(sb) +
           " kappa=" + num(kappa) + " corr=" + num(corr));
  os << "mean_gain_A,se,analytic\n"
     << num(r.mean) << "," << num(r.std_error) << "," << num(exact) << "\n";
  emit(c, os.str(), "two-person bet");
}

void run_bookie(const Common& c, double p_true, double p_gamb, double L,
                double kappa, double sigma, const std::string& policy) {
  using namespace gamble;
  const bookmaker::GamblerPopulation pop(Probability(p_gamb), L, kappa);
  const bookmaker::BookmakerBelief belief(Probability(p_true), sigma);
  bookmaker::Policy pol = bookmaker::Policy::NoisyYStar;
  if (policy == "known") pol = bookmaker::Policy::KnownP;
  if (policy == "symmetric") pol = bookmaker::Policy::SymmetricConsensus;
  const RngStream stream(c.seed, 2);
  const MeanSE sim = bookmaker::simulate_bookmaker(Probability(p_true), pop,
                                                   belief, pol, c.reps, stream);
  const double u = sigma * sigma / (L * L);
  std::ostringstream os;
  meta(os, c,
       "p_true=" + num(p_true) + " p_gamb=" + num(p_gamb) + " L=" + num(L) +
           " kappa=" + num(kappa) + " sigma=" + num(sigma) +
           " policy=" + policy);
  os << "sim_gain,se,y_star,gain_known_p,gain_symmetric,h_u\n";
  os << num(sim.mean) << "," << num(sim.std_error) << ","
     << num(bookmaker::y_star(sigma, L)) << ","
     << num(bookmaker::gain_known_p(p_gamb - p_true, L, kappa)) << ","
     << num(bookmaker::optimal_symmetric(pop).gain) << ","
     << num(u <= 1.0 / 9.0 ? bookmaker::h(u) : std::nan("")) << "\n";
  emit(c, os.str(), "bookmaker");
}

void run_skill(const Common& c, double sa, double sb, const std::string& zeta) {
  using namespace gamble;
  const skill_game::ZetaDist z = zeta == "uniform"
                                     ? skill_game::ZetaDist::UniformStd
                                     : skill_game::ZetaDist::NormalStd;
  const skill_game::SkillPerception perc(sa, sb, z);
  const double exact = skill_game::expected_gain(perc, spec_from(c));
  const double w = skill_game::detail::default_window(perc);
  const RngStream stream(c.seed, 3);
  const MeanSE sim = skill_game::simulate_match_rate(perc, w, c.reps, stream);
  std::ostringstream os;
  meta(os, c,
       "sigma_A=" + num(sa) + " sigma_B=" + num(sb) + " zeta=" + zeta);
  os << "gain_rate,sim_rate,se\n"
     << num(exact) << "," << num(sim.mean) << "," << num(sim.std_error) << "\n";
  emit(c, os.str(), "skill game");
}

void run_kelly(const Common& c, double delta, double sigma) {
  using namespace gamble;
  const kelly::KellySetting setting(delta, sigma);
  const RngStream stream(c.seed, 4);
  const MeanSE sim = kelly::simulate_expected_growth(setting, c.reps, stream);
  std::ostringstream os;
  meta(os, c, "delta=" + num(delta) + " sigma=" + num(sigma));
  os << "expected_growth,sim_growth,se\n"
     << num(kelly::expected_growth(setting)) << "," << num(sim.mean) << ","
     << num(sim.std_error) << "\n";
  emit(c, os.str(), "kelly growth");
}

void run_duel(const Common& c, double rho_a, double rho_b, double sa, double sb,
              const std::string& method) {
  using namespace gamble;
  const duel::Method m =
      method == "mc" ? duel::Method::MonteCarlo : duel::Method::Quadrature;
  const RngStream stream(c.seed, 5);
  const MeanSE r =
      duel::expected_win_prob(rho_a, rho_b, ErrorModel::normal(sa),
                              ErrorModel::normal(sb), m, c.reps, stream,
                              spec_from(c));
  std::ostringstream os;
  meta(os, c,
       "rho_A=" + num(rho_a) + " rho_B=" + num(rho_b) + " sigma_A=" + num(sa) +
           " sigma_B=" + num(sb) + " method=" + method);
  os << "win_prob_A,se,win_prob_known\n"
     << num(r.mean) << "," << num(r.std_error) << ","
     << num(duel::win_prob_known(rho_a, rho_b)) << "\n";
  emit(c, os.str(), "duel");
}

void run_evt(const Common& c, const std::string& mode, double sigma) {
  using namespace gamble;
  const RngStream stream(c.seed, 6);
  std::ostringstream os;
  meta(os, c, "mode=" + mode + " sigma=" + num(sigma));
  if (mode == "topgap") {
    const MeanSE r = extreme_value::simulate_top_gap(c.reps, stream);
    os << "mean_gap,se,exact\n"
       << num(r.mean) << "," << num(r.std_error) << ","
       << num(extreme_value::mean_top_gap()) << "\n";
  } else if (mode == "cost") {
    const MeanSE r = extreme_value::simulate_choice_cost(sigma, c.reps, stream);
    os << "mean_cost,se\n" << num(r.mean) << "," << num(r.std_error) << "\n";
  } else if (mode == "integral") {
    const double v = extreme_value::choice_cost_integral(sigma, spec_from(c));
    os << "mean_cost_integral\n" << num(v) << "\n";
  } else {  // auction
    const extreme_value::AuctionSummary r =
        extreme_value::simulate_auction(sigma, c.reps, stream);
    os << "mean_sealed,se_sealed,mean_vickrey,se_vickrey\n"
       << num(r.mean_sealed) << "," << num(r.se_sealed) << ","
       << num(r.mean_vickrey) << "," << num(r.se_vickrey) << "\n";
  }
  emit(c, os.str(), "extreme value: " + mode);
}

void run_tournament(const Common& c, std::uint64_t n, double rms_you,
                    double rms_rival, const std::string& score_file) {
  using namespace gamble;
  std::ostringstream os;
  if (!score_file.empty()) {
    std::ifstream f(score_file);
    if (!f) throw std::runtime_error("cannot open score file: " + score_file);
    const tournament::FileScore s = tournament::score_records(f);
    meta(os, c, "file=" + score_file);
    os << "total_score,n_records,mean_score\n"
       << num(s.total) << "," << s.n << ","
       << num(s.n ? s.total / static_cast<double>(s.n) : 0.0) << "\n";
    emit(c, os.str(), "forecast file score");
    return;
  }
  const RngStream stream(c.seed, 7);
  const MeanSE r = tournament::simulate_tournament(
      n, tournament::ContestantModel::normal(rms_you),
      tournament::ContestantModel::normal(rms_rival),
      [](RngStream& rng) { return rng.uniform(0.2, 0.8); }, c.reps, stream);
  meta(os, c,
       "n=" + std::to_string(n) + " rms_you=" + num(rms_you) +
           " rms_rival=" + num(rms_rival));
  os << "win_prob_sharper,se\n"
     << num(r.mean) << "," << num(r.std_error) << "\n";
  emit(c, os.str(), "prediction tournament");
}

void run_nature(const Common& c, double a, double b, double d_util, double e,
                double p_true, double sigma) {
  using namespace gamble;
  const nature::UtilityQuad theta(a, b, d_util, e);
  const RngStream stream(c.seed, 8);
  const MeanSE r = nature::expected_cost(Probability(p_true),
                                         ErrorModel::normal(sigma), theta,
                                         c.reps, stream);
  std::ostringstream os;
  meta(os, c,
       "a=" + num(a) + " b=" + num(b) + " c=" + num(d_util) + " d=" + num(e) +
           " p_true=" + num(p_true) + " sigma=" + num(sigma));
  os << "p_crit,mean_cost,se\n"
     << num(nature::p_crit(theta).value()) << "," << num(r.mean) << ","
     << num(r.std_error) << "\n";
  emit(c, os.str(), "bet against nature");
}

// ---------------------------------------------------------------------------
// JSON config (mirrors RunConfig): {"subcommand": ..., "parameters": {...},
// "seed": ..., "reps": ..., "output_path": ..., "format": ...}.  Values are
// re-expressed as command-line tokens and re-parsed, so both entry points
// share one code path.

std::vector<std::string> args_from_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  f >> j;
  std::vector<std::string> args;
  args.push_back(j.at("subcommand").get<std::string>());
  if (j.contains("parameters"))
    for (const auto& [k, v] : j.at("parameters").items()) {
      if (v.is_array()) {
        for (const auto& item : v) {
          args.push_back("--" + k);
          args.push_back(item.is_string() ? item.get<std::string>()
                                          : item.dump());
        }
      } else {
        args.push_back("--" + k);
        args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
  for (const char* key : {"seed", "reps", "tol", "format"})
    if (j.contains(key)) {
      args.push_back(std::string("--") + key);
      args.push_back(j.at(key).is_string() ? j.at(key).get<std::string>()
                                           : j.at(key).dump());
    }
  if (j.contains("output_path")) {
    args.push_back("--out");
    args.push_back(j.at("output_path").get<std::string>());
  }
  return args;
}

int run_app(const std::vector<std::string>& raw_args);

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (args.size() >= 1 && args[0] == "--config") {
      if (args.size() != 2) {
        std::cerr << "--config requires exactly one file argument\n";
        return 1;
      }
      return run_app(args_from_config(args[1]));
    }
    return run_app(args);
  } catch (const gamble::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

namespace {

int run_app(const std::vector<std::string>& raw_args) {
  CLI::App app{
      "Reproduces the gambling-under-unknown-probabilities models: figure "
      "CSVs and per-model queries"};
  app.require_subcommand(1);

  // Figure subcommands -------------------------------------------------
  Common c2l;
  int f2l_points = 45;
  auto* fig2_left = app.add_subcommand(
      "fig2-left", "Bookmaker gain curve h(u) vs normalized error");
  add_common(fig2_left, c2l, 1);
  fig2_left->add_option("--points", f2l_points, "Grid points on [0, 1/9]")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  fig2_left->callback([&] {
    emit(c2l,
         gamble::figures::fig2_left(
             gamble::figures::detail::linspace(0.0, 1.0 / 9.0, f2l_points)),
         "bookmaker gain h(u)");
  });

  Common c2r;
  std::vector<double> f2r_u = gamble::figures::fig2_right_default_u();
  int f2r_points = 41;
  auto* fig2_right = app.add_subcommand(
      "fig2-right", "Bookmaker mismatch curves h*(u, r) vs gambler bias");
  add_common(fig2_right, c2r, 1);
  fig2_right->add_option("--u", f2r_u, "Normalized error values u")
      ->capture_default_str();
  fig2_right->add_option("--points", f2r_points, "Grid points on r in [-1, 1]")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  fig2_right->callback([&] {
    emit(c2r,
         gamble::figures::fig2_right(
             f2r_u, gamble::figures::detail::linspace(-1.0, 1.0, f2r_points)),
         "bookmaker mismatch h*(u, r)");
  });

  Common c3;
  std::vector<double> f3_sa = gamble::figures::fig3_default_sigma_A();
  double f3_sb_max = 2.0;
  int f3_points = 41;
  auto* fig3 = app.add_subcommand(
      "fig3", "Skill-game gain to A vs opponent error");
  add_common(fig3, c3, 1);
  fig3->add_option("--sigma-a", f3_sa, "Values of sigma_A (one curve each)")
      ->capture_default_str();
  fig3->add_option("--sigma-b-max", f3_sb_max, "Upper end of the sigma_B grid")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig3->add_option("--points", f3_points, "Grid points")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  fig3->callback([&] {
    emit(c3,
         gamble::figures::fig3(
             f3_sa, gamble::figures::detail::linspace(0.0, f3_sb_max, f3_points)),
         "skill game gain to A");
  });

  Common c4;
  std::vector<double> f4_sigma = gamble::figures::fig4_default_sigma();
  double f4_dmax = 0.15;
  int f4_points = 61;
  auto* fig4 = app.add_subcommand("fig4", "Kelly expected growth vs true edge");
  add_common(fig4, c4, 1);
  fig4->add_option("--sigma", f4_sigma, "Perception error values (one curve each)")
      ->capture_default_str();
  fig4->add_option("--delta-max", f4_dmax, "Grid spans [-delta-max, delta-max]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fig4->add_option("--points", f4_points, "Grid points")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  fig4->callback([&] {
    emit(c4,
         gamble::figures::fig4(
             f4_sigma,
             gamble::figures::detail::linspace(-f4_dmax, f4_dmax, f4_points)),
         "kelly expected growth");
  });

  Common c5;
  std::vector<double> f5_sigma = gamble::figures::fig5_default_sigma();
  auto* fig5 = app.add_subcommand(
      "fig5", "Mean cost of choosing the best item vs perception error");
  add_common(fig5, c5, 100);
  fig5->add_option("--sigma", f5_sigma, "Perception error grid")
      ->capture_default_str();
  fig5->callback([&] {
    emit(c5, gamble::figures::fig5(f5_sigma, c5.reps, c5.seed),
         "choice cost vs sigma");
  });

  Common c6;
  std::vector<double> f6_sigma = gamble::figures::fig6_default_sigma();
  auto* fig6 = app.add_subcommand(
      "fig6", "Mean auction gain vs perception error, both protocols");
  add_common(fig6, c6, 100);
  fig6->add_option("--sigma", f6_sigma, "Perception error grid")
      ->capture_default_str();
  fig6->callback([&] {
    emit(c6, gamble::figures::fig6(f6_sigma, c6.reps, c6.seed),
         "auction gain vs sigma");
  });

  // Per-model query subcommands ----------------------------------------
  Common cb;
  double bet_p = 0.5, bet_sa = 0.05, bet_sb = 0.1, bet_kappa = 1.0,
         bet_corr = 0.0;
  auto* bet = app.add_subcommand("bet", "Two-person bet at the midpoint price");
  add_common(bet, cb, 100000);
  bet->add_option("--p", bet_p, "True probability")->capture_default_str();
  bet->add_option("--sigma-a", bet_sa, "A's perception error")->capture_default_str();
  bet->add_option("--sigma-b", bet_sb, "B's perception error")->capture_default_str();
  bet->add_option("--kappa", bet_kappa, "Affluence")->capture_default_str();
  bet->add_option("--corr", bet_corr, "Error correlation (Gaussian copula)")
      ->capture_default_str();
  bet->callback([&] { run_bet(cb, bet_p, bet_sa, bet_sb, bet_kappa, bet_corr); });

  Common cbk;
  double bk_p = 0.5, bk_g = 0.5, bk_L = 0.1, bk_kappa = 1.0, bk_sigma = 0.02;
  std::string bk_policy = "noisy";
  auto* bookie = app.add_subcommand("bookie", "Bookmaker spread and mean gain");
  add_common(bookie, cbk, 100000);
  bookie->add_option("--p-true", bk_p, "True probability")->capture_default_str();
  bookie->add_option("--p-gamb", bk_g, "Gambler consensus")->capture_default_str();
  bookie->add_option("--half-width", bk_L, "Gambler spread half-width L")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bookie->add_option("--kappa", bk_kappa, "Aggregate affluence")->capture_default_str();
  bookie->add_option("--sigma", bk_sigma, "Bookmaker belief error")->capture_default_str();
  bookie->add_option("--policy", bk_policy, "Interval policy")
      ->check(CLI::IsMember({"known", "symmetric", "noisy"}))
      ->capture_default_str();
  bookie->callback([&] {
    run_bookie(cbk, bk_p, bk_g, bk_L, bk_kappa, bk_sigma, bk_policy);
  });

  Common cs;
  double sk_sa = 0.5, sk_sb = 1.0;
  std::string sk_zeta = "normal";
  auto* skill = app.add_subcommand(
      "skill", "Skill-game gain rate to A under misperceived abilities");
  add_common(skill, cs, 100000);
  skill->add_option("--sigma-a", sk_sa, "A's perception error")->capture_default_str();
  skill->add_option("--sigma-b", sk_sb, "B's perception error")->capture_default_str();
  skill->add_option("--zeta", sk_zeta, "Willingness-noise distribution")
      ->check(CLI::IsMember({"normal", "uniform"}))
      ->capture_default_str();
  skill->callback([&] { run_skill(cs, sk_sa, sk_sb, sk_zeta); });

  Common ck;
  double k_delta = 0.05, k_sigma = 0.05;
  auto* kelly = app.add_subcommand("kelly", "Kelly growth under edge misperception");
  add_common(kelly, ck, 1000000);
  kelly->add_option("--delta", k_delta, "True edge")->capture_default_str();
  kelly->add_option("--sigma", k_sigma, "Edge perception error")->capture_default_str();
  kelly->callback([&] { run_kelly(ck, k_delta, k_sigma); });

  Common cd;
  double d_ra = 2.0, d_rb = 3.0, d_sa = 0.1, d_sb = 0.1;
  std::string d_method = "quad";
  auto* duel = app.add_subcommand("duel", "Duel win probability with misjudged accuracy");
  add_common(duel, cd, 100000);
  duel->add_option("--rho-a", d_ra, "A's accuracy parameter")->capture_default_str();
  duel->add_option("--rho-b", d_rb, "B's accuracy parameter")->capture_default_str();
  duel->add_option("--sigma-a", d_sa, "A's error about B")->capture_default_str();
  duel->add_option("--sigma-b", d_sb, "B's error about A")->capture_default_str();
  duel->add_option("--method", d_method, "Evaluation method")
      ->check(CLI::IsMember({"quad", "mc"}))
      ->capture_default_str();
  duel->callback([&] { run_duel(cd, d_ra, d_rb, d_sa, d_sb, d_method); });

  Common ce;
  std::string e_mode = "cost";
  double e_sigma = 0.25;
  auto* evt = app.add_subcommand(
      "evt", "Extreme-value models: top gap, choice cost, auctions");
  add_common(evt, ce, 10000);
  evt->add_option("--mode", e_mode, "Quantity to compute")
      ->check(CLI::IsMember({"topgap", "cost", "integral", "auction"}))
      ->capture_default_str();
  evt->add_option("--sigma", e_sigma, "Perception error")->capture_default_str();
  evt->callback([&] { run_evt(ce, e_mode, e_sigma); });

  Common ct;
  std::uint64_t t_n = 100;
  double t_you = 0.15, t_rival = 0.20;
  std::string t_file;
  auto* tour = app.add_subcommand(
      "tournament", "Prediction-tournament win probability / file scoring");
  add_common(tour, ct, 100000);
  tour->add_option("--n", t_n, "Questions per tournament")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tour->add_option("--rms-you", t_you, "Your RMS forecast error")->capture_default_str();
  tour->add_option("--rms-rival", t_rival, "Rival RMS forecast error")
      ->capture_default_str();
  tour->add_option("--score-file", t_file,
                   "Score a resolved q,outcome CSV instead of simulating");
  tour->callback([&] { run_tournament(ct, t_n, t_you, t_rival, t_file); });

  Common cn;
  double n_a = 4.0, n_b = 0.0, n_c = 1.0, n_d = 3.0, n_p = 0.4, n_sigma = 0.05;
  auto* nat = app.add_subcommand(
      "nature", "Two-action decision against nature: critical probability and cost");
  add_common(nat, cn, 100000);
  nat->add_option("--a", n_a, "Utility of A without rain")->capture_default_str();
  nat->add_option("--b", n_b, "Utility of A with rain")->capture_default_str();
  nat->add_option("--c", n_c, "Utility of B without rain")->capture_default_str();
  nat->add_option("--d", n_d, "Utility of B with rain")->capture_default_str();
  nat->add_option("--p-true", n_p, "True rain probability")->capture_default_str();
  nat->add_option("--sigma", n_sigma, "Perception error")->capture_default_str();
  nat->callback([&] { run_nature(cn, n_a, n_b, n_c, n_d, n_p, n_sigma); });

  std::vector<std::string> args(raw_args.rbegin(), raw_args.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return 0;
}

}  // namespace
