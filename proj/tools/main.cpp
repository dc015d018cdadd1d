#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "crownforge/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"crownforge: permutation groups, chief series, crowns and generator counts"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");

  std::function<cli::Outcome()> run;
  std::string group, seq, h, k, l, socle;
  std::size_t d = 2, m = 1;
  std::uint64_t seed = 1, budget = 20000, k0 = 60, c = 1;
  std::optional<std::uint64_t> mc, caut;
  std::optional<std::size_t> d_opt, m_opt;
  bool exact = false;

  auto* pgen = app.add_subcommand("pgen", "Probability that d random elements generate G");
  pgen->add_option("--group", group, "Group file or built-in name")->required();
  pgen->add_option("-d", d, "Tuple size")->required();
  pgen->add_flag("--exact", exact, "Exhaustive count (default)");
  pgen->add_option("--mc", mc, "Monte Carlo with this many trials");
  pgen->add_option("--seed", seed);
  pgen->callback([&] { run = [&] { return cli::pgen(group, d, exact, mc, seed); }; });

  auto* dmin = app.add_subcommand("dmin", "Bounds for the minimal number of generators");
  dmin->add_option("--group", group)->required();
  dmin->add_option("--budget", budget);
  dmin->add_option("--seed", seed);
  dmin->callback([&] { run = [&] { return cli::dmin(group, budget, seed); }; });

  auto* cut = app.add_subcommand("crownpow-cutoff", "Largest t with d(L_t) <= d");
  cut->add_option("--L", l)->required();
  cut->add_option("--socle", socle)->required();
  cut->add_option("-d", d)->required();
  cut->add_option("--caut", caut, "|C_Aut(L)(L/N)|; taken from the simple-group table when N = L");
  cut->add_option("--seed", seed);
  cut->callback([&] { run = [&] { return cli::crownpow_cutoff(l, socle, d, caut, seed); }; });

  auto* seqc = app.add_subcommand("seq", "Sequence files")->require_subcommand(1);
  auto* validate = seqc->add_subcommand("validate");
  validate->add_option("--seq", seq)->required();
  validate->callback([&] { run = [&] { return cli::seq_validate(seq); }; });
  auto* trace = seqc->add_subcommand("rank-trace");
  trace->add_option("--seq", seq)->required();
  trace->add_option("-m", m_opt);
  trace->callback([&] { run = [&] { return cli::seq_rank_trace(seq, m_opt); }; });

  auto* tower = app.add_subcommand("tower", "Iterated wreath products W_m")->require_subcommand(1);
  for (const char* name : {"build", "chief", "crowns"}) {
    auto* sub = tower->add_subcommand(name);
    sub->add_option("--seq", seq)->required();
    sub->add_option("-m", m)->required();
    sub->add_option("--seed", seed);
    const std::string which = name;
    sub->callback([&, which] {
      run = [&, which] {
        if (which == "build") return cli::tower_build(seq, m);
        if (which == "chief") return cli::tower_chief(seq, m, seed);
        return cli::tower_crowns(seq, m, seed);
      };
    });
  }

  auto* verify = app.add_subcommand("verify", "Inequality checks")->require_subcommand(1);
  auto* vmain = verify->add_subcommand("main", "d(W_m) against E + d(prod Gbar_i)");
  vmain->add_option("--seq", seq)->required();
  vmain->add_option("--d", d, "The constant D of condition (ii)")->required();
  vmain->add_option("--k0", k0);
  vmain->add_option("-m", m)->required();
  vmain->add_option("--seed", seed);
  vmain->add_option("--budget", budget);
  vmain->callback([&] { run = [&] { return cli::verify_main(seq, d, k0, m, seed, budget); }; });
  auto* vchief = verify->add_subcommand("chief", "Chief factors of H wr K");
  vchief->add_option("--H", h)->required();
  vchief->add_option("--K", k)->required();
  vchief->add_option("--seed", seed);
  vchief->callback([&] { run = [&] { return cli::verify_chief(h, k, seed); }; });
  auto* vh = verify->add_subcommand("hbounds", "h values of W_m against the module bounds");
  vh->add_option("--seq", seq)->required();
  vh->add_option("-m", m)->required();
  vh->add_option("--k0", k0);
  vh->add_option("--d", d_opt);
  vh->add_option("--seed", seed);
  vh->add_option("--budget", budget);
  vh->callback([&] { run = [&] { return cli::verify_hbounds(seq, m, k0, d_opt, seed, budget); }; });
  auto* vpfg = verify->add_subcommand("pfg", "delta_{G_i}(A) <= l(A)^(c n_1...n_(i-1))");
  vpfg->add_option("--seq", seq)->required();
  vpfg->add_option("--c", c)->required();
  vpfg->add_option("-m", m)->required();
  vpfg->add_option("--seed", seed);
  vpfg->callback([&] { run = [&] { return cli::verify_pfg(seq, c, m, seed); }; });
  auto* vw = verify->add_subcommand("wreath", "Generator bounds for H wr K");
  vw->add_option("--H", h)->required();
  vw->add_option("--K", k)->required();
  vw->add_option("--k0", k0);
  vw->add_option("--seed", seed);
  vw->add_option("--budget", budget);
  vw->callback([&] { run = [&] { return cli::verify_wreath(h, k, k0, seed, budget); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  cli::Outcome outcome;
  try {
    outcome = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = outcome.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    f << text;
  }
  return outcome.violated ? 2 : 0;
}
