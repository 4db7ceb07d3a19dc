#include <CLI11.hpp>

#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "frontstab/commands.hpp"
#include "frontstab/config.hpp"
#include "frontstab/errors.hpp"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traveling fronts of a two-species ignition system: wave profiles, transversal "
               "stability and simulation"};
  app.set_version_flag("--version", std::string(frontstab::tool_version()));
  app.require_subcommand(1);
  std::string out = ".";

  std::optional<double> alpha, theta, xmin, xmax, omega_max, search_max;
  std::optional<int> n;
  auto* wave = app.add_subcommand("wave", "Closed-form traveling wave: wave.csv, constants.csv");
  wave->add_option("--alpha", alpha, "diffusivity ratio, > 0")->required();
  wave->add_option("--theta", theta, "ignition threshold in (0, 1)")->required();
  wave->add_option("--xmin", xmin, "left end of the sample window (default -5)");
  wave->add_option("--xmax", xmax, "right end of the sample window (default 5)");
  wave->add_option("--n", n, "number of samples, >= 2 (default 1001)");
  wave->add_option("--out", out, "output directory");

  auto* disp = app.add_subcommand("dispersion", "Growth rate lambda(omega): dispersion.csv");
  disp->add_option("--alpha", alpha, "diffusivity ratio, > 0")->required();
  disp->add_option("--theta", theta, "ignition threshold in (0, 1)")->required();
  disp->add_option("--omega-max", omega_max, "largest wavenumber (default 20)");
  disp->add_option("--n", n, "number of wavenumbers (default 401)");
  disp->add_option("--search-max", search_max, "upper end of the growth-rate scan (default 10)");
  disp->add_option("--out", out, "output directory");

  std::optional<double> tmin, tmax, wmin, wmax, alpha_max;
  std::optional<int> tn, wn;
  auto* map = app.add_subcommand("map", "Small-alpha instability region: map.csv, map.pgm");
  map->add_option("--theta-min", tmin, "default 0.01");
  map->add_option("--theta-max", tmax, "default 0.99");
  map->add_option("--theta-n", tn, "default 99");
  map->add_option("--omega0-min", wmin, "default 0");
  map->add_option("--omega0-max", wmax, "default 4");
  map->add_option("--omega0-n", wn, "default 81");
  map->add_option("--out", out, "output directory");

  auto* levelset = app.add_subcommand("levelset", "Curve theta -> alpha(theta) of F = 0: levelset.csv");
  levelset->add_option("--theta-min", tmin, "default 0.01");
  levelset->add_option("--theta-max", tmax, "default 0.99");
  levelset->add_option("--theta-n", tn, "default 99");
  levelset->add_option("--alpha-max", alpha_max, "upper end of the alpha scan (default 10)");
  levelset->add_option("--out", out, "output directory");

  std::string config_path;
  std::optional<std::string> sim_out;
  auto* simulate = app.add_subcommand("simulate", "Run the finite-difference simulator");
  simulate->add_option("--config", config_path, "flat key = value config file")->required();
  simulate->add_option("--out", sim_out, "output directory (default: output_dir from the config, else .)");

  bool quick = false, full = false;
  auto* validate = app.add_subcommand("validate", "Run the acceptance criteria; exit 1 on any failure");
  auto* quick_flag = validate->add_flag("--quick", quick, "skip the 2D simulations");
  validate->add_flag("--full", full, "include the 2D simulations")->excludes(quick_flag);
  validate->add_option("--out", out, "output directory");

  std::string manifest;
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a run.json");
  replay->add_option("--manifest", manifest, "path to run.json")->required()->check(CLI::ExistingFile);
  replay->add_option("--out", out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    json params = json::object();
    std::string command;
    if (*wave) {
      command = "wave";
      params = {{"alpha", *alpha}, {"theta", *theta}};
      put(params, "xmin", xmin);
      put(params, "xmax", xmax);
      put(params, "n", n);
    } else if (*disp) {
      command = "dispersion";
      params = {{"alpha", *alpha}, {"theta", *theta}};
      put(params, "omega_max", omega_max);
      put(params, "n", n);
      put(params, "search_max", search_max);
    } else if (*map) {
      command = "map";
      put(params, "theta_min", tmin);
      put(params, "theta_max", tmax);
      put(params, "theta_n", tn);
      put(params, "omega0_min", wmin);
      put(params, "omega0_max", wmax);
      put(params, "omega0_n", wn);
    } else if (*levelset) {
      command = "levelset";
      put(params, "theta_min", tmin);
      put(params, "theta_max", tmax);
      put(params, "theta_n", tn);
      put(params, "alpha_max", alpha_max);
    } else if (*simulate) {
      command = "simulate";
      frontstab::SimConfig cfg = frontstab::load_sim_config(config_path);
      out = sim_out ? *sim_out : (cfg.output_dir.empty() ? std::string(".") : cfg.output_dir);
      cfg.output_dir.clear();
      params = {{"config", frontstab::format_sim_config(cfg)}};
    } else if (*validate) {
      command = "validate";
      params = {{"mode", full ? "full" : "quick"}};
    } else if (*replay) {
      return frontstab::replay(manifest, out, std::cout);
    }
    return frontstab::run_command(command, params, out, std::cout);
  } catch (const frontstab::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const frontstab::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
