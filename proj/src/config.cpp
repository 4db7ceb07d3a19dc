#include "frontstab/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "frontstab/errors.hpp"
#include "frontstab/io.hpp"

namespace frontstab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("empty value");
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || errno == ERANGE) throw std::invalid_argument("not a number");
  return x;
}

int parse_int(const std::string& v) {
  if (v.empty()) throw std::invalid_argument("empty value");
  char* end = nullptr;
  errno = 0;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end != v.c_str() + v.size() || errno == ERANGE || x < -2147483647L || x > 2147483647L) {
    throw std::invalid_argument("not an integer");
  }
  return static_cast<int>(x);
}

using Setter = std::function<void(SimConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"alpha", [](SimConfig& c, const std::string& v) { c.params.alpha = parse_real(v); }},
      {"theta", [](SimConfig& c, const std::string& v) { c.params.theta = parse_real(v); }},
      {"dt", [](SimConfig& c, const std::string& v) { c.dt = parse_real(v); }},
      {"dx", [](SimConfig& c, const std::string& v) { c.dx = parse_real(v); }},
      {"dimension", [](SimConfig& c, const std::string& v) { c.dimension = parse_int(v); }},
      {"lx", [](SimConfig& c, const std::string& v) { c.lx = parse_real(v); }},
      {"ly", [](SimConfig& c, const std::string& v) { c.ly = parse_real(v); }},
      {"ny", [](SimConfig& c, const std::string& v) { c.ny = parse_int(v); }},
      {"x_origin", [](SimConfig& c, const std::string& v) { c.x_origin = parse_real(v); }},
      {"y_origin", [](SimConfig& c, const std::string& v) { c.y_origin = parse_real(v); }},
      {"t_end", [](SimConfig& c, const std::string& v) { c.t_end = parse_real(v); }},
      {"init",
       [](SimConfig& c, const std::string& v) {
         if (v == "disc") {
           c.init = InitKind::disc;
         } else if (v == "planar_wave") {
           c.init = InitKind::planar_wave;
         } else {
           throw std::invalid_argument("expected disc or planar_wave");
         }
       }},
      {"disc_radius", [](SimConfig& c, const std::string& v) { c.disc_radius = parse_real(v); }},
      {"disc_center_x", [](SimConfig& c, const std::string& v) { c.disc_center_x = parse_real(v); }},
      {"disc_center_y", [](SimConfig& c, const std::string& v) { c.disc_center_y = parse_real(v); }},
      {"perturb_eps", [](SimConfig& c, const std::string& v) { c.perturb_eps = parse_real(v); }},
      {"perturb_omega", [](SimConfig& c, const std::string& v) { c.perturb_omega = parse_real(v); }},
      {"snapshot_every", [](SimConfig& c, const std::string& v) { c.snapshot_every = parse_int(v); }},
      {"output_dir", [](SimConfig& c, const std::string& v) { c.output_dir = v; }},
  };
  return table;
}

[[noreturn]] void line_error(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw ConfigError(msg.str());
}

}  // namespace

SimConfig parse_sim_config(const std::string& text) {
  SimConfig c;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) line_error(line, "expected key = value, got '" + body + "'");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) line_error(line, "unknown key '" + key + "'");
    if (!seen.insert(key).second) line_error(line, "duplicate key '" + key + "'");
    try {
      it->second(c, value);
    } catch (const std::invalid_argument& e) {
      line_error(line, "bad value '" + value + "' for " + key + " (" + e.what() + ")");
    }
  }
  for (const char* required : {"alpha", "theta", "t_end"}) {
    if (!seen.count(required)) throw ConfigError(std::string("missing required key '") + required + "'");
  }
  validate(c);
  return c;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sim_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string format_sim_config(const SimConfig& c) {
  std::ostringstream out;
  auto real = [&out](const char* k, double v) { out << k << " = " << format_double(v) << '\n'; };
  real("alpha", c.params.alpha);
  real("theta", c.params.theta);
  real("dt", c.dt);
  real("dx", c.dx);
  out << "dimension = " << c.dimension << '\n';
  real("lx", c.lx);
  real("ly", c.ly);
  out << "ny = " << c.ny << '\n';
  real("x_origin", c.x_origin);
  real("y_origin", c.y_origin);
  real("t_end", c.t_end);
  out << "init = " << (c.init == InitKind::disc ? "disc" : "planar_wave") << '\n';
  real("disc_radius", c.disc_radius);
  real("disc_center_x", c.disc_center_x);
  real("disc_center_y", c.disc_center_y);
  real("perturb_eps", c.perturb_eps);
  real("perturb_omega", c.perturb_omega);
  out << "snapshot_every = " << c.snapshot_every << '\n';
  out << "output_dir = " << c.output_dir << '\n';
  return out.str();
}

}  // namespace frontstab
