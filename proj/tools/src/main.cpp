#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "beacon/config_space.hpp"
#include "beacon/error.hpp"
#include "beacon/geodesic.hpp"
#include "beacon/io.hpp"
#include "beacon/library.hpp"
#include "beacon/perturb.hpp"
#include "beacon/service/server.hpp"
#include "beacon/service/svg.hpp"
#include "beacon/service/wire.hpp"
#include "beacon/simulate.hpp"

using namespace beacon;
using nlohmann::json;

namespace {

constexpr int kCapturable = 0;
constexpr int kError = 1;
constexpr int kNotCapturable = 3;

Instance load(const std::string& arg) {
  if (arg.rfind("builtin:", 0) == 0) return builtin(arg.substr(8));
  return load_instance(arg);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, path + ": cannot write");
  out << text;
}

Point map_to_perturbed(const Polygon& original, const Polygon& perturbed, const Point& p) {
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original.vertex(i) == p) return perturbed.vertex(i);
  }
  for (std::size_t i = 0; i < original.size(); ++i) {
    const Segment e = original.edge(i);
    if (!on_segment(e, p)) continue;
    const Scalar t = dot(p - e.a, e.direction()) / sqnorm(e.direction());
    const Segment f = perturbed.edge(i);
    return f.a + t * f.direction();
  }
  return p;
}

std::string node_str(const ConfigNode& n) { return "beacon " + n.beacon.str() + "  ball " + n.ball.str(); }

struct VerifyArgs {
  std::string file;
  std::string mode;
  long margin = 2;
  unsigned threads = 1;
  std::string dot, svg;
};

int run_verify(const VerifyArgs& a) {
  Instance inst = load(a.file);
  if (!a.mode.empty()) inst.mode = parse_mode(a.mode);
  validate(inst);
  ExploreOptions opt;
  opt.mode = inst.mode;
  opt.margin = a.margin;
  opt.threads = a.threads;
  const auto t0 = std::chrono::steady_clock::now();
  const ConfigGraph g = explore_bfs(inst.polygon, inst.ball, inst.beacon, opt);
  const CaptureResult cap = check_capture(g);
  const LabelMap labels = label_regions(inst.polygon, g);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << "instance: " << inst.name << " (" << to_string(inst.mode) << ", margin " << a.margin << ")\n";
  std::cout << (cap.capturable ? "Capturable" : "NotCapturable") << "\n";
  std::cout << "nodes: " << g.nodes.size() << "\nedges: " << g.edges.size() << "\nlabels: " << labels.faces.size()
            << "\n";
  if (cap.capturable) {
    std::cout << "witness:\n";
    for (std::size_t i : cap.path) std::cout << "  " << node_str(g.nodes[i]) << "\n";
  }
  std::cout << "seconds: " << secs << "\n";
  if (!a.dot.empty()) write_file(a.dot, export_dot(g));
  if (!a.svg.empty()) write_file(a.svg, export_svg(inst, {.labels = &labels}));
  return cap.capturable ? kCapturable : kNotCapturable;
}

int run_simulate(const std::string& file, const std::string& path_file, const std::string& step_text) {
  const Instance inst = load(file);
  std::ifstream in(path_file);
  if (!in) throw Error(ErrorCode::ParseError, path_file + ": cannot open");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path_file + ": " + e.what());
  }
  const json& pts = doc.is_object() ? doc.at("waypoints") : doc;
  BeaconPath path;
  for (const auto& p : pts) path.waypoints.push_back(wire::point_from(p));
  const SessionState s = simulate_beacon_path(inst, path, Scalar::parse(step_text));
  json log = json::array();
  for (const auto& m : s.log) log.push_back({{"beacon", wire::to_json(m.beacon)}, {"events", wire::to_json(m.trajectory)}});
  std::cout << json{{"state", wire::to_json(s)}, {"log", std::move(log)}}.dump(2) << "\n";
  return 0;
}

int run_perturb(const std::string& file, const std::string& eps_text, std::uint64_t seed, const std::string& out) {
  const Instance inst = load(file);
  const Scalar eps = Scalar::parse(eps_text);
  const Polygon p = perturb(inst.polygon, eps, seed);
  Instance result = inst;
  result.name = inst.name + "-perturbed";
  result.polygon = p;
  result.beacon = map_to_perturbed(inst.polygon, p, inst.beacon);
  validate(result);
  save_instance(result, out);
  const OrderCheck check = check_order_preserved(extension_orders(inst.polygon), extension_orders(p));
  const ExtensionOrder orders = extension_orders(p);
  std::cout << "vertices: " << p.size() << "\nmax slope: " << max_edge_slope(p).str()
            << "\nextension classes: " << orders.horizontal.size() << " horizontal, " << orders.vertical.size()
            << " vertical\norders preserved: " << (check.preserved ? "yes" : "no") << "\n";
  return 0;
}

int run_geodesic(const std::string& file, const std::string& step_text) {
  Instance inst = load(file);
  inst.mode = BeaconMode::Free;
  const GeodesicCaptureReport r = demo_geodesic_capture(inst, Scalar::parse(step_text));
  std::cout << (r.captured ? "captured" : "not captured") << "\nrounds: " << r.rounds
            << "\nbeacon path length: " << r.length.approx() << " (at most " << r.length_upper.str() << ")\npath:";
  for (const auto& p : r.beacon_path) std::cout << " " << p.str();
  std::cout << "\ncapture point: " << r.final_state.ball.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beacon-attraction capture verifier and session service"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Explore the configuration graph and decide capturability");
  verify->add_option("file", va.file, "Instance JSON, or builtin:<name>")->required();
  verify->add_option("--mode", va.mode, "boundary | boundary+exterior | free (overrides the instance)");
  verify->add_option("--margin", va.margin, "Exterior margin in grid units")->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", va.threads, "Worker threads for exploration")->check(CLI::PositiveNumber);
  verify->add_option("--dot", va.dot, "Write the graph as GraphViz");
  verify->add_option("--svg", va.svg, "Write an SVG with label zones");

  std::string sim_file, sim_path, step = "1/16";
  auto* simulate = app.add_subcommand("simulate", "Move the beacon along a polyline and print the session log");
  simulate->add_option("file", sim_file)->required();
  simulate->add_option("--path", sim_path, "JSON file holding an array of [x, y] waypoints")->required();
  simulate->add_option("--step", step, "Largest beacon increment");

  std::string pert_file, eps = "1/1000", out;
  std::uint64_t seed = 1;
  auto* perturb_cmd = app.add_subcommand("perturb", "Perturb the polygon into general position");
  perturb_cmd->add_option("file", pert_file)->required();
  perturb_cmd->add_option("--eps", eps, "Perturbation radius");
  perturb_cmd->add_option("--seed", seed);
  perturb_cmd->add_option("-o,--output", out)->required();

  std::string geo_file;
  auto* geo = app.add_subcommand("geodesic-demo", "Chase the ball along geodesics with a free beacon");
  geo->add_option("file", geo_file)->required();
  geo->add_option("--step", step, "Largest beacon increment");

  std::string exp_file, exp_out;
  auto* export_cmd = app.add_subcommand("export", "Write an instance as canonical JSON");
  export_cmd->add_option("file", exp_file, "Instance JSON, or builtin:<name>")->required();
  export_cmd->add_option("-o,--output", exp_out, "Output file (default stdout)");

  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--static", static_dir, "Directory served under /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    if (*verify) return run_verify(va);
    if (*simulate) return run_simulate(sim_file, sim_path, step);
    if (*perturb_cmd) return run_perturb(pert_file, eps, seed, out);
    if (*geo) return run_geodesic(geo_file, step);
    if (*export_cmd) {
      const Instance inst = load(exp_file);
      if (exp_out.empty()) std::cout << instance_to_json(inst);
      else save_instance(inst, exp_out);
      return 0;
    }
    if (*serve_cmd) {
      SessionService service(SessionService::builtin_library());
      std::cerr << "listening on http://" << host << ":" << port << "\n";
      serve(service, host, port, static_dir);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kError;
  } catch (const ServiceError& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kError;
  }
  return 0;
}
