// Command-line front end; everything goes through the shared C interface.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cambrian/cambrian.h"

namespace {

std::string readInput(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeOut(const std::string& dir, const std::string& name,
              const std::string& text) {
  if (dir.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(2);
  }
  out << text;
  std::cerr << "wrote " << path << "\n";
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { camb_string_free(s); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doubled Cambrian fans and frameworks for acyclic exchange "
               "matrices, with exact verification"};
  app.require_subcommand(1);

  std::string matrixPath, format = "json", outDir, chart = "V1";
  long long maxLen = 8;
  int depth = 7;
  app.add_option("--matrix", matrixPath,
                 "matrix JSON file ({\"n\":..,\"B\":[[..]]}); stdin if omitted");
  app.add_option("--maxLen", maxLen, "weak-order length bound (default 8)");
  app.add_option("--depth", depth, "mutation/BFS depth bound (default 7)");
  app.add_option("--format", format, "json|dot|csv|text")
      ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--out", outDir, "output directory (default: stdout)");
  app.add_option("--chart", chart, "projection chart: V1|V-1|V0|sphere");

  auto* cmdClassify = app.add_subcommand("classify", "finite/affine/indefinite");
  auto* cmdSortables = app.add_subcommand("sortables", "enumerate sortables");
  auto* cmdDcamb = app.add_subcommand("dcamb", "doubled graph and fan");
  auto* cmdVerify = app.add_subcommand("verify", "run the verification suite");
  auto* cmdExch = app.add_subcommand("exchange-graph", "seed mutation graph");
  auto* cmdGreen = app.add_subcommand("green", "maximal green sequence");
  auto* cmdProject = app.add_subcommand("project", "chart coordinates (CSV)");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  long long nodeCap = 100000;
  if (const char* cap = std::getenv("CAMBRIAN_NODE_CAP")) nodeCap = std::atoll(cap);

  camb_ctx* ctx = camb_ctx_create(readInput(matrixPath).c_str());
  if (!ctx) {
    std::cerr << "error: " << camb_create_error() << "\n";
    return 2;
  }

  int rc = 0;
  StringGuard out;
  if (cmdClassify->parsed()) {
    rc = camb_classify(ctx, &out.s);
    if (!rc) writeOut(outDir, "classify.json", out.s);
  } else if (cmdSortables->parsed()) {
    rc = camb_sortables(ctx, maxLen, &out.s);
    if (!rc) writeOut(outDir, "sortables.json", out.s);
  } else if (cmdDcamb->parsed()) {
    rc = camb_dcamb(ctx, maxLen, format.c_str(), &out.s);
    if (!rc)
      writeOut(outDir, format == "dot" ? "dcamb.dot" : "dcamb.json", out.s);
    if (!rc && !outDir.empty() && format != "dot") {
      StringGuard dot;
      rc = camb_dcamb(ctx, maxLen, "dot", &dot.s);
      if (!rc) writeOut(outDir, "dcamb.dot", dot.s);
    }
  } else if (cmdVerify->parsed()) {
    int failed = 1;
    rc = camb_verify(ctx, maxLen, depth, &out.s, &failed);
    if (!rc) {
      writeOut(outDir, "verify.json", out.s);
      if (failed) {
        std::cerr << "verification FAILED\n";
        camb_ctx_destroy(ctx);
        return 1;
      }
      std::cerr << "verification passed\n";
    }
  } else if (cmdExch->parsed()) {
    rc = camb_exchange_graph(ctx, depth, nodeCap, &out.s);
    if (!rc) writeOut(outDir, "exchange-graph.json", out.s);
  } else if (cmdGreen->parsed()) {
    rc = camb_green(ctx, maxLen, &out.s);
    if (!rc) writeOut(outDir, "green.json", out.s);
  } else if (cmdProject->parsed()) {
    rc = camb_project(ctx, maxLen, chart.c_str(), &out.s);
    if (!rc) writeOut(outDir, "project-" + chart + ".csv", out.s);
  }

  if (rc) {
    std::cerr << "error (" << rc << "): " << camb_last_error(ctx) << "\n";
    camb_ctx_destroy(ctx);
    return 2;
  }
  camb_ctx_destroy(ctx);
  return 0;
}
