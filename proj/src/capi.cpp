#include "cambrian/cambrian.h"

#include <cstdlib>
#include <cstring>

#include "jsonio.hpp"

using namespace camb;

struct camb_ctx {
  ExchangeMatrix B;
  std::string lastError;
};

namespace {

thread_local std::string g_createError;

int codeOf(Errc c) { return static_cast<int>(c); }

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(camb_ctx* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return CAMB_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    *out = dupString(fn());
    return CAMB_OK;
  } catch (const Error& e) {
    ctx->lastError = e.what();
    return codeOf(e.code);
  } catch (const std::exception& e) {
    ctx->lastError = e.what();
    return CAMB_INTERNAL;
  }
}

/* The aggregated verification suite shared by the C API and the CLI. */
Json verifySuite(const ExchangeMatrix& B, Int maxLen, int depth, bool& ok) {
  RootSpace space = buildRootSpace(B);
  FrameworkGraph g = doubledGraph(space, maxLen);
  Json rep;
  ok = true;

  AxiomReport axioms = checkAxioms(space, g);
  rep["axioms"] = axiomReportJson(axioms);
  ok = ok && axioms.allPass();

  std::vector<std::vector<VecI>> cones;
  for (const auto& v : g.vertices) cones.push_back(v.raysPrim);
  FanReport fan = fanCheck(cones);
  rep["fan"] = fanReportJson(fan);
  ok = ok && fan.violations.empty();

  CrossCheckReport cross = crossCheck(B, space, g, depth);
  rep["crossCheck"] = crossCheckJson(cross);
  ok = ok && cross.ok();

  std::string why;
  bool adjacent = dualAdjacentOk(space, g, &why);
  rep["dualAdjacent"] = Json{{"ok", adjacent}, {"witness", why}};
  ok = ok && adjacent;

  Classification cls = classify(space.a);
  rep["classification"] = classificationJson(space, cls);
  const VecI* delta = cls.affine ? &cls.affine->delta : nullptr;
  StarSummary stars = rankTwoSummary(space, g, delta);
  rep["rankTwoStars"] = Json{{"stars", stars.stars},
                             {"cycles", stars.cycles},
                             {"truncated", stars.truncated},
                             {"deltaPerpStars", stars.deltaPerpStars},
                             {"failures", stars.failures}};
  ok = ok && stars.ok();

  CompletenessScan scan =
      completenessScan(space, maxLen > 0 ? maxLen - 1 : 0, maxLen);
  rep["completeness"] = completenessJson(scan);
  if (cls.kind == MatKind::Affine) {
    ok = ok && scan.interiorHalfEdges2 == 0 && scan.interior2 > 0;
    BoundarySupport bs = boundarySupport(space);
    rep["boundarySupport"] = boundarySupportJson(space, bs);
    ok = ok && bs.secondDescriptionOk && bs.xcAnnihilatesZeroPart;
    BoundaryFaceReport faces = boundaryFaceConsistency(space, g, bs);
    rep["boundaryFaces"] = Json{{"facesChecked", faces.facesChecked},
                                {"outsideUnion", faces.outsideUnion},
                                {"fullFacetInPerp", faces.fullFacetInPerp},
                                {"ok", faces.ok()}};
    ok = ok && faces.ok();
  }
  rep["ok"] = ok;
  return rep;
}

}  // namespace

extern "C" {

camb_ctx* camb_ctx_create(const char* matrix_json) {
  if (!matrix_json) {
    g_createError = "matrix_json is null";
    return nullptr;
  }
  try {
    MatI b = readMatrixJson(matrix_json);
    auto* ctx = new camb_ctx;
    ctx->B = validateExchange(b);
    return ctx;
  } catch (const std::exception& e) {
    g_createError = e.what();
    return nullptr;
  }
}

void camb_ctx_destroy(camb_ctx* ctx) { delete ctx; }

const char* camb_create_error(void) { return g_createError.c_str(); }

const char* camb_last_error(const camb_ctx* ctx) {
  return ctx ? ctx->lastError.c_str() : "null context";
}

void camb_string_free(char* s) { std::free(s); }

int camb_classify(camb_ctx* ctx, char** out) {
  return guarded(ctx, out, [&] {
    RootSpace space = buildRootSpace(ctx->B);
    return classificationJson(space, classify(space.a)).dump(2);
  });
}

int camb_sortables(camb_ctx* ctx, long long max_len, char** out) {
  return guarded(ctx, out, [&] {
    RootSpace space = buildRootSpace(ctx->B);
    SortableCtx sc(space);
    return sortablesJson(space, sc.enumerate(max_len)).dump(2);
  });
}

int camb_dcamb(camb_ctx* ctx, long long max_len, const char* format,
               char** out) {
  return guarded(ctx, out, [&]() -> std::string {
    RootSpace space = buildRootSpace(ctx->B);
    FrameworkGraph g = doubledGraph(space, max_len);
    if (format && std::string(format) == "dot") return graphDot(g);
    return Json{{"fan", fanJson(g)}, {"graph", graphJson(g)}}.dump(2);
  });
}

int camb_verify(camb_ctx* ctx, long long max_len, int depth, char** out,
                int* failed) {
  if (failed) *failed = 1;
  int rc = guarded(ctx, out, [&] {
    bool ok = false;
    Json rep = verifySuite(ctx->B, max_len, depth, ok);
    if (failed) *failed = ok ? 0 : 1;
    return rep.dump(2);
  });
  return rc;
}

int camb_exchange_graph(camb_ctx* ctx, int depth, long long node_cap,
                        char** out) {
  return guarded(ctx, out, [&] {
    return exchangeGraphJson(exchangeGraph(ctx->B, depth, node_cap)).dump(2);
  });
}

int camb_green(camb_ctx* ctx, long long max_len, char** out) {
  return guarded(ctx, out, [&] {
    RootSpace space = buildRootSpace(ctx->B);
    FrameworkGraph g = doubledGraph(space, max_len);
    return greenJson(findGreenSequence(space, g)).dump(2);
  });
}

int camb_project(camb_ctx* ctx, long long max_len, const char* chart,
                 char** out) {
  return guarded(ctx, out, [&] {
    require(chart != nullptr, Errc::InvalidArgument, "chart is null");
    RootSpace space = buildRootSpace(ctx->B);
    FrameworkGraph g = doubledGraph(space, max_len);
    return projectChart(space, g, chart);
  });
}

}  // extern "C"
