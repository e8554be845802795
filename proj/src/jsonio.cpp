#include "jsonio.hpp"

namespace camb {

namespace {

Json vecJson(const VecI& v) { return Json(v); }

Json matJson(const MatI& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

Json vecRJson(const VecR& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(ratStr(x));
  return a;
}

Json labelsJson(const std::vector<VecI>& labels) {
  Json a = Json::array();
  for (const auto& l : labels) a.push_back(vecJson(l));
  return a;
}

const char* provName(Provenance p) {
  switch (p) {
    case Provenance::FromC: return "c";
    case Provenance::FromAntiCinv: return "anti";
    default: return "both";
  }
}

const char* kindName(MatKind k) {
  switch (k) {
    case MatKind::Finite: return "Finite";
    case MatKind::Affine: return "Affine";
    default: return "Indefinite";
  }
}

}  // namespace

MatI readMatrixJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(Errc::ParseError, std::string("matrix JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("n") && j.contains("B"),
          Errc::ParseError, "matrix JSON needs fields n and B");
  size_t n = j["n"].get<size_t>();
  require(j["B"].is_array() && j["B"].size() == n, Errc::ParseError,
          "B must be an n x n array");
  MatI b(n, VecI(n));
  for (size_t i = 0; i < n; ++i) {
    require(j["B"][i].is_array() && j["B"][i].size() == n, Errc::ParseError,
            "B must be an n x n array");
    for (size_t k = 0; k < n; ++k) {
      require(j["B"][i][k].is_number_integer(), Errc::ParseError,
              "B entries must be integers");
      b[i][k] = j["B"][i][k].get<Int>();
    }
  }
  return b;
}

Json matrixJson(const MatI& b) {
  return Json{{"n", b.size()}, {"B", matJson(b)}};
}

Json classificationJson(const RootSpace& space, const Classification& cls) {
  Json j;
  j["kind"] = kindName(cls.kind);
  j["d"] = vecJson(cls.d);
  if (cls.affine) {
    const AffineData& aff = *cls.affine;
    j["delta"] = vecJson(aff.delta);
    j["sAff"] = aff.sAff;
    j["S0"] = aff.s0;
    j["theta"] = vecJson(aff.theta);
    Phi0Split split = phi0Split(space, aff);
    j["phi0"] = Json{{"plus", labelsJson(split.plus)},
                     {"zero", labelsJson(split.zero)},
                     {"minus", labelsJson(split.minus)}};
    j["xcWeight"] = vecJson(split.xcWeight);
  }
  return j;
}

Json sortablesJson(const RootSpace& space,
                   const std::vector<SortableVertex>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) {
    Json item;
    item["word"] = v.sortingWord;
    item["length"] = v.len;
    item["labels"] = labelsJson(v.labels);
    item["covers"] = labelsJson(v.covers);
    arr.push_back(std::move(item));
  }
  return Json{{"order", space.order}, {"sortables", arr}};
}

Json fanJson(const FrameworkGraph& g) {
  Json cones = Json::array();
  for (const auto& v : g.vertices) {
    Json c;
    c["normals"] = labelsJson(v.labels);
    c["rays"] = labelsJson(v.raysPrim);
    Json exact = Json::array();
    for (const auto& r : v.rays) exact.push_back(vecRJson(r));
    c["raysExact"] = exact;
    c["provenance"] = provName(v.prov);
    cones.push_back(std::move(c));
  }
  return Json{{"n", g.n}, {"maxLen", g.maxLen}, {"cones", cones}};
}

std::vector<std::pair<std::vector<VecI>, std::vector<VecI>>> fanFromJson(
    const Json& j) {
  require(j.contains("cones"), Errc::ParseError, "fan JSON needs cones");
  std::vector<std::pair<std::vector<VecI>, std::vector<VecI>>> out;
  for (const auto& c : j["cones"]) {
    std::vector<VecI> rays, normals;
    for (const auto& r : c["rays"]) rays.push_back(r.get<VecI>());
    for (const auto& n : c["normals"]) normals.push_back(n.get<VecI>());
    out.push_back({std::move(rays), std::move(normals)});
  }
  return out;
}

Json graphJson(const FrameworkGraph& g) {
  Json verts = Json::array();
  for (const auto& v : g.vertices) {
    Json item;
    item["labels"] = labelsJson(v.labels);
    item["neighbors"] = v.neighbor;
    item["provenance"] = provName(v.prov);
    item["interior"] = v.interior;
    if (v.lenC >= 0) item["lenC"] = v.lenC;
    if (v.lenAnti >= 0) item["lenAnti"] = v.lenAnti;
    verts.push_back(std::move(item));
  }
  return Json{{"n", g.n},
              {"maxLen", g.maxLen},
              {"base", g.base},
              {"negBase", g.negBase},
              {"vertices", verts}};
}

std::string graphDot(const FrameworkGraph& g) {
  std::string s = "graph dcamb {\n  node [shape=circle];\n";
  auto color = [](Provenance p) {
    switch (p) {
      case Provenance::FromC: return "black";
      case Provenance::FromAntiCinv: return "blue";
      default: return "red";
    }
  };
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    s += "  v" + std::to_string(v) + " [color=" +
         color(g.vertices[v].prov) + (g.vertices[v].interior
                                          ? ", style=bold"
                                          : ", style=dashed") +
         "];\n";
  }
  for (size_t v = 0; v < g.vertices.size(); ++v)
    for (size_t e = 0; e < g.n; ++e) {
      int nb = g.vertices[v].neighbor[e];
      std::string lab;
      for (size_t i = 0; i < g.n; ++i)
        lab += (i ? "," : "") + std::to_string(g.vertices[v].labels[e][i]);
      if (nb < 0) {
        /* half-edge: a point stub */
        s += "  h" + std::to_string(v) + "_" + std::to_string(e) +
             " [shape=point];\n";
        s += "  v" + std::to_string(v) + " -- h" + std::to_string(v) + "_" +
             std::to_string(e) + " [style=dotted, label=\"" + lab + "\"];\n";
      } else if ((size_t)nb > v) {
        s += "  v" + std::to_string(v) + " -- v" + std::to_string(nb) +
             " [label=\"" + lab + "\"];\n";
      }
    }
  s += "}\n";
  return s;
}

Json exchangeGraphJson(const ExchangeGraphSlice& slice) {
  Json nodes = Json::array();
  for (size_t i = 0; i < slice.nodes.size(); ++i) {
    const Seed& sd = slice.nodes[i];
    Json item;
    item["depth"] = sd.depth;
    item["frontier"] = (bool)slice.frontier[i];
    item["B"] = matJson(sd.matrix.top);
    item["H"] = matJson(sd.matrix.bottom);
    Json cluster = Json::array();
    for (const auto& x : sd.cluster) cluster.push_back(x.str());
    item["cluster"] = cluster;
    Json gv = Json::array();
    for (const auto& v : sd.gvectors) gv.push_back(vecJson(v));
    item["gvectors"] = gv;
    nodes.push_back(std::move(item));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : slice.edges) edges.push_back(Json::array({a, b}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json axiomReportJson(const AxiomReport& rep) {
  Json items = Json::array();
  for (const auto& it : rep.items) {
    Json j{{"name", it.name}, {"pass", it.pass}};
    if (!it.witness.empty()) j["witness"] = it.witness;
    items.push_back(std::move(j));
  }
  return Json{{"axioms", items},
              {"interiorChecked", rep.interiorChecked},
              {"allPass", rep.allPass()}};
}

Json crossCheckJson(const CrossCheckReport& rep) {
  return Json{{"matched", rep.matched},
              {"mismatches", rep.mismatches},
              {"ok", rep.ok()}};
}

Json fanReportJson(const FanReport& rep) {
  Json viols = Json::array();
  for (const auto& [a, b] : rep.violations)
    viols.push_back(Json::array({a, b}));
  return Json{{"cones", rep.cones},
              {"pairsChecked", rep.pairsChecked},
              {"violations", viols},
              {"ok", rep.violations.empty()}};
}

Json completenessJson(const CompletenessScan& scan) {
  return Json{{"bound1", scan.bound1},
              {"bound2", scan.bound2},
              {"interior1", scan.interior1},
              {"interior2", scan.interior2},
              {"interiorHalfEdges1", scan.interiorHalfEdges1},
              {"interiorHalfEdges2", scan.interiorHalfEdges2},
              {"deficit1", scan.deficit1},
              {"persistent", scan.persistent}};
}

Json boundarySupportJson(const RootSpace& space, const BoundarySupport& bs) {
  (void)space;
  Json chambers = Json::array();
  for (size_t c = 0; c < bs.chamberRays.size(); ++c) {
    Json rays = Json::array();
    for (const auto& r : bs.chamberRays[c]) rays.push_back(vecRJson(r));
    chambers.push_back(Json{{"rays", rays},
                            {"covered", (bool)bs.covered[c]},
                            {"containsXc", (bool)bs.containsXc[c]}});
  }
  return Json{{"plus", [&] {
                 Json a = Json::array();
                 for (const auto& b : bs.split.plus) a.push_back(vecJson(b));
                 return a;
               }()},
              {"chambers", chambers},
              {"secondDescriptionOk", bs.secondDescriptionOk},
              {"xcAnnihilatesZeroPart", bs.xcAnnihilatesZeroPart},
              {"complementPoint", vecRJson(bs.complementPoint)}};
}

Json greenJson(const GreenSequence& seq) {
  Json labels = Json::array();
  for (const auto& l : seq.crossingLabels) labels.push_back(vecJson(l));
  return Json{{"vertices", seq.vertices},
              {"crossingLabels", labels},
              {"length", seq.crossingLabels.size()}};
}

}  // namespace camb
