#pragma once
/* JSON/DOT serialization.  All rationals are emitted as "p/q" strings and
 * orderings are deterministic so output bytes are reproducible. */

#include <json.hpp>

#include "exchange.hpp"
#include "verify.hpp"

namespace camb {

using Json = nlohmann::json;

/* Input form {"n": 3, "B": [[...], ...]}; throws ParseError. */
MatI readMatrixJson(const std::string& text);

Json matrixJson(const MatI& b);
Json classificationJson(const RootSpace& space, const Classification& cls);
Json sortablesJson(const RootSpace& space,
                   const std::vector<SortableVertex>& vs);
Json fanJson(const FrameworkGraph& g);

/* Inverse of fanJson (cones only), for the round-trip guarantee. */
std::vector<std::pair<std::vector<VecI>, std::vector<VecI>>> fanFromJson(
    const Json& j); /* (rays, normals) per cone */

Json graphJson(const FrameworkGraph& g);
std::string graphDot(const FrameworkGraph& g);

Json exchangeGraphJson(const ExchangeGraphSlice& slice);
Json axiomReportJson(const AxiomReport& rep);
Json crossCheckJson(const CrossCheckReport& rep);
Json fanReportJson(const FanReport& rep);
Json completenessJson(const CompletenessScan& scan);
Json boundarySupportJson(const RootSpace& space, const BoundarySupport& bs);
Json greenJson(const GreenSequence& seq);

}  // namespace camb
