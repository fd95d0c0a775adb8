#pragma once

#include <json.hpp>

#include "monopath/classifier.hpp"
#include "monopath/game.hpp"
#include "monopath/power.hpp"

namespace monopath {

nlohmann::json toJson(const MonoPowerPath& p);
nlohmann::json toJson(const TightPiece& p);
nlohmann::json toJson(const PartitionResult& r);
nlohmann::json toJson(const VerificationReport& r);
nlohmann::json toJson(const GameTranscript& t);
nlohmann::json toJson(const CounterexampleReport& r);
nlohmann::json classificationJson(const Classification& c, long long prefix);
nlohmann::json coloringJson(const Coloring& c, long long n);

PartitionResult partitionFromJson(const nlohmann::json& j);

}  // namespace monopath
