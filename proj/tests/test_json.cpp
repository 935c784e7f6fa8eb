#include <doctest.h>

#include "stratkit/json_io.hpp"
#include "support.hpp"

using namespace stratkit;

namespace {

std::vector<std::string> keys_of(const ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

}  // namespace

TEST_CASE("map report schema and field order") {
  MapReport rep = analyze(testsupport::pasferme_map());
  ordered_json j = to_json(rep);
  CHECK(keys_of(j) == std::vector<std::string>{
                          "map", "sing", "k0_closure", "k0_pieces", "sf",
                          "dominant", "proper", "jelonek_ok", "leading"});
  CHECK(keys_of(j["leading"]) ==
        std::vector<std::string>{"forms", "generic_rank", "v_dim",
                                 "rank_condition_ok"});
  CHECK(j["dominant"] == true);
  CHECK(j["proper"] == false);
  CHECK(j["leading"]["generic_rank"] == 3);
  // k0_pieces follows the CSet schema
  REQUIRE(j["k0_pieces"].is_array());
  for (const auto& piece : j["k0_pieces"])
    CHECK(keys_of(piece) ==
          std::vector<std::string>{"closure", "except", "dim"});
}

TEST_CASE("stratification schema and field order") {
  Stratification s = stratify_union(testsupport::pasferme_map());
  ordered_json j = to_json(s);
  CHECK(keys_of(j) == std::vector<std::string>{
                          "filtration", "strata", "frontier_ok",
                          "transversality", "closedness_ok", "conjecture"});
  REQUIRE(j["strata"].is_array());
  CHECK(j["strata"].size() == 6);
  for (const auto& st : j["strata"])
    CHECK(keys_of(st) == std::vector<std::string>{"id", "dim", "closure",
                                                  "except", "origin",
                                                  "labels"});
  CHECK(keys_of(j["conjecture"]) ==
        std::vector<std::string>{"dominant", "pure", "dims"});
  CHECK(j["frontier_ok"] == true);
  CHECK(j["closedness_ok"] == true);
  for (const auto& pair : j["transversality"])
    CHECK(keys_of(pair) ==
          std::vector<std::string>{"thom", "sf", "dim_thom", "dim_sf",
                                   "dim_intersection", "kind"});
}

TEST_CASE("json output is deterministic") {
  Stratification s1 = stratify_union(testsupport::pasferme_map());
  Stratification s2 = stratify_union(testsupport::pasferme_map());
  CHECK(to_json(s1).dump() == to_json(s2).dump());
}

TEST_CASE("text digest is stable") {
  CHECK(text_digest("abc") == text_digest("abc"));
  CHECK(text_digest("abc") != text_digest("abd"));
}
