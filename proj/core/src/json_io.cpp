#include "stratkit/json_io.hpp"

#include <cstdint>
#include <sstream>

namespace stratkit {

ordered_json to_json(const Ideal& I) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : I.generator_strings()) arr.push_back(s);
  return arr;
}

ordered_json to_json(const CSet& c) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : prepared(c).pieces) {
    ordered_json piece;
    piece["closure"] = to_json(p.closure);
    piece["except"] = to_json(p.exceptions);
    piece["dim"] = dimension(p.closure);
    arr.push_back(std::move(piece));
  }
  return arr;
}

ordered_json to_json(const PolyMap& F) {
  ordered_json j;
  j["name"] = F.name;
  j["vars"] = F.source->names();
  ordered_json comps = ordered_json::array();
  for (const auto& c : F.components) comps.push_back(c.str());
  j["components"] = std::move(comps);
  j["target_vars"] = F.target_vars;
  return j;
}

ordered_json to_json(const LeadingFormData& d) {
  ordered_json j;
  ordered_json forms = ordered_json::array();
  for (const auto& f : d.forms) forms.push_back(f.str());
  j["forms"] = std::move(forms);
  j["generic_rank"] = d.generic_rank;
  j["v_dim"] = d.v_dim;
  j["rank_condition_ok"] = d.rank_condition_ok;
  return j;
}

ordered_json to_json(const MapReport& r) {
  ordered_json j;
  j["map"] = to_json(r.map);
  j["sing"] = to_json(r.sing);
  j["k0_closure"] = to_json(r.k0_closure);
  j["k0_pieces"] = to_json(r.k0);
  j["sf"] = to_json(r.sf);
  j["dominant"] = r.dominant;
  j["proper"] = r.proper;
  j["jelonek_ok"] = r.jelonek_ok;
  j["leading"] = to_json(r.leading);
  return j;
}

ordered_json to_json(const TransversalityReport& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : r.pairs) {
    ordered_json pair;
    pair["thom"] = p.thom_label;
    pair["sf"] = p.sf_label;
    pair["dim_thom"] = p.dim_thom;
    pair["dim_sf"] = p.dim_sf;
    pair["dim_intersection"] = p.dim_intersection;
    const char* kind = nullptr;
    switch (p.kind) {
      case TransversalityPair::Kind::empty: kind = "empty"; break;
      case TransversalityPair::Kind::transverse: kind = "transverse"; break;
      case TransversalityPair::Kind::containment: kind = "containment"; break;
      case TransversalityPair::Kind::violation: kind = "violation"; break;
    }
    pair["kind"] = kind;
    arr.push_back(std::move(pair));
  }
  return arr;
}

ordered_json to_json(const Stratification& s) {
  ordered_json j;
  ordered_json filt = ordered_json::array();
  for (const auto& level : s.filtration) filt.push_back(to_json(level));
  j["filtration"] = std::move(filt);

  ordered_json strata = ordered_json::array();
  int current_dim = -2, idx = 0;
  for (const auto& st : s.strata) {
    if (st.dim != current_dim) {
      current_dim = st.dim;
      idx = 0;
    }
    ++idx;
    ordered_json one;
    one["id"] = st.id;
    one["dim"] = st.dim;
    one["closure"] = to_json(st.piece.closure);
    one["except"] = to_json(st.piece.exceptions);
    one["origin"] = origin_name(st.origin);
    one["labels"] = ordered_json::array({st.dim, idx});
    strata.push_back(std::move(one));
  }
  j["strata"] = std::move(strata);
  j["frontier_ok"] = s.frontier.ok;
  j["transversality"] = to_json(s.transversality);
  j["closedness_ok"] = s.closedness.ok();
  ordered_json conj;
  conj["dominant"] = s.conjecture.dominant;
  conj["pure"] = s.conjecture.purity.pure;
  conj["dims"] = s.conjecture.purity.piece_dims;
  j["conjecture"] = std::move(conj);
  return j;
}

std::string text_digest(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace stratkit
