#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hopfsc/drinfeld.hpp"
#include "hopfsc/interchange.hpp"
#include "hopfsc/matched_pair.hpp"
#include "hopfsc/morphism.hpp"

// End-to-end classification over one odd prime field: enumerate all matched
// pairs of two four-dimensional Sweedler algebras, partition the resulting
// sixteen-dimensional bicrossed products into isomorphism classes, compute
// automorphism group orders for the three distinguished products, and test
// whether the Drinfel'd double of the Sweedler algebra lands in the class of
// the unit-scale product.

namespace hopfsc {

struct ReproduceReport {
  std::uint32_t prime = 0;
  std::vector<std::string> pair_names;            // census order
  std::vector<std::vector<std::size_t>> classes;  // indices into pair_names
  std::size_t matched_pairs = 0;
  std::size_t iso_classes = 0;
  std::size_t aut_tensor = 0;   // product with trivial actions
  std::size_t aut_h16_0 = 0;    // canonical actions at scale 0
  std::size_t aut_h16_1 = 0;    // canonical actions at scale 1
  bool aut_relations_verified = false;
  bool double_is_h16_1 = false;
};

inline std::string pair_label_text(const PairLabel &l) {
  switch (l.kind) {
    case PairLabel::trivial:
      return "trivial";
    case PairLabel::canonical:
      return "canonical:" + l.lambda.str();
    default:
      return "unclassified";
  }
}

inline ReproduceReport reproduce(std::uint32_t prime, std::ostream *progress = nullptr) {
  auto note = [&](const std::string &s) {
    if (progress) *progress << s << std::endl;
  };
  ReproduceReport rep;
  rep.prime = prime;

  note("enumerating matched pairs over F_" + std::to_string(prime));
  MatchedPairCensus census = enumerate_matched_pairs_h4h4(prime);
  rep.matched_pairs = census.pairs.size();
  for (const PairLabel &l : census.labels) rep.pair_names.push_back(pair_label_text(l));
  note("  found " + std::to_string(rep.matched_pairs));

  note("partitioning the bicrossed products into isomorphism classes");
  std::vector<std::size_t> reps;  // one representative per class, in discovery order
  for (std::size_t i = 0; i < census.pairs.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c) {
      note("  " + rep.pair_names[i] + " vs " + rep.pair_names[reps[c]]);
      if (are_isomorphic(census.pairs[i], census.pairs[reps[c]]).isomorphic) {
        rep.classes[c].push_back(i);
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(i);
      rep.classes.push_back({i});
    }
  }
  rep.iso_classes = rep.classes.size();

  std::optional<std::size_t> i_trivial, i_zero, i_one;
  for (std::size_t i = 0; i < census.labels.size(); ++i) {
    const PairLabel &l = census.labels[i];
    if (l.kind == PairLabel::trivial) i_trivial = i;
    if (l.kind == PairLabel::canonical && l.lambda.is_zero()) i_zero = i;
    if (l.kind == PairLabel::canonical && l.lambda.is_one()) i_one = i;
  }
  if (!i_trivial || !i_zero || !i_one)
    throw internal_error("census is missing the trivial pair or a canonical scale");

  note("computing automorphism group orders");
  GroupReport g_tensor = automorphism_group(census.pairs[*i_trivial]);
  GroupReport g_zero = automorphism_group(census.pairs[*i_zero]);
  GroupReport g_one = automorphism_group(census.pairs[*i_one]);
  rep.aut_tensor = g_tensor.order;
  rep.aut_h16_0 = g_zero.order;
  rep.aut_h16_1 = g_one.order;
  rep.aut_relations_verified =
      g_tensor.relations_verified && g_zero.relations_verified && g_one.relations_verified;

  note("identifying the double of the four-dimensional Sweedler algebra");
  Fp::Desc d = Fp::field(prime);
  HopfAlgebra<Fp> h4 = sweedler_h4<Fp>(d);
  verify(h4);
  MatchedPairData<Fp> dd = canonical_double_actions(h4);
  rep.double_is_h16_1 = are_isomorphic(dd, census.pairs[*i_one]).isomorphic;
  return rep;
}

inline Json reproduce_to_json(const ReproduceReport &r) {
  Json j = Json::object();
  j["prime"] = r.prime;
  j["matched_pairs"] = r.matched_pairs;
  j["pairs"] = r.pair_names;
  j["iso_classes"] = r.iso_classes;
  Json classes = Json::array();
  for (const auto &cls : r.classes) {
    Json one = Json::array();
    for (std::size_t i : cls) one.push_back(r.pair_names[i]);
    classes.push_back(std::move(one));
  }
  j["classes"] = std::move(classes);
  Json orders = Json::object();
  orders["tensor"] = r.aut_tensor;
  orders["h16_0"] = r.aut_h16_0;
  orders["h16_1"] = r.aut_h16_1;
  j["aut_orders"] = std::move(orders);
  j["aut_relations_verified"] = r.aut_relations_verified;
  j["double_is_h16_1"] = r.double_is_h16_1;
  return j;
}

}  // namespace hopfsc
