#pragma once

// Markoff triples over unbounded integers: exact enumeration along the Vieta
// tree, verification that no two triples share a maximum, and the bridge from
// triples to cusped trace points.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "fricke/space.hpp"

namespace fricke {

// classical: x^2+y^2+z^2 = 3xyz.  trace: x^2+y^2+z^2 = xyz, entries 3x the
// classical ones.
enum class MarkoffForm { classical, trace };

struct MarkoffTriple {
  mpz_class x, y, z;  // x >= y >= z > 0
  MarkoffForm form = MarkoffForm::classical;

  friend bool operator==(const MarkoffTriple&, const MarkoffTriple&) = default;
};

// All triples with maximum <= bound, each exactly once, ascending by
// (x, y, z).  Exact arithmetic throughout.
std::vector<MarkoffTriple> enumerate_triples(const mpz_class& bound,
                                             MarkoffForm form = MarkoffForm::classical);

// Pairs of distinct list entries sharing a maximum, in list order.
std::vector<std::pair<MarkoffTriple, MarkoffTriple>> find_collisions(
    const std::vector<MarkoffTriple>& triples);

// Collisions among all classical triples with maximum <= bound; the
// uniqueness conjecture predicts an empty result.
std::vector<std::pair<MarkoffTriple, MarkoffTriple>> verify_uniqueness(const mpz_class& bound);

// The cusped trace point of a triple: three times the classical entries.
FrickePoint triple_to_traces(const MarkoffTriple& t);

}  // namespace fricke
