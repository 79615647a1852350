#pragma once

#include <json.hpp>
#include <string>

#include "prem/braid.hpp"
#include "prem/foldmap.hpp"
#include "prem/perm.hpp"
#include "prem/reduced.hpp"
#include "prem/series.hpp"
#include "prem/theta.hpp"
#include "prem/tower.hpp"
#include "prem/word.hpp"

namespace prem::io {

using Json = nlohmann::ordered_json;

// Words and subgroups travel as signed integer lists, e.g. [1,-2,1].
Json word_to_json(const FreeWord& w);
FreeWord word_from_json(const Json& j, int rank);
int infer_rank(const Json& word_list);

Json braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const Json& j, int strands = 0);  // 0 = infer

// 1-based image list.
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// Sorted (monomial, coefficient) pairs; coefficients as decimal strings.
Json series_to_json(const TruncatedSeries& s);
Json tensor_to_json(const ReducedTensor& t);
Json level_image_to_json(const LevelImage& li);

Json arrangement_to_json(const DiskArrangement& a);
DiskArrangement arrangement_from_json(const Json& j);

Json crossing_word_to_json(const CrossingWord& w);
CrossingWord crossing_word_from_json(const Json& j);

Json theta_to_json(const DoubleCosetSum& s);
DoubleCosetSum theta_from_json(const Json& j);

// FNV-1a of the compact serialization, for the report's input digest.
std::string digest(const Json& j);

}  // namespace prem::io
