#include "prem/io.hpp"

#include <sstream>

namespace prem::io {

Json word_to_json(const FreeWord& w) { return Json(w.letters()); }

FreeWord word_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("word: expected an array");
  std::vector<int> letters;
  for (const auto& v : j) letters.push_back(v.get<int>());
  return FreeWord(rank, letters);
}

int infer_rank(const Json& word_list) {
  int rank = 1;
  auto scan = [&rank](const Json& arr) {
    for (const auto& v : arr) {
      const int a = v.get<int>();
      rank = std::max(rank, a > 0 ? a : -a);
    }
  };
  if (!word_list.empty() && word_list.front().is_array())
    for (const auto& w : word_list) scan(w);
  else
    scan(word_list);
  return rank;
}

Json braid_to_json(const BraidWord& b) { return Json(b.letters); }

BraidWord braid_from_json(const Json& j, int strands) {
  if (!j.is_array()) throw std::invalid_argument("braid: expected an array");
  std::vector<int> letters;
  int max_index = 0;
  for (const auto& v : j) {
    const int a = v.get<int>();
    letters.push_back(a);
    max_index = std::max(max_index, a > 0 ? a : -a);
  }
  const int d = strands > 0 ? strands : max_index + 1;
  return BraidWord(d, std::move(letters));
}

Json permutation_to_json(const Permutation& p) {
  Json arr = Json::array();
  for (int v : p.images()) arr.push_back(v + 1);
  return arr;
}

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("permutation: expected an array");
  std::vector<int> images;
  for (const auto& v : j) images.push_back(v.get<int>() - 1);
  return Permutation::from_images(std::move(images));
}

namespace {

Json terms_to_json(const std::vector<Term>& terms) {
  Json arr = Json::array();
  for (const auto& t : terms) {
    Json mono = Json::array();
    for (auto v : t.mono) mono.push_back(v);
    arr.push_back(Json::array({mono, t.coeff.str()}));
  }
  return arr;
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["rank"] = s.rank();
  j["cap"] = s.cap();
  j["terms"] = terms_to_json(s.terms());
  return j;
}

Json tensor_to_json(const ReducedTensor& t) {
  Json j;
  j["rank"] = t.rank();
  j["terms"] = terms_to_json(t.terms());
  return j;
}

Json level_image_to_json(const LevelImage& li) {
  Json j;
  j["rank"] = li.rank;
  j["level"] = li.level;
  Json images = Json::array();
  for (const auto& s : li.images) images.push_back(series_to_json(s)["terms"]);
  j["images"] = images;
  return j;
}

Json arrangement_to_json(const DiskArrangement& a) {
  Json j;
  j["kind"] = a.kind == DiskArrangement::Standard ? "standard" : "nested";
  j["degree"] = a.degree;
  j["basepoint"] = a.basepoint;
  Json circles = Json::array();
  for (const auto& c : a.circles) {
    Json cj;
    cj["id"] = c.id;
    cj["parent"] = c.parent;
    cj["rho"] = c.rho;
    cj["flag"] = c.outer ? "outer" : "inner";
    circles.push_back(cj);
  }
  j["circles"] = circles;
  Json fibers = Json::object();
  for (const auto& [region, size] : a.fibers)
    fibers[std::to_string(region)] = size;
  j["fibers"] = fibers;
  return j;
}

DiskArrangement arrangement_from_json(const Json& j) {
  DiskArrangement a;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "standard")
    a.kind = DiskArrangement::Standard;
  else if (kind == "nested")
    a.kind = DiskArrangement::Nested;
  else
    throw std::invalid_argument("arrangement: kind must be standard or nested");
  a.degree = j.at("degree").get<int>();
  a.basepoint = j.value("basepoint", 0);
  if (j.contains("circles"))
    for (const auto& cj : j.at("circles")) {
      FoldCircle c;
      c.id = cj.at("id").get<int>();
      c.parent = cj.value("parent", 0);
      c.rho = cj.at("rho").get<int>();
      const std::string flag = cj.at("flag").get<std::string>();
      if (flag != "inner" && flag != "outer")
        throw std::invalid_argument("arrangement: flag must be inner or outer");
      c.outer = flag == "outer";
      a.circles.push_back(c);
    }
  if (j.contains("fibers"))
    for (const auto& [key, value] : j.at("fibers").items())
      a.fibers[std::stoi(key)] = value.get<int>();
  return a;
}

Json crossing_word_to_json(const CrossingWord& w) {
  Json j;
  j["base"] = w.base;
  Json crossings = Json::array();
  for (const auto& c : w.crossings) {
    Json cj;
    cj["circle"] = c.circle;
    cj["direction"] = c.inward ? "in" : "out";
    if (c.pair_slot) cj["pair"] = *c.pair_slot;
    crossings.push_back(cj);
  }
  j["crossings"] = crossings;
  return j;
}

CrossingWord crossing_word_from_json(const Json& j) {
  CrossingWord w;
  w.base = j.at("base").get<int>();
  for (const auto& cj : j.at("crossings")) {
    Crossing c;
    c.circle = cj.at("circle").get<int>();
    const std::string dir = cj.at("direction").get<std::string>();
    if (dir != "in" && dir != "out")
      throw std::invalid_argument("crossing: direction must be in or out");
    c.inward = dir == "in";
    if (cj.contains("pair")) c.pair_slot = cj.at("pair").get<int>();
    w.crossings.push_back(c);
  }
  return w;
}

Json theta_to_json(const DoubleCosetSum& s) {
  Json j;
  j["rank"] = s.rank;
  Json gens = Json::array();
  for (const auto& g : s.subgroup_generators) gens.push_back(word_to_json(g));
  j["H"] = gens;
  j["covering"] = s.covering;
  Json points = Json::array();
  for (const auto& p : s.points) {
    Json pj;
    pj["sign"] = p.sign;
    pj["word"] = word_to_json(p.word);
    points.push_back(pj);
  }
  j["points"] = points;
  return j;
}

DoubleCosetSum theta_from_json(const Json& j) {
  DoubleCosetSum s;
  s.rank = j.at("rank").get<int>();
  for (const auto& g : j.at("H"))
    s.subgroup_generators.push_back(word_from_json(g, s.rank));
  s.covering = j.value("covering", false);
  for (const auto& pj : j.at("points")) {
    const int sign = pj.at("sign").get<int>();
    if (sign != 1 && sign != -1)
      throw std::invalid_argument("theta: point sign must be +1 or -1");
    s.points.push_back(SignedPoint{sign, word_from_json(pj.at("word"), s.rank)});
  }
  return s;
}

std::string digest(const Json& j) {
  const std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace prem::io
