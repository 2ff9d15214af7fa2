#include "fairdiv/json_io.hpp"

#include <fstream>

namespace fairdiv {

using nlohmann::json;

json goodset_to_json(GoodSet s) {
  json arr = json::array();
  for_each_good(s, [&](Good g) { arr.push_back(g); });
  return arr;
}

namespace {

GoodSet goodset_from_json(const json& arr, int m) {
  GoodSet s = 0;
  for (const auto& e : arr) {
    int g = e.get<int>();
    if (g < 0 || g >= m) throw InputError("good id " + std::to_string(g) + " out of range");
    s |= bit(g);
  }
  return s;
}

}  // namespace

json valuation_to_json(const Valuation& v) {
  json j;
  j["kind"] = kind_name(v.kind());
  j["m"] = v.m();
  switch (v.kind()) {
    case ValuationKind::Zero:
      break;
    case ValuationKind::Uniform: {
      const auto& u = v.payload<Valuation::Uniform>();
      j["goods"] = goodset_to_json(u.ground);
      j["cap"] = u.cap;
      break;
    }
    case ValuationKind::Partition: {
      json parts = json::array();
      for (const auto& [goods, cap] : v.payload<Valuation::Partition>().parts)
        parts.push_back({{"goods", goodset_to_json(goods)}, {"cap", cap}});
      j["parts"] = std::move(parts);
      break;
    }
    case ValuationKind::Graphic: {
      const auto& g = v.payload<Valuation::Graphic>();
      j["vertices"] = g.vertex_count;
      json edges = json::array();
      for (const auto& e : g.edge_of_good)
        edges.push_back(e ? json::array({e->first, e->second}) : json());
      j["edges"] = std::move(edges);
      break;
    }
    case ValuationKind::ExplicitRank:
      j["table"] = v.payload<Valuation::ExplicitRank>().table;
      break;
    case ValuationKind::BinaryXos: {
      json family = json::array();
      for (GoodSet f : v.payload<Valuation::BinaryXos>().family)
        family.push_back(goodset_to_json(f));
      j["family"] = std::move(family);
      break;
    }
  }
  return j;
}

Valuation valuation_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int m = j.at("m").get<int>();
  if (kind == "zero") return Valuation::zero(m);
  if (kind == "uniform")
    return Valuation::uniform(m, goodset_from_json(j.at("goods"), m), j.at("cap").get<int>());
  if (kind == "partition") {
    std::vector<std::pair<GoodSet, int>> parts;
    for (const auto& p : j.at("parts"))
      parts.emplace_back(goodset_from_json(p.at("goods"), m), p.at("cap").get<int>());
    return Valuation::partition(m, std::move(parts));
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (e.is_null()) throw InputError("graphic: null edges are only an output artifact");
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Valuation::graphic(m, j.at("vertices").get<int>(), std::move(edges));
  }
  if (kind == "explicit_rank")
    return Valuation::explicit_rank(m, j.at("table").get<std::vector<int>>());
  if (kind == "binary_xos") {
    std::vector<GoodSet> family;
    for (const auto& f : j.at("family")) family.push_back(goodset_from_json(f, m));
    return Valuation::binary_xos(m, std::move(family));
  }
  throw InputError("unknown valuation kind: " + kind);
}

json instance_to_json(const Instance& inst) {
  json vals = json::array();
  for (const auto& v : inst.valuations) vals.push_back(valuation_to_json(v));
  return json{{"m", inst.m}, {"n", inst.n()}, {"valuations", std::move(vals)}};
}

Instance instance_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  std::vector<Valuation> vals;
  for (const auto& v : j.at("valuations")) vals.push_back(valuation_from_json(v));
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(vals.size()))
    throw InputError("instance: n does not match the valuation count");
  return Instance(m, std::move(vals));
}

json allocation_to_json(const Allocation& a) {
  json bundles = json::array();
  for (GoodSet b : a.bundles) bundles.push_back(goodset_to_json(b));
  return json{{"bundles", std::move(bundles)}};
}

Allocation allocation_from_json(const json& j) {
  std::vector<GoodSet> bundles;
  for (const auto& b : j.at("bundles")) bundles.push_back(goodset_from_json(b, 63));
  return Allocation(std::move(bundles));
}

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace

Instance load_instance_file(const std::string& path) {
  try {
    return instance_from_json(load_json_file(path));
  } catch (const json::exception& e) {
    throw InputError("bad instance file " + path + ": " + e.what());
  }
}

Allocation load_allocation_file(const std::string& path) {
  try {
    return allocation_from_json(load_json_file(path));
  } catch (const json::exception& e) {
    throw InputError("bad allocation file " + path + ": " + e.what());
  }
}

}  // namespace fairdiv
