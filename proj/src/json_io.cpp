#include "hyperg/json_io.hpp"

namespace hyperg {

namespace {

Rat parse_rat(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected an integer or a rational string, got " + j.dump());
}

}  // namespace

Json group_to_json(const GroupTable& g) {
  Json j;
  j["order"] = g.order;
  j["table"] = g.mult;
  return j;
}

GroupTable group_from_json(const Json& j) {
  std::vector<std::vector<int>> table;
  long order = 0;
  try {
    order = j.at("order").get<long>();
    table = j.at("table").get<std::vector<std::vector<int>>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("group document: ") + e.what());
  }
  if (order != static_cast<long>(table.size()))
    throw ParseError("group document: order " + std::to_string(order) + " does not match table of " +
                     std::to_string(table.size()) + " rows");
  return validate_group(table);
}

Json expectation_to_json(const ConditionalExpectation& e) {
  Json j;
  j["blocks"] = e.blocks.blocks;
  Json weights = Json::array();
  for (const auto& row : e.weights) {
    Json w = Json::array();
    for (const Rat& x : row) w.push_back(rat_str(x));
    weights.push_back(std::move(w));
  }
  j["weights"] = std::move(weights);
  return j;
}

ConditionalExpectation expectation_from_json(const Json& j, int group_order) {
  std::vector<std::vector<int>> blocks;
  std::vector<RatVec> weights;
  try {
    blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    for (const auto& row : j.at("weights")) {
      RatVec w;
      for (const auto& x : row) w.push_back(parse_rat(x, "expectation weights"));
      weights.push_back(std::move(w));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("expectation document: ") + e.what());
  }
  return make_expectation(std::move(blocks), std::move(weights), group_order);
}

Json hypergroup_to_json(const HypergroupTable& h) {
  Json j;
  j["size"] = h.size;
  j["identity"] = h.identity;
  j["involution"] = h.involution;
  Json constants = Json::array();
  for (int s = 0; s < h.size; ++s) {
    Json plane = Json::array();
    for (int t = 0; t < h.size; ++t) {
      Json row = Json::array();
      for (int r = 0; r < h.size; ++r) row.push_back(rat_str(h.c[s][t][r]));
      plane.push_back(std::move(row));
    }
    constants.push_back(std::move(plane));
  }
  j["constants"] = std::move(constants);
  Json haar = Json::array(), modular = Json::array();
  for (const Rat& x : h.haar) haar.push_back(rat_str(x));
  for (const Rat& x : h.modular) modular.push_back(rat_str(x));
  j["haar"] = std::move(haar);
  j["modular"] = std::move(modular);
  return j;
}

HypergroupTable hypergroup_from_json(const Json& j) {
  HypergroupTable h;
  try {
    h.size = j.at("size").get<int>();
    h.identity = j.at("identity").get<int>();
    h.involution = j.at("involution").get<std::vector<int>>();
    const auto& constants = j.at("constants");
    for (const auto& plane : constants) {
      std::vector<RatVec> p;
      for (const auto& row : plane) {
        RatVec r;
        for (const auto& x : row) r.push_back(parse_rat(x, "constants"));
        p.push_back(std::move(r));
      }
      h.c.push_back(std::move(p));
    }
    for (const auto& x : j.at("haar")) h.haar.push_back(parse_rat(x, "haar"));
    for (const auto& x : j.at("modular")) h.modular.push_back(parse_rat(x, "modular"));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("hypergroup document: ") + e.what());
  }
  const auto n = static_cast<std::size_t>(h.size);
  bool shaped = h.size > 0 && h.identity >= 0 && h.identity < h.size && h.involution.size() == n &&
                h.c.size() == n && h.haar.size() == n && h.modular.size() == n;
  for (const auto& plane : h.c) {
    shaped = shaped && plane.size() == n;
    for (const auto& row : plane) shaped = shaped && row.size() == n;
  }
  for (int v : h.involution) shaped = shaped && v >= 0 && v < h.size;
  if (!shaped) throw ParseError("hypergroup document: inconsistent dimensions");
  return h;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json item;
    item["name"] = it.name;
    item["pass"] = it.pass;
    if (!it.note.empty()) item["note"] = it.note;
    items.push_back(std::move(item));
  }
  j["items"] = std::move(items);
  return j;
}

}  // namespace hyperg
