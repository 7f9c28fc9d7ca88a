#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "petristruct/coverability.hpp"
#include "petristruct/net_format.hpp"
#include "petristruct/semiflow.hpp"

namespace petristruct::cli {

using json = nlohmann::ordered_json;

json net_section(const NetDocument& doc, const std::string& path);
json semiflow_section(const Net& net, Ring ring);
json bounds_section(const Net& net, const std::string& marking_name, const Marking& q0);

struct NamedQuery {
  std::string text;
  HomeSpaceQuery query;
};
json homespace_section(const Net& net, const std::vector<std::string>& init_names, const std::vector<Marking>& init,
                       const std::vector<NamedQuery>& queries, std::size_t cap);
json coverability_section(const Net& net, const std::string& marking_name, const Marking& q0);
json liveness_section(const Net& net, const std::vector<std::string>& init_names, const std::vector<Marking>& init,
                      std::size_t cap, const std::optional<std::pair<std::string, Marking>>& assumed);

/// Plain-text rendering of a report object; reads only the JSON so both
/// formats carry the same verdicts.
std::string render_text(const json& report);

}  // namespace petristruct::cli
