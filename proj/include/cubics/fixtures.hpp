#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubics/arith.hpp"
#include "cubics/errors.hpp"
#include "cubics/profile.hpp"

namespace cubics {

struct TableRow {
  DegreeProfile profile;
  Integer signature;
  Integer rank;

  friend bool operator==(const TableRow& a, const TableRow& b) {
    return a.profile == b.profile && a.signature == b.signature && a.rank == b.rank;
  }
};

/// The nine published results for n <= 12. Ranks are carried as data.
inline const std::vector<TableRow>& signature_table() {
  static const std::vector<TableRow> rows = [] {
    struct Raw {
      long n;
      std::vector<long> degrees;
      const char* signature;
      const char* rank;
    };
    const Raw raw[] = {
        {4, {5}, "765", "317206375"},
        {5, {3, 3}, "90", "6424326"},
        {10, {13}, "768328170191602020", "794950563369917462703511361114326425387076"},
        {11, {3, 11}, "4407109540744680", "31190844968321382445502880736987040916"},
        {11, {5, 9}, "313563865853700", "163485878349332902738690353538800900"},
        {11, {7, 7}, "136498002303600", "31226586782010349970656128100205356"},
        {12, {3, 3, 9}, "43033957366680", "3550223653760462519107147253925204"},
        {12, {3, 5, 7}, "5860412510400", "67944157218032107464152121768900"},
        {12, {5, 5, 5}, "1833366298500", "6807595425960514917741859812500"},
    };
    std::vector<TableRow> out;
    for (const auto& r : raw) {
      out.push_back({DegreeProfile(r.n, r.degrees), Integer(r.signature), Integer(r.rank)});
    }
    return out;
  }();
  return rows;
}

inline std::optional<TableRow> lookup(const DegreeProfile& p,
                                      const std::vector<TableRow>& rows = signature_table()) {
  for (const auto& row : rows) {
    if (row.profile == p) return row;
  }
  return std::nullopt;
}

namespace detail {

inline Integer json_integer(const nlohmann::json& v, const char* field) {
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) != 0) {
      throw DomainError(std::string("fixture field '") + field + "' is not an integer");
    }
    return z;
  }
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  throw DomainError(std::string("fixture field '") + field + "' is not an integer");
}

}  // namespace detail

inline std::vector<TableRow> parse_table(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw DomainError("fixture file needs a top-level \"rows\" array");
  }
  std::vector<TableRow> out;
  for (const auto& row : doc["rows"]) {
    out.push_back({DegreeProfile(row.at("n").get<long>(), row.at("degrees").get<std::vector<long>>()),
                   detail::json_integer(row.at("signature"), "signature"),
                   detail::json_integer(row.at("rank"), "rank")});
  }
  return out;
}

inline std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed fixture file " + path + ": " + e.what());
  }
  return parse_table(doc);
}

}  // namespace cubics
