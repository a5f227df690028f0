#include "weylva/series_io.hpp"

#include <sstream>
#include <stdexcept>

namespace weylva {

nlohmann::ordered_json series_to_json(const BivariateSeries& s) {
  nlohmann::ordered_json j;
  j["prefactor_exponent"] = to_string(s.prefactor_exponent);
  j["truncation"] = {{"max_d", s.max_d}, {"j_min", s.j_min}, {"j_max", s.j_max}};
  j["q_j_convention"] = s.q_j_convention;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, c] : s.coefficients) {
    rows.push_back({{"d", key.first}, {"j", key.second}, {"coefficient", to_string(c)}});
  }
  j["rows"] = rows;
  return j;
}

std::string series_to_csv(const BivariateSeries& s) {
  std::ostringstream out;
  out << "# prefactor_exponent=" << to_string(s.prefactor_exponent) << "\n";
  out << "# max_d=" << s.max_d << "\n";
  out << "# j_min=" << s.j_min << "\n";
  out << "# j_max=" << s.j_max << "\n";
  out << "# q_j_convention=" << s.q_j_convention << "\n";
  out << "d,j,coefficient\n";
  for (const auto& [key, c] : s.coefficients) out << key.first << "," << key.second << "," << to_string(c) << "\n";
  return out.str();
}

BivariateSeries series_from_csv(const std::string& csv) {
  BivariateSeries s;
  std::istringstream in(csv);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("bad metadata line: " + line);
      std::string key = line.substr(2, eq - 2), value = line.substr(eq + 1);
      if (key == "prefactor_exponent") s.prefactor_exponent = parse_rational(value);
      else if (key == "max_d") s.max_d = std::stoi(value);
      else if (key == "j_min") s.j_min = std::stoi(value);
      else if (key == "j_max") s.j_max = std::stoi(value);
      else if (key == "q_j_convention") s.q_j_convention = value;
      continue;
    }
    if (!header) {
      if (line != "d,j,coefficient") throw std::invalid_argument("missing csv header");
      header = true;
      continue;
    }
    std::istringstream row(line);
    std::string d, j, c;
    std::getline(row, d, ',');
    std::getline(row, j, ',');
    std::getline(row, c);
    s.coefficients[{std::stoi(d), std::stoi(j)}] = Integer(c);
  }
  return s;
}

BivariateSeries series_from_json(const nlohmann::ordered_json& j) {
  BivariateSeries s;
  s.prefactor_exponent = parse_rational(j.at("prefactor_exponent").get<std::string>());
  s.max_d = j.at("truncation").at("max_d").get<int>();
  s.j_min = j.at("truncation").at("j_min").get<int>();
  s.j_max = j.at("truncation").at("j_max").get<int>();
  s.q_j_convention = j.at("q_j_convention").get<std::string>();
  for (const auto& row : j.at("rows")) {
    s.coefficients[{row.at("d").get<int>(), row.at("j").get<int>()}] = Integer(row.at("coefficient").get<std::string>());
  }
  return s;
}

}  // namespace weylva
