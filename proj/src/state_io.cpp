#include "virtemp/state_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "virtemp/error.hpp"

namespace virtemp {

namespace {

std::vector<double> number_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array()) {
    throw Error(ErrorCode::ParseError, std::string("field \"") + key + "\" must be an array");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw Error(ErrorCode::ParseError,
                  std::string(key) + "[" + std::to_string(i) + "] is not a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

}  // namespace

DiagonalState parse_state_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "state file must hold a JSON object");
  EnergySpectrum spectrum(number_array(doc, "levels"));
  Population population(number_array(doc, "probs"));
  return DiagonalState(std::move(spectrum), std::move(population));
}

DiagonalState load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

}  // namespace virtemp
