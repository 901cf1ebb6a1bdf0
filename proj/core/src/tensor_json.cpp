#include "json.hpp"

#include "jhkit/error.hpp"
#include "jhkit/tensorcoalg.hpp"

namespace jhkit {

std::string endo_to_json(const GradedCoalgEndo& f) {
  nlohmann::json j;
  j["p"] = f.ambient.p;
  j["d"] = f.ambient.bound;
  j["alphabet"] = f.ambient.alphabet->names();
  auto& mats = j["matrices"] = nlohmann::json::array();
  for (const auto& b : f.blocks) {
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto row = nlohmann::json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b.at(r, c));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return j.dump();
}

GradedCoalgEndo endo_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("endomorphism JSON: ") + e.what(), e.byte);
  }
  try {
    TensorAmbient amb;
    amb.p = j.at("p").get<std::uint32_t>();
    amb.bound = j.at("d").get<int>();
    amb.alphabet = Alphabet::make(j.at("alphabet").get<std::vector<std::string>>());
    amb.validate();
    const auto& mats = j.at("matrices");
    if (mats.size() != static_cast<std::size_t>(amb.bound + 1))
      throw PreconditionError("endomorphism JSON: expected " + std::to_string(amb.bound + 1) + " matrices");
    GradedCoalgEndo f{amb, {}};
    for (int n = 0; n <= amb.bound; ++n) {
      const auto& rows = mats[static_cast<std::size_t>(n)];
      const std::size_t dn = amb.dim(n);
      if (rows.size() != dn) throw PreconditionError("endomorphism JSON: degree " + std::to_string(n) + " has wrong shape");
      ModpMatrix m(amb.p, dn, dn);
      for (std::size_t r = 0; r < dn; ++r) {
        if (rows[r].size() != dn)
          throw PreconditionError("endomorphism JSON: degree " + std::to_string(n) + " has wrong shape");
        for (std::size_t c = 0; c < dn; ++c) {
          auto v = rows[r][c].get<std::int64_t>() % static_cast<std::int64_t>(amb.p);
          m.at(r, c) = static_cast<ModpMatrix::Entry>(v < 0 ? v + amb.p : v);
        }
      }
      f.blocks.push_back(std::move(m));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("endomorphism JSON: ") + e.what(), 0);
  }
}

}  // namespace jhkit
