#include "morsespec/serialize.hpp"

namespace morsespec {

Json to_json(const SpectralReport& r) {
  return {{"sigma", r.sigma},
          {"critical_cell", r.critical_cell},
          {"grade", r.grade},
          {"witness_support", r.witness.cells},
          {"spectrum_member", r.spectrum_member}};
}

Json to_json(const ContinuationReport& r) {
  return {{"grade", r.grade},         {"source_sigma", r.source_sigma},
          {"target_sigma", r.target_sigma}, {"lower", r.lower},
          {"upper", r.upper},         {"pass", r.pass}};
}

Json to_json(const HomologyClass& x) {
  return {{"grade", x.grade},
          {"cells", x.cells},
          {"basis", x.basis == Basis::Full ? "full" : "morse"},
          {"canonical", x.canonical}};
}

Json to_json(const MorseComplex& mc) {
  Json grades = Json::array();
  for (int k = 0; k < mc.grades(); ++k) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < mc.count(k); ++i) {
      const CriticalCell& c = mc.cells[k][i];
      cells.push_back({{"id", c.id},
                       {"value", c.value},
                       {"boundary", to_cells(mc, k - 1, mc.boundary[k][i])}});
    }
    grades.push_back(std::move(cells));
  }
  return {{"basis", mc.basis == Basis::Full ? "full" : "morse"}, {"grades", std::move(grades)}};
}

}  // namespace morsespec
