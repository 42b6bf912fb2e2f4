#include "arrtop/fixtures.hpp"

#include "arrtop/errors.hpp"

namespace arrtop::fixtures {

namespace {

Arrangement make(std::string label, std::initializer_list<std::array<std::int64_t, 3>> coeffs) {
  std::vector<ProjLine> lines;
  for (const auto& c : coeffs) lines.push_back(ProjLine::make(c[0], c[1], c[2]));
  return Arrangement(std::move(label), std::move(lines));
}

}  // namespace

Arrangement falk_A() {
  return make("falk_A", {{0, 0, 1}, {1, 0, 0}, {1, 0, -1}, {0, 1, 0}, {0, 1, -1}, {1, -1, -2}});
}

Arrangement falk_A_prime() {
  return make("falk_A_prime", {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, -1}, {1, -1, 0}, {1, 1, -2}});
}

Arrangement braid() {
  return make("braid", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
}

Arrangement b3() {
  return make("b3", {{1, 0, 0},
                     {0, 1, 0},
                     {0, 0, 1},
                     {1, -1, 0},
                     {1, 1, 0},
                     {1, 0, -1},
                     {1, 0, 1},
                     {0, 1, -1},
                     {0, 1, 1}});
}

Arrangement reduced_multinet12() {
  // Affine chart z = 1. Class a: x = 0, y = 2, y = -2, z = 0. Class b: x = -1,
  // x = 3, y = x + 1, y = -x - 1. Class c: x = -3, x = 1, y = x - 1, y = -x + 1.
  return make("reduced_multinet12", {{1, 0, 0},
                                     {0, 1, -2},
                                     {0, 1, 2},
                                     {0, 0, 1},
                                     {1, 0, 1},
                                     {1, 0, -3},
                                     {1, -1, 1},
                                     {1, 1, 1},
                                     {1, 0, 3},
                                     {1, 0, -1},
                                     {1, -1, -1},
                                     {1, 1, -1}});
}

Arrangement pencil3() { return make("pencil3", {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}}); }

Arrangement generic3() { return make("generic3", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

Arrangement generic4() { return make("generic4", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

ArrangementInput hessian_incidence() {
  // Line 3*dir + c of AG(2,3) is {(i,j) : direction-dependent form = c}; the
  // directions are the four slopes (1,0), (0,1), (1,1), (1,2).
  std::vector<std::vector<int>> flats;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      flats.push_back({0 * 3 + j, 1 * 3 + i, 2 * 3 + (i - j + 3) % 3, 3 * 3 + (i + j) % 3});
  return ArrangementInput::from_incidence("hessian", 12, std::move(flats));
}

std::vector<std::string> names() {
  return {"falk_A", "falk_A_prime", "braid", "b3", "reduced_multinet12", "pencil3", "generic3", "generic4", "hessian"};
}

ArrangementInput by_name(const std::string& name) {
  if (name == "falk_A") return ArrangementInput::from_arrangement(falk_A());
  if (name == "falk_A_prime") return ArrangementInput::from_arrangement(falk_A_prime());
  if (name == "braid") return ArrangementInput::from_arrangement(braid());
  if (name == "b3") return ArrangementInput::from_arrangement(b3());
  if (name == "reduced_multinet12") return ArrangementInput::from_arrangement(reduced_multinet12());
  if (name == "pencil3") return ArrangementInput::from_arrangement(pencil3());
  if (name == "generic3") return ArrangementInput::from_arrangement(generic3());
  if (name == "generic4") return ArrangementInput::from_arrangement(generic4());
  if (name == "hessian") return hessian_incidence();
  throw ValidationError("unknown fixture '" + name + "'");
}

}  // namespace arrtop::fixtures
