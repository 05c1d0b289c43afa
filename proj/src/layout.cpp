#include "ajcable/layout.hpp"

namespace ajcable {

CoeffFamily tagged_family(int d) {
  std::vector<Poly> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(Poly(i + 2) + Poly::M());
  return CoeffFamily(std::move(coeffs));
}

namespace {

std::string name_entry(const Poly& p) {
  if (p.is_zero()) return "0";
  if (p == Poly(-1)) return "-1";
  if (p.size() != 2) return "?";
  const Term& var = p.leading_term();
  const Term& constant = p.trailing_term();
  if (var.key.l() != 0 || var.key.m() != 2 || var.coeff != 1) return "?";
  if (!(constant.key == MonomialKey()) || constant.coeff < 2) return "?";
  return "P_" + constant.coeff.get_str() + "(" + std::to_string(var.key.t()) + ")";
}

}  // namespace

SymbolicMatrix symbolic(const PolyMatrix& m) {
  SymbolicMatrix out(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::string s = name_entry(m(r, c));
      // The tag is i + 2; shift it back to the coefficient index.
      if (s.starts_with("P_")) {
        const std::size_t open = s.find('(');
        const int tag = std::stoi(s.substr(2, open - 2));
        s = "P_" + std::to_string(tag - 2) + s.substr(open);
      }
      out[r][c] = std::move(s);
    }
  }
  return out;
}

std::vector<NamedLayout> reference_d3_layouts() {
  return {
      {"D",
       {{"P_0(2)", "0", "0", "0", "-1", "0", "0"},
        {"P_1(2)", "P_0(4)", "0", "0", "0", "0", "0"},
        {"P_2(2)", "P_1(4)", "P_0(6)", "0", "0", "-1", "0"},
        {"P_3(2)", "P_2(4)", "P_1(6)", "P_0(8)", "0", "0", "0"},
        {"0", "P_3(4)", "P_2(6)", "P_1(8)", "0", "0", "-1"},
        {"0", "0", "P_3(6)", "P_2(8)", "0", "0", "0"},
        {"0", "0", "0", "P_3(8)", "0", "0", "0"}}},
      {"N", {{"P_1(2)", "P_0(4)"}, {"P_3(2)", "P_2(4)"}}},
      {"A_1",
       {{"P_0(2)", "0", "0", "0"},
        {"P_1(2)", "P_0(4)", "0", "0"},
        {"P_3(2)", "P_2(4)", "P_1(6)", "P_0(8)"},
        {"0", "0", "P_3(6)", "P_2(8)"}}},
      {"A_2",
       {{"P_1(2)", "P_0(4)", "0", "0"},
        {"P_2(2)", "P_1(4)", "P_0(6)", "0"},
        {"P_3(2)", "P_2(4)", "P_1(6)", "P_0(8)"},
        {"0", "0", "P_3(6)", "P_2(8)"}}},
      {"A_3",
       {{"P_1(2)", "P_0(4)", "0", "0"},
        {"P_3(2)", "P_2(4)", "P_1(6)", "P_0(8)"},
        {"0", "P_3(4)", "P_2(6)", "P_1(8)"},
        {"0", "0", "P_3(6)", "P_2(8)"}}},
      {"B_1", {{"P_0(4)", "0", "0"}, {"P_2(4)", "P_1(6)", "P_0(8)"}, {"0", "P_3(6)", "P_2(8)"}}},
      {"B_2", {{"P_1(2)", "0", "0"}, {"P_3(2)", "P_1(6)", "P_0(8)"}, {"0", "P_3(6)", "P_2(8)"}}},
      {"B_3", {{"P_1(2)", "P_0(4)", "0"}, {"P_3(2)", "P_2(4)", "P_0(8)"}, {"0", "0", "P_3(8)"}}},
  };
}

std::vector<NamedLayout> built_d3_layouts() {
  const CoeffFamily f = tagged_family(3);
  const PolyMatrix D = build_D(f);
  std::vector<NamedLayout> out;
  out.push_back({"D", symbolic(D)});
  out.push_back({"N", symbolic(derive_X_N(D, 3).N)});
  for (int i = 1; i <= 3; ++i) out.push_back({"A_" + std::to_string(i), symbolic(build_A(f, i))});
  for (int j = 1; j <= 3; ++j) out.push_back({"B_" + std::to_string(j), symbolic(build_B(f, j))});
  return out;
}

std::vector<LayoutMismatch> compare_layouts(const std::vector<NamedLayout>& expected,
                                            const std::vector<NamedLayout>& actual) {
  std::vector<LayoutMismatch> out;
  for (const NamedLayout& e : expected) {
    const NamedLayout* a = nullptr;
    for (const NamedLayout& cand : actual) {
      if (cand.name == e.name) a = &cand;
    }
    if (a == nullptr) {
      out.push_back({e.name, 0, 0, "matrix", "missing"});
      continue;
    }
    if (a->entries.size() != e.entries.size() ||
        (!e.entries.empty() && a->entries.front().size() != e.entries.front().size())) {
      out.push_back({e.name, 0, 0, "shape", "different shape"});
      continue;
    }
    for (std::size_t r = 0; r < e.entries.size(); ++r) {
      for (std::size_t c = 0; c < e.entries[r].size(); ++c) {
        if (e.entries[r][c] != a->entries[r][c]) {
          out.push_back({e.name, r, c, e.entries[r][c], a->entries[r][c]});
        }
      }
    }
  }
  return out;
}

}  // namespace ajcable
