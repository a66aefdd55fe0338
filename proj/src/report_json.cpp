#include "ccc/report_json.hpp"

namespace ccc {

namespace {

json row_strings(const std::vector<Int>& a, int cols, int row) {
  json out = json::array();
  for (int j = 0; j < cols; ++j) out.push_back(a[static_cast<size_t>(row) * cols + j].str());
  return out;
}

json grid(const std::vector<Int>& a, int rows, int cols) {
  json out = json::array();
  for (int i = 0; i < rows; ++i) out.push_back(row_strings(a, cols, i));
  return out;
}

}  // namespace

json matrix_json(const IntMatrix& m) { return grid(m.a, m.rows, m.cols); }
json matrix_json(const SymIntMatrix& m) { return grid(m.a, m.n, m.n); }

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorKind::malformed_code, "matrix literal must be an array of arrays");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::malformed_code, "matrix row must be an array");
    std::vector<Int> r;
    for (const auto& v : row) {
      if (v.is_number_integer()) r.emplace_back(v.get<long long>());
      else if (v.is_number_unsigned()) r.emplace_back(v.get<unsigned long long>());
      else if (v.is_string()) {
        try {
          r.emplace_back(Int(v.get<std::string>()));
        } catch (const std::exception&) {
          fail(ErrorKind::malformed_code, "bad integer literal: " + v.get<std::string>());
        }
      } else {
        fail(ErrorKind::malformed_code, "matrix entries must be integers or decimal strings");
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows[0].size())
      fail(ErrorKind::malformed_code, "ragged matrix literal");
  return IntMatrix::from_rows(rows);
}

json report_json(const ObstructionReport& r) {
  json j;
  j["name"] = r.name;
  j["crossings"] = std::to_string(r.crossings);
  j["components"] = std::to_string(r.components);
  j["alternating"] = r.alternating;
  j["special"] = r.special ? json(std::to_string(*r.special)) : json(nullptr);
  j["special_compatible"] = r.special_compatible;
  json surfaces = json::array();
  for (int k = 0; k < 2; ++k) {
    json s;
    s["coloring"] = std::to_string(k);
    s["orientable"] = r.surface_orientable[k];
    if (r.surface_orientable[k]) {
      s["odd_cycle"] = nullptr;
    } else {
      json cyc = json::array();
      for (int c : r.odd_cycle[k]) cyc.push_back(std::to_string(c));
      s["odd_cycle"] = cyc;
    }
    surfaces.push_back(std::move(s));
  }
  j["checkerboard_surfaces"] = surfaces;
  j["det"] = r.det.str();
  j["signature"] = r.signature ? json(std::to_string(*r.signature)) : json(nullptr);
  j["rank"] = r.rank ? json(std::to_string(*r.rank)) : json(nullptr);
  j["two_g"] = r.two_g ? json(std::to_string(*r.two_g)) : json(nullptr);
  j["two_g_external"] = r.two_g_external;
  json factors = json::array();
  for (const Int& f : r.invariant_factors) factors.push_back(f.str());
  j["invariant_factors"] = factors;
  j["m"] = r.m ? json(std::to_string(*r.m)) : json(nullptr);
  j["det_square_free"] = r.det_square_free;
  j["lspace"] = {{"status", to_string(r.lspace.status)}, {"note", r.lspace.note}};
  j["unknot"] = r.unknot;
  json verdicts = json::array();
  for (const Verdict& v : r.verdicts)
    verdicts.push_back({{"route", v.route}, {"applies", v.applies}, {"detail", v.detail}});
  j["verdicts"] = verdicts;
  j["verified"] = r.verified;
  j["conclusion"] =
      r.verified ? "conjecture verified for this input" : "no obstruction route applies";
  return j;
}

json snf_json(const IntMatrix& a, const SNFResult& snf) {
  json j;
  json diag = json::array();
  for (const Int& d : snf.diagonal()) diag.push_back(d.str());
  j["D"] = diag;
  j["U"] = matrix_json(snf.u);
  j["V"] = matrix_json(snf.v);
  json factors = json::array();
  int m = 0;
  for (const Int& d : snf.diagonal())
    if (d > 1) {
      factors.push_back(d.str());
      ++m;
    }
  j["factors"] = factors;
  j["m"] = std::to_string(m);
  j["verified"] = (snf.u * a * snf.v == snf.d);
  return j;
}

}  // namespace ccc
