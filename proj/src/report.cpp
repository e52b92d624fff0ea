#include "heckoid/report.hpp"

#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace heckoid {

using Json = nlohmann::ordered_json;

namespace {

Json integer_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json order_json(Order o) {
  if (o == kParabolic) return "inf";
  return o;
}

Json coeffs(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
  return a;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

Json hit(const RelatorHit& h) {
  Json j;
  j["slope"] = h.slope.str();
  j["n"] = order_json(h.n);
  j["k"] = h.k;
  j["trace_value"] = h.trace_value;
  j["certified"] = h.certified;
  if (!h.certified) {
    j["status"] = h.note;
    j["distance"] = h.distance;
  }
  return j;
}

Json gamma_json(const AlgebraicNumber& g, int root_index) {
  Json j;
  j["min_poly"] = coeffs(g.min_poly());
  j["root_index"] = root_index;
  const auto z = g.approx();
  j["re"] = static_cast<double>(z.real());
  j["im"] = static_cast<double>(z.imag());
  return j;
}

int index_of(const AlgebraicNumber& g) {
  const auto roots = AlgebraicNumber::roots_of(g.min_poly());
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i].box().intersects(g.box())) return static_cast<int>(i);
  return -1;
}

SlopeHalfRow row_from(const std::string& index, const std::string& symbol, const std::string& disc,
                      const std::string& poly_str, const std::string& coeffs_json) {
  SlopeHalfRow r;
  try {
    r.index = std::stoi(index);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad row index '" + index + "'");
  }
  r.symbol = parse_symbol(symbol);
  if (r.field_disc.set_str(disc, 10) != 0) throw std::invalid_argument("bad discriminant '" + disc + "'");
  std::string inner = coeffs_json;
  if (inner.size() < 2 || inner.front() != '[' || inner.back() != ']')
    throw std::invalid_argument("bad coefficient list '" + coeffs_json + "'");
  r.min_poly = IntPoly::parse_coeffs(inner.substr(1, inner.size() - 2));
  if (!(IntPoly::parse_str(poly_str) == r.min_poly))
    throw std::invalid_argument("row " + index + ": polynomial columns disagree");
  return r;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

GroupSymbol parse_symbol(const std::string& text) {
  static const std::regex re(R"(\((\d+|inf),(\d+|inf);(\d+/\d+),(\d+)\)_(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("bad group symbol '" + text + "'");
  auto order = [](const std::string& s) { return s == "inf" ? kParabolic : std::stoi(s); };
  GroupSymbol g;
  g.p = order(m[1]);
  g.q = order(m[2]);
  g.slope = Slope::parse(m[3]);
  g.n = std::stoi(m[4]);
  g.index = std::stoi(m[5]);
  return g;
}

std::string slope_half_csv(const std::vector<SlopeHalfRow>& rows) {
  std::string out = std::string(kSlopeHalfHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.index) + "," + csv_field(r.symbol.str()) + "," + r.field_disc.get_str() + "," +
           csv_field(r.min_poly.str()) + "," + csv_field(r.min_poly.json()) + "\n";
  }
  return out;
}

std::string slope_half_json(const std::vector<SlopeHalfRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["index"] = r.index;
    j["symbol"] = r.symbol.str();
    j["field_discriminant"] = integer_json(r.field_disc);
    j["field_discriminant_resolved"] = r.field_disc_resolved;
    j["min_poly_string"] = r.min_poly.str();
    j["min_poly_coeffs"] = coeffs(r.min_poly);
    a.push_back(std::move(j));
  }
  return a.dump(2) + "\n";
}

std::vector<SlopeHalfRow> parse_slope_half_csv(const std::string& text) {
  const auto recs = parse_csv(text);
  if (recs.empty()) throw std::invalid_argument("empty table");
  std::string header;
  for (size_t i = 0; i < recs[0].size(); ++i) header += (i ? "," : "") + recs[0][i];
  if (header != kSlopeHalfHeader) throw std::invalid_argument("unexpected header: " + header);
  std::vector<SlopeHalfRow> rows;
  for (size_t i = 1; i < recs.size(); ++i) {
    const auto& f = recs[i];
    if (f.size() != 5) throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(f.size()) + " fields");
    rows.push_back(row_from(f[0], f[1], f[2], f[3], f[4]));
  }
  return rows;
}

std::vector<SlopeHalfRow> parse_slope_half_json(const std::string& text) {
  std::vector<SlopeHalfRow> rows;
  try {
    for (const auto& j : Json::parse(text)) {
      const auto& d = j.at("field_discriminant");
      const std::string disc = d.is_string() ? d.get<std::string>() : d.dump();
      SlopeHalfRow r = row_from(std::to_string(j.at("index").get<int>()), j.at("symbol").get<std::string>(), disc,
                                j.at("min_poly_string").get<std::string>(), j.at("min_poly_coeffs").dump());
      r.field_disc_resolved = j.value("field_discriminant_resolved", true);
      rows.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad table JSON: ") + e.what());
  }
  return rows;
}

GoldenDiff diff_slope_half(const std::vector<SlopeHalfRow>& got, const std::vector<SlopeHalfRow>& golden) {
  GoldenDiff d;
  auto line = [](char tag, const SlopeHalfRow& r) {
    return std::string(1, tag) + " " + std::to_string(r.index) + "," + r.symbol.str() + "," +
           r.field_disc.get_str() + "," + r.min_poly.str();
  };
  std::map<std::string, const SlopeHalfRow*> g, h;
  for (const auto& r : golden) g[r.symbol.str()] = &r;
  for (const auto& r : got) h[r.symbol.str()] = &r;
  for (const auto& r : golden) {
    auto it = h.find(r.symbol.str());
    if (it == h.end()) {
      d.lines.push_back(line('-', r));
      continue;
    }
    const SlopeHalfRow& o = *it->second;
    if (o.field_disc != r.field_disc || !(o.min_poly == r.min_poly)) {
      d.lines.push_back(line('~', r));
      d.lines.push_back(line('~', o));
    }
  }
  for (const auto& r : got)
    if (!g.count(r.symbol.str())) d.lines.push_back(line('+', r));
  if (got.size() != golden.size())
    d.lines.push_back("row count " + std::to_string(got.size()) + ", golden " + std::to_string(golden.size()));
  return d;
}

std::string criterion_json(const GammaCandidate& cand, int root_index, const CriterionReport& r) {
  Json j;
  j["p"] = order_json(cand.p);
  j["q"] = order_json(cand.q);
  j["gamma"] = gamma_json(cand.gamma, root_index);
  Json c;
  c["integrality"] = r.integrality;
  c["field_contains_L"] = r.field_contains_L;
  c["signature"] = r.signature_ok;
  c["embedding_bounds"] = r.embedding_bounds_ok;
  c["fricke_splits"] = r.fricke_splits;
  j["conditions"] = c;
  j["embedding_bounds_evaluated"] = r.embedding_bounds_evaluated;
  j["fricke_evaluated"] = r.fricke_evaluated;
  Json f;
  f["degree"] = r.field_degree;
  f["signature"] = Json::array({r.field_signature.degree, r.field_signature.real_places,
                                r.field_signature.complex_places});
  f["discriminant"] = integer_json(r.field_discriminant);
  f["discriminant_resolved"] = r.field_discriminant_resolved;
  j["field"] = f;
  Json e = Json::array();
  for (const auto& x : r.embeddings) {
    Json k;
    k["root_index"] = x.root_index;
    k["tau"] = x.tau.to_double();
    k["lower_margin"] = x.lower_margin.to_double();
    k["upper_margin"] = x.upper_margin.to_double();
    k["verdict"] = verdict_str(x.verdict);
    e.push_back(std::move(k));
  }
  j["embeddings"] = e;
  j["note"] = r.note;
  j["all_pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

std::string relator_json(Order p, Order q, const RelatorSearchResult& res) {
  Json j;
  j["p"] = order_json(p);
  j["q"] = order_json(q);
  Json h = Json::array(), m = Json::array();
  for (const auto& x : res.hits) h.push_back(hit(x));
  for (const auto& x : res.near_misses) m.push_back(hit(x));
  j["hits"] = h;
  j["near_misses"] = m;
  return j.dump(2) + "\n";
}

std::string candidate_json(const CandidatePoint& c) {
  Json j;
  j["p"] = order_json(c.p);
  j["q"] = order_json(c.q);
  j["gamma"] = gamma_json(c.gamma, index_of(c.gamma));
  if (c.rho) j["rho"] = gamma_json(*c.rho, index_of(*c.rho));
  j["status"] = c.status();
  j["all_pass"] = c.report.all_pass();
  j["field_discriminant"] = integer_json(c.report.field_discriminant);
  j["excluded_free"] = c.excluded_free();
  j["excluded_by"] = c.excluded_by ? Json(*c.excluded_by) : Json(nullptr);
  Json h = Json::array(), m = Json::array();
  for (const auto& x : c.relator_hits) h.push_back(hit(x));
  for (const auto& x : c.near_misses) m.push_back(hit(x));
  j["relator_hits"] = h;
  j["near_misses"] = m;
  return j.dump();
}

std::string point_cloud_csv(const std::vector<CandidatePoint>& pts) {
  std::string out = "re,im,degree,status\n";
  for (const auto& c : pts) {
    const AlgebraicNumber& z = c.rho ? *c.rho : c.gamma;
    const auto v = z.approx();
    out += format_double(static_cast<double>(v.real())) + "," + format_double(static_cast<double>(v.imag())) + "," +
           std::to_string(c.gamma.degree()) + "," + c.status() + "\n";
  }
  return out;
}

}  // namespace heckoid
