#include "nearring/io.hpp"

#include <fstream>
#include <sstream>

#include "nearring/errors.hpp"

namespace nearring::io {

namespace {

// Identity placement is a file-format rule, checked at parse time so the
// diagnostic points at the file rather than the algebra.
void check_identity_row(int order, const std::vector<int>& add) {
  for (int a = 0; a < order; ++a)
    if (add[static_cast<size_t>(a)] != a || add[static_cast<size_t>(a) * order] != a)
      throw ParseError("element 0 is not additive identity");
}

LoadedNearring validate_raw(RawNearringFile raw) {
  ValidationResult r = validate_nearring(raw.order, raw.add, raw.mul);
  if (!r.ok()) throw AxiomViolationError(std::move(r.failures));
  return {std::move(*r.nearring), std::move(raw.name)};
}

std::vector<int> parse_block(std::istream& in, int order, const char* which, int* line_no) {
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(order) * order);
  std::string line;
  int rows = 0;
  while (rows < order) {
    if (!std::getline(in, line))
      throw ParseError(std::string(which) + " block truncated after " +
                       std::to_string(rows) + " of " + std::to_string(order) + " rows");
    ++*line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    int v = 0, count = 0;
    while (row >> v) {
      if (v < 0 || v >= order)
        throw ParseError("line " + std::to_string(*line_no) + ": entry " +
                         std::to_string(v) + " out of range");
      flat.push_back(v);
      ++count;
    }
    if (!row.eof())
      throw ParseError("line " + std::to_string(*line_no) + ": non-integer token");
    if (count != order)
      throw ParseError("line " + std::to_string(*line_no) + ": expected " +
                       std::to_string(order) + " entries, got " + std::to_string(count));
    ++rows;
  }
  return flat;
}

RawNearringFile parse_text_raw(const std::string& content) {
  std::istringstream in(content);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty file");
  int line_no = 1;

  std::istringstream hs(header);
  std::string magic, version, order_field;
  hs >> magic >> version >> order_field;
  if (magic != "nearring") throw ParseError("line 1: expected 'nearring' header");
  if (version != "v1") throw ParseError("line 1: unsupported version '" + version + "'");
  if (order_field.rfind("order=", 0) != 0)
    throw ParseError("line 1: expected order=N");
  int order = 0;
  try {
    order = std::stoi(order_field.substr(6));
  } catch (const std::exception&) {
    throw ParseError("line 1: bad order value");
  }
  if (order <= 0) throw ParseError("line 1: order must be positive");

  std::string name;
  std::string extra;
  if (hs >> extra) {
    if (extra.rfind("name=", 0) != 0)
      throw ParseError("line 1: unexpected token '" + extra + "'");
    name = extra.substr(5);
  }

  std::vector<int> add = parse_block(in, order, "add", &line_no);
  std::vector<int> mul = parse_block(in, order, "mul", &line_no);
  check_identity_row(order, add);
  return {order, std::move(add), std::move(mul), std::move(name)};
}

RawNearringFile parse_json_raw(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != kFormatVersion)
      throw ParseError("unsupported format_version");
    int order = j.at("order").get<int>();
    if (order <= 0) throw ParseError("order must be positive");
    auto read_table = [&](const char* key) {
      std::vector<int> flat;
      const auto& rows = j.at(key);
      if (static_cast<int>(rows.size()) != order)
        throw ParseError(std::string(key) + ": wrong row count");
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != order)
          throw ParseError(std::string(key) + ": ragged row");
        for (const auto& v : row) flat.push_back(v.get<int>());
      }
      return flat;
    };
    std::vector<int> add = read_table("add");
    std::vector<int> mul = read_table("mul");
    for (int v : add)
      if (v < 0 || v >= order) throw ParseError("add: entry out of range");
    for (int v : mul)
      if (v < 0 || v >= order) throw ParseError("mul: entry out of range");
    std::string name = j.value("name", std::string());
    check_identity_row(order, add);
    return {order, std::move(add), std::move(mul), std::move(name)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field: ") + e.what());
  }
}

}  // namespace

LoadedNearring parse_text(const std::string& content) {
  return validate_raw(parse_text_raw(content));
}

LoadedNearring parse_json(const std::string& content) {
  return validate_raw(parse_json_raw(content));
}

RawNearringFile load_raw(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  RawNearringFile raw = path.extension() == ".json" ? parse_json_raw(buf.str())
                                                    : parse_text_raw(buf.str());
  if (raw.name.empty()) {
    std::filesystem::path stem = path.filename();
    while (!stem.extension().empty()) stem = stem.stem();
    raw.name = stem.string();
  }
  return raw;
}

LoadedNearring load(const std::filesystem::path& path) {
  return validate_raw(load_raw(path));
}

std::string to_text(const FiniteNearring& nr, const std::string& name) {
  std::ostringstream out;
  out << "nearring v1 order=" << nr.order();
  if (!name.empty()) out << " name=" << name;
  out << '\n';
  auto block = [&](const std::vector<int>& t) {
    for (int a = 0; a < nr.order(); ++a) {
      for (int b = 0; b < nr.order(); ++b) {
        if (b) out << ' ';
        out << t[static_cast<size_t>(a) * nr.order() + b];
      }
      out << '\n';
    }
  };
  block(nr.add_table());
  out << '\n';
  block(nr.mul_table());
  return out.str();
}

std::string to_json(const FiniteNearring& nr, const std::string& name) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  if (!name.empty()) j["name"] = name;
  j["order"] = nr.order();
  auto table = [&](const std::vector<int>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int a = 0; a < nr.order(); ++a) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int b = 0; b < nr.order(); ++b)
        row.push_back(t[static_cast<size_t>(a) * nr.order() + b]);
      rows.push_back(row);
    }
    return rows;
  };
  j["add"] = table(nr.add_table());
  j["mul"] = table(nr.mul_table());
  return j.dump(2) + "\n";
}

void save(const FiniteNearring& nr, const std::string& name,
          const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write " + path.string());
  f << (path.extension() == ".json" ? to_json(nr, name) : to_text(nr, name));
}

nlohmann::ordered_json subset_json(const Subset& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  s.for_each([&](int e) { arr.push_back(e); });
  return arr;
}

nlohmann::ordered_json failures_json(const std::vector<AxiomFailure>& failures) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const AxiomFailure& f : failures) {
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (int v : f.witness)
      if (v >= 0) w.push_back(v);
    arr.push_back({{"axiom", axiom_name(f.axiom)}, {"witness", w}});
  }
  return arr;
}

nlohmann::ordered_json certificate_json(const RegularityCertificate& cert) {
  nlohmann::ordered_json j;
  j["ideal"] = subset_json(cert.ideal_p);
  j["strict_unity_mode"] = cert.strict_unity_mode;
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (size_t x = 0; x < cert.witnesses.size(); ++x)
    ws.push_back({{"x", x}, {"y", cert.witnesses[x].y}, {"p", cert.witnesses[x].p}});
  j["witnesses"] = ws;
  return j;
}

nlohmann::ordered_json witness_json(const DecompositionWitness& w) {
  nlohmann::ordered_json j;
  j["element"] = w.element;
  j["p"] = w.p;
  j["chain"] = w.chain;
  if (w.free_x)
    j["x"] = *w.free_x;
  else
    j["x"] = nullptr;
  j["containment_verified"] = w.containment_verified;
  return j;
}

nlohmann::ordered_json report_json(const TheoremReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem_id;
  j["instance"] = r.instance;
  j["verdict"] = verdict_name(r.verdict);
  j["detail"] = r.detail;
  if (!r.witnesses.empty()) {
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const DecompositionWitness& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
  }
  return j;
}

}  // namespace nearring::io
