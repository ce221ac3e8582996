#include "g2kl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace g2kl::report {

namespace {

using nlohmann::ordered_json;

struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<ordered_json>> rows;
  std::vector<std::pair<std::string, ordered_json>> summary;
};

std::string cell_text(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

std::string header_line(const Provenance& prov) {
  return "g2kl " + std::string(kToolVersion) + " v0=" + base_point().str() +
         " config=" + prov.fingerprint();
}

std::string render(const Table& t, Format f, const Provenance& prov) {
  std::ostringstream out;
  switch (f) {
    case Format::json: {
      ordered_json doc;
      doc["tool"] = "g2kl";
      doc["version"] = kToolVersion;
      doc["v0"] = base_point().str();
      doc["config"] = prov.config;
      doc["fingerprint"] = prov.fingerprint();
      doc["table"] = t.title;
      ordered_json rows = ordered_json::array();
      for (const auto& r : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
        rows.push_back(std::move(obj));
      }
      doc["rows"] = std::move(rows);
      if (!t.summary.empty()) {
        ordered_json s = ordered_json::object();
        for (const auto& [k, v] : t.summary) s[k] = v;
        doc["summary"] = std::move(s);
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "# " << header_line(prov) << " table=" << t.title << '\n';
      for (const auto& [k, v] : t.summary) out << "# " << k << '=' << cell_text(v) << '\n';
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? "," : "") << t.columns[i];
      out << '\n';
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(r[i]));
        out << '\n';
      }
      break;
    }
    case Format::latex: {
      out << "% " << header_line(prov) << " table=" << t.title << '\n';
      for (const auto& [k, v] : t.summary) out << "% " << k << '=' << cell_text(v) << '\n';
      out << "\\begin{tabular}{" << std::string(t.columns.size(), 'l') << "}\n\\hline\n";
      for (std::size_t i = 0; i < t.columns.size(); ++i)
        out << (i ? " & " : "") << latex_escape(t.columns[i]);
      out << " \\\\\n\\hline\n";
      for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
          out << (i ? " & " : "") << latex_escape(cell_text(r[i]));
        out << " \\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      break;
    }
    case Format::text: {
      out << "# " << header_line(prov) << " table=" << t.title << '\n';
      for (const auto& [k, v] : t.summary) out << "# " << k << '=' << cell_text(v) << '\n';
      std::vector<std::size_t> width(t.columns.size());
      for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
      for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cell_text(r[i]).size());
      auto line = [&](auto get) {
        std::string s;
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
          std::string c = get(i);
          if (i + 1 < t.columns.size()) c.resize(width[i] + 2, ' ');
          s += c;
        }
        out << s << '\n';
      };
      line([&](std::size_t i) { return t.columns[i]; });
      for (const auto& r : t.rows) line([&](std::size_t i) { return cell_text(r[i]); });
      break;
    }
  }
  return out.str();
}

std::string digits_or_e(const GroupElement& x) { return x.is_identity() ? "e" : x.str(); }

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  return std::nullopt;
}

std::string_view format_name(Format f) {
  switch (f) {
    case Format::text: return "text";
    case Format::csv: return "csv";
    case Format::json: return "json";
    case Format::latex: return "latex";
  }
  return "?";
}

std::string Provenance::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : config) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string delta_table(const std::vector<cell::DeltaRecord>& records, Format f,
                        const Provenance& prov) {
  Table t;
  t.title = "delta";
  t.columns = {"u_index", "u_word",  "d_u",      "uprime_index", "uprime_word",
               "d_uprime", "delta_0", "delta_xa", "delta_xb",     "class"};
  for (const auto& r : records) {
    t.rows.push_back({static_cast<int>(cell::position(r.u)) + 1, std::string(cell::w0_name(r.u)),
                      digits_or_e(cell::d_element(r.u)),
                      static_cast<int>(cell::position(r.uprime)) + 1,
                      std::string(cell::w0_name(r.uprime)), digits_or_e(cell::d_element(r.uprime)),
                      r.delta[0], r.delta[1], r.delta[2], std::string(cell::u_class_name(r.cls))});
  }
  return render(t, f, prov);
}

std::string mu_table(const std::vector<MuRow>& rows, const MuSummary& summary, Format f,
                     const Provenance& prov) {
  Table t;
  t.title = "mu";
  t.columns = {"y", "w", "class", "mu"};
  for (const auto& r : rows)
    t.rows.push_back({r.y.str(), r.w.str(), std::string(cell::u_class_name(r.cls)), r.mu});
  t.summary = {{"bound_a", summary.bound_a},
               {"bound_b", summary.bound_b},
               {"pairs", summary.pairs},
               {"nonzero", rows.size()},
               {"max_mu", summary.max_mu}};
  return render(t, f, prov);
}

std::string repmult(rep::Weight lambda, rep::Weight lambda_prime,
                    const rep::Multiplicities& decomposition, Format f, const Provenance& prov) {
  Table t;
  t.title = "repmult " + lambda.str() + "x" + lambda_prime.str();
  t.columns = {"nu", "multiplicity", "dim"};
  Integer total = 0;
  for (const auto& [nu, m] : decomposition) {
    const Integer dim = rep::weyl_dim(nu);
    total += m * dim;
    t.rows.push_back({nu.str(), m, dim.str()});
  }
  t.summary = {{"dim", total.str()}};
  return render(t, f, prov);
}

}  // namespace g2kl::report
