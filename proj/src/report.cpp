// Copyright 2026 The treeminor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "treeminor/report.hpp"

#include <sstream>

#include "json.hpp"

#include "treeminor/catalyst.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/forest.hpp"

namespace treeminor {

namespace {

using Json = nlohmann::ordered_json;

Json edge_json(Vertex a, Vertex b) { return Json::array({a, b}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e.u, e.v));
  return out;
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back(edge_json(a.tail, a.head));
  return out;
}

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string optional_decimal(const std::optional<BigInt>& v) {
  return v ? to_decimal(*v) : std::string();
}

std::string signed_text(int sign) { return sign > 0 ? "+1" : "-1"; }

std::string arc_text(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

std::string arcs_text(const std::vector<Arc>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ' ';
    out += arc_text(arcs[i]);
  }
  return out;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw Error(ErrorCode::kParseError, "unknown format: " + std::string(name));
}

ForestKind parse_forest_kind(std::string_view name) {
  if (name == "s-rooted") return ForestKind::kSRooted;
  if (name == "s-star") return ForestKind::kSStar;
  throw Error(ErrorCode::kParseError, "unknown forest kind: " + std::string(name));
}

std::string format_minor_report(const MinorReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["n"] = r.n;
      j["subset"] = r.subset;
      j["value_det"] = to_decimal(r.value_det);
      j["value_theorem_a"] = to_decimal(r.value_theorem_a);
      j["value_richman"] = to_decimal(r.value_richman);
      j["value_catalyst"] = r.value_catalyst ? Json(to_decimal(*r.value_catalyst)) : Json(nullptr);
      j["catalyst_estimate"] = to_decimal(r.catalyst_estimate);
      j["kappa"] = to_decimal(r.kappa);
      j["sum_a"] = to_decimal(r.sum_a);
      j["sum_richman"] = to_decimal(r.sum_richman);
      j["agree"] = r.agree;
      return dump(j);
    }
    case OutputFormat::kCsv: {
      std::ostringstream out;
      out << "n,subset,value_det,value_theorem_a,value_richman,value_catalyst,"
             "catalyst_estimate,kappa,sum_a,sum_richman,agree\n";
      out << r.n << ",\"" << join(r.subset, ',') << "\"," << to_decimal(r.value_det) << ','
          << to_decimal(r.value_theorem_a) << ',' << to_decimal(r.value_richman) << ','
          << optional_decimal(r.value_catalyst) << ',' << to_decimal(r.catalyst_estimate) << ','
          << to_decimal(r.kappa) << ',' << to_decimal(r.sum_a) << ','
          << to_decimal(r.sum_richman) << ',' << (r.agree ? "true" : "false") << '\n';
      return out.str();
    }
    case OutputFormat::kText: {
      std::ostringstream out;
      out << "n                " << r.n << '\n'
          << "subset           " << join(r.subset, ',') << '\n'
          << "determinant      " << to_decimal(r.value_det) << '\n'
          << "theorem A        " << to_decimal(r.value_theorem_a) << '\n'
          << "richman          " << to_decimal(r.value_richman) << '\n'
          << "catalyst         "
          << (r.value_catalyst ? to_decimal(*r.value_catalyst) : "skipped (over budget)") << '\n'
          << "catalyst work    " << to_decimal(r.catalyst_estimate) << '\n'
          << "kappa            " << to_decimal(r.kappa) << '\n'
          << "sum (b-1)(b-4)   " << to_decimal(r.sum_a) << '\n'
          << "sum (b-2)^2      " << to_decimal(r.sum_richman) << '\n'
          << "agree            " << (r.agree ? "yes" : "NO") << '\n';
      return out.str();
    }
  }
  return {};
}

std::string format_single_value(const Tree& tree, const SubsetS& s, std::string_view method,
                                const BigInt& value, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["n"] = tree.vertex_count();
      j["subset"] = s.members();
      j["method"] = method;
      j["value"] = to_decimal(value);
      return dump(j);
    }
    case OutputFormat::kCsv:
      return "n,subset,method,value\n" + std::to_string(tree.vertex_count()) + ",\"" +
             join(s.members(), ',') + "\"," + std::string(method) + "," + to_decimal(value) +
             "\n";
    case OutputFormat::kText:
      return to_decimal(value) + "\n";
  }
  return {};
}

std::string format_forests(const Tree& tree, const SubsetS& s, ForestKind kind,
                           OutputFormat format) {
  const std::vector<Forest> forests =
      kind == ForestKind::kSRooted ? enumerate_s_rooted(tree, s) : enumerate_s_star_rooted(tree, s);
  Json records = Json::array();
  std::ostringstream csv, text;
  csv << "index,kept_edges,components,class,floating,bdeg\n";
  int index = 0;
  for (const Forest& f : forests) {
    const ForestClass cls = classify_forest(f, s);
    const auto floating = floating_component(f, s);
    std::optional<int> bdeg;
    if (floating) bdeg = boundary_degree(tree, f, *floating);
    const auto kept = f.kept_edge_list(tree);
    const auto comps = f.components();

    Json r;
    r["index"] = index;
    r["kept_edges"] = edges_json(kept);
    r["components"] = comps;
    r["class"] = forest_class_name(cls);
    r["floating"] = floating ? Json(f.component_vertices(*floating)) : Json(nullptr);
    r["bdeg"] = bdeg ? Json(*bdeg) : Json(nullptr);
    records.push_back(std::move(r));

    std::string comp_text;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c) comp_text += " | ";
      comp_text += join(comps[c], ' ');
    }
    csv << index << ",\"" << edges_text(kept) << "\",\"" << comp_text << "\","
        << forest_class_name(cls) << ",\""
        << (floating ? join(f.component_vertices(*floating), ' ') : "") << "\","
        << (bdeg ? std::to_string(*bdeg) : "") << '\n';
    text << '#' << index << "  kept {" << edges_text(kept) << "}  " << forest_class_name(cls);
    if (floating) {
      text << "  floating {" << join(f.component_vertices(*floating), ' ') << "} bdeg "
           << *bdeg;
    }
    text << '\n';
    ++index;
  }
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["n"] = tree.vertex_count();
      j["subset"] = s.members();
      j["kind"] = kind == ForestKind::kSRooted ? "s-rooted" : "s-star";
      j["count"] = forests.size();
      j["forests"] = std::move(records);
      return dump(j);
    }
    case OutputFormat::kCsv: return csv.str();
    case OutputFormat::kText: return text.str();
  }
  return {};
}

std::string format_catalysts(const Tree& tree, const SubsetS& s, std::uint64_t budget,
                             bool classify, OutputFormat format) {
  Json records = Json::array();
  std::ostringstream csv, text;
  csv << "sigma,f,sign\n";
  long long count = 0, signed_sum = 0;
  std::map<Arrowflow, ClassTally> classes;
  enumerate_catalysts(tree, s, budget, [&](const Catalyst& c) {
    ++count;
    signed_sum += c.sign();
    if (classify) {
      ClassTally& t = classes[induced_arrowflow(c)];
      t.count += 1;
      t.signed_sum += c.sign();
    }
    const auto& dom = c.sigma.domain();
    Json sigma = Json::array(), f = Json::array();
    std::string sigma_text, f_text;
    for (std::size_t k = 0; k < dom.size(); ++k) {
      sigma.push_back(edge_json(dom[k], c.sigma.images()[k]));
      f.push_back(Json::array({dom[k], edge_json(c.f[k].tail, c.f[k].head)}));
      if (k) {
        sigma_text += ',';
        f_text += ',';
      }
      sigma_text += std::to_string(dom[k]) + "→" + std::to_string(c.sigma.images()[k]);
      f_text += std::to_string(dom[k]) + "→" + arc_text(c.f[k]);
    }
    if (format == OutputFormat::kJson) {
      Json r;
      r["sigma"] = std::move(sigma);
      r["f"] = std::move(f);
      r["sign"] = c.sign();
      records.push_back(std::move(r));
    }
    csv << '"' << sigma_text << "\",\"" << f_text << "\"," << signed_text(c.sign()) << '\n';
    text << "σ: " << sigma_text << " | f: " << f_text << " | " << signed_text(c.sign())
         << '\n';
  });

  Json class_records = Json::array();
  if (classify) {
    csv << "\narcs,class,missing_forest_edges,class_signed_sum,catalyst_count\n";
    for (const auto& [flow, tally] : classes) {
      const FlowClass cls = classify_arrowflow(tree, flow, s);
      const auto missing = missing_forest(tree, flow).kept_edge_list(tree);
      Json r;
      r["arcs"] = arcs_json(flow.arcs());
      r["class"] = flow_class_name(cls);
      r["missing_forest_edges"] = edges_json(missing);
      r["class_signed_sum"] = to_decimal(tally.signed_sum);
      r["catalyst_count"] = to_decimal(tally.count);
      class_records.push_back(std::move(r));
      csv << '"' << arcs_text(flow.arcs()) << "\"," << flow_class_name(cls) << ",\""
          << edges_text(missing) << "\"," << to_decimal(tally.signed_sum) << ','
          << to_decimal(tally.count) << '\n';
      text << "class " << flow_class_name(cls) << "  arcs " << arcs_text(flow.arcs())
           << "  missing {" << edges_text(missing) << "}  signed sum "
           << to_decimal(tally.signed_sum) << "  catalysts " << to_decimal(tally.count) << '\n';
    }
  }
  switch (format) {
    case OutputFormat::kJson: {
      Json j;
      j["n"] = tree.vertex_count();
      j["subset"] = s.members();
      j["count"] = count;
      j["signed_sum"] = std::to_string(signed_sum);
      j["catalysts"] = std::move(records);
      if (classify) j["classes"] = std::move(class_records);
      return dump(j);
    }
    case OutputFormat::kCsv: return csv.str();
    case OutputFormat::kText: return text.str();
  }
  return {};
}

std::string format_identity_records(const std::vector<IdentityRecord>& records,
                                    OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::kCsv) out << "name,parameter,lhs,rhs,pass\n";
  for (const auto& r : records) {
    switch (format) {
      case OutputFormat::kJson: {
        Json j;
        j["name"] = r.name;
        j["parameter"] = r.parameter;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["pass"] = r.pass;
        out << j.dump() << '\n';
        break;
      }
      case OutputFormat::kCsv:
        out << r.name << ',' << r.parameter << ",\"" << r.lhs << "\",\"" << r.rhs << "\","
            << (r.pass ? "true" : "false") << '\n';
        break;
      case OutputFormat::kText:
        out << (r.pass ? "ok   " : "FAIL ") << r.name << " [" << r.parameter << "]  " << r.lhs
            << " vs " << r.rhs << '\n';
        break;
    }
  }
  return out.str();
}

}  // namespace treeminor
