#include "paley/report.hpp"

#include <sstream>

namespace paley {

Json to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["e"] = f.e();
  j["q"] = f.q();
  j["modulus"] = f.spec().modulus;
  j["primitive_root"] = f.primitive_root();
  return j;
}

Json to_json(const Graph& g) {
  Json j;
  j["p"] = g.field().p();
  j["e"] = g.field().e();
  j["q"] = g.order();
  j["d"] = g.d();
  j["I"] = g.index_set();
  j["degree"] = g.degree();
  return j;
}

Json to_json(const CliqueResult& r) {
  Json j;
  j["size"] = r.size;
  j["witness"] = r.witness;
  j["optimal"] = r.optimal;
  j["nodes"] = r.stats.nodes;
  return j;
}

Json to_json(const CliqueEnumeration& e) {
  Json j;
  j["clique_number"] = e.clique_number;
  j["count"] = e.cliques.size();
  j["cliques"] = e.cliques;
  j["complete"] = e.complete;
  return j;
}

Json to_json(const DirectionSet& d) {
  Json j;
  j["finite"] = d.finite_part();
  j["infinity"] = d.has_infinity();
  j["size"] = d.size();
  return j;
}

Json to_json(const Poly& p) { return Json(p.coeffs()); }

Json to_json(const CorollaryReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  if (r.rhs_denominator == 1) {
    j["rhs"] = r.rhs;
  } else {
    j["rhs"] = {{"numerator", r.rhs}, {"denominator", r.rhs_denominator}};
  }
  j["holds"] = r.holds;
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  return j;
}

namespace {

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json j;
  if (w->subfield_degree) {
    j["subfield_degree"] = *w->subfield_degree;
  } else {
    j["clique"] = w->clique;
  }
  return j;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json inputs;
  inputs["q"] = c.inputs.q;
  inputs["p"] = c.inputs.p;
  inputs["e"] = c.inputs.e;
  inputs["d"] = c.inputs.d;
  if (c.inputs.k_order) inputs["K"] = *c.inputs.k_order;
  if (c.inputs.index_set) inputs["I"] = *c.inputs.index_set;

  Json j;
  j["bound"] = c.bound;
  j["inputs"] = inputs;
  j["value"] = c.value;
  j["kind"] = to_string(c.kind);
  j["applicable"] = c.applicable;
  j["reason"] = c.reason;
  j["witness"] = witness_json(c.witness);
  if (!c.conditions.empty()) {
    Json conds = Json::array();
    for (const auto& cond : c.conditions) {
      conds.push_back({{"id", cond.id}, {"relation", cond.relation}, {"lhs", cond.lhs}, {"rhs", cond.rhs},
                       {"holds", cond.holds}});
    }
    j["conditions"] = conds;
  }
  if (c.exponent_r) j["exponent_r"] = *c.exponent_r;
  if (c.remainder_r) j["remainder_r"] = *c.remainder_r;
  if (!c.informative) j["informative"] = false;
  if (!c.provenance.empty()) j["provenance"] = c.provenance;
  return j;
}

Json to_json(const BoundBundle& b) {
  Json j;
  j["q"] = b.q;
  j["d"] = b.d;
  Json certs = Json::array();
  for (const auto& c : b.certificates) certs.push_back(to_json(c));
  j["certificates"] = certs;
  j["best_upper"] = b.best_upper;
  j["best_lower"] = b.best_lower;
  j["exact"] = b.exact;
  if (b.exact) j["omega"] = b.best_upper;
  return j;
}

Json to_json(const FamilyInstance& f) {
  Json params;
  for (const auto& [name, value] : f.parameters) params[name] = value;
  Json j;
  j["family"] = f.family;
  j["parameters"] = params;
  j["accepted"] = f.accepted;
  j["reason"] = f.reason;
  j["q"] = f.q;
  j["d"] = f.d;
  j["p"] = f.p;
  j["K"] = f.k_order;
  j["certificate"] = f.certificate ? to_json(*f.certificate) : Json(nullptr);
  j["notes"] = f.notes;
  return j;
}

Json to_json(const Ex45Report& r) {
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["half_density"] = to_json(r.half_density);
  j["full_density"] = to_json(r.full_density);
  j["failed_prop41"] = to_json(r.failed_prop41);
  Json searches = Json::array();
  for (const auto& s : r.searches) {
    Json sj = to_json(s.result);
    sj["d"] = s.d;
    searches.push_back(sj);
  }
  j["searches"] = searches;
  return j;
}

Json to_json(const Ex46Report& r) {
  Json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["K"] = r.k_order;
  j["prop41"] = to_json(r.prop41);
  j["digits_msf"] = r.digits_msf;
  j["f125_is_clique"] = r.f125_is_clique;
  j["bounds"] = to_json(r.bounds);
  j["omega"] = r.clique_number;
  return j;
}

std::string certificate_csv_header() {
  return "bound,q,p,e,d,K,I,value,kind,applicable,witness,reason";
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv_row(const Certificate& c) {
  std::ostringstream os;
  std::string index_set;
  if (c.inputs.index_set) {
    for (std::size_t i = 0; i < c.inputs.index_set->size(); ++i) {
      index_set += (i ? " " : "") + std::to_string((*c.inputs.index_set)[i]);
    }
  }
  std::string witness;
  if (c.witness && c.witness->subfield_degree) {
    witness = "subfield:" + std::to_string(*c.witness->subfield_degree);
  } else if (c.witness) {
    for (std::size_t i = 0; i < c.witness->clique.size(); ++i) {
      witness += (i ? " " : "") + std::to_string(c.witness->clique[i]);
    }
  }
  os << c.bound << ',' << c.inputs.q << ',' << c.inputs.p << ',' << c.inputs.e << ',' << c.inputs.d << ','
     << (c.inputs.k_order ? std::to_string(*c.inputs.k_order) : "") << ',' << index_set << ',' << c.value << ','
     << to_string(c.kind) << ',' << (c.applicable ? "true" : "false") << ',' << csv_escape(witness) << ','
     << csv_escape(c.reason);
  return os.str();
}

}  // namespace paley
