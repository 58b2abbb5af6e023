#include "holo/json_io.hpp"

#include <sstream>

namespace holo {
namespace {

std::uint64_t fnv64(const std::vector<Elt>& v) {
  std::uint64_t h = 1469598103934665603ull;
  for (Elt x : v) {
    for (int b = 0; b < 4; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

Json perm_json(const Perm& p) {
  Json a = Json::array();
  for (Point x : p.images()) a.push_back(x);
  return a;
}

}  // namespace

Json cayley_json(const CayleyGroup& g, std::size_t mul_cap) {
  Json j;
  j["order"] = g.order();
  if (g.order() <= mul_cap) {
    Json mul = Json::array();
    for (Elt x = 0; x < g.order(); ++x) {
      Json row = Json::array();
      for (Elt y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
      mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
  } else {
    j["mul_hash"] = table_hash(g);
  }
  Json labels = Json::array();
  for (Elt x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = std::move(labels);
  return j;
}

Json aut_group_json(const AutGroup& a) {
  Json j;
  j["order"] = a.order();
  Json gens = Json::array();
  for (const Perm& p : a.perms.generators()) gens.push_back(perm_json(p));
  j["generators"] = std::move(gens);
  j["strategy"] = a.strategy;
  return j;
}

Json regular_record_json(const RegularRecord& rec, std::size_t gamma_cap) {
  const GammaMap& gm = rec.gamma;
  const std::size_t n = gm.group()->order();
  Json j;
  if (n <= gamma_cap) {
    Json gamma = Json::array();
    for (Elt x = 0; x < n; ++x)
      gamma.push_back(perm_json(gm.value_perm(gm.value_id(x))));
    j["gamma"] = std::move(gamma);
  }
  if (gm.inner()) {
    Json inner = Json::array();
    for (Elt x = 0; x < n; ++x)
      inner.push_back(gm.inner_conjugator(gm.value_id(x)));
    j["gamma_inner_of"] = std::move(inner);
  }
  j["gamma_hash"] = gm.hash();
  j["circ_mul_hash"] = table_hash(*rec.circ.circ);
  j["in_J"] = rec.in_j;
  j["in_I"] = rec.in_i ? Json(*rec.in_i) : Json(nullptr);
  j["in_H"] = rec.in_h ? Json(*rec.in_h) : Json(nullptr);
  if (rec.iso) {
    j["iso_witness"] = perm_json(*rec.iso);
    j["conjugator"] = perm_json(*rec.iso);
  }
  j["aut_circ_strategy"] = rec.aut_circ_strategy;
  return j;
}

Json krs_json(const KrsDecomposition& krs) {
  Json j;
  j["n"] = krs.factors.size();
  Json factors = Json::array();
  for (const KrsFactor& f : krs.factors) {
    Json fj;
    fj["order"] = f.lifted_members.size();
    fj["inn_order"] = f.inn_members.size();
    fj["members_hash"] = fnv64(f.lifted_members);
    fj["perfect"] =
        derived_members_of(krs.base, f.lifted_members) == f.lifted_members;
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["center_order"] = krs.base->center_members().size();
  return j;
}

Json perfect_enumeration_json(const PerfectJEnumeration& e,
                              const std::optional<TGroupResult>& t,
                              std::size_t gamma_cap) {
  Json j;
  j["count"] = e.records.size();
  bool all_h = true;
  for (const PerfectJRecord& r : e.records)
    all_h = all_h && r.record.in_h && *r.record.in_h;
  j["all_in_H"] = all_h;
  if (t) j["t_group_type"] = t->structure;
  j["decomposition"] = krs_json(e.krs);
  Json records = Json::array();
  for (const PerfectJRecord& r : e.records) {
    Json rj;
    rj["subset"] = r.subset;
    Json body = regular_record_json(r.record, gamma_cap);
    for (auto& [k, v] : body.items()) rj[k] = v;
    records.push_back(std::move(rj));
  }
  j["records"] = std::move(records);
  if (t) {
    Json table = Json::array();
    for (const auto& row : t->table) table.push_back(row);
    j["t_table"] = std::move(table);
  }
  return j;
}

Json oracle_enumeration_json(const OracleEnumeration& e,
                             const std::vector<RegularRecord>& classified,
                             std::size_t gamma_cap) {
  Json j;
  j["oracle"] = true;
  j["budget_used"] = e.nodes_used;
  j["count"] = e.hits.size();
  Json records = Json::array();
  for (const RegularRecord& rec : classified)
    records.push_back(regular_record_json(rec, gamma_cap));
  j["records"] = std::move(records);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

bool scalar_array(const Json& j) {
  for (const auto& v : j)
    if (v.is_structured()) return false;
  return true;
}

void render(const Json& j, std::string indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        out << indent << k << ":\n";
        render(v, indent + "  ", out);
      } else {
        out << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << indent << "-\n";
        render(v, indent + "  ", out);
      } else {
        out << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    out << indent << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, "", out);
  return out.str();
}

}  // namespace holo
