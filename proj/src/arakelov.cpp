#include "ckzeta/arakelov.hpp"

#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "ckzeta/cuntz.hpp"
#include "ckzeta/linalg.hpp"

namespace ckzeta {

CompactifiedDivisor::CompactifiedDivisor(std::map<std::string, Int> finite,
                                         std::vector<Rat> infinite)
    : finite_(std::move(finite)), infinite_(std::move(infinite)) {
  for (auto it = finite_.begin(); it != finite_.end();) {
    it = it->second == 0 ? finite_.erase(it) : std::next(it);
  }
}

const Int& CompactifiedDivisor::finite_coeff(const std::string& label) const {
  static const Int zero = 0;
  auto it = finite_.find(label);
  return it == finite_.end() ? zero : it->second;
}

bool CompactifiedDivisor::is_zero() const {
  if (!finite_.empty()) return false;
  for (const Rat& l : infinite_) {
    if (l != 0) return false;
  }
  return true;
}

CompactifiedDivisor divisor_add(const CompactifiedDivisor& a,
                                const CompactifiedDivisor& b) {
  if (a.places() != b.places()) {
    throw std::invalid_argument(
        "divisors live over different numbers of infinite places");
  }
  std::map<std::string, Int> finite = a.finite();
  for (const auto& [label, k] : b.finite()) {
    finite[label] += k;
  }
  std::vector<Rat> infinite(a.places());
  for (std::size_t i = 0; i < infinite.size(); ++i) {
    infinite[i] = a.infinite()[i] + b.infinite()[i];
  }
  return CompactifiedDivisor(std::move(finite), std::move(infinite));
}

CompactifiedDivisor divisor_negate(const CompactifiedDivisor& a) {
  std::map<std::string, Int> finite;
  for (const auto& [label, k] : a.finite()) finite.emplace(label, -k);
  std::vector<Rat> infinite(a.places());
  for (std::size_t i = 0; i < infinite.size(); ++i) {
    infinite[i] = -a.infinite()[i];
  }
  return CompactifiedDivisor(std::move(finite), std::move(infinite));
}

CompactifiedDivisor principal_divisor(const PrincipalData& pd) {
  return CompactifiedDivisor(pd.finite_divisor, pd.v_infinity);
}

std::string divisor_to_json(const CompactifiedDivisor& d) {
  nlohmann::ordered_json doc;
  doc["finite"] = nlohmann::ordered_json::object();
  for (const auto& [label, k] : d.finite()) {
    doc["finite"][label] = k.get_str();
  }
  doc["infinite"] = nlohmann::ordered_json::array();
  for (const Rat& l : d.infinite()) {
    doc["infinite"].push_back(l.get_str());
  }
  return doc.dump();
}

CompactifiedDivisor divisor_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad divisor JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("finite") ||
      !doc.contains("infinite") || !doc["finite"].is_object() ||
      !doc["infinite"].is_array()) {
    throw std::invalid_argument(
        "divisor JSON needs a finite object and an infinite array");
  }
  std::map<std::string, Int> finite;
  for (const auto& [label, v] : doc["finite"].items()) {
    if (v.is_number_integer()) {
      finite[label] = Int(static_cast<long>(v.get<long long>()));
    } else if (v.is_string()) {
      finite[label] = parse_int(v.get<std::string>());
    } else {
      throw std::invalid_argument("finite coefficients must be integers");
    }
  }
  std::vector<Rat> infinite;
  for (const auto& v : doc["infinite"]) {
    if (v.is_number_integer()) {
      infinite.emplace_back(Int(static_cast<long>(v.get<long long>())));
    } else if (v.is_string()) {
      infinite.push_back(parse_rat(v.get<std::string>()));
    } else {
      throw std::invalid_argument(
          "infinite coefficients must be rational strings");
    }
  }
  return CompactifiedDivisor(std::move(finite), std::move(infinite));
}

FgAbelianGroup pic_presentation(const IntMatrix& m) {
  if (!m.is_square() || m.empty()) {
    throw std::invalid_argument(
        "pic_presentation: matrix must be square and nonempty");
  }
  IntMatrix w = IntMatrix::identity(m.rows()) - m.transpose();
  // Hermite first, then the Smith chain of the reduced matrix; row
  // operations do not change the cokernel.
  HermiteDecomposition hd = hermite_normal_form(w);
  SmithDecomposition sd = smith_normal_form(hd.H);
  std::vector<Int> chain;
  for (std::size_t t = 0; t < sd.D.rows(); ++t) {
    if (sd.D(t, t) != 0) chain.push_back(sd.D(t, t));
  }
  std::size_t rank = chain.size();
  std::vector<Int> torsion;
  for (Int& d : chain) {
    if (d > 1) torsion.push_back(std::move(d));
  }
  return FgAbelianGroup{m.rows() - rank, std::move(torsion)};
}

bool k0_matches_pic(const IntMatrix& m) {
  return is_isomorphic(pic_presentation(m), k_theory(m).k0);
}

}  // namespace ckzeta
