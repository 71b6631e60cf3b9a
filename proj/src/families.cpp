#include "f2hopf/families.hpp"

#include <algorithm>
#include <charconv>

#include "f2hopf/dyer_lashof.hpp"
#include "f2hopf/errors.hpp"

namespace f2hopf {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Braid: return "braid";
    case Family::Rat: return "rat";
    case Family::Conf: return "conf";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "braid") return Family::Braid;
  if (name == "rat") return Family::Rat;
  if (name == "conf") return Family::Conf;
  return std::nullopt;
}

int min_label(Family f) { return f == Family::Rat ? -1 : 0; }

namespace {

std::int64_t pow2(int i) {
  if (i < 0 || i > kHardMaxGen) throw GeneratorIndexError("generator label out of range");
  return std::int64_t{1} << i;
}

void check_label(Family f, int label) {
  if (label < min_label(f) || label > kHardMaxGen - 1) {
    throw PreconditionError("invalid " + std::string(family_name(f)) + " generator label " +
                            std::to_string(label));
  }
}

}  // namespace

std::string generator_name(Family f, int label) {
  check_label(f, label);
  switch (f) {
    case Family::Braid: return label == 0 ? "g" : "gamma_" + std::to_string(label);
    case Family::Rat: return label == -1 ? "g" : "rho_" + std::to_string(label);
    case Family::Conf: return "c_" + std::to_string(label);
  }
  return "?";
}

std::optional<int> parse_generator_name(Family f, std::string_view name) {
  if (name == "g") {
    if (f == Family::Braid) return 0;
    if (f == Family::Rat) return -1;
    return std::nullopt;
  }
  std::string_view prefix = f == Family::Braid ? "gamma_" : f == Family::Rat ? "rho_" : "c_";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = name.substr(prefix.size());
  int label = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) return std::nullopt;
  if (label < 0 || label > kHardMaxGen - 1) return std::nullopt;
  if (f == Family::Braid && label == 0) return std::nullopt;  // spelled "g"
  return label;
}

Bigrade generator_bigrade(Family f, int label) {
  check_label(f, label);
  switch (f) {
    case Family::Braid: return {pow2(label), pow2(label) - 1};
    case Family::Rat:
      if (label == -1) return {1, 0};
      return {pow2(label), pow2(label + 1) - 1};
    case Family::Conf: return {pow2(label), pow2(label + 1) - 1};
  }
  return {};
}

FamilyMonomial::FamilyMonomial(Family family, std::vector<Factor> exps) : family_(family) {
  std::sort(exps.begin(), exps.end());
  for (const auto& [label, e] : exps) {
    check_label(family, label);
    if (e < 0) throw PreconditionError("negative exponent in family monomial");
    if (e == 0) continue;
    if (!exps_.empty() && exps_.back().first == label) {
      exps_.back().second = checked_add(exps_.back().second, e);
    } else {
      exps_.emplace_back(label, e);
    }
  }
}

std::int64_t FamilyMonomial::exponent(int label) const {
  for (const auto& [l, e] : exps_) {
    if (l == label) return e;
  }
  return 0;
}

std::int64_t FamilyMonomial::weight() const {
  std::int64_t w = 0;
  for (const auto& [label, e] : exps_) w = checked_add(w, checked_mul(generator_bigrade(family_, label).weight, e));
  return w;
}

std::int64_t FamilyMonomial::dim() const {
  std::int64_t d = 0;
  for (const auto& [label, e] : exps_) d = checked_add(d, checked_mul(generator_bigrade(family_, label).dim, e));
  return d;
}

FamilyMonomial FamilyMonomial::operator*(const FamilyMonomial& other) const {
  if (family_ != other.family_) throw PreconditionError("product of monomials from different families");
  std::vector<Factor> merged = exps_;
  merged.insert(merged.end(), other.exps_.begin(), other.exps_.end());
  return FamilyMonomial(family_, std::move(merged));
}

std::string FamilyMonomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [label, e] : exps_) {
    if (!out.empty()) out += '*';
    out += generator_name(family_, label);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

AmbientElement embed_generator(Family family, int label, int max_gen) {
  check_label(family, label);
  switch (family) {
    case Family::Braid:
      if (label == 0) return AmbientMonomial::g_power(1);
      if (label > max_gen) {
        throw GeneratorIndexError("gamma_" + std::to_string(label) + " exceeds max generator index");
      }
      return AmbientMonomial::q_generator(label);
    case Family::Rat:
      if (label == -1) return AmbientMonomial::g_power(1);
      return araki_kudo_iterate(AmbientMonomial(-1, {{1, 1}}), label, max_gen);
    case Family::Conf:
      return araki_kudo_iterate(AmbientMonomial(-2, {{1, 1}}), label, max_gen);
  }
  return {};
}

AmbientElement embed(const FamilyMonomial& fm, int max_gen) {
  AmbientElement out = AmbientElement::one();
  for (const auto& [label, e] : fm.exps()) {
    out = out * embed_generator(fm.family(), label, max_gen).pow(e);
  }
  return out;
}

bool basis_order_less(const FamilyMonomial& a, const FamilyMonomial& b) {
  const auto da = a.dim();
  const auto db = b.dim();
  if (da != db) return da < db;
  // Sparse exponent lists walked in label order; a missing label is 0.
  auto ia = a.exps().begin();
  auto ib = b.exps().begin();
  while (ia != a.exps().end() || ib != b.exps().end()) {
    const int la = ia != a.exps().end() ? ia->first : INT32_MAX;
    const int lb = ib != b.exps().end() ? ib->first : INT32_MAX;
    const int label = std::min(la, lb);
    const std::int64_t ea = la == label ? ia->second : 0;
    const std::int64_t eb = lb == label ? ib->second : 0;
    if (ea != eb) return ea > eb;
    if (la == label) ++ia;
    if (lb == label) ++ib;
  }
  return false;
}

namespace {

struct Enumerator {
  Family family;
  bool exact;
  std::size_t max_size;
  std::vector<std::pair<int, std::int64_t>> gens;  // (label, weight), heaviest first
  std::vector<FamilyMonomial::Factor> current;
  std::vector<FamilyMonomial> out;

  void run(std::size_t pos, std::int64_t remaining) {
    if (pos == gens.size()) {
      if (exact && remaining != 0) return;
      if (out.size() >= max_size) {
        throw BoundError("basis size exceeds bound " + std::to_string(max_size));
      }
      out.emplace_back(family, current);
      return;
    }
    const auto [label, w] = gens[pos];
    for (std::int64_t e = remaining / w; e >= 0; --e) {
      if (e > 0) current.emplace_back(label, e);
      run(pos + 1, remaining - e * w);
      if (e > 0) current.pop_back();
    }
  }
};

}  // namespace

std::vector<FamilyMonomial> basis(Family family, std::int64_t k, const Limits& limits) {
  if (k < 1) throw PreconditionError("basis requires k >= 1");
  if (k > limits.basis_k_bound) {
    throw BoundError("k = " + std::to_string(k) + " exceeds basis bound " +
                     std::to_string(limits.basis_k_bound));
  }
  Enumerator en{family, family != Family::Conf, limits.max_basis_size, {}, {}, {}};
  int top = 0;
  while (top + 1 <= kHardMaxGen - 1 && (std::int64_t{1} << (top + 1)) <= k) ++top;
  for (int i = top; i >= 0; --i) en.gens.emplace_back(i, std::int64_t{1} << i);
  if (family == Family::Rat) en.gens.emplace_back(-1, 1);
  en.run(0, k);
  std::sort(en.out.begin(), en.out.end(), basis_order_less);
  return std::move(en.out);
}

std::vector<int> binary_support(std::int64_t k) {
  std::vector<int> j;
  for (int bit = 0; bit < 63; ++bit) {
    if ((k >> bit) & 1) j.push_back(bit);
  }
  return j;
}

FamilyMonomial top_class(Family family, std::int64_t k) {
  if (k < 1) throw PreconditionError("top_class requires k >= 1");
  std::vector<FamilyMonomial::Factor> exps;
  switch (family) {
    case Family::Rat:
      for (int j : binary_support(k)) exps.emplace_back(j, 1);
      break;
    case Family::Braid:
      for (int j : binary_support(k)) exps.emplace_back(j + 1, 1);
      break;
    case Family::Conf:
      throw PreconditionError("top_class is defined for the braid and rat families only");
  }
  return FamilyMonomial(family, std::move(exps));
}

std::vector<std::size_t> poincare_vector(Family family, std::int64_t k, const Limits& limits) {
  std::vector<std::size_t> counts;
  for (const auto& m : basis(family, k, limits)) {
    const auto d = static_cast<std::size_t>(m.dim());
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

}  // namespace f2hopf
