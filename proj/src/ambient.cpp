#include "f2hopf/ambient.hpp"

#include <sstream>

#include "f2hopf/errors.hpp"

namespace f2hopf {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("int64 overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ExponentOverflow("int64 overflow in multiplication");
  return out;
}

namespace {

void check_index(int index) {
  if (index < 1 || index > kHardMaxGen) {
    throw GeneratorIndexError("generator index " + std::to_string(index) + " outside [1, " +
                              std::to_string(kHardMaxGen) + "]");
  }
}

}  // namespace

AmbientMonomial::AmbientMonomial(std::int64_t g_exp, std::vector<Factor> q_exps) : g_exp_(g_exp) {
  std::sort(q_exps.begin(), q_exps.end());
  for (const auto& [index, e] : q_exps) {
    check_index(index);
    if (e < 0) throw PreconditionError("negative exponent on Q^" + std::to_string(index) + "g");
    if (e == 0) continue;
    if (!q_.empty() && q_.back().first == index) {
      q_.back().second = checked_add(q_.back().second, e);
    } else {
      q_.emplace_back(index, e);
    }
  }
}

AmbientMonomial AmbientMonomial::g_power(std::int64_t a) { return AmbientMonomial(a, {}); }

AmbientMonomial AmbientMonomial::q_generator(int index, std::int64_t exponent) {
  return AmbientMonomial(0, {{index, exponent}});
}

std::int64_t AmbientMonomial::q_exp(int index) const {
  auto it = std::lower_bound(q_.begin(), q_.end(), Factor{index, 0});
  return (it != q_.end() && it->first == index) ? it->second : 0;
}

std::int64_t AmbientMonomial::weight() const {
  std::int64_t w = g_exp_;
  for (const auto& [index, e] : q_) w = checked_add(w, checked_mul(std::int64_t{1} << index, e));
  return w;
}

std::int64_t AmbientMonomial::dim() const {
  std::int64_t d = 0;
  for (const auto& [index, e] : q_) d = checked_add(d, checked_mul((std::int64_t{1} << index) - 1, e));
  return d;
}

AmbientMonomial AmbientMonomial::operator*(const AmbientMonomial& other) const {
  AmbientMonomial out;
  out.g_exp_ = checked_add(g_exp_, other.g_exp_);
  out.q_.reserve(q_.size() + other.q_.size());
  auto a = q_.begin();
  auto b = other.q_.begin();
  while (a != q_.end() || b != other.q_.end()) {
    if (b == other.q_.end() || (a != q_.end() && a->first < b->first)) {
      out.q_.push_back(*a++);
    } else if (a == q_.end() || b->first < a->first) {
      out.q_.push_back(*b++);
    } else {
      out.q_.emplace_back(a->first, checked_add(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

AmbientMonomial AmbientMonomial::pow(std::int64_t n) const {
  if (n < 0) throw PreconditionError("negative power of a monomial");
  if (n == 0) return one();
  AmbientMonomial out;
  out.g_exp_ = checked_mul(g_exp_, n);
  out.q_.reserve(q_.size());
  for (const auto& [index, e] : q_) out.q_.emplace_back(index, checked_mul(e, n));
  return out;
}

AmbientMonomial AmbientMonomial::without_one(int index) const {
  AmbientMonomial out = *this;
  auto it = std::lower_bound(out.q_.begin(), out.q_.end(), Factor{index, 0});
  if (it == out.q_.end() || it->first != index) {
    throw PreconditionError("Q^" + std::to_string(index) + "g does not divide " + to_string());
  }
  if (--it->second == 0) out.q_.erase(it);
  return out;
}

std::string AmbientMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (g_exp_ != 0) {
    sep();
    os << 'g';
    if (g_exp_ != 1) os << '^' << g_exp_;
  }
  for (const auto& [index, e] : q_) {
    sep();
    os << 'Q' << index << 'g';
    if (e != 1) os << '^' << e;
  }
  if (first) os << '1';
  return os.str();
}

AmbientElement::AmbientElement(std::vector<AmbientMonomial> terms) : terms_(std::move(terms)) {
  cancel_in_place(terms_);
}

AmbientElement AmbientElement::operator+(const AmbientElement& other) const {
  AmbientElement out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out.terms_));
  return out;
}

AmbientElement& AmbientElement::operator+=(const AmbientElement& other) {
  *this = *this + other;
  return *this;
}

AmbientElement AmbientElement::operator*(const AmbientElement& other) const {
  std::vector<AmbientMonomial> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) products.push_back(a * b);
  }
  return AmbientElement(std::move(products));
}

AmbientElement AmbientElement::square() const {
  std::vector<AmbientMonomial> squares;
  squares.reserve(terms_.size());
  for (const auto& m : terms_) squares.push_back(m.pow(2));
  return AmbientElement(std::move(squares));
}

AmbientElement AmbientElement::pow(std::int64_t n) const {
  if (n < 0) throw PreconditionError("negative power of an element");
  AmbientElement result = one();
  AmbientElement base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base.square();
  }
  return result;
}

std::string AmbientElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

AmbientElement mul(const AmbientElement& a, const AmbientElement& b) { return a * b; }
AmbientElement add(const AmbientElement& a, const AmbientElement& b) { return a + b; }

TensorElement::TensorElement(std::vector<MonomialPair> terms) : terms_(std::move(terms)) {
  cancel_in_place(terms_);
}

TensorElement TensorElement::operator+(const TensorElement& other) const {
  TensorElement out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(out.terms_));
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
  *this = *this + other;
  return *this;
}

TensorElement TensorElement::operator*(const TensorElement& other) const {
  std::vector<MonomialPair> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& [al, ar] : terms_) {
    for (const auto& [bl, br] : other.terms_) products.emplace_back(al * bl, ar * br);
  }
  return TensorElement(std::move(products));
}

TensorElement TensorElement::swapped() const {
  std::vector<MonomialPair> out;
  out.reserve(terms_.size());
  for (const auto& [l, r] : terms_) out.emplace_back(r, l);
  return TensorElement(std::move(out));
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [l, r] : terms_) {
    if (!out.empty()) out += " + ";
    out += l.to_string() + " (x) " + r.to_string();
  }
  return out;
}

TensorElement tensor(const AmbientElement& left, const AmbientElement& right) {
  std::vector<MonomialPair> pairs;
  pairs.reserve(left.size() * right.size());
  for (const auto& l : left.terms()) {
    for (const auto& r : right.terms()) pairs.emplace_back(l, r);
  }
  return TensorElement(std::move(pairs));
}

std::map<Bigrade, AmbientElement> bigrade_components(const AmbientElement& e) {
  std::map<Bigrade, std::vector<AmbientMonomial>> buckets;
  for (const auto& m : e.terms()) buckets[m.bigrade()].push_back(m);
  std::map<Bigrade, AmbientElement> out;
  for (auto& [grade, terms] : buckets) out.emplace(grade, AmbientElement(std::move(terms)));
  return out;
}

std::map<std::int64_t, TensorElement> tensor_components(const TensorElement& t,
                                                       std::int64_t total_dim) {
  std::map<std::int64_t, std::vector<MonomialPair>> buckets;
  for (const auto& pair : t.terms()) {
    const std::int64_t left = pair.first.dim();
    const std::int64_t right = pair.second.dim();
    if (checked_add(left, right) != total_dim) {
      throw PreconditionError("tensor term " + pair.first.to_string() + " (x) " +
                              pair.second.to_string() + " has total dimension " +
                              std::to_string(left + right) + ", expected " +
                              std::to_string(total_dim));
    }
    buckets[left].push_back(pair);
  }
  std::map<std::int64_t, TensorElement> out;
  for (auto& [s, pairs] : buckets) out.emplace(s, TensorElement(std::move(pairs)));
  return out;
}

}  // namespace f2hopf
