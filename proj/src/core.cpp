#include "cskit/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace cskit {

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& n = names_[static_cast<size_t>(i)];
    if (n.empty()) throw ParseError("ground element name must be non-empty");
    if (!index_.emplace(n, i).second)
      throw ParseError("duplicate ground element name: " + n);
  }
}

std::optional<int> GroundSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroundSet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ParseError("unknown element: " + name);
  return it->second;
}

namespace {
size_t words_for(int n) { return static_cast<size_t>((n + 63) / 64); }
}  // namespace

ElementSet::ElementSet(GroundSetPtr ground)
    : ground_(std::move(ground)), words_(words_for(ground_ ? ground_->size() : 0), 0) {}

ElementSet::ElementSet(GroundSetPtr ground, const std::vector<int>& members)
    : ElementSet(std::move(ground)) {
  for (int m : members) insert(m);
}

ElementSet ElementSet::full(const GroundSetPtr& ground) {
  ElementSet s(ground);
  for (int i = 0; i < ground->size(); ++i) s.insert(i);
  return s;
}

void ElementSet::check_compatible(const ElementSet& other) const {
  if (!same_ground(ground_, other.ground_))
    throw PreconditionViolated("set operation across different ground sets");
}

bool ElementSet::contains(int i) const {
  if (i < 0 || i >= universe_size()) return false;
  return (words_[static_cast<size_t>(i) / 64] >> (static_cast<size_t>(i) % 64)) & 1u;
}

void ElementSet::insert(int i) {
  if (i < 0 || i >= universe_size())
    throw PreconditionViolated("element index out of range");
  words_[static_cast<size_t>(i) / 64] |= std::uint64_t{1} << (static_cast<size_t>(i) % 64);
}

void ElementSet::erase(int i) {
  if (i < 0 || i >= universe_size()) return;
  words_[static_cast<size_t>(i) / 64] &= ~(std::uint64_t{1} << (static_cast<size_t>(i) % 64));
}

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  check_compatible(other);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_compatible(other);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  check_compatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  check_compatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  check_compatible(other);
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet r = full(ground_);
  r -= *this;
  return r;
}

bool ElementSet::operator==(const ElementSet& other) const {
  if (!same_ground(ground_, other.ground_)) return false;
  return words_ == other.words_;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
  return out;
}

int ElementSet::first() const { return next(-1); }

int ElementSet::next(int after) const {
  int n = universe_size();
  for (int i = after + 1; i < n; ++i) {
    size_t w = static_cast<size_t>(i) / 64;
    std::uint64_t rest = words_[w] >> (static_cast<size_t>(i) % 64);
    if (rest == 0) {
      i = static_cast<int>((w + 1) * 64) - 1;
      continue;
    }
    return i + std::countr_zero(rest);
  }
  return -1;
}

bool ElementSet::lex_less(const ElementSet& a, const ElementSet& b) {
  int x = a.first(), y = b.first();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;  // proper prefix is smaller
}

bool ElementSet::size_lex_less(const ElementSet& a, const ElementSet& b) {
  int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

size_t ElementSet::hash() const {
  size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= static_cast<size_t>(w);
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string ElementSet::to_string() const {
  if (empty()) return "-";
  std::ostringstream os;
  bool sep = false;
  for (int i = first(); i >= 0; i = next(i)) {
    if (sep) os << ' ';
    os << ground_->name(i);
    sep = true;
  }
  return os.str();
}

ImplicationalBase::ImplicationalBase(GroundSetPtr ground, std::vector<Implication> implications,
                                     BaseOptions options)
    : ground_(std::move(ground)), implications_(std::move(implications)), options_(options) {
  for (const Implication& imp : implications_) {
    if (!same_ground(imp.premise.ground(), ground_) ||
        !same_ground(imp.conclusion.ground(), ground_))
      throw PreconditionViolated("implication not on the base's ground set");
    if (imp.premise.empty() && !options_.allow_empty_premise)
      throw PreconditionViolated("empty premise not allowed");
    if (!options_.allow_overlap) {
      if (imp.conclusion.empty())
        throw PreconditionViolated("empty conclusion not allowed");
      if (imp.premise.intersects(imp.conclusion))
        throw PreconditionViolated("premise and conclusion must be disjoint");
    }
  }
}

bool ImplicationalBase::operator==(const ImplicationalBase& other) const {
  return same_ground(ground_, other.ground_) && implications_ == other.implications_;
}

SetFamily::SetFamily(GroundSetPtr ground, std::vector<ElementSet> sets, FamilyOptions options)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (const ElementSet& s : sets_)
    if (!same_ground(s.ground(), ground_))
      throw PreconditionViolated("family member not on the family ground set");
  if (options.dedup) {
    for (size_t i = 0; i < sets_.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (sets_[i] == sets_[j])
          throw PreconditionViolated("duplicate set in dedup family");
  }
  if (options.sperner) {
    for (size_t i = 0; i < sets_.size(); ++i)
      for (size_t j = 0; j < sets_.size(); ++j)
        if (i != j && sets_[i].is_subset_of(sets_[j]))
          throw NotSperner("family is not an antichain");
  }
}

void SetFamily::push_back(ElementSet s) {
  if (!ground_) ground_ = s.ground();
  if (!same_ground(s.ground(), ground_))
    throw PreconditionViolated("family member not on the family ground set");
  sets_.push_back(std::move(s));
}

bool SetFamily::contains(const ElementSet& s) const {
  return std::find(sets_.begin(), sets_.end(), s) != sets_.end();
}

SetFamily SetFamily::canonical() const {
  std::vector<ElementSet> sorted = sets_;
  std::sort(sorted.begin(), sorted.end(), ElementSet::lex_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return SetFamily(ground_, std::move(sorted));
}

bool SetFamily::operator==(const SetFamily& other) const {
  return same_ground(ground_, other.ground_) && sets_ == other.sets_;
}

AttachedFamily::AttachedFamily(GroundSetPtr ground)
    : ground_(std::move(ground)), per_element_(static_cast<size_t>(ground_->size()), SetFamily()) {
  for (int i = 0; i < ground_->size(); ++i)
    per_element_[static_cast<size_t>(i)] = SetFamily(ground_);
}

const SetFamily& AttachedFamily::of(int x) const {
  return per_element_.at(static_cast<size_t>(x));
}

void AttachedFamily::add(int x, ElementSet m) {
  per_element_.at(static_cast<size_t>(x)).push_back(std::move(m));
}

void AttachedFamily::set_family(int x, SetFamily family) {
  if (!same_ground(family.ground(), ground_))
    throw PreconditionViolated("attached family on wrong ground set");
  per_element_.at(static_cast<size_t>(x)) = std::move(family);
}

int AttachedFamily::total_count() const {
  int c = 0;
  for (const SetFamily& f : per_element_) c += f.size();
  return c;
}

SetFamily AttachedFamily::flatten() const {
  SetFamily out(ground_);
  for (const SetFamily& f : per_element_)
    for (const ElementSet& s : f.sets()) out.push_back(s);
  return out;
}

void AttachedFamily::validate() const {
  std::unordered_set<size_t> seen;
  for (int x = 0; x < ground_->size(); ++x) {
    for (const ElementSet& m : of(x).sets()) {
      if (m.contains(x))
        throw NotConvexGeometry("set attached to " + ground_->name(x) + " contains it");
      if (!seen.insert(m.hash()).second)
        throw NotConvexGeometry("irreducible attached to more than one element");
    }
  }
}

ImplicationalBase normalize(const ImplicationalBase& ib) {
  std::vector<Implication> out;
  std::vector<Implication> seen;
  for (const Implication& imp : ib.implications()) {
    Implication fixed{imp.premise, imp.conclusion - imp.premise};
    if (fixed.conclusion.empty()) continue;
    if (std::find(seen.begin(), seen.end(), fixed) != seen.end()) continue;
    seen.push_back(fixed);
    out.push_back(std::move(fixed));
  }
  return ImplicationalBase(ib.ground(), std::move(out),
                           BaseOptions{ib.allows_empty_premise(), false});
}

bool is_normalized(const ImplicationalBase& ib) {
  const auto& imps = ib.implications();
  for (size_t i = 0; i < imps.size(); ++i) {
    if (imps[i].conclusion.empty()) return false;
    if (imps[i].premise.intersects(imps[i].conclusion)) return false;
    for (size_t j = 0; j < i; ++j)
      if (imps[i] == imps[j]) return false;
  }
  return true;
}

ImplicationalBase unit_expansion(const ImplicationalBase& ib) {
  std::vector<Implication> out;
  for (const Implication& imp : ib.implications()) {
    for (int b = imp.conclusion.first(); b >= 0; b = imp.conclusion.next(b)) {
      ElementSet unit(ib.ground());
      unit.insert(b);
      out.push_back(Implication{imp.premise, std::move(unit)});
    }
  }
  return ImplicationalBase(ib.ground(), std::move(out),
                           BaseOptions{ib.allows_empty_premise(), false});
}

ImplicationalBase aggregation(const ImplicationalBase& ib) {
  std::vector<Implication> out;
  for (const Implication& imp : ib.implications()) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Implication& o) { return o.premise == imp.premise; });
    if (it == out.end())
      out.push_back(imp);
    else
      it->conclusion |= imp.conclusion;
  }
  return ImplicationalBase(ib.ground(), std::move(out),
                           BaseOptions{ib.allows_empty_premise(), false});
}

DegreeProfile degree_profile(const ImplicationalBase& ib) {
  int n = ib.ground()->size();
  DegreeProfile p;
  p.pdeg.assign(static_cast<size_t>(n), 0);
  p.cdeg.assign(static_cast<size_t>(n), 0);
  p.deg.assign(static_cast<size_t>(n), 0);
  for (const Implication& imp : ib.implications()) {
    for (int i = imp.premise.first(); i >= 0; i = imp.premise.next(i))
      ++p.pdeg[static_cast<size_t>(i)];
    for (int i = imp.conclusion.first(); i >= 0; i = imp.conclusion.next(i))
      ++p.cdeg[static_cast<size_t>(i)];
    ElementSet occ = imp.premise | imp.conclusion;
    for (int i = occ.first(); i >= 0; i = occ.next(i)) ++p.deg[static_cast<size_t>(i)];
  }
  for (int i = 0; i < n; ++i) {
    p.pdeg_max = std::max(p.pdeg_max, p.pdeg[static_cast<size_t>(i)]);
    p.cdeg_max = std::max(p.cdeg_max, p.cdeg[static_cast<size_t>(i)]);
    p.deg_max = std::max(p.deg_max, p.deg[static_cast<size_t>(i)]);
  }
  return p;
}

}  // namespace cskit
