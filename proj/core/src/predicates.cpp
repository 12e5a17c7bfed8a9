#include "cgt/predicates.hpp"

#include <cctype>
#include <cstdlib>

#include "cgt/errors.hpp"

namespace cgt::coarse {

namespace {

enum class Op { Lt, Le, Gt, Ge, Eq, Ne };

bool eval_op(Op op, long lhs, long rhs) {
  switch (op) {
    case Op::Lt: return lhs < rhs;
    case Op::Le: return lhs <= rhs;
    case Op::Gt: return lhs > rhs;
    case Op::Ge: return lhs >= rhs;
    case Op::Eq: return lhs == rhs;
    case Op::Ne: return lhs != rhs;
  }
  return false;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

struct PointPredicate::Term {
  enum class Kind { All, Prefix, Coord } kind = Kind::All;
  std::string prefix;
  int coord_index = 0;
  Op op = Op::Eq;
  long value = 0;
};

PointPredicate::PointPredicate(std::string text, std::vector<Term> terms)
    : text_(std::move(text)), terms_(std::move(terms)) {}
PointPredicate::~PointPredicate() = default;
PointPredicate::PointPredicate(const PointPredicate&) = default;
PointPredicate& PointPredicate::operator=(const PointPredicate&) = default;
PointPredicate::PointPredicate(PointPredicate&&) noexcept = default;
PointPredicate& PointPredicate::operator=(PointPredicate&&) noexcept = default;

std::vector<long> label_coordinates(const std::string& label) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < label.size()) {
    char c = label[i];
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < label.size() && std::isdigit(static_cast<unsigned char>(label[i + 1])))) {
      std::size_t j = i + (c == '-' ? 1 : 0);
      while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) ++j;
      out.push_back(std::strtol(label.substr(i, j - i).c_str(), nullptr, 10));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

bool PointPredicate::matches(const std::string& label) const {
  std::vector<long> coords;
  bool coords_ready = false;
  for (const Term& t : terms_) {
    switch (t.kind) {
      case Term::Kind::All:
        break;
      case Term::Kind::Prefix:
        if (label.compare(0, t.prefix.size(), t.prefix) != 0) return false;
        break;
      case Term::Kind::Coord: {
        if (!coords_ready) {
          coords = label_coordinates(label);
          coords_ready = true;
        }
        if (t.coord_index < 0 || t.coord_index >= static_cast<int>(coords.size())) return false;
        if (!eval_op(t.op, coords[static_cast<std::size_t>(t.coord_index)], t.value)) return false;
        break;
      }
    }
  }
  return true;
}

PointPredicate parse_predicate(const std::string& text) {
  std::vector<PointPredicate::Term> terms;
  std::size_t pos = 0;
  bool any = false;
  while (pos <= text.size()) {
    std::size_t amp = text.find('&', pos);
    std::string raw = strip(amp == std::string::npos ? text.substr(pos) : text.substr(pos, amp - pos));
    if (raw.empty()) throw PreconditionError("predicate: empty term in '" + text + "'");
    PointPredicate::Term term;
    if (raw == "all") {
      term.kind = PointPredicate::Term::Kind::All;
    } else if (raw.rfind("prefix=", 0) == 0) {
      term.kind = PointPredicate::Term::Kind::Prefix;
      term.prefix = raw.substr(7);
      if (term.prefix.empty()) throw PreconditionError("predicate: empty prefix in '" + raw + "'");
    } else if (raw.rfind("coord[", 0) == 0) {
      std::size_t close = raw.find(']');
      if (close == std::string::npos) throw PreconditionError("predicate: missing ']' in '" + raw + "'");
      std::string idx = strip(raw.substr(6, close - 6));
      if (idx.empty()) throw PreconditionError("predicate: missing coord index in '" + raw + "'");
      for (char c : idx)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw PreconditionError("predicate: bad coord index '" + idx + "'");
      term.kind = PointPredicate::Term::Kind::Coord;
      term.coord_index = static_cast<int>(std::strtol(idx.c_str(), nullptr, 10));
      std::string rest = strip(raw.substr(close + 1));
      Op op;
      std::size_t oplen = 0;
      if (rest.rfind("<=", 0) == 0) { op = Op::Le; oplen = 2; }
      else if (rest.rfind(">=", 0) == 0) { op = Op::Ge; oplen = 2; }
      else if (rest.rfind("!=", 0) == 0) { op = Op::Ne; oplen = 2; }
      else if (rest.rfind("<", 0) == 0) { op = Op::Lt; oplen = 1; }
      else if (rest.rfind(">", 0) == 0) { op = Op::Gt; oplen = 1; }
      else if (rest.rfind("=", 0) == 0) { op = Op::Eq; oplen = 1; }
      else throw PreconditionError("predicate: missing comparison in '" + raw + "'");
      term.op = op;
      std::string val = strip(rest.substr(oplen));
      if (val.empty()) throw PreconditionError("predicate: missing value in '" + raw + "'");
      std::size_t k = (val[0] == '-') ? 1 : 0;
      if (k == val.size()) throw PreconditionError("predicate: bad value '" + val + "'");
      for (; k < val.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(val[k])))
          throw PreconditionError("predicate: bad value in '" + raw + "'");
      term.value = std::strtol(val.c_str(), nullptr, 10);
    } else {
      throw PreconditionError("predicate: unknown term '" + raw + "'");
    }
    terms.push_back(std::move(term));
    any = true;
    if (amp == std::string::npos) break;
    pos = amp + 1;
  }
  if (!any) throw PreconditionError("predicate: empty expression");
  return PointPredicate(text, std::move(terms));
}

std::vector<int> select_points(const MetricSnapshot& snapshot, const PointPredicate& predicate) {
  std::vector<int> out;
  for (int i = 0; i < snapshot.size(); ++i)
    if (predicate.matches(snapshot.label(i))) out.push_back(i);
  return out;
}

}  // namespace cgt::coarse
