// SPDX-License-Identifier: Apache-2.0
#include "lsc/dsl.hpp"

#include <cctype>
#include <sstream>

namespace lsc {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void eat(char c) {
    if (!try_eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool try_keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    // Keywords must not run into a longer identifier.
    const size_t end = pos_ + kw.size();
    if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) ||
                               text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  Int integer() {
    skip_ws();
    size_t start = pos_;
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 4'000'000'000'000'000) fail("integer literal out of range");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  std::string quoted() {
    skip_ws();
    eat('"');
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (!std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("patterns may contain only letters and digits");
      ++pos_;
    }
    if (pos_ >= text_.size()) fail("unterminated pattern");
    std::string out = text_.substr(start, pos_ - start);
    ++pos_;  // closing quote
    if (out.empty()) fail("pattern must be nonempty");
    return out;
  }

  char letter() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_])))
      fail("expected a letter");
    return text_[pos_++];
  }

  [[noreturn]] void fail(const std::string& what) {
    Int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": " << what;
    throw Error(Error::Code::Parse, msg.str(), static_cast<Int>(pos_));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

Schedule parse_schedule_at(Cursor& cur);
SetExpr parse_set_at(Cursor& cur);

std::vector<std::pair<std::string, Int>> parse_kvs(Cursor& cur) {
  std::vector<std::pair<std::string, Int>> kvs;
  while (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
    std::string key = cur.ident();
    cur.eat('=');
    kvs.push_back({std::move(key), cur.integer()});
  }
  if (kvs.empty()) cur.fail("expected key=value parameters");
  return kvs;
}

Int kv_get(Cursor& cur, const std::vector<std::pair<std::string, Int>>& kvs,
           const std::string& key, Int fallback = -1) {
  for (const auto& [k, v] : kvs)
    if (k == key) return v;
  if (fallback >= 0) return fallback;
  cur.fail("missing parameter '" + key + "'");
}

Schedule parse_schedule_at(Cursor& cur) {
  if (cur.try_keyword("geom")) {
    auto kvs = parse_kvs(cur);
    return Schedule::geometric(kv_get(cur, kvs, "b"), kv_get(cur, kvs, "c"));
  }
  if (cur.try_keyword("expl")) {
    cur.eat('{');
    std::vector<Interval> intervals;
    do {
      cur.eat('[');
      Interval iv;
      iv.lo = cur.integer();
      cur.eat(',');
      iv.hi = cur.integer();
      cur.eat(']');
      intervals.push_back(iv);
    } while (cur.try_eat(','));
    cur.eat('}');
    return Schedule::explicit_list(std::move(intervals));
  }
  if (cur.try_keyword("seprow")) {
    auto kvs = parse_kvs(cur);
    SeparatedFamily fam{kv_get(cur, kvs, "rows"), kv_get(cur, kvs, "cols"),
                        kv_get(cur, kvs, "slope")};
    return Schedule::separated_row(fam, kv_get(cur, kvs, "row"));
  }
  if (cur.try_keyword("sepblk")) {
    auto kvs = parse_kvs(cur);
    SeparatedFamily fam{kv_get(cur, kvs, "rows"), kv_get(cur, kvs, "cols"),
                        kv_get(cur, kvs, "slope")};
    return Schedule::separated_block(fam, kv_get(cur, kvs, "row"), kv_get(cur, kvs, "col"));
  }
  if (cur.try_keyword("stride")) {
    cur.eat('(');
    const Int offset = cur.integer();
    cur.eat(',');
    const Int step = cur.integer();
    cur.eat(',');
    Schedule base = parse_schedule_at(cur);
    cur.eat(')');
    return Schedule::stride(std::move(base), offset, step);
  }
  cur.fail("expected a schedule (geom, expl, seprow, sepblk, stride)");
}

WordSpec parse_word_at(Cursor& cur) {
  if (cur.try_keyword("fib")) return fibonacci_spec();
  if (cur.try_keyword("tm")) return thue_morse_spec();
  if (cur.try_keyword("per")) {
    cur.eat('(');
    PeriodicSpec spec{cur.quoted()};
    cur.eat(')');
    return spec;
  }
  if (cur.try_keyword("sturm")) {
    cur.eat('(');
    SturmianSpec spec;
    do spec.terms.push_back(cur.integer());
    while (cur.try_eat(','));
    cur.eat(')');
    return spec;
  }
  if (cur.try_keyword("sub")) {
    cur.eat('(');
    SubstitutionSpec spec;
    bool have_seed = false;
    do {
      if (cur.try_keyword("seed")) {
        cur.eat('=');
        spec.seed = cur.letter();
        have_seed = true;
        break;
      }
      const char letter = cur.letter();
      cur.eat('-');
      cur.eat('>');
      std::string image;
      while (std::isalnum(static_cast<unsigned char>(cur.peek()))) image += cur.letter();
      if (image.empty()) cur.fail("substitution image must be nonempty");
      spec.rules.push_back({letter, std::move(image)});
    } while (cur.try_eat(','));
    if (!have_seed) cur.fail("substitution needs a trailing seed=<letter>");
    cur.eat(')');
    return spec;
  }
  cur.fail("expected a word (fib, tm, per, sub, sturm)");
}

SetExpr parse_term(Cursor& cur) {
  if (cur.try_eat('!')) return SetExpr::complement(parse_term(cur));
  if (cur.try_eat('(')) {
    SetExpr inner = parse_set_at(cur);
    cur.eat(')');
    return inner;
  }
  if (cur.try_keyword("empty")) return SetExpr::empty();
  if (cur.try_keyword("full")) return SetExpr::full();
  if (cur.try_keyword("fin")) {
    cur.eat('{');
    std::vector<Int> elems;
    // fin{} is the empty set; the printer emits it for empty finite nodes.
    if (!cur.try_eat('}')) {
      do elems.push_back(cur.integer());
      while (cur.try_eat(','));
      cur.eat('}');
    }
    return SetExpr::finite(std::move(elems));
  }
  if (cur.try_keyword("res")) {
    cur.eat('(');
    const Int r = cur.integer();
    cur.eat(',');
    const Int m = cur.integer();
    cur.eat(')');
    return SetExpr::residue(r, m);
  }
  if (cur.try_keyword("thick")) {
    cur.eat('(');
    Schedule sched = parse_schedule_at(cur);
    cur.eat(')');
    return SetExpr::thick(std::move(sched));
  }
  if (cur.try_keyword("ret")) {
    cur.eat('(');
    WordSpec word = parse_word_at(cur);
    cur.eat(',');
    std::string pattern = cur.quoted();
    ReturnBase base = ReturnBase::IndexDropZero;
    if (cur.try_eat(',')) {
      if (cur.try_keyword("plus1")) base = ReturnBase::IndexPlusOne;
      else if (cur.try_keyword("drop0")) base = ReturnBase::IndexDropZero;
      else cur.fail("expected base flag drop0 or plus1");
    }
    cur.eat(')');
    return SetExpr::returns(std::move(word), std::move(pattern), base);
  }
  struct UnaryOp {
    const char* name;
    SetExpr (*make)(Int, SetExpr);
  };
  static const UnaryOp unaries[] = {{"shiftdown", &SetExpr::shift_down},
                                    {"shiftup", &SetExpr::shift_up},
                                    {"dilate", &SetExpr::dilate},
                                    {"quot", &SetExpr::quotient}};
  for (const auto& op : unaries) {
    if (cur.try_keyword(op.name)) {
      cur.eat('(');
      const Int amount = cur.integer();
      cur.eat(',');
      SetExpr child = parse_set_at(cur);
      cur.eat(')');
      return op.make(amount, std::move(child));
    }
  }
  cur.fail("expected a set expression");
}

SetExpr parse_set_at(Cursor& cur) {
  SetExpr first = parse_term(cur);
  const char op = cur.peek();
  if (op != '|' && op != '&') return first;
  std::vector<SetExpr> parts;
  parts.push_back(std::move(first));
  while (cur.try_eat(op)) parts.push_back(parse_term(cur));
  if (cur.peek() == '|' || cur.peek() == '&')
    cur.fail("mixed operators need parentheses");
  return op == '|' ? SetExpr::unite(std::move(parts)) : SetExpr::intersect(std::move(parts));
}

}  // namespace

SetExpr parse_set(const std::string& text) {
  Cursor cur(text);
  SetExpr e = parse_set_at(cur);
  if (!cur.done()) cur.fail("trailing input after expression");
  return e;
}

Schedule parse_schedule(const std::string& text) {
  Cursor cur(text);
  Schedule s = parse_schedule_at(cur);
  if (!cur.done()) cur.fail("trailing input after schedule");
  return s;
}

WordSpec parse_word(const std::string& text) {
  Cursor cur(text);
  WordSpec w = parse_word_at(cur);
  if (!cur.done()) cur.fail("trailing input after word");
  return w;
}

std::string print_schedule(const Schedule& s) {
  std::ostringstream out;
  switch (s.kind()) {
    case Schedule::Kind::Geometric:
      out << "geom b=" << s.geometric_base() << " c=" << s.geometric_anchor();
      break;
    case Schedule::Kind::Explicit: {
      out << "expl{";
      bool comma = false;
      for (const Interval& iv : s.explicit_intervals()) {
        if (comma) out << ",";
        out << "[" << iv.lo << "," << iv.hi << "]";
        comma = true;
      }
      out << "}";
      break;
    }
    case Schedule::Kind::Separated: {
      const SeparatedFamily& fam = s.family();
      if (s.separated_col_index() == 0) {
        out << "seprow rows=" << fam.rows << " cols=" << fam.cols << " slope=" << fam.slope
            << " row=" << s.separated_row_index();
      } else {
        out << "sepblk rows=" << fam.rows << " cols=" << fam.cols << " slope=" << fam.slope
            << " row=" << s.separated_row_index() << " col=" << s.separated_col_index();
      }
      break;
    }
    case Schedule::Kind::Strided:
      out << "stride(" << s.stride_offset() << "," << s.stride_step() << ","
          << print_schedule(s.stride_base()) << ")";
      break;
  }
  return out.str();
}

std::string print_word(const WordSpec& w) {
  std::ostringstream out;
  if (const auto* sub = std::get_if<SubstitutionSpec>(&w)) {
    out << "sub(";
    for (const auto& [letter, image] : sub->rules) out << letter << "->" << image << ",";
    out << "seed=" << sub->seed << ")";
  } else if (const auto* st = std::get_if<SturmianSpec>(&w)) {
    out << "sturm(";
    for (size_t i = 0; i < st->terms.size(); ++i) {
      if (i) out << ",";
      out << st->terms[i];
    }
    out << ")";
  } else {
    out << "per(\"" << std::get<PeriodicSpec>(w).block << "\")";
  }
  return out.str();
}

std::string print_set(const SetExpr& e) {
  std::ostringstream out;
  switch (e.kind()) {
    case SetExpr::Kind::Empty:
      out << "empty";
      break;
    case SetExpr::Kind::Full:
      out << "full";
      break;
    case SetExpr::Kind::Finite: {
      out << "fin{";
      const auto& elems = e.finite_elements();
      for (size_t i = 0; i < elems.size(); ++i) {
        if (i) out << ",";
        out << elems[i];
      }
      out << "}";
      break;
    }
    case SetExpr::Kind::Residue:
      out << "res(" << e.residue_value() << "," << e.modulus() << ")";
      break;
    case SetExpr::Kind::Thick:
      out << "thick(" << print_schedule(e.schedule()) << ")";
      break;
    case SetExpr::Kind::Return:
      out << "ret(" << print_word(e.word().spec()) << ",\"" << e.pattern() << "\"";
      if (e.return_base() == ReturnBase::IndexPlusOne) out << ",plus1";
      out << ")";
      break;
    case SetExpr::Kind::Union:
    case SetExpr::Kind::Inter: {
      const char* op = e.kind() == SetExpr::Kind::Union ? "|" : "&";
      out << "(";
      const auto& kids = e.children();
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out << op;
        out << print_set(kids[i]);
      }
      out << ")";
      break;
    }
    case SetExpr::Kind::Compl:
      out << "!" << print_set(e.children()[0]);
      break;
    case SetExpr::Kind::ShiftDown:
      out << "shiftdown(" << e.amount() << "," << print_set(e.children()[0]) << ")";
      break;
    case SetExpr::Kind::ShiftUp:
      out << "shiftup(" << e.amount() << "," << print_set(e.children()[0]) << ")";
      break;
    case SetExpr::Kind::Dilate:
      out << "dilate(" << e.amount() << "," << print_set(e.children()[0]) << ")";
      break;
    case SetExpr::Kind::Quotient:
      out << "quot(" << e.amount() << "," << print_set(e.children()[0]) << ")";
      break;
  }
  return out.str();
}

}  // namespace lsc
