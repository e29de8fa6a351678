#include "tetra/names.hpp"

#include <cctype>

namespace tetra {

bool FamilyName::operator==(const FamilyName& o) const {
  return head == o.head && sub == o.sub && args == o.args && seps == o.seps && has_parens == o.has_parens;
}

long long FamilyName::integer(std::size_t i) const {
  if (i >= args.size() || !std::holds_alternative<long long>(args[i]))
    throw ParameterError(head + ": argument " + std::to_string(i + 1) + " must be an integer");
  return std::get<long long>(args[i]);
}

const FamilyName& FamilyName::inner(std::size_t i) const {
  if (i >= args.size() || !std::holds_alternative<FamilyName>(args[i]))
    throw ParameterError(head + ": argument " + std::to_string(i + 1) + " must be a name");
  return std::get<FamilyName>(args[i]);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FamilyName run() {
    FamilyName n = name();
    if (p_ != s_.size()) fail("unexpected trailing text");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("family name: " + what, p_); }
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++p_;
  }
  bool eat(std::string_view t) {
    if (s_.substr(p_, t.size()) == t) {
      p_ += t.size();
      return true;
    }
    return false;
  }

  long long integer() {
    std::size_t start = p_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++p_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      p_ = start;
      fail("expected an integer");
    }
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100'000'000'000'000LL) fail("integer too large");
      v = v * 10 + (s_[p_++] - '0');
    }
    return neg ? -v : v;
  }

  FamilyName name() {
    FamilyName left = term();
    if (peek() == '#') {
      ++p_;
      FamilyName right = term();
      FamilyName prod;
      prod.head = "#";
      prod.args = {std::move(left), std::move(right)};
      prod.seps = "#";
      return prod;
    }
    return left;
  }

  FamilyName term() {
    FamilyName n;
    if (eat("{4,4}_")) {
      char open = peek(), close;
      if (open == '{') {
        n.head = "{4,4}";
        close = '}';
      } else if (open == '<') {
        n.head = "{4,4}<>";
        close = '>';
      } else if (open == '[') {
        n.head = "{4,4}[]";
        close = ']';
      } else {
        fail("expected one of { < [ after {4,4}_");
      }
      ++p_;
      n.args.emplace_back(integer());
      expect(',');
      n.args.emplace_back(integer());
      n.seps = ",";
      expect(close);
      return n;
    }
    std::size_t start = p_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++p_;
    if (p_ == start) fail("expected a family name");
    n.head = std::string(s_.substr(start, p_ - start));
    if (peek() == '_') {
      ++p_;
      n.sub = integer();
    }
    if (peek() == '(') {
      ++p_;
      n.has_parens = true;
      n.args.push_back(arg());
      while (peek() == ',' || peek() == ';') {
        n.seps.push_back(s_[p_++]);
        n.args.push_back(arg());
      }
      expect(')');
    }
    return n;
  }

  NameArg arg() {
    if (eat("[[")) {
      IntMatrix m(2, std::vector<long long>(2));
      m[0][0] = integer();
      expect(',');
      m[0][1] = integer();
      if (!eat("],[")) fail("expected '],['");
      m[1][0] = integer();
      expect(',');
      m[1][1] = integer();
      if (!eat("]]")) fail("expected ']]'");
      return m;
    }
    char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    return name();
  }

  std::string_view s_;
  std::size_t p_ = 0;
};

void print(const FamilyName& n, std::string& out);

void print_arg(const NameArg& a, std::string& out) {
  if (const auto* i = std::get_if<long long>(&a)) {
    out += std::to_string(*i);
  } else if (const auto* m = std::get_if<IntMatrix>(&a)) {
    const auto& x = *m;
    out += "[[" + std::to_string(x[0][0]) + "," + std::to_string(x[0][1]) + "],[" + std::to_string(x[1][0]) + "," +
           std::to_string(x[1][1]) + "]]";
  } else {
    print(std::get<FamilyName>(a), out);
  }
}

void print(const FamilyName& n, std::string& out) {
  if (n.head == "#") {
    print_arg(n.args.at(0), out);
    out += '#';
    print_arg(n.args.at(1), out);
    return;
  }
  if (n.head.rfind("{4,4}", 0) == 0) {
    char open = n.head == "{4,4}" ? '{' : n.head == "{4,4}<>" ? '<' : '[';
    char close = open == '{' ? '}' : open == '<' ? '>' : ']';
    out += "{4,4}_";
    out += open;
    out += std::to_string(n.integer(0)) + "," + std::to_string(n.integer(1));
    out += close;
    return;
  }
  out += n.head;
  if (n.sub) out += "_" + std::to_string(*n.sub);
  if (!n.has_parens) return;
  out += '(';
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i > 0) out += i - 1 < n.seps.size() ? n.seps[i - 1] : ',';
    print_arg(n.args[i], out);
  }
  out += ')';
}

}  // namespace

FamilyName parse_family_name(std::string_view text) { return Parser(text).run(); }

std::string to_string(const FamilyName& name) {
  std::string out;
  print(name, out);
  return out;
}

FamilyName name_of(std::string head, std::vector<long long> args, std::string seps) {
  FamilyName n;
  n.head = std::move(head);
  for (long long a : args) n.args.emplace_back(a);
  n.has_parens = !n.args.empty();
  if (seps.empty() && n.args.size() > 1) seps.assign(n.args.size() - 1, ',');
  n.seps = std::move(seps);
  return n;
}

FamilyName name_sub(std::string head, long long sub, std::vector<long long> args) {
  FamilyName n = name_of(std::move(head), std::move(args));
  n.sub = sub;
  return n;
}

FamilyName name_torus(TorusKind kind, long long b, long long c) {
  FamilyName n;
  n.head = kind == TorusKind::rot ? "{4,4}" : kind == TorusKind::angle ? "{4,4}<>" : "{4,4}[]";
  n.args = {b, c};
  n.seps = ",";
  return n;
}

FamilyName name_apply(std::string head, FamilyName inner) {
  FamilyName n;
  n.head = std::move(head);
  n.args.emplace_back(std::move(inner));
  n.has_parens = true;
  return n;
}

}  // namespace tetra
