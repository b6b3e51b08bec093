#include "crn/core/format.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace crn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  struct Side {
    NetworkBuilder::Terms terms;
  };

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, pos_ + 1, message); }

  Side complex() {
    Side side;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '0') {
      std::size_t end = pos_ + 1;
      if (end >= text_.size() || !is_name_char(text_[end])) {
        pos_ = end;
        return side;  // zero complex
      }
    }
    while (true) {
      side.terms.push_back(term());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        continue;
      }
      return side;
    }
  }

  // Returns true for "<->", false for "->".
  bool arrow() {
    skip_space();
    if (text_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      return true;
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return false;
    }
    fail("expected '->' or '<->'");
  }

 private:
  static bool is_name_char(char ch) {
    return !std::isspace(static_cast<unsigned char>(ch)) && ch != '+' && ch != '#' && ch != '<' && ch != '-' &&
           ch != '>' && ch != ',';
  }

  std::pair<std::string, Coefficient> term() {
    skip_space();
    const std::size_t start = pos_;
    Coefficient coeff = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Coefficient value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > kMaxCoefficient) {
          pos_ = start;
          fail("coefficient overflow");
        }
        ++pos_;
      }
      if (value == 0) {
        pos_ = start;
        fail("coefficient must be positive");
      }
      coeff = value;
      skip_space();
    }
    const std::size_t name_start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == name_start) fail("expected a species name");
    std::string name(text_.substr(name_start, pos_ - name_start));
    if (!is_valid_species_name(name)) {
      pos_ = name_start;
      fail("invalid species name '" + name + "'");
    }
    return {name, coeff};
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string term_string(const std::string& name, Coefficient c) {
  return c == 1 ? name : std::to_string(c) + " " + name;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
  NetworkBuilder builder;
  std::set<std::pair<NetworkBuilder::Terms, NetworkBuilder::Terms>> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::size_t reactions = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineParser p(line, line_no);
    if (p.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    auto left = p.complex();
    const bool both = p.arrow();
    auto right = p.complex();
    if (!p.at_end()) p.fail("unexpected trailing input");

    // Normalize sides to compare reactions independent of term order.
    auto normalize = [](NetworkBuilder::Terms terms) {
      std::map<std::string, Coefficient> merged;
      for (const auto& [n, c] : terms) {
        merged[n] += c;
        if (merged[n] > kMaxCoefficient) throw NetworkError("stoichiometric coefficient overflow");
      }
      return NetworkBuilder::Terms(merged.begin(), merged.end());
    };
    NetworkBuilder::Terms a;
    NetworkBuilder::Terms b;
    try {
      a = normalize(left.terms);
      b = normalize(right.terms);
    } catch (const NetworkError& e) {
      throw ParseError(line_no, 1, e.what());
    }
    if (a == b) throw ParseError(line_no, 1, "trivial reaction (reactant equals product)");
    auto add = [&](const NetworkBuilder::Terms& x, const NetworkBuilder::Terms& y, const auto& rx,
                   const auto& ry) {
      if (!seen.emplace(x, y).second) throw ParseError(line_no, 1, "duplicate reaction");
      builder.reaction(rx, ry);
      ++reactions;
    };
    add(a, b, left.terms, right.terms);
    if (both) add(b, a, right.terms, left.terms);
    if (end == text.size()) break;
  }
  return builder.build();
}

ReactionNetwork read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

std::string render_complex(const ReactionNetwork& net, const Complex& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [s, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    out += term_string(net.species_name(s), coeff);
  }
  return out;
}

std::string render_reaction(const ReactionNetwork& net, const Reaction& r) {
  return render_complex(net, r.reactant) + " -> " + render_complex(net, r.product);
}

std::string render_network(const ReactionNetwork& net) {
  std::string out;
  const auto& rs = net.reactions();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    if (k + 1 < rs.size() && rs[k + 1] == rs[k].reversed()) {
      out += render_complex(net, rs[k].reactant) + " <-> " + render_complex(net, rs[k].product) + "\n";
      ++k;
      continue;
    }
    out += render_reaction(net, rs[k]) + "\n";
  }
  return out;
}

}  // namespace crn
